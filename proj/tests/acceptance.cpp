// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "socle/socle.hpp"

namespace {

int failures = 0;
std::size_t strategy_mismatches = 0;

void verdict(int id, bool ok, const std::string& what) {
  std::printf("[%s] C%d %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string suite_summary(const socle::SuiteReport& r) {
  return r.name + ": sampled " + std::to_string(r.sampled) + ", checked " + std::to_string(r.checked) +
         ", passed " + std::to_string(r.passed) + ", failures " + std::to_string(r.failures.size()) +
         ", budget " + std::to_string(r.budget_exceeded);
}

void count_mismatches(const socle::SuiteReport& r) {
  for (const auto& f : r.failures)
    if (f.detail.find("strategies disagree") != std::string::npos) ++strategy_mismatches;
}

void count_mismatches(const socle::CensusResult& r) {
  auto it = r.disagreements_by_property.find("strategy_agreement");
  if (it != r.disagreements_by_property.end()) strategy_mismatches += it->second;
}

socle::SuiteReport run_one(const std::string& name, const socle::RunConfig& config) {
  auto r = socle::run_suites(name, config).front();
  count_mismatches(r);
  return r;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
  socle::RunConfig config;
  config.seed = 20240601;
  config.n_max = 6;
  config.k_max = 3;

  // C1, C2: exhaustive graph census.
  {
    auto start = std::chrono::steady_clock::now();
    std::size_t total = 0, depth_bad = 0, maximal_bad = 0, maximal_true = 0, budget = 0;
    bool only_triangle = true;
    for (std::size_t n = 3; n <= 5; ++n) {
      auto r = socle::graph_census(n, config);
      count_mismatches(r);
      total += r.instances_checked;
      budget += r.budget_exceeded;
      depth_bad += r.disagreements_by_property["depth_zero_square"];
      maximal_bad += r.disagreements_by_property["maximal_socle"] + r.disagreements_by_property["maximal_socle_report"];
      const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
      for (std::uint64_t mask = 0; mask < masks; ++mask) {
        socle::Graph g = socle::Graph::from_mask(n, mask);
        if (g.edges().empty()) continue;
        if (socle::is_socle_element(socle::power(socle::edge_ideal(g), 2), socle::Monomial::uniform(n, 1))) {
          ++maximal_true;
          only_triangle = only_triangle && n == 3 && g.edges().size() == 3;
        }
      }
    }
    double secs = seconds_since(start);
    verdict(1, total == 1096 && budget == 0 && depth_bad == 0 && secs < 120,
            "graph census n=3..5: " + std::to_string(total) + " graphs, " + std::to_string(depth_bad) +
                " disagreements, " + std::to_string(secs) + "s");
    verdict(2, maximal_bad == 0 && maximal_true == 1 && only_triangle,
            "x_[n] in Soc(S/I^2) for " + std::to_string(maximal_true) + " graph(s), only the triangle: " +
                (only_triangle ? "yes" : "no") + ", " + std::to_string(maximal_bad) + " disagreements");
  }

  // C3: complex equivalences, 5 x 3 cells of 40 samples each.
  {
    auto start = std::chrono::steady_clock::now();
    socle::RunConfig c = config;
    c.sample_count = 40;
    std::size_t total = 0, bad = 0, budget = 0;
    for (std::size_t n = 2; n <= 6; ++n)
      for (unsigned k = 1; k <= 3; ++k) {
        auto r = socle::complex_census(n, k, c);
        count_mismatches(r);
        total += r.instances_checked;
        budget += r.budget_exceeded;
        bad += r.disagreements.size();
      }
    double secs = seconds_since(start);
    verdict(3, total >= 500 && bad == 0 && secs < 300,
            "complex census n<=6, k<=3: " + std::to_string(total) + " complexes, " + std::to_string(bad) +
                " disagreements, " + std::to_string(budget) + " over budget, " + std::to_string(secs) + "s");
  }

  socle::RunConfig sampled = config;
  sampled.sample_count = 250;

  // C4, C5, C6: sampled bounds.
  {
    socle::RunConfig c = sampled;
    c.n_max = 5;
    auto r = run_one("powersocle", c);
    verdict(4, r.ok() && r.checked >= 200, suite_summary(r));
    auto g = run_one("generator-bound", c);
    verdict(5, g.ok() && g.checked >= 200, suite_summary(g));
    auto a = run_one("however-a", sampled);
    verdict(6, a.ok() && a.checked >= 200, suite_summary(a));
  }

  // C7: Veronese grid.
  socle::SuiteReport grid = run_one("hh-boundary", config);
  verdict(7, grid.ok() && grid.budget_exceeded == 0 && grid.checked == 63, suite_summary(grid));

  // C8: explicit families.
  {
    auto ex = run_one("examples", config);
    auto allk = run_one("allk", config);
    auto small = run_one("smallern", sampled);
    verdict(8, ex.ok() && ex.checked == 7 && allk.ok() && allk.checked >= 2 && small.ok(),
            suite_summary(ex) + "; " + suite_summary(allk) + "; " + suite_summary(small));
  }

  // C9: equality case on the threshold.
  {
    auto r = run_one("however-c", sampled);
    verdict(9, r.ok() && r.checked > 0, suite_summary(r));
  }

  // C10: every socle computation above ran both strategies.
  verdict(10, strategy_mismatches == 0,
          "box/colon mismatches across C1-C9: " + std::to_string(strategy_mismatches));

  // C11: byte-identical structured output on rerun.
  {
    socle::RunConfig c = config;
    c.sample_count = 60;
    auto dump = [&] {
      std::string s;
      for (const auto& r : socle::run_suites("all", c)) s += socle::to_json(r).dump(2);
      s += socle::to_json(socle::graph_census(4, c)).dump(2);
      s += socle::to_json(socle::complex_census(5, 2, c)).dump(2);
      return s;
    };
    std::string first = dump();
    std::string second = dump();
    verdict(11, first == second, "rerun with seed " + std::to_string(c.seed) + ": " +
                                     std::to_string(first.size()) + " bytes, identical: " +
                                     (first == second ? "yes" : "no"));
  }

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
