#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "socle/census.hpp"
#include "socle/complex.hpp"
#include "socle/constructions.hpp"
#include "socle/errors.hpp"
#include "socle/formulas.hpp"
#include "socle/ideal.hpp"
#include "socle/io.hpp"
#include "socle/random.hpp"
#include "socle/socle_engine.hpp"

// Property suites. Each one draws or constructs instances, checks a stated
// property with the socle oracle (both strategies), and records any failing
// instance in a form that reproduces it on its own.

namespace socle {

struct SuiteFailure {
  std::size_t index = 0;
  io::Json instance;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::size_t sampled = 0;          ///< instances drawn or constructed
  std::size_t checked = 0;          ///< instances meeting the suite's hypothesis
  std::size_t passed = 0;
  std::size_t budget_exceeded = 0;
  std::size_t flagged_maximal_ideal = 0;  ///< instances equal to (x_1..x_n)
  std::vector<SuiteFailure> failures;

  bool ok() const { return failures.empty(); }
};

inline io::Json to_json(const SuiteReport& r) {
  io::Json j;
  j["name"] = r.name;
  j["sampled"] = r.sampled;
  j["checked"] = r.checked;
  j["passed"] = r.passed;
  j["budget_exceeded"] = r.budget_exceeded;
  j["flagged_maximal_ideal"] = r.flagged_maximal_ideal;
  io::Json list = io::Json::array();
  for (const SuiteFailure& f : r.failures) {
    io::Json e;
    e["index"] = f.index;
    e["instance"] = f.instance;
    e["detail"] = f.detail;
    list.push_back(e);
  }
  j["failures"] = list;
  return j;
}

namespace detail {

/// Outcome of one instance: not applicable, pass, or fail with a reason.
struct Verdict {
  bool applicable = true;
  std::string failure;  ///< empty on pass
};

inline Verdict pass() { return {}; }
inline Verdict skip() { return {false, {}}; }
inline Verdict fail(std::string why) { return {true, std::move(why)}; }

inline void record(SuiteReport& report, std::size_t index, const io::Json& instance,
                   const std::function<Verdict()>& run) {
  ++report.sampled;
  Verdict v;
  try {
    v = run();
  } catch (const BudgetExceeded&) {
    ++report.budget_exceeded;
    return;
  } catch (const StrategyMismatch& e) {
    v = fail(e.what());
  }
  if (!v.applicable) return;
  ++report.checked;
  if (v.failure.empty()) {
    ++report.passed;
  } else {
    report.failures.push_back({index, instance, v.failure});
  }
}

inline io::Json ideal_instance(const MonomialIdeal& ideal, std::uint64_t seed, unsigned k) {
  io::Json j;
  j["seed"] = seed;
  j["k"] = k;
  j["ideal"] = io::to_json(ideal);
  return j;
}

inline std::size_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  std::size_t b = 1;
  for (std::size_t i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

/// Degrees d <= n strictly above ((k-1)n+1)/k.
inline std::vector<std::size_t> degrees_above_threshold(std::size_t n, unsigned k) {
  std::vector<std::size_t> ds;
  for (std::size_t d = 1; d <= n; ++d)
    if (above_threshold(static_cast<std::int64_t>(d), static_cast<std::int64_t>(n), k)) ds.push_back(d);
  return ds;
}

inline std::string profile_string(const std::vector<bool>& profile) {
  std::string s;
  for (bool b : profile) s += b ? '1' : '0';
  return s;
}

inline SocleOptions options_for(const RunConfig& config) {
  return {SocleStrategy::cross_check, config.box_budget};
}

/// Socle at power k is exactly {x_[n]^{k-1}} and depth stays zero from k to
/// k + 2.
inline Verdict check_equality_case(const MonomialIdeal& ideal, unsigned k, SocleOptions options) {
  if (!ideal.is_single_degree()) throw InvalidArgument("equality case needs a single-degree ideal");
  auto reports = power_socle_reports(ideal, k + 2, options);
  const SocleReport& at_k = reports[k - 1];
  if (!at_k.depth_zero) return skip();
  if (at_k.socle != std::vector<Monomial>{Monomial::uniform(ideal.n(), k - 1)})
    return fail("socle at power k is not exactly x_[n]^(k-1)");
  for (unsigned l = k; l <= k + 2; ++l)
    if (!reports[l - 1].depth_zero) return fail("depth becomes positive at power " + std::to_string(l));
  return pass();
}

/// For x_[n]^{k-1} in Soc(S/I^k) with n > 1: k < n and depth S/I^j > 0 for j < k.
inline Verdict check_smallern(const MonomialIdeal& ideal, unsigned k, SocleOptions options) {
  const std::size_t n = ideal.n();
  if (n < 2) return skip();
  MonomialIdeal powered = power(ideal, k);
  if (!is_socle_element(powered, Monomial::uniform(n, k - 1))) return skip();
  if (k >= n) return fail("maximal socle at k >= n");
  if (k == 1) return pass();
  auto reports = power_socle_reports(ideal, k - 1, options);
  for (const SocleReport& r : reports)
    if (r.depth_zero) return fail("depth zero at power " + std::to_string(*r.k) + " below k");
  return pass();
}

}  // namespace detail

/// Socle monomials of S/I^k for squarefree I have all exponents <= k-1.
inline SuiteReport verify_powersocle(const RunConfig& config) {
  SuiteReport report;
  report.name = "powersocle";
  const std::size_t n_cap = std::min<std::size_t>(config.n_max, 5);
  for (std::size_t i = 0; i < config.sample_count; ++i) {
    Rng rng = instance_rng(config.seed, i);
    std::size_t n = uniform_index(rng, std::min<std::size_t>(2, n_cap), n_cap);
    auto k = static_cast<unsigned>(uniform_index(rng, 1, config.k_max));
    MonomialIdeal ideal = random_squarefree_ideal(rng, n, 2 * n);
    if (ideal == MonomialIdeal::maximal(n)) ++report.flagged_maximal_ideal;
    detail::record(report, i, detail::ideal_instance(ideal, config.seed, k), [&] {
      socle_monomials(power(ideal, k), detail::options_for(config), k);
      if (!verify_exponent_bound(ideal, k, config.box_budget))
        return detail::fail("socle monomial with an exponent above k-1");
      return detail::pass();
    });
  }
  return report;
}

/// Socle monomials of S/J satisfy a_i <= c_i - 1 for any monomial ideal J.
inline SuiteReport verify_generator_bound_suite(const RunConfig& config) {
  SuiteReport report;
  report.name = "generator-bound";
  const std::size_t n_cap = std::min<std::size_t>(config.n_max, 5);
  for (std::size_t i = 0; i < config.sample_count; ++i) {
    Rng rng = instance_rng(config.seed, i);
    std::size_t n = uniform_index(rng, 1, n_cap);
    MonomialIdeal ideal = random_monomial_ideal(rng, n, 3, 2 * n);
    detail::record(report, i, detail::ideal_instance(ideal, config.seed, 1), [&] {
      socle_monomials(ideal, detail::options_for(config));
      if (!verify_generator_bound(ideal, config.box_budget))
        return detail::fail("socle monomial with a_i > c_i - 1");
      return detail::pass();
    });
  }
  return report;
}

/// Single-degree squarefree ideals with d > ((k-1)n+1)/k have empty socle at
/// power k.
inline SuiteReport verify_however_a(const RunConfig& config) {
  SuiteReport report;
  report.name = "however-a";
  if (config.n_max < 2) return report;
  for (std::size_t i = 0; i < config.sample_count; ++i) {
    Rng rng = instance_rng(config.seed, i);
    std::size_t n = uniform_index(rng, 2, config.n_max);
    auto k = static_cast<unsigned>(uniform_index(rng, 1, config.k_max));
    auto ds = detail::degrees_above_threshold(n, k);
    std::size_t d = ds[uniform_index(rng, 0, ds.size() - 1)];
    std::size_t count = uniform_index(rng, 1, std::min(detail::binomial(n, d), 2 * n));
    MonomialIdeal ideal = random_single_degree_ideal(rng, n, d, count);
    detail::record(report, i, detail::ideal_instance(ideal, config.seed, k), [&] {
      SocleReport r = socle_monomials(power(ideal, k), detail::options_for(config), k);
      if (r.depth_zero) return detail::fail("nonempty socle above the degree threshold");
      return detail::pass();
    });
  }
  return report;
}

/// Running intersections of k sets of size d > ((k-1)n+1)/k stay above
/// ((k-i)n+i)/k.
inline SuiteReport verify_chain(const RunConfig& config) {
  SuiteReport report;
  report.name = "chain";
  if (config.n_max < 2) return report;
  for (std::size_t i = 0; i < config.sample_count; ++i) {
    Rng rng = instance_rng(config.seed, i);
    std::size_t n = uniform_index(rng, 2, config.n_max);
    auto k = static_cast<unsigned>(uniform_index(rng, 1, config.k_max));
    auto ds = detail::degrees_above_threshold(n, k);
    std::size_t d = ds[uniform_index(rng, 0, ds.size() - 1)];
    std::vector<VertexSet> sets;
    for (unsigned t = 0; t < k; ++t) {
      VertexSet all(n);
      for (std::size_t v = 0; v < n; ++v) all[v] = v;
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(d);
      std::sort(all.begin(), all.end());
      sets.push_back(std::move(all));
    }
    io::Json instance;
    instance["seed"] = config.seed;
    instance["n"] = n;
    instance["k"] = k;
    instance["sets"] = io::to_json(sets);
    detail::record(report, i, instance, [&] {
      if (!intersection_chain_check(sets, static_cast<std::int64_t>(n), k))
        return detail::fail("running intersection at or below the bound");
      return detail::pass();
    });
  }
  return report;
}

/// x_[n]^{k-1} in Soc(S/I^k), n > 1 implies k < n and positive depth below k.
/// Checked on the example families and on seeded random complexes; only
/// instances meeting the hypothesis count as checked.
inline SuiteReport verify_smallern(const RunConfig& config) {
  SuiteReport report;
  report.name = "smallern";
  SocleOptions options = detail::options_for(config);
  std::size_t index = 0;
  auto run = [&](const MonomialIdeal& ideal, unsigned k) {
    if (ideal == MonomialIdeal::maximal(ideal.n())) ++report.flagged_maximal_ideal;
    detail::record(report, index++, detail::ideal_instance(ideal, config.seed, k),
                   [&] { return detail::check_smallern(ideal, k, options); });
  };
  for (std::size_t n = 3; n <= config.n_max; ++n) run(example_a(n), 2);
  for (std::size_t d = 2; 2 * d - 1 <= config.n_max; ++d) run(example_b(d), 2);
  for (unsigned k = 2; k <= config.k_max && k + 1 <= config.n_max; ++k) run(allk_ideal(k), k);
  if (config.n_max < 2) return report;
  for (std::size_t i = 0; i < config.sample_count; ++i) {
    Rng rng = instance_rng(config.seed, i);
    std::size_t n = uniform_index(rng, 2, config.n_max);
    auto k = static_cast<unsigned>(uniform_index(rng, 1, config.k_max));
    run(facet_ideal(random_complex(rng, n, 2 * n)), k);
  }
  return report;
}

/// hh_depth(n,d,k) = 0 iff S/I^k has depth zero for the squarefree Veronese
/// ideal, over the full grid n <= n_max, d <= n, k <= k_max.
inline SuiteReport verify_hh_boundary(const RunConfig& config) {
  SuiteReport report;
  report.name = "hh-boundary";
  SocleOptions options = detail::options_for(config);
  std::size_t index = 0;
  for (std::size_t n = 1; n <= config.n_max; ++n)
    for (std::size_t d = 1; d <= n; ++d)
      for (unsigned k = 1; k <= config.k_max; ++k) {
        MonomialIdeal ideal = squarefree_veronese(n, d);
        if (ideal == MonomialIdeal::maximal(n)) ++report.flagged_maximal_ideal;
        io::Json instance;
        instance["n"] = n;
        instance["d"] = d;
        instance["k"] = k;
        detail::record(report, index++, instance, [&] {
          bool formula = hh_depth(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d), k) == 0;
          bool oracle = socle_monomials(power(ideal, k), options, k).depth_zero;
          if (formula != oracle)
            return detail::fail(std::string("formula says depth ") + (formula ? "zero" : "positive") +
                                ", oracle disagrees");
          return detail::pass();
        });
      }
  return report;
}

/// On the threshold d = ((k-1)n+1)/k with depth zero at k: the socle at k is
/// exactly {x_[n]^{k-1}} and depth stays zero through k + 2. Runs the
/// Veronese grid and seeded random single-degree ideals on the threshold.
inline SuiteReport verify_however_c(const RunConfig& config) {
  SuiteReport report;
  report.name = "however-c";
  SocleOptions options = detail::options_for(config);
  std::size_t index = 0;
  for (unsigned k = 1; k <= config.k_max; ++k)
    for (std::size_t n = 1; n <= config.n_max; ++n)
      for (std::size_t d = 1; d <= n; ++d) {
        if (!on_threshold(static_cast<std::int64_t>(d), static_cast<std::int64_t>(n), k)) continue;
        MonomialIdeal ideal = squarefree_veronese(n, d);
        if (ideal == MonomialIdeal::maximal(n)) ++report.flagged_maximal_ideal;
        detail::record(report, index++, detail::ideal_instance(ideal, config.seed, k),
                       [&] { return detail::check_equality_case(ideal, k, options); });
      }
  for (std::size_t i = 0; i < config.sample_count; ++i) {
    Rng rng = instance_rng(config.seed, i);
    // k = 1 or n = 1 forces d = 1, already covered by the grid.
    if (config.n_max < 2) break;
    std::size_t n = uniform_index(rng, 2, config.n_max);
    auto k = static_cast<unsigned>(uniform_index(rng, 2, std::max(config.k_max, 2U)));
    // kd = (k-1)n + 1 must have an integer solution d.
    std::int64_t numerator = static_cast<std::int64_t>(k - 1) * static_cast<std::int64_t>(n) + 1;
    if (numerator % k != 0) continue;
    auto d = static_cast<std::size_t>(numerator / k);
    std::size_t count = uniform_index(rng, 1, detail::binomial(n, d));
    MonomialIdeal ideal = random_single_degree_ideal(rng, n, d, count);
    if (ideal == MonomialIdeal::maximal(n)) ++report.flagged_maximal_ideal;
    detail::record(report, index++, detail::ideal_instance(ideal, config.seed, k),
                   [&] { return detail::check_equality_case(ideal, k, options); });
  }
  return report;
}

/// The explicit families: example_a(n), n = 3..6, and example_b(d), d = 2..4,
/// have x_[n] in Soc(S/I^2), and both combinatorial conditions hold at k = 2.
inline SuiteReport verify_examples(const RunConfig& config) {
  SuiteReport report;
  report.name = "examples";
  SocleOptions options = detail::options_for(config);
  std::size_t index = 0;
  auto run = [&](const MonomialIdeal& ideal) {
    detail::record(report, index++, detail::ideal_instance(ideal, config.seed, 2), [&] {
      SocleReport r = socle_monomials(power(ideal, 2), options, 2);
      if (!r.depth_zero || !r.has_maximal_socle) return detail::fail("x_[n] not in Soc(S/I^2)");
      if (!has_maximal_socle(facets_of(ideal), 2)) return detail::fail("combinatorial conditions fail");
      return detail::pass();
    });
  };
  for (std::size_t n = 3; n <= 6; ++n) run(example_a(n));
  for (std::size_t d = 2; d <= 4; ++d) run(example_b(d));
  return report;
}

/// allk_ideal(k): depth profile 0^{k-1} 1 1 through power k+1, k < n, both
/// conditions at k, and socle exactly {x_[n]^{k-1}} at power k.
inline SuiteReport verify_allk(const RunConfig& config) {
  SuiteReport report;
  report.name = "allk";
  SocleOptions options = detail::options_for(config);
  std::size_t index = 0;
  for (unsigned k = 2; k <= std::max(config.k_max, 3U); ++k) {
    MonomialIdeal ideal = allk_ideal(k);
    detail::record(report, index++, detail::ideal_instance(ideal, config.seed, k), [&] {
      std::vector<bool> expected(k + 1, false);
      expected[k - 1] = expected[k] = true;
      std::vector<bool> profile = depth_zero_profile(ideal, k + 1, options);
      if (profile != expected)
        return detail::fail("profile " + detail::profile_string(profile) + ", expected " +
                            detail::profile_string(expected));
      if (!(k < ideal.n())) return detail::fail("k >= n");
      if (!has_maximal_socle(facets_of(ideal), k)) return detail::fail("combinatorial conditions fail");
      SocleReport r = socle_monomials(power(ideal, k), options, k);
      if (r.socle != std::vector<Monomial>{Monomial::uniform(ideal.n(), k - 1)})
        return detail::fail("socle at power k is not exactly x_[n]^(k-1)");
      return detail::pass();
    });
  }
  return report;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"powersocle", "generator-bound", "however-a",
                                              "chain",      "smallern",        "hh-boundary",
                                              "however-c",  "examples",        "allk"};
  return names;
}

/// Runs a suite by name; "all" runs every suite in suite_names() order.
inline std::vector<SuiteReport> run_suites(std::string_view name, const RunConfig& config) {
  config.validate();
  using Runner = SuiteReport (*)(const RunConfig&);
  static const std::vector<std::pair<std::string_view, Runner>> table{
      {"powersocle", verify_powersocle}, {"generator-bound", verify_generator_bound_suite},
      {"however-a", verify_however_a},   {"chain", verify_chain},
      {"smallern", verify_smallern},     {"hh-boundary", verify_hh_boundary},
      {"however-c", verify_however_c},   {"examples", verify_examples},
      {"allk", verify_allk},
  };
  std::vector<SuiteReport> out;
  for (const auto& [suite, runner] : table)
    if (name == "all" || name == suite) out.push_back(runner(config));
  if (out.empty()) throw InvalidArgument("unknown suite '" + std::string(name) + "'");
  return out;
}

}  // namespace socle
