// socle: command-line front end for the socle toolkit.
//
// Exit codes: 0 all checks pass, 1 property violation or decider/oracle
// disagreement, 2 usage or parse error, 3 enumeration budget exceeded.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "socle/socle.hpp"

namespace {

using socle::io::Json;

enum Exit : int { kOk = 0, kViolation = 1, kUsage = 2, kBudget = 3 };

struct Common {
  unsigned long long budget = socle::kDefaultBoxBudget;
  std::string format = "text";
  std::string strategy = "box";

  bool structured() const { return format == "structured"; }

  socle::SocleOptions options() const {
    socle::SocleOptions o;
    o.budget = budget;
    if (strategy == "colon") o.strategy = socle::SocleStrategy::colon;
    if (strategy == "cross-check") o.strategy = socle::SocleStrategy::cross_check;
    return o;
  }
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw socle::ParseError(0, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string vertices_text(const socle::VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

std::string tuple_text(const socle::FacetTuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? ", " : "") + vertices_text(t[i]);
  return out + ")";
}

socle::MonomialIdeal maybe_power(const socle::MonomialIdeal& ideal, std::optional<unsigned> k) {
  if (!k) return ideal;
  if (!ideal.is_squarefree()) throw socle::InvalidArgument("--k expects a squarefree input ideal");
  return socle::power(ideal, *k);
}

// ---------------------------------------------------------------- socle

int cmd_socle(const std::string& path, std::optional<unsigned> k, std::optional<unsigned> l_max,
              const Common& common) {
  socle::MonomialIdeal ideal = socle::io::parse_ideal(read_input(path));
  if (ideal == socle::MonomialIdeal::maximal(ideal.n()))
    std::cerr << "note: input is the maximal ideal (x1..xn)\n";
  socle::SocleReport report = socle::socle_monomials(maybe_power(ideal, k), common.options(), k);
  std::optional<std::vector<bool>> profile;
  if (l_max) profile = socle::depth_zero_profile(ideal, *l_max, common.options());

  if (common.structured()) {
    Json j = socle::io::to_json(report);
    if (profile) j["depth_zero_profile"] = *profile;
    emit(j);
    return kOk;
  }
  std::cout << "n: " << report.n << '\n';
  if (report.k) std::cout << "k: " << *report.k << '\n';
  std::cout << "socle (" << report.socle.size() << "):";
  for (const auto& u : report.socle) std::cout << ' ' << socle::to_string(u);
  std::cout << "\ndepth_zero: " << std::boolalpha << report.depth_zero << '\n';
  if (report.k) std::cout << "has_maximal_socle: " << report.has_maximal_socle << '\n';
  if (profile) {
    std::cout << "depth_zero_profile:";
    for (bool b : *profile) std::cout << ' ' << b;
    std::cout << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- power

int cmd_power(const std::string& path, unsigned k, const Common& common) {
  socle::MonomialIdeal ideal = socle::power(socle::io::parse_ideal(read_input(path)), k);
  if (common.structured()) {
    emit(socle::io::to_json(ideal));
  } else {
    std::cout << socle::to_string(ideal) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- member

int cmd_member(const std::string& path, const std::vector<socle::Exponent>& exponents,
               std::optional<unsigned> k, const Common& common) {
  socle::MonomialIdeal ideal = maybe_power(socle::io::parse_ideal(read_input(path)), k);
  socle::Monomial u(exponents);
  bool inside = socle::contains(ideal, u);
  if (common.structured()) {
    Json j;
    j["monomial"] = socle::io::to_json(u);
    j["member"] = inside;
    emit(j);
  } else {
    std::cout << socle::to_string(u) << (inside ? " is" : " is not") << " in the ideal\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- graph-check

int cmd_graph_check(const std::string& path, bool oracle, const Common& common) {
  std::istringstream in(read_input(path));
  socle::Graph g = socle::io::parse_graph(in);
  auto witness = socle::graph_depth2_criterion(g);
  bool maximal = socle::graph_maximal_socle(g);
  std::optional<socle::GraphOracle> truth;
  if (oracle) truth = socle::graph_square_oracle(g, common.options());
  bool agree = !truth || (truth->depth_zero == witness.has_value() && truth->maximal_socle == maximal);

  if (common.structured()) {
    Json j;
    j["n"] = g.n();
    j["depth_zero_square"] = witness.has_value();
    j["witness"] = witness ? socle::io::to_json(socle::VertexSet(witness->begin(), witness->end()))
                           : Json(nullptr);
    j["maximal_socle"] = maximal;
    if (truth) {
      j["oracle_depth_zero_square"] = truth->depth_zero;
      j["oracle_maximal_socle"] = truth->maximal_socle;
      j["agree"] = agree;
    }
    emit(j);
  } else {
    std::cout << "depth S/I^2 = 0: " << std::boolalpha << witness.has_value() << '\n';
    if (witness)
      std::cout << "witness triangle: " << vertices_text({witness->begin(), witness->end()}) << '\n';
    std::cout << "x_[n] in Soc(S/I^2): " << maximal << '\n';
    if (truth)
      std::cout << "oracle: depth zero " << truth->depth_zero << ", maximal socle "
                << truth->maximal_socle << (agree ? " (agrees)" : " (DISAGREES)") << '\n';
  }
  return agree ? kOk : kViolation;
}

// ---------------------------------------------------------------- complex-check

int cmd_complex_check(const std::string& path, unsigned k, bool oracle, const Common& common) {
  std::istringstream in(read_input(path));
  socle::SimplicialComplex complex = socle::io::parse_facets(in);
  auto a = socle::condition_a(complex, k);
  auto b = socle::condition_b(complex, k);
  bool maximal = a.holds && b.holds;

  std::optional<bool> top_outside;
  std::vector<bool> shifts_inside;
  bool agree = true;
  if (oracle) {
    socle::MonomialIdeal powered = socle::power(socle::facet_ideal(complex), k);
    socle::Monomial top = socle::Monomial::uniform(complex.n(), k - 1);
    top_outside = !socle::contains(powered, top);
    for (std::size_t j = 0; j < complex.n(); ++j)
      shifts_inside.push_back(socle::contains(powered, top.times_variable(j)));
    bool all_inside = std::all_of(shifts_inside.begin(), shifts_inside.end(), [](bool v) { return v; });
    agree = *top_outside == a.holds && (!a.holds || all_inside == b.holds);
  }

  if (common.structured()) {
    Json j;
    j["n"] = complex.n();
    j["k"] = k;
    j["condition_a"] = a.holds;
    j["condition_a_counterexample"] =
        a.counterexample ? socle::io::to_json(*a.counterexample) : Json(nullptr);
    j["condition_b"] = b.holds;
    Json witnesses = Json::array();
    for (const auto& w : b.witnesses) witnesses.push_back(w ? socle::io::to_json(*w) : Json(nullptr));
    j["condition_b_witnesses"] = witnesses;
    j["maximal_socle"] = maximal;
    if (oracle) {
      j["oracle_top_not_in_power"] = *top_outside;
      j["oracle_shift_in_power"] = shifts_inside;
      j["agree"] = agree;
    }
    emit(j);
  } else {
    std::cout << std::boolalpha << "condition (a): " << a.holds;
    if (a.counterexample) std::cout << "  counterexample " << tuple_text(*a.counterexample);
    std::cout << "\ncondition (b): " << b.holds << '\n';
    for (std::size_t j = 0; j < b.witnesses.size(); ++j)
      std::cout << "  vertex " << j + 1 << ": "
                << (b.witnesses[j] ? tuple_text(*b.witnesses[j]) : std::string("no witness")) << '\n';
    std::cout << "x_[n]^(k-1) in Soc(S/I^k): " << maximal << '\n';
    if (oracle) {
      std::cout << "oracle: x_[n]^(k-1) not in I^k: " << *top_outside << "; x_j x_[n]^(k-1) in I^k:";
      for (bool v : shifts_inside) std::cout << ' ' << v;
      std::cout << (agree ? " (agrees)" : " (DISAGREES)") << '\n';
    }
  }
  return agree ? kOk : kViolation;
}

// ---------------------------------------------------------------- census

int cmd_census(const std::string& family, std::size_t n, unsigned k, socle::RunConfig config,
               const Common& common) {
  socle::CensusResult result;
  if (family == "graphs") {
    if (k != 2) throw socle::InvalidArgument("the graph census checks squares only (k = 2)");
    result = socle::graph_census(n, config);
  } else {
    result = socle::complex_census(n, k, config);
  }
  if (common.structured()) {
    Json j;
    j["config"] = socle::to_json(config);
    j["result"] = socle::to_json(result);
    emit(j);
  } else {
    std::cout << result.family << " n=" << result.n << " k=" << result.k
              << (result.exhaustive ? " (exhaustive)" : " (sampled)") << '\n'
              << "checked: " << result.instances_checked << ", agreements: " << result.agreements
              << ", disagreements: " << result.disagreements.size()
              << ", budget exceeded: " << result.budget_exceeded << '\n';
    for (const auto& d : result.disagreements)
      std::cout << "--- instance " << d.index << " property " << d.property << ": decider "
                << d.decider << ", oracle " << d.oracle << '\n'
                << d.instance;
  }
  if (!result.disagreements.empty()) return kViolation;
  return result.budget_exceeded ? kBudget : kOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& suite, const socle::RunConfig& config, const Common& common) {
  std::vector<socle::SuiteReport> reports = socle::run_suites(suite, config);
  std::size_t failed = 0, budget = 0;
  for (const auto& r : reports) {
    failed += r.failures.size();
    budget += r.budget_exceeded;
  }
  if (common.structured()) {
    Json j;
    j["config"] = socle::to_json(config);
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(socle::to_json(r));
    j["suites"] = list;
    j["summary"] = {{"suites", reports.size()}, {"failures", failed}, {"budget_exceeded", budget}};
    emit(j);
  } else {
    for (const auto& r : reports) {
      std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.passed << "/" << r.checked
                << " checked (" << r.sampled << " sampled";
      if (r.budget_exceeded) std::cout << ", " << r.budget_exceeded << " over budget";
      if (r.flagged_maximal_ideal) std::cout << ", " << r.flagged_maximal_ideal << " maximal-ideal";
      std::cout << ")\n";
      for (const auto& f : r.failures)
        std::cout << "  instance " << f.index << ": " << f.detail << "\n  " << f.instance.dump() << '\n';
    }
  }
  if (failed) return kViolation;
  return budget ? kBudget : kOk;
}

// ---------------------------------------------------------------- formula

int cmd_formula(const std::string& which, std::int64_t n, std::int64_t d, std::int64_t k,
                std::int64_t r, const Common& common) {
  Json j;
  j["formula"] = which;
  if (which == "hh-depth") {
    j["n"] = n, j["d"] = d, j["k"] = k;
    j["value"] = socle::hh_depth(n, d, k);
  } else if (which == "threshold") {
    socle::Rational t = socle::threshold(n, k);
    j["n"] = n, j["k"] = k;
    j["numerator"] = t.numerator();
    j["denominator"] = t.denominator();
    j["d_above"] = socle::above_threshold(d, n, k);
    j["d_on"] = socle::on_threshold(d, n, k);
  } else {
    socle::ParameterTriple p = socle::admissible_params(k, r);
    j["k"] = p.k, j["r"] = r, j["n"] = p.n, j["d"] = p.d;
    j["hh_depth"] = socle::hh_depth(p.n, p.d, p.k);
  }
  if (common.structured()) {
    emit(j);
    return kOk;
  }
  if (which == "hh-depth") {
    std::cout << "depth S/I^k = " << j["value"].get<std::int64_t>() << '\n';
  } else if (which == "threshold") {
    std::cout << "((k-1)n+1)/k = " << j["numerator"].get<std::int64_t>();
    if (j["denominator"].get<std::int64_t>() != 1) std::cout << '/' << j["denominator"].get<std::int64_t>();
    std::cout << "; d=" << d << (j["d_above"].get<bool>() ? " above" : j["d_on"].get<bool>() ? " on" : " below")
              << '\n';
  } else {
    std::cout << "n = " << j["n"].get<std::int64_t>() << ", d = " << j["d"].get<std::int64_t>()
              << ", hh_depth = " << j["hh_depth"].get<std::int64_t>() << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Socles of powers of squarefree monomial ideals"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", common.budget, "Box enumeration budget (candidate monomials)")
        ->envname("SOCLE_BUDGET")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  std::string path;
  std::optional<unsigned> k_opt;
  std::optional<unsigned> l_max_opt;
  bool oracle = false;

  auto* socle_cmd = app.add_subcommand("socle", "Socle monomials of S/J, or of S/I^k with --k");
  socle_cmd->add_option("ideal", path, "Ideal file (JSON), '-' for stdin")->required();
  socle_cmd->add_option("--k", k_opt, "Take the k-th power of the (squarefree) input first")
      ->check(CLI::PositiveNumber);
  socle_cmd->add_option("--l-max", l_max_opt, "Also print the depth-zero profile up to this power")
      ->check(CLI::PositiveNumber);
  socle_cmd->add_option("--strategy", common.strategy, "Enumeration strategy")
      ->check(CLI::IsMember({"box", "colon", "cross-check"}));
  add_common(socle_cmd);

  unsigned k_power = 1;
  auto* power_cmd = app.add_subcommand("power", "Minimal generators of I^k");
  power_cmd->add_option("ideal", path, "Ideal file (JSON), '-' for stdin")->required();
  power_cmd->add_option("--k", k_power, "Power")->required()->check(CLI::PositiveNumber);
  add_common(power_cmd);

  std::vector<socle::Exponent> exponents;
  auto* member_cmd = app.add_subcommand("member", "Ideal membership of a monomial");
  member_cmd->add_option("ideal", path, "Ideal file (JSON), '-' for stdin")->required();
  member_cmd->add_option("exponents", exponents, "Exponent vector of the monomial")->required();
  member_cmd->add_option("--k", k_opt, "Test membership in I^k")->check(CLI::PositiveNumber);
  add_common(member_cmd);

  auto* graph_cmd = app.add_subcommand("graph-check", "Decide depth S/I_G^2 = 0 for a graph");
  graph_cmd->add_option("graph", path, "Graph file, '-' for stdin")->required();
  graph_cmd->add_flag("--oracle", oracle, "Also run the socle oracle and compare");
  add_common(graph_cmd);

  unsigned k_complex = 2;
  auto* complex_cmd =
      app.add_subcommand("complex-check", "Decide x_[n]^(k-1) in Soc(S/I(Delta)^k) for a complex");
  complex_cmd->add_option("facets", path, "Facet file, '-' for stdin")->required();
  complex_cmd->add_option("--k", k_complex, "Power")->required()->check(CLI::PositiveNumber);
  complex_cmd->add_flag("--oracle", oracle, "Also check the membership facts in I^k");
  add_common(complex_cmd);

  socle::RunConfig config;
  auto add_run = [&](CLI::App* sub) {
    sub->add_option("--seed", config.seed, "Random seed");
    sub->add_option("--samples", config.sample_count, "Sample count")->check(CLI::PositiveNumber);
    sub->add_option("--n-max", config.n_max, "Largest variable count")->check(CLI::PositiveNumber);
    sub->add_option("--k-max", config.k_max, "Largest power")->check(CLI::PositiveNumber);
    sub->add_option("--l-max", config.l_max, "Longest depth profile")->check(CLI::PositiveNumber);
  };

  std::string family;
  std::size_t census_n = 4;
  unsigned census_k = 2;
  auto* census_cmd = app.add_subcommand("census", "Decider vs oracle over a family of instances");
  census_cmd->add_option("family", family, "graphs or complexes")
      ->required()
      ->check(CLI::IsMember({"graphs", "complexes"}));
  census_cmd->add_option("--n", census_n, "Number of vertices")->check(CLI::PositiveNumber);
  census_cmd->add_option("--k", census_k, "Power")->check(CLI::PositiveNumber);
  add_run(census_cmd);
  add_common(census_cmd);

  std::string suite;
  std::vector<std::string> suites = socle::suite_names();
  suites.push_back("all");
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));
  add_run(verify_cmd);
  add_common(verify_cmd);

  std::string which;
  std::int64_t fn = 1, fd = 1, fk = 1, fr = 0;
  auto* formula_cmd = app.add_subcommand("formula", "Closed-form depth and threshold values");
  formula_cmd->add_option("which", which, "hh-depth, threshold or admissible")
      ->required()
      ->check(CLI::IsMember({"hh-depth", "threshold", "admissible"}));
  formula_cmd->add_option("--n", fn, "Number of variables");
  formula_cmd->add_option("--d", fd, "Generator degree");
  formula_cmd->add_option("--k", fk, "Power");
  formula_cmd->add_option("--r", fr, "Parameter r >= 0 for admissible");
  add_common(formula_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  config.box_budget = common.budget;
  config.output_format =
      common.structured() ? socle::OutputFormat::structured : socle::OutputFormat::text;
  try {
    if (*socle_cmd) return cmd_socle(path, k_opt, l_max_opt, common);
    if (*power_cmd) return cmd_power(path, k_power, common);
    if (*member_cmd) return cmd_member(path, exponents, k_opt, common);
    if (*graph_cmd) return cmd_graph_check(path, oracle, common);
    if (*complex_cmd) return cmd_complex_check(path, k_complex, oracle, common);
    if (*census_cmd) {
      config.n_max = std::max(config.n_max, census_n);
      config.k_max = std::max(config.k_max, census_k);
      return cmd_census(family, census_n, census_k, config, common);
    }
    if (*verify_cmd) return cmd_verify(suite, config, common);
    if (*formula_cmd) return cmd_formula(which, fn, fd, fk, fr, common);
  } catch (const socle::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const socle::StrategyMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kViolation;
  } catch (const socle::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
