#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "socle/complex.hpp"
#include "socle/errors.hpp"
#include "socle/graph.hpp"
#include "socle/ideal.hpp"
#include "socle/io.hpp"
#include "socle/random.hpp"
#include "socle/socle_engine.hpp"

namespace socle {

enum class OutputFormat { text, structured };

/// Knobs shared by every census and verification run. The seed determines
/// every random choice.
struct RunConfig {
  std::uint64_t seed = 1;
  unsigned long long box_budget = kDefaultBoxBudget;
  unsigned l_max = 4;
  unsigned k_max = 3;
  std::size_t n_max = 6;
  std::size_t sample_count = 200;
  OutputFormat output_format = OutputFormat::text;

  void validate() const {
    if (box_budget == 0 || l_max == 0 || k_max == 0 || n_max == 0 || sample_count == 0)
      throw InvalidArgument("run bounds must be positive");
  }
};

inline io::Json to_json(const RunConfig& c) {
  io::Json j;
  j["seed"] = c.seed;
  j["box_budget"] = c.box_budget;
  j["l_max"] = c.l_max;
  j["k_max"] = c.k_max;
  j["n_max"] = c.n_max;
  j["sample_count"] = c.sample_count;
  return j;
}

/// One instance on which the combinatorial decider and the socle oracle
/// disagree. `instance` is a self-contained graph or facet file.
struct Disagreement {
  std::size_t index = 0;
  std::string property;
  std::string instance;
  bool decider = false;
  bool oracle = false;
};

struct CensusResult {
  std::string family;
  std::size_t n = 0;
  unsigned k = 0;
  bool exhaustive = false;
  std::size_t instances_checked = 0;
  std::size_t agreements = 0;
  std::size_t budget_exceeded = 0;  ///< not counted in instances_checked
  std::vector<Disagreement> disagreements;
  /// Disagreement count per property; every checked property has an entry.
  std::map<std::string, std::size_t> disagreements_by_property;

  bool clean() const { return disagreements.empty() && budget_exceeded == 0; }
};

inline io::Json to_json(const CensusResult& r) {
  io::Json j;
  j["family"] = r.family;
  j["n"] = r.n;
  j["k"] = r.k;
  j["exhaustive"] = r.exhaustive;
  j["instances_checked"] = r.instances_checked;
  j["agreements"] = r.agreements;
  j["budget_exceeded"] = r.budget_exceeded;
  io::Json by = io::Json::object();
  for (const auto& [name, count] : r.disagreements_by_property) by[name] = count;
  j["disagreements_by_property"] = by;
  io::Json list = io::Json::array();
  for (const Disagreement& d : r.disagreements) {
    io::Json e;
    e["index"] = d.index;
    e["property"] = d.property;
    e["decider"] = d.decider;
    e["oracle"] = d.oracle;
    e["instance"] = d.instance;
    list.push_back(e);
  }
  j["disagreements"] = list;
  return j;
}

/// One decider-vs-oracle comparison on a single instance.
struct PropertyCheck {
  std::string property;
  bool decider;
  bool oracle;
};

/// Oracle-side facts about S/I_G^2 for a graph, by exact ideal arithmetic.
struct GraphOracle {
  bool depth_zero = false;
  bool maximal_socle = false;
};

inline GraphOracle graph_square_oracle(const Graph& g, SocleOptions options) {
  // With no edges I_G = 0 and S/I_G^2 = S has no socle.
  if (g.edges().empty()) return {};
  MonomialIdeal square = power(edge_ideal(g), 2);
  SocleReport report = socle_monomials(square, options, 2);
  return {report.depth_zero, report.has_maximal_socle};
}

inline std::vector<PropertyCheck> check_graph(const Graph& g, SocleOptions options) {
  GraphOracle oracle = graph_square_oracle(g, options);
  bool maximal_by_membership =
      !g.edges().empty() && is_socle_element(power(edge_ideal(g), 2), Monomial::uniform(g.n(), 1));
  return {
      {"depth_zero_square", graph_depth2_criterion(g).has_value(), oracle.depth_zero},
      {"maximal_socle", graph_maximal_socle(g), maximal_by_membership},
      {"maximal_socle_report", graph_maximal_socle(g), oracle.maximal_socle},
  };
}

/// Oracle-side membership facts for I(Delta)^k.
inline std::vector<PropertyCheck> check_complex(const SimplicialComplex& c, unsigned k,
                                                SocleOptions options) {
  const std::size_t n = c.n();
  MonomialIdeal ideal = facet_ideal(c);
  MonomialIdeal powered = power(ideal, k);
  Monomial top = Monomial::uniform(n, k - 1);
  bool top_outside = !contains(powered, top);
  bool all_shifts_inside = true;
  for (std::size_t j = 0; j < n; ++j) all_shifts_inside = all_shifts_inside && contains(powered, top.times_variable(j));

  ConditionAResult a = condition_a(c, k);
  ConditionBResult b = condition_b(c, k);
  std::vector<PropertyCheck> checks{{"condition_a", a.holds, top_outside}};
  if (a.holds) checks.push_back({"condition_b", b.holds, all_shifts_inside});
  bool decided = a.holds && b.holds;
  checks.push_back({"maximal_socle", decided, is_socle_element(powered, top)});
  checks.push_back({"maximal_socle_report", decided,
                    socle_monomials(powered, options, k).has_maximal_socle});
  return checks;
}

namespace detail {

template <typename Instance, typename Check, typename Format>
void tally(CensusResult& result, std::size_t index, const Instance& instance, Check&& check,
           Format&& format) {
  std::vector<PropertyCheck> checks;
  try {
    checks = check(instance);
  } catch (const BudgetExceeded&) {
    ++result.budget_exceeded;
    return;
  } catch (const StrategyMismatch&) {
    checks = {{"strategy_agreement", true, false}};
  }
  ++result.instances_checked;
  bool agree = true;
  for (const PropertyCheck& pc : checks) {
    result.disagreements_by_property.try_emplace(pc.property, 0);
    if (pc.decider == pc.oracle) continue;
    agree = false;
    ++result.disagreements_by_property[pc.property];
    result.disagreements.push_back({index, pc.property, format(instance), pc.decider, pc.oracle});
  }
  if (agree) ++result.agreements;
}

}  // namespace detail

/// Graphs on n labeled vertices: every one of the 2^C(n,2) edge sets when
/// that is at most 2^20, else `sample_count` seeded uniform edge sets.
/// The oracle runs both socle strategies and reports a mismatch as a
/// disagreement on "strategy_agreement".
inline CensusResult graph_census(std::size_t n, const RunConfig& config) {
  config.validate();
  if (n == 0 || n > config.n_max) throw InvalidArgument("graph census needs 1 <= n <= n_max");
  SocleOptions options{SocleStrategy::cross_check, config.box_budget};
  CensusResult result;
  result.family = "graphs";
  result.n = n;
  result.k = 2;
  const std::size_t pairs = n * (n - 1) / 2;
  result.exhaustive = pairs <= 20;
  auto check = [&](const Graph& g) { return check_graph(g, options); };
  auto format = [](const Graph& g) { return io::format_graph(g); };
  if (result.exhaustive) {
    const std::uint64_t total = std::uint64_t{1} << pairs;
    for (std::uint64_t mask = 0; mask < total; ++mask)
      detail::tally(result, mask, Graph::from_mask(n, mask), check, format);
    return result;
  }
  for (std::size_t i = 0; i < config.sample_count; ++i) {
    Rng rng = instance_rng(config.seed, i);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() & 1U) edges.emplace_back(u, v);
    detail::tally(result, i, Graph(n, std::move(edges)), check, format);
  }
  return result;
}

/// `sample_count` seeded random complexes on n vertices, each generated by
/// at most 2n random faces, checked at power k.
inline CensusResult complex_census(std::size_t n, unsigned k, const RunConfig& config) {
  config.validate();
  if (n == 0 || n > config.n_max) throw InvalidArgument("complex census needs 1 <= n <= n_max");
  if (k == 0 || k > config.k_max) throw InvalidArgument("complex census needs 1 <= k <= k_max");
  SocleOptions options{SocleStrategy::cross_check, config.box_budget};
  CensusResult result;
  result.family = "complexes";
  result.n = n;
  result.k = k;
  auto check = [&](const SimplicialComplex& c) { return check_complex(c, k, options); };
  auto format = [](const SimplicialComplex& c) { return io::format_facets(c); };
  for (std::size_t i = 0; i < config.sample_count; ++i) {
    Rng rng = instance_rng(config.seed, i);
    detail::tally(result, i, random_complex(rng, n, 2 * n), check, format);
  }
  return result;
}

}  // namespace socle
