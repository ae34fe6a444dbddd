#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "socle/errors.hpp"
#include "socle/ideal.hpp"
#include "socle/monomial.hpp"

namespace socle {

inline constexpr unsigned long long kDefaultBoxBudget = 2'000'000;

/// How socle_monomials enumerates candidates.
enum class SocleStrategy {
  box,          ///< test every monomial in the exponent box
  colon,        ///< multiples of G(J : m) inside the box, minus J
  cross_check,  ///< run both and throw StrategyMismatch if they differ
};

struct SocleOptions {
  SocleStrategy strategy = SocleStrategy::box;
  unsigned long long budget = kDefaultBoxBudget;
};

/// BOX and COLON strategies disagreed. Signals a bug in the oracle itself.
class StrategyMismatch : public Error {
 public:
  explicit StrategyMismatch(const std::string& ideal)
      : Error("box and colon socle strategies disagree on " + ideal) {}
};

/// Monomial basis of Soc(S/J) with derived flags.
struct SocleReport {
  std::size_t n = 0;
  std::optional<unsigned> k;         ///< set only when the caller declared J = I^k
  std::vector<Monomial> socle;       ///< lexicographic order
  bool depth_zero = false;           ///< socle nonempty
  bool has_maximal_socle = false;    ///< x_[n]^{k-1} in the socle; false when k unset
};

/// Componentwise upper bound (c_1 - 1, ..., c_n - 1) on socle exponents.
///
/// If some variable occurs in no generator its entry is clamped to 0 and the
/// box is flagged vacuous: then no socle monomial exists at all, since x_i * u
/// in J forces a generator free of x_i to divide u.
struct SocleBox {
  std::vector<Exponent> upper;
  bool vacuous = false;

  /// Number of monomials in the box; nullopt if it does not fit in 64 bits.
  std::optional<unsigned long long> volume() const {
    unsigned long long v = 1;
    for (Exponent e : upper) {
      unsigned long long side = static_cast<unsigned long long>(e) + 1;
      if (v > std::numeric_limits<unsigned long long>::max() / side) return std::nullopt;
      v *= side;
    }
    return v;
  }
};

namespace detail {

inline void require_nonzero_proper(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InvalidArgument("socle of S/J requires a nonzero ideal");
  if (!ideal.is_proper()) throw InvalidArgument("socle of S/J requires a proper ideal");
}

}  // namespace detail

/// Calls `visit` on every exponent vector `lower <= a <= upper`, in
/// lexicographic order.
template <typename Visitor>
void for_each_in_box(const std::vector<Exponent>& lower, const std::vector<Exponent>& upper,
                     Visitor&& visit) {
  const std::size_t n = upper.size();
  for (std::size_t i = 0; i < n; ++i)
    if (lower[i] > upper[i]) return;
  std::vector<Exponent> cur = lower;
  for (;;) {
    visit(Monomial(cur));
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == upper[i - 1]) {
      cur[i - 1] = lower[i - 1];
      --i;
    }
    if (i == 0) return;
    ++cur[i - 1];
  }
}

inline bool is_socle_element(const MonomialIdeal& ideal, const Monomial& u) {
  require_same_n(ideal.n(), u.n());
  detail::require_nonzero_proper(ideal);
  if (contains(ideal, u)) return false;
  for (std::size_t i = 0; i < u.n(); ++i)
    if (!contains(ideal, u.times_variable(i))) return false;
  return true;
}

inline SocleBox socle_box_bound(const MonomialIdeal& ideal) {
  detail::require_nonzero_proper(ideal);
  SocleBox box;
  for (Exponent c : max_degrees(ideal)) {
    if (c == 0) box.vacuous = true;
    box.upper.push_back(c == 0 ? 0 : c - 1);
  }
  return box;
}

namespace detail {

inline SocleBox checked_box(const MonomialIdeal& ideal, unsigned long long budget) {
  SocleBox box = socle_box_bound(ideal);
  auto volume = box.volume();
  if (!volume) throw BudgetExceeded(std::numeric_limits<unsigned long long>::max(), budget);
  if (*volume > budget) throw BudgetExceeded(*volume, budget);
  return box;
}

}  // namespace detail

/// Socle by testing every monomial of the box against the definition.
inline std::vector<Monomial> socle_by_box(const MonomialIdeal& ideal,
                                          unsigned long long budget = kDefaultBoxBudget) {
  SocleBox box = detail::checked_box(ideal, budget);
  std::vector<Monomial> out;
  for_each_in_box(std::vector<Exponent>(ideal.n(), 0), box.upper, [&](const Monomial& u) {
    if (is_socle_element(ideal, u)) out.push_back(u);
  });
  return out;
}

/// Socle as the box-bounded part of (J : m) \ J.
inline std::vector<Monomial> socle_by_colon(const MonomialIdeal& ideal,
                                            unsigned long long budget = kDefaultBoxBudget) {
  SocleBox box = detail::checked_box(ideal, budget);
  MonomialIdeal colon = colon_by_maximal(ideal);
  std::set<Monomial> found;
  for (const Monomial& g : colon.generators()) {
    std::vector<Exponent> lower(g.exponents().begin(), g.exponents().end());
    for_each_in_box(lower, box.upper, [&](const Monomial& w) {
      if (!contains(ideal, w)) found.insert(w);
    });
  }
  return {found.begin(), found.end()};
}

/// Exact monomial basis of Soc(S/J). Pass `k` when J is known to be I^k.
inline SocleReport socle_monomials(const MonomialIdeal& ideal, SocleOptions options = {},
                                   std::optional<unsigned> k = std::nullopt) {
  SocleReport report;
  report.n = ideal.n();
  report.k = k;
  switch (options.strategy) {
    case SocleStrategy::box:
      report.socle = socle_by_box(ideal, options.budget);
      break;
    case SocleStrategy::colon:
      report.socle = socle_by_colon(ideal, options.budget);
      break;
    case SocleStrategy::cross_check: {
      report.socle = socle_by_box(ideal, options.budget);
      if (socle_by_colon(ideal, options.budget) != report.socle)
        throw StrategyMismatch(to_string(ideal));
      break;
    }
  }
  report.depth_zero = !report.socle.empty();
  if (k) {
    if (*k == 0) throw InvalidArgument("power exponent must be at least 1");
    Monomial top = Monomial::uniform(ideal.n(), *k - 1);
    report.has_maximal_socle =
        std::binary_search(report.socle.begin(), report.socle.end(), top);
  }
  return report;
}

/// Socle reports for I, I^2, ..., I^l_max.
inline std::vector<SocleReport> power_socle_reports(const MonomialIdeal& ideal, unsigned l_max,
                                                    SocleOptions options = {}) {
  if (l_max == 0) throw InvalidArgument("l_max must be at least 1");
  detail::require_nonzero_proper(ideal);
  std::vector<SocleReport> reports;
  MonomialIdeal current = ideal;
  for (unsigned l = 1; l <= l_max; ++l) {
    if (l > 1) current = product(current, ideal);
    reports.push_back(socle_monomials(current, options, l));
  }
  return reports;
}

/// Entry l-1 tells whether depth S/I^l = 0, for l = 1..l_max.
inline std::vector<bool> depth_zero_profile(const MonomialIdeal& ideal, unsigned l_max,
                                            SocleOptions options = {}) {
  if (!ideal.is_squarefree()) throw InvalidArgument("depth-zero profile expects a squarefree ideal");
  std::vector<bool> profile;
  for (const SocleReport& r : power_socle_reports(ideal, l_max, options))
    profile.push_back(r.depth_zero);
  return profile;
}

/// Socle monomials inside an arbitrary box [0, upper], by the definition.
/// Used to look past the proven bounds when verifying them.
inline std::vector<Monomial> socle_in_box(const MonomialIdeal& ideal,
                                          const std::vector<Exponent>& upper,
                                          unsigned long long budget = kDefaultBoxBudget) {
  require_same_n(ideal.n(), upper.size());
  detail::require_nonzero_proper(ideal);
  auto volume = SocleBox{upper, false}.volume();
  if (!volume) throw BudgetExceeded(std::numeric_limits<unsigned long long>::max(), budget);
  if (*volume > budget) throw BudgetExceeded(*volume, budget);
  std::vector<Monomial> out;
  for_each_in_box(std::vector<Exponent>(ideal.n(), 0), upper, [&](const Monomial& u) {
    if (is_socle_element(ideal, u)) out.push_back(u);
  });
  return out;
}

/// Checks a_i <= c_i - 1 for every socle monomial of S/J found in the widened
/// box [0, c_i + 1]; c = max_degrees(J). A variable with c_i = 0 admits no
/// socle monomial at all. A false return means a bug, not a property of J.
inline bool verify_generator_bound(const MonomialIdeal& ideal,
                                   unsigned long long budget = kDefaultBoxBudget) {
  std::vector<Exponent> c = max_degrees(ideal);
  std::vector<Exponent> wide(c.size());
  std::transform(c.begin(), c.end(), wide.begin(), [](Exponent e) { return e + 1; });
  for (const Monomial& u : socle_in_box(ideal, wide, budget))
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] == 0 || u[i] > c[i] - 1) return false;
  return true;
}

/// Checks that every socle monomial of S/I^k has all exponents <= k - 1,
/// searching the widened box [0, k] in every variable.
inline bool verify_exponent_bound(const MonomialIdeal& ideal, unsigned k,
                                  unsigned long long budget = kDefaultBoxBudget) {
  if (!ideal.is_squarefree()) throw InvalidArgument("exponent bound expects a squarefree ideal");
  if (k == 0) throw InvalidArgument("power exponent must be at least 1");
  std::vector<Exponent> wide(ideal.n(), k);
  for (const Monomial& u : socle_in_box(power(ideal, k), wide, budget))
    for (Exponent a : u.exponents())
      if (a > k - 1) return false;
  return true;
}

}  // namespace socle
