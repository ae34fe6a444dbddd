#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "socle/errors.hpp"
#include "socle/monomial.hpp"

namespace socle {

/// A monomial ideal in K[x_1..x_n], held by its minimal generating set G(I).
///
/// Generators are kept minimal (no generator divides another) and sorted
/// lexicographically, so two ideals are equal iff their generator lists are.
/// The empty list is the zero ideal. The unit ideal (generated by the unit
/// monomial) can arise as a colon ideal and is representable, but operations
/// that need a proper ideal reject it.
class MonomialIdeal {
 public:
  /// The ideal generated by `generators`; the list need not be minimal.
  MonomialIdeal(std::size_t n, std::vector<Monomial> generators) : n_(n) {
    if (n == 0) throw InvalidArgument("an ideal needs at least one variable");
    for (const Monomial& g : generators) require_same_n(n, g.n());
    generators_ = minimal_generators(std::move(generators));
  }

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n, {}); }

  /// The maximal ideal (x_1, ..., x_n).
  static MonomialIdeal maximal(std::size_t n) {
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(Monomial::unit(n).times_variable(i));
    return MonomialIdeal(n, std::move(gens));
  }

  std::size_t n() const noexcept { return n_; }
  std::span<const Monomial> generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }

  bool is_zero() const noexcept { return generators_.empty(); }
  bool is_unit() const noexcept { return generators_.size() == 1 && generators_[0].is_unit(); }
  bool is_proper() const noexcept { return !is_unit(); }

  bool is_squarefree() const noexcept {
    return std::all_of(generators_.begin(), generators_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
  }

  /// Every generator has the same total degree. The zero ideal does not qualify.
  bool is_single_degree() const noexcept {
    if (generators_.empty()) return false;
    auto d = generators_.front().degree();
    return std::all_of(generators_.begin(), generators_.end(),
                       [d](const Monomial& g) { return g.degree() == d; });
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  /// Inclusion-minimal subset of `gens` generating the same ideal, sorted
  /// lexicographically.
  static std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
    // Sorting by degree first means a divisor is always seen before any of
    // its proper multiples.
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      auto da = a.degree(), db = b.degree();
      return da != db ? da < db : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (Monomial& g : gens) {
      bool redundant = std::any_of(kept.begin(), kept.end(),
                                   [&](const Monomial& h) { return divides(h, g); });
      if (!redundant) kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
  }

 private:
  std::size_t n_;
  std::vector<Monomial> generators_;
};

/// Canonical ideal generated by `gens`. Idempotent and order-independent.
inline MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens) {
  return MonomialIdeal(n, std::move(gens));
}

inline bool contains(const MonomialIdeal& ideal, const Monomial& u) {
  require_same_n(ideal.n(), u.n());
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Monomial& g) { return divides(g, u); });
}

inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_n(a.n(), b.n());
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const Monomial& u : a.generators())
    for (const Monomial& v : b.generators()) gens.push_back(u * v);
  return MonomialIdeal(a.n(), std::move(gens));
}

/// I^k by repeated multiplication, minimalizing after every step.
inline MonomialIdeal power(const MonomialIdeal& ideal, unsigned k) {
  if (k == 0) throw InvalidArgument("power exponent must be at least 1");
  MonomialIdeal result = ideal;
  for (unsigned step = 1; step < k; ++step) result = product(result, ideal);
  return result;
}

/// I : x_i. May be the unit ideal.
inline MonomialIdeal colon_by_variable(const MonomialIdeal& ideal, std::size_t i) {
  if (i >= ideal.n()) throw InvalidArgument("variable index out of range");
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const Monomial& g : ideal.generators()) gens.push_back(g.strip_variable(i));
  return MonomialIdeal(ideal.n(), std::move(gens));
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_n(a.n(), b.n());
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const Monomial& u : a.generators())
    for (const Monomial& v : b.generators()) gens.push_back(lcm(u, v));
  return MonomialIdeal(a.n(), std::move(gens));
}

/// I : m where m = (x_1, ..., x_n).
inline MonomialIdeal colon_by_maximal(const MonomialIdeal& ideal) {
  MonomialIdeal result = colon_by_variable(ideal, 0);
  for (std::size_t i = 1; i < ideal.n(); ++i)
    result = intersect(result, colon_by_variable(ideal, i));
  return result;
}

/// c_i = max exponent of x_i over G(I).
inline std::vector<Exponent> max_degrees(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InvalidArgument("max_degrees of the zero ideal");
  std::vector<Exponent> c(ideal.n(), 0);
  for (const Monomial& g : ideal.generators())
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::max(c[i], g[i]);
  return c;
}

/// "(x1*x2, x2*x3)"; "(0)" for the zero ideal.
inline std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i) out += ", ";
    out += to_string(ideal.generators()[i]);
  }
  return out + ")";
}

}  // namespace socle
