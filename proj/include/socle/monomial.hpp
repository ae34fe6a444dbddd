#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "socle/errors.hpp"

namespace socle {

using Exponent = std::uint32_t;

/// A monomial x_1^{a_1} ... x_n^{a_n} stored as its exponent vector.
///
/// Variables are indexed 0..n-1 in the C++ API; textual renderings use the
/// conventional 1-based names x1..xn. The unit monomial (all exponents zero)
/// is a valid value. Ordering is lexicographic on the exponent vector.
class Monomial {
 public:
  explicit Monomial(std::vector<Exponent> exponents)
      : exponents_(std::move(exponents)) {
    require_positive(exponents_.size());
  }

  /// The unit monomial in `n` variables.
  static Monomial unit(std::size_t n) { return uniform(n, 0); }

  /// x_F: the squarefree monomial whose support is `support`.
  static Monomial from_support(std::size_t n, std::span<const std::size_t> support) {
    Monomial m = unit(n);
    for (std::size_t v : support) {
      if (v >= n) throw InvalidArgument("variable index out of range");
      m.exponents_[v] = 1;
    }
    return m;
  }

  /// x_[n]^e, i.e. every exponent equal to `e`.
  static Monomial uniform(std::size_t n, Exponent e) {
    require_positive(n);
    return Monomial(std::vector<Exponent>(n, e));
  }

  std::size_t n() const noexcept { return exponents_.size(); }
  std::span<const Exponent> exponents() const noexcept { return exponents_; }
  Exponent operator[](std::size_t i) const { return exponents_.at(i); }

  std::uint64_t degree() const noexcept {
    std::uint64_t d = 0;
    for (Exponent e : exponents_) d += e;
    return d;
  }

  bool is_unit() const noexcept {
    return std::all_of(exponents_.begin(), exponents_.end(),
                       [](Exponent e) { return e == 0; });
  }

  bool is_squarefree() const noexcept {
    return std::all_of(exponents_.begin(), exponents_.end(),
                       [](Exponent e) { return e <= 1; });
  }

  /// Variables with positive exponent, ascending.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n(); ++i)
      if (exponents_[i] > 0) s.push_back(i);
    return s;
  }

  /// this * x_i
  Monomial times_variable(std::size_t i) const {
    if (i >= n()) throw InvalidArgument("variable index out of range");
    if (exponents_[i] == std::numeric_limits<Exponent>::max()) throw ExponentOverflow();
    Monomial r = *this;
    ++r.exponents_[i];
    return r;
  }

  /// this / x_i when x_i divides this, otherwise this unchanged.
  Monomial strip_variable(std::size_t i) const {
    if (i >= n()) throw InvalidArgument("variable index out of range");
    Monomial r = *this;
    if (r.exponents_[i] > 0) --r.exponents_[i];
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exponents_ <=> b.exponents_;
  }

 private:
  static void require_positive(std::size_t n) {
    if (n == 0) throw InvalidArgument("a monomial needs at least one variable");
  }

  std::vector<Exponent> exponents_;

  friend Monomial operator*(const Monomial&, const Monomial&);
  friend Monomial lcm(const Monomial&, const Monomial&);
};

inline void require_same_n(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionMismatch(a, b);
}

/// True iff u divides v, i.e. u <= v componentwise.
inline bool divides(const Monomial& u, const Monomial& v) {
  require_same_n(u.n(), v.n());
  auto a = u.exponents();
  auto b = v.exponents();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Componentwise sum of exponents; throws ExponentOverflow.
inline Monomial operator*(const Monomial& u, const Monomial& v) {
  require_same_n(u.n(), v.n());
  Monomial r = u;
  for (std::size_t i = 0; i < r.n(); ++i) {
    Exponent b = v.exponents_[i];
    if (r.exponents_[i] > std::numeric_limits<Exponent>::max() - b) throw ExponentOverflow();
    r.exponents_[i] += b;
  }
  return r;
}

inline Monomial lcm(const Monomial& u, const Monomial& v) {
  require_same_n(u.n(), v.n());
  Monomial r = u;
  for (std::size_t i = 0; i < r.n(); ++i)
    r.exponents_[i] = std::max(r.exponents_[i], v.exponents_[i]);
  return r;
}

/// "x1^2*x3", or "1" for the unit monomial.
inline std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.n(); ++i) {
    Exponent e = m[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

}  // namespace socle
