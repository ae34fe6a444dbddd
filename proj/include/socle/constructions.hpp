#pragma once

#include <cstddef>
#include <vector>

#include "socle/errors.hpp"
#include "socle/ideal.hpp"
#include "socle/monomial.hpp"

namespace socle {

namespace detail {

inline Monomial squarefree(std::size_t n, std::initializer_list<std::vector<std::size_t>> parts) {
  std::vector<std::size_t> support;
  for (const auto& p : parts) support.insert(support.end(), p.begin(), p.end());
  return Monomial::from_support(n, support);
}

inline std::vector<std::size_t> range(std::size_t first, std::size_t last) {
  std::vector<std::size_t> r;
  for (std::size_t i = first; i < last; ++i) r.push_back(i);
  return r;
}

}  // namespace detail

/// (x_1 x_2 ... x_{n-1}, x_1 x_n, x_2 x_n, ..., x_{n-1} x_n); its square has
/// x_[n] in the socle.
inline MonomialIdeal example_a(std::size_t n) {
  if (n < 3) throw InvalidArgument("example_a needs n >= 3");
  std::vector<Monomial> gens{detail::squarefree(n, {detail::range(0, n - 1)})};
  for (std::size_t i = 0; i + 1 < n; ++i) gens.push_back(detail::squarefree(n, {{i, n - 1}}));
  return MonomialIdeal(n, std::move(gens));
}

/// Degree-d ideal in n = 2d - 1 variables with generators
///   x_1 ... x_d,
///   x_i x_{d+1} ... x_{2d-1}  for 1 <= i <= d,
///   x_2 ... x_d x_j           for d+1 <= j <= 2d-1.
inline MonomialIdeal example_b(std::size_t d) {
  if (d < 2) throw InvalidArgument("example_b needs d >= 2");
  const std::size_t n = 2 * d - 1;
  const auto head = detail::range(0, d);
  const auto tail = detail::range(d, n);
  const auto middle = detail::range(1, d);
  std::vector<Monomial> gens{detail::squarefree(n, {head})};
  for (std::size_t i = 0; i < d; ++i) gens.push_back(detail::squarefree(n, {{i}, tail}));
  for (std::size_t j = d; j < n; ++j) gens.push_back(detail::squarefree(n, {middle, {j}}));
  return MonomialIdeal(n, std::move(gens));
}

/// All C(n, d) squarefree monomials of degree d.
inline MonomialIdeal squarefree_veronese(std::size_t n, std::size_t d) {
  if (d < 1 || d > n) throw InvalidArgument("squarefree_veronese needs 1 <= d <= n");
  std::vector<Monomial> gens;
  std::vector<std::size_t> pick(d);
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;
  for (;;) {
    gens.push_back(Monomial::from_support(n, pick));
    std::size_t i = d;
    while (i > 0 && pick[i - 1] == n - d + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return MonomialIdeal(n, std::move(gens));
}

/// All squarefree monomials of degree k in k + 1 variables. The k-th power
/// is the first with depth zero, and x_[n]^{k-1} spans its socle.
inline MonomialIdeal allk_ideal(unsigned k) {
  if (k < 2) throw InvalidArgument("allk_ideal needs k >= 2");
  return squarefree_veronese(k + 1, k);
}

}  // namespace socle
