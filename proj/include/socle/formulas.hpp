#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "socle/complex.hpp"
#include "socle/errors.hpp"

namespace socle {

using Rational = boost::rational<std::int64_t>;

/// Number of variables n, generator degree d and power k.
struct ParameterTriple {
  std::int64_t n = 1;
  std::int64_t d = 1;
  std::int64_t k = 1;

  friend bool operator==(const ParameterTriple&, const ParameterTriple&) = default;
};

/// ((k-1) n + 1) / k, exactly. Single-degree squarefree ideals of degree above
/// it have positive depth at the k-th power.
inline Rational threshold(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw InvalidArgument("threshold needs n >= 1 and k >= 1");
  return Rational((k - 1) * n + 1, k);
}

/// d > ((k-1) n + 1) / k, compared exactly.
inline bool above_threshold(std::int64_t d, std::int64_t n, std::int64_t k) {
  return Rational(d) > threshold(n, k);
}

/// d == ((k-1) n + 1) / k, compared exactly.
inline bool on_threshold(std::int64_t d, std::int64_t n, std::int64_t k) {
  return Rational(d) == threshold(n, k);
}

/// max{0, n - k(n - d) - 1}: depth of S/I^k for I the squarefree Veronese
/// ideal of degree d in n variables. Not valid for any other ideal.
inline std::int64_t hh_depth(std::int64_t n, std::int64_t d, std::int64_t k) {
  if (d < 1 || d > n) throw InvalidArgument("hh_depth needs 1 <= d <= n");
  if (k < 1) throw InvalidArgument("hh_depth needs k >= 1");
  return std::max<std::int64_t>(0, n - k * (n - d) - 1);
}

/// n = (r+1)k + 1 and d = (r+1)k - r, which puts d exactly on the threshold.
inline ParameterTriple admissible_params(std::int64_t k, std::int64_t r) {
  if (k < 2) throw InvalidArgument("admissible_params needs k >= 2");
  if (r < 0) throw InvalidArgument("admissible_params needs r >= 0");
  return {(r + 1) * k + 1, (r + 1) * k - r, k};
}

/// Given k subsets of [n], all of size d > threshold(n, k), checks that the
/// running intersection of the first i sets has more than ((k-i) n + i) / k
/// elements for every i = 1..k. Always true under the precondition; a false
/// return signals a bug.
inline bool intersection_chain_check(const std::vector<VertexSet>& sets, std::int64_t n,
                                     std::int64_t k) {
  if (k < 1 || static_cast<std::int64_t>(sets.size()) != k)
    throw InvalidArgument("intersection_chain_check needs exactly k sets");
  const auto d = static_cast<std::int64_t>(sets.front().size());
  for (const VertexSet& s : sets) {
    if (static_cast<std::int64_t>(s.size()) != d)
      throw InvalidArgument("all sets must have the same cardinality");
    if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
      throw InvalidArgument("sets must be sorted and duplicate-free");
    if (!s.empty() && static_cast<std::int64_t>(s.back()) >= n)
      throw InvalidArgument("set element out of range");
  }
  if (!above_threshold(d, n, k)) throw InvalidArgument("set size must exceed the threshold");
  VertexSet running = sets.front();
  for (std::int64_t i = 1; i <= k; ++i) {
    if (i > 1) running = intersection(running, sets[static_cast<std::size_t>(i - 1)]);
    const auto size = static_cast<std::int64_t>(running.size());
    if (!(k * size > (k - i) * n + i)) return false;
  }
  return true;
}

}  // namespace socle
