#pragma once

// Brute-force reference computations for the tests. Deliberately independent
// of the library: plain integer vectors, no minimalization, membership in I^k
// decided by trying every multiset of k original generators.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracle {

using Exps = std::vector<int>;

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// u in (gens)^k: some product of k generators (repetition allowed) divides u.
inline bool in_power(const std::vector<Exps>& gens, int k, const Exps& u) {
  const std::size_t n = u.size();
  std::function<bool(std::size_t, int, Exps&)> go = [&](std::size_t from, int left, Exps& acc) {
    if (!divides(acc, u)) return false;
    if (left == 0) return true;
    for (std::size_t g = from; g < gens.size(); ++g) {
      for (std::size_t i = 0; i < n; ++i) acc[i] += gens[g][i];
      bool hit = go(g, left - 1, acc);
      for (std::size_t i = 0; i < n; ++i) acc[i] -= gens[g][i];
      if (hit) return true;
    }
    return false;
  };
  Exps acc(n, 0);
  return go(0, k, acc);
}

/// Every exponent vector in [0, upper], lexicographic.
inline std::vector<Exps> box(const Exps& upper) {
  std::vector<Exps> out;
  Exps cur(upper.size(), 0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == upper.size()) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= upper[i]; ++e) {
      cur[i] = e;
      go(i + 1);
    }
    cur[i] = 0;
  };
  go(0);
  return out;
}

/// Socle monomials of S/(gens)^k inside [0, upper], straight from the
/// definition u not in I^k, u x_i in I^k for all i.
inline std::vector<Exps> socle(const std::vector<Exps>& gens, int k, const Exps& upper) {
  std::vector<Exps> out;
  for (const Exps& u : box(upper)) {
    if (in_power(gens, k, u)) continue;
    bool killed = true;
    for (std::size_t i = 0; i < u.size() && killed; ++i) {
      Exps w = u;
      ++w[i];
      killed = in_power(gens, k, w);
    }
    if (killed) out.push_back(u);
  }
  return out;
}

/// Edge generators x_u x_v for 0-based edges.
inline std::vector<Exps> edge_generators(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Exps> gens;
  for (auto [u, v] : edges) {
    Exps g(static_cast<std::size_t>(n), 0);
    g[static_cast<std::size_t>(u)] = g[static_cast<std::size_t>(v)] = 1;
    gens.push_back(g);
  }
  return gens;
}

}  // namespace oracle
