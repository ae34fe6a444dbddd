#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "socle/errors.hpp"
#include "socle/ideal.hpp"
#include "socle/monomial.hpp"

namespace socle {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored as (u, v)
/// with u < v, sorted.
class Graph {
 public:
  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adjacent_(n * n, 0) {
    if (n == 0) throw InvalidArgument("a graph needs at least one vertex");
    for (Edge& e : edges) {
      if (e.first >= n || e.second >= n) throw InvalidArgument("edge endpoint out of range");
      if (e.first == e.second) throw InvalidArgument("loops are not allowed");
      if (e.first > e.second) std::swap(e.first, e.second);
      char& slot = adjacent_[e.first * n + e.second];
      if (slot) throw InvalidArgument("duplicate edge");
      slot = 1;
      adjacent_[e.second * n + e.first] = 1;
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
  }

  /// Graph whose edge set is selected by the bits of `mask`, bit t standing
  /// for the t-th pair (u, v), u < v, in lexicographic order. Needs
  /// n(n-1)/2 <= 64.
  static Graph from_mask(std::size_t n, std::uint64_t mask) {
    if (n * (n - 1) / 2 > 64) throw InvalidArgument("too many vertex pairs for a 64-bit mask");
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v, ++bit)
        if (mask >> bit & 1U) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
  }

  std::size_t n() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool adjacent(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) throw InvalidArgument("vertex out of range");
    return adjacent_[u * n_ + v] != 0;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<char> adjacent_;
};

/// I_G = (x_u x_v : {u, v} in E(G)).
inline MonomialIdeal edge_ideal(const Graph& g) {
  if (g.edges().empty()) throw InvalidArgument("edge ideal of a graph without edges");
  std::vector<Monomial> gens;
  gens.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) {
    std::array<std::size_t, 2> support{u, v};
    gens.push_back(Monomial::from_support(g.n(), support));
  }
  return MonomialIdeal(g.n(), std::move(gens));
}

/// Looks for a triangle C such that every vertex of G lies on C or is adjacent
/// to a vertex of C. Such a C exists iff depth S/I_G^2 = 0. Returns the
/// lexicographically first such triangle, or nullopt.
inline std::optional<std::array<Vertex, 3>> graph_depth2_criterion(const Graph& g) {
  const std::size_t n = g.n();
  if (n < 3) return std::nullopt;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (!g.adjacent(a, c) || !g.adjacent(b, c)) continue;
        bool dominating = true;
        for (Vertex v = 0; v < n && dominating; ++v) {
          if (v == a || v == b || v == c) continue;
          dominating = g.adjacent(v, a) || g.adjacent(v, b) || g.adjacent(v, c);
        }
        if (dominating) return std::array<Vertex, 3>{a, b, c};
      }
    }
  return std::nullopt;
}

/// x_[n] in Soc(S/I_G^2) iff G is the 3-cycle.
inline bool graph_maximal_socle(const Graph& g) {
  return g.n() == 3 && g.edges().size() == 3;
}

}  // namespace socle
