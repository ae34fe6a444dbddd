#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <optional>
#include <utility>
#include <vector>

#include "socle/errors.hpp"
#include "socle/graph.hpp"
#include "socle/ideal.hpp"
#include "socle/monomial.hpp"

namespace socle {

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

inline VertexSet intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// A simplicial complex on 0..n-1 given by its facets, an antichain of
/// nonempty vertex sets. Facets are kept in lexicographic order. Vertices
/// that lie in no facet are allowed.
class SimplicialComplex {
 public:
  SimplicialComplex(std::size_t n, std::vector<VertexSet> facets) : n_(n) {
    if (n == 0) throw InvalidArgument("a complex needs at least one vertex");
    for (VertexSet& f : facets) {
      if (f.empty()) throw InvalidArgument("facets must be nonempty");
      std::sort(f.begin(), f.end());
      if (std::adjacent_find(f.begin(), f.end()) != f.end())
        throw InvalidArgument("repeated vertex in a facet");
      if (f.back() >= n) throw InvalidArgument("facet vertex out of range");
    }
    std::sort(facets.begin(), facets.end());
    for (std::size_t i = 0; i < facets.size(); ++i)
      for (std::size_t j = 0; j < facets.size(); ++j)
        if (i != j && is_subset(facets[i], facets[j]))
          throw InvalidArgument("facets must be pairwise incomparable");
    facets_ = std::move(facets);
  }

  /// The complex generated by `faces`: keeps only the inclusion-maximal ones.
  static SimplicialComplex from_faces(std::size_t n, std::vector<VertexSet> faces) {
    for (VertexSet& f : faces) {
      std::sort(f.begin(), f.end());
      f.erase(std::unique(f.begin(), f.end()), f.end());
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<VertexSet> maximal;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      bool covered = false;
      for (std::size_t j = 0; j < faces.size() && !covered; ++j)
        covered = i != j && is_subset(faces[i], faces[j]);
      if (!covered) maximal.push_back(faces[i]);
    }
    return SimplicialComplex(n, std::move(maximal));
  }

  std::size_t n() const noexcept { return n_; }
  const std::vector<VertexSet>& facets() const noexcept { return facets_; }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t n_;
  std::vector<VertexSet> facets_;
};

/// I(Delta) = (x_F : F a facet).
inline MonomialIdeal facet_ideal(const SimplicialComplex& complex) {
  std::vector<Monomial> gens;
  for (const VertexSet& f : complex.facets()) gens.push_back(Monomial::from_support(complex.n(), f));
  return MonomialIdeal(complex.n(), std::move(gens));
}

/// Inverse of facet_ideal on nonzero squarefree ideals.
inline SimplicialComplex facets_of(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InvalidArgument("facets_of the zero ideal");
  if (!ideal.is_squarefree()) throw InvalidArgument("facets_of expects a squarefree ideal");
  if (ideal.is_unit()) throw InvalidArgument("facets_of the unit ideal");
  std::vector<VertexSet> facets;
  for (const Monomial& g : ideal.generators()) facets.push_back(g.support());
  return SimplicialComplex(ideal.n(), std::move(facets));
}

/// A k-tuple of facets, possibly with repeats.
using FacetTuple = std::vector<VertexSet>;

namespace detail {

inline FacetTuple padded_tuple(const std::vector<VertexSet>& facets,
                               const std::vector<std::size_t>& chosen, unsigned k) {
  FacetTuple t;
  for (std::size_t i : chosen) t.push_back(facets[i]);
  while (t.size() < k) t.push_back(t.back());
  return t;
}

// Depth-first search over index sets i_1 < ... < i_s of `pool` with
// s <= max_size, carrying the running intersection. `stop` sees each
// intersection together with the chosen indices; returning true ends the
// search with that choice.
template <typename Stop>
bool search_intersections(const std::vector<VertexSet>& facets, const std::vector<std::size_t>& pool,
                          std::size_t max_size, Stop&& stop, std::vector<std::size_t>& chosen,
                          const VertexSet& running, std::size_t start) {
  for (std::size_t p = start; p < pool.size(); ++p) {
    std::size_t idx = pool[p];
    VertexSet next = chosen.empty() ? facets[idx] : intersection(running, facets[idx]);
    chosen.push_back(idx);
    if (stop(next, chosen)) return true;
    if (chosen.size() < max_size &&
        search_intersections(facets, pool, max_size, stop, chosen, next, p + 1))
      return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

struct ConditionAResult {
  bool holds = true;
  std::optional<FacetTuple> counterexample;  ///< k facets with empty intersection
};

/// Every k facets (repetition allowed) have a common vertex. Equivalent to
/// x_[n]^{k-1} not in I(Delta)^k.
inline ConditionAResult condition_a(const SimplicialComplex& complex, unsigned k) {
  if (k == 0) throw InvalidArgument("k must be at least 1");
  const auto& facets = complex.facets();
  std::vector<std::size_t> pool(facets.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  // Repeats never shrink an intersection, so distinct facets suffice.
  std::size_t max_size = std::min<std::size_t>(k, facets.size());
  std::vector<std::size_t> chosen;
  ConditionAResult result;
  detail::search_intersections(
      facets, pool, max_size,
      [&](const VertexSet& meet, const std::vector<std::size_t>& picked) {
        if (!meet.empty()) return false;
        result.holds = false;
        result.counterexample = detail::padded_tuple(facets, picked, k);
        return true;
      },
      chosen, {}, 0);
  return result;
}

struct ConditionBResult {
  bool holds = true;
  /// Entry j: k facets whose intersection is exactly {j}, if any exist.
  std::vector<std::optional<FacetTuple>> witnesses;
  std::optional<Vertex> first_failure;
};

/// For every vertex j some k facets meet in exactly {j}. Under condition (a)
/// this is equivalent to x_j x_[n]^{k-1} in I(Delta)^k for all j.
inline ConditionBResult condition_b(const SimplicialComplex& complex, unsigned k) {
  if (k == 0) throw InvalidArgument("k must be at least 1");
  const auto& facets = complex.facets();
  ConditionBResult result;
  result.witnesses.resize(complex.n());
  for (Vertex j = 0; j < complex.n(); ++j) {
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (std::binary_search(facets[i].begin(), facets[i].end(), j)) pool.push_back(i);
    std::size_t max_size = std::min<std::size_t>(k, pool.size());
    std::vector<std::size_t> chosen;
    detail::search_intersections(
        facets, pool, max_size,
        [&](const VertexSet& meet, const std::vector<std::size_t>& picked) {
          if (meet.size() != 1) return false;
          result.witnesses[j] = detail::padded_tuple(facets, picked, k);
          return true;
        },
        chosen, {}, 0);
    if (!result.witnesses[j] && result.holds) {
      result.holds = false;
      result.first_failure = j;
    }
  }
  return result;
}

/// x_[n]^{k-1} in Soc(S/I(Delta)^k), decided combinatorially.
inline bool has_maximal_socle(const SimplicialComplex& complex, unsigned k) {
  return condition_a(complex, k).holds && condition_b(complex, k).holds;
}

}  // namespace socle
