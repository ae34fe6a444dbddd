#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "socle/complex.hpp"
#include "socle/constructions.hpp"
#include "socle/errors.hpp"
#include "socle/ideal.hpp"

// Seeded instance generators for the property suites. Every generator takes
// the engine by reference so that a single seed determines a whole run.

namespace socle {

using Rng = std::mt19937_64;

/// Engine for instance `index` of a run seeded with `seed`. Instances can be
/// regenerated individually from (seed, index).
inline Rng instance_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Nonempty subset of 0..n-1: size uniform in 1..n, then a uniform subset of
/// that size.
inline VertexSet random_nonempty_subset(Rng& rng, std::size_t n) {
  VertexSet all(n);
  for (std::size_t v = 0; v < n; ++v) all[v] = v;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(uniform_index(rng, 1, n));
  std::sort(all.begin(), all.end());
  return all;
}

/// `count` distinct d-subsets of [n] drawn uniformly without replacement,
/// as a squarefree ideal generated in degree d. `count` is clamped to C(n,d).
inline MonomialIdeal random_single_degree_ideal(Rng& rng, std::size_t n, std::size_t d,
                                                std::size_t count) {
  if (count == 0) throw InvalidArgument("need at least one generator");
  MonomialIdeal all = squarefree_veronese(n, d);
  std::vector<Monomial> pool(all.generators().begin(), all.generators().end());
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(std::min(count, pool.size())), pool.end());
  return MonomialIdeal(n, std::move(pool));
}

/// Squarefree ideal with between 1 and `max_generators` random nonempty supports.
inline MonomialIdeal random_squarefree_ideal(Rng& rng, std::size_t n, std::size_t max_generators) {
  std::size_t count = uniform_index(rng, 1, max_generators);
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < count; ++i)
    gens.push_back(Monomial::from_support(n, random_nonempty_subset(rng, n)));
  return MonomialIdeal(n, std::move(gens));
}

/// Monomial ideal with between 1 and `max_generators` generators, exponents in
/// 0..max_exponent, never the unit ideal.
inline MonomialIdeal random_monomial_ideal(Rng& rng, std::size_t n, Exponent max_exponent,
                                           std::size_t max_generators) {
  if (max_exponent == 0) throw InvalidArgument("max_exponent must be positive");
  std::size_t count = uniform_index(rng, 1, max_generators);
  std::uniform_int_distribution<Exponent> exponent(0, max_exponent);
  std::vector<Monomial> gens;
  while (gens.size() < count) {
    std::vector<Exponent> e(n);
    for (Exponent& a : e) a = exponent(rng);
    Monomial m(std::move(e));
    if (!m.is_unit()) gens.push_back(std::move(m));
  }
  return MonomialIdeal(n, std::move(gens));
}

/// Complex generated by between 1 and `max_faces` random nonempty faces.
inline SimplicialComplex random_complex(Rng& rng, std::size_t n, std::size_t max_faces) {
  std::size_t count = uniform_index(rng, 1, max_faces);
  std::vector<VertexSet> faces;
  for (std::size_t i = 0; i < count; ++i) faces.push_back(random_nonempty_subset(rng, n));
  return SimplicialComplex::from_faces(n, std::move(faces));
}

}  // namespace socle
