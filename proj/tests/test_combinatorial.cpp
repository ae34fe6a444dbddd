#include <gtest/gtest.h>

#include <array>
#include <vector>

#include "brute_force.hpp"
#include "socle/complex.hpp"
#include "socle/constructions.hpp"
#include "socle/graph.hpp"
#include "socle/random.hpp"
#include "socle/socle_engine.hpp"

using socle::Graph;
using socle::Monomial;
using socle::MonomialIdeal;
using socle::SimplicialComplex;
using socle::VertexSet;

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

SimplicialComplex triangle_complex() { return SimplicialComplex(3, {{0, 1}, {0, 2}, {1, 2}}); }

SimplicialComplex example_a4_complex() { return SimplicialComplex(4, {{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}}); }

bool brute_square_has_socle(const Graph& g) {
  if (g.edges().empty()) return false;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  auto gens = oracle::edge_generators(static_cast<int>(g.n()), edges);
  return !oracle::socle(gens, 2, oracle::Exps(g.n(), 2)).empty();
}

}  // namespace

// ---------------------------------------------------------------- graphs

TEST(Graph, RejectsLoopsDuplicatesAndOutOfRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), socle::InvalidArgument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), socle::InvalidArgument);
  EXPECT_THROW(Graph(3, {{0, 3}}), socle::InvalidArgument);
  EXPECT_THROW(Graph(0, {}), socle::InvalidArgument);
}

TEST(Graph, FromMaskEnumeratesPairsInOrder) {
  Graph g = Graph::from_mask(4, 0b100001);
  EXPECT_EQ(g.edges(), (std::vector<socle::Edge>{{0, 1}, {2, 3}}));
  EXPECT_EQ(Graph::from_mask(3, 0b111), triangle());
}

TEST(EdgeIdeal, Examples) {
  EXPECT_EQ(socle::edge_ideal(triangle()),
            MonomialIdeal(3, {Monomial({1, 1, 0}), Monomial({1, 0, 1}), Monomial({0, 1, 1})}));
  EXPECT_EQ(socle::edge_ideal(Graph(2, {{0, 1}})), MonomialIdeal(2, {Monomial({1, 1})}));
  EXPECT_EQ(socle::edge_ideal(Graph(3, {{0, 1}, {1, 2}})),
            MonomialIdeal(3, {Monomial({1, 1, 0}), Monomial({0, 1, 1})}));
  EXPECT_THROW(socle::edge_ideal(Graph(3, {})), socle::InvalidArgument);
}

TEST(GraphCriterion, Examples) {
  auto w = socle::graph_depth2_criterion(triangle());
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (std::array<socle::Vertex, 3>{0, 1, 2}));

  Graph pendant(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  EXPECT_TRUE(socle::graph_depth2_criterion(pendant));
  EXPECT_TRUE(brute_square_has_socle(pendant));

  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_FALSE(socle::graph_depth2_criterion(star));
  EXPECT_FALSE(brute_square_has_socle(star));

  EXPECT_FALSE(socle::graph_depth2_criterion(Graph(2, {{0, 1}})));
}

TEST(GraphCriterion, IsolatedVertexNeverSatisfies) {
  Graph g(4, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_FALSE(socle::graph_depth2_criterion(g));
  EXPECT_FALSE(brute_square_has_socle(g));
}

TEST(GraphCriterion, PicksADominatingTriangle) {
  // Vertex 5 hangs off 4, so earlier triangles avoiding 4 do not dominate.
  Graph g(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {0, 3}});
  auto w = socle::graph_depth2_criterion(g);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (std::array<socle::Vertex, 3>{2, 3, 4}));
}

TEST(GraphCriterion, AgreesWithBruteForceOnAllGraphsUpToFourVertices) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      Graph g = Graph::from_mask(n, mask);
      EXPECT_EQ(socle::graph_depth2_criterion(g).has_value(), brute_square_has_socle(g))
          << "n=" << n << " mask=" << mask;
    }
}

TEST(GraphMaximalSocle, Examples) {
  EXPECT_TRUE(socle::graph_maximal_socle(triangle()));
  EXPECT_FALSE(socle::graph_maximal_socle(Graph(4, {{0, 1}, {0, 2}, {1, 2}})));
  EXPECT_FALSE(socle::graph_maximal_socle(Graph(3, {{0, 1}, {1, 2}})));
  MonomialIdeal sq = socle::power(socle::edge_ideal(triangle()), 2);
  EXPECT_TRUE(socle::is_socle_element(sq, Monomial::uniform(3, 1)));
}

// ---------------------------------------------------------------- complexes

TEST(SimplicialComplex, ValidatesFacets) {
  EXPECT_THROW(SimplicialComplex(3, {{0, 1}, {0}}), socle::InvalidArgument);
  EXPECT_THROW(SimplicialComplex(3, {{}}), socle::InvalidArgument);
  EXPECT_THROW(SimplicialComplex(3, {{0, 3}}), socle::InvalidArgument);
  EXPECT_THROW(SimplicialComplex(3, {{0, 0}}), socle::InvalidArgument);
  EXPECT_EQ(SimplicialComplex(3, {{2, 1}, {0, 2}}).facets(), (std::vector<VertexSet>{{0, 2}, {1, 2}}));
}

TEST(SimplicialComplex, FromFacesKeepsMaximalOnes) {
  auto c = SimplicialComplex::from_faces(4, {{0}, {0, 1}, {1, 0}, {2, 3}, {3}});
  EXPECT_EQ(c.facets(), (std::vector<VertexSet>{{0, 1}, {2, 3}}));
}

TEST(FacetIdeal, ExampleA) {
  EXPECT_EQ(socle::facet_ideal(example_a4_complex()), socle::example_a(4));
}

TEST(FacetIdeal, RoundTrip) {
  EXPECT_EQ(socle::facets_of(socle::facet_ideal(example_a4_complex())), example_a4_complex());
  EXPECT_EQ(socle::facets_of(socle::edge_ideal(triangle())), triangle_complex());
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    socle::Rng rng = socle::instance_rng(41, seed);
    SimplicialComplex c = socle::random_complex(rng, 5, 8);
    EXPECT_EQ(socle::facets_of(socle::facet_ideal(c)), c);
  }
}

TEST(FacetIdeal, FacetsOfRejectsNonSquarefree) {
  EXPECT_THROW(socle::facets_of(MonomialIdeal(2, {Monomial({2, 1})})), socle::InvalidArgument);
  EXPECT_THROW(socle::facets_of(MonomialIdeal::zero(2)), socle::InvalidArgument);
}

TEST(ConditionA, Examples) {
  EXPECT_TRUE(socle::condition_a(triangle_complex(), 2).holds);
  auto r = socle::condition_a(triangle_complex(), 3);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.counterexample);
  EXPECT_EQ(*r.counterexample, (socle::FacetTuple{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_TRUE(socle::condition_a(example_a4_complex(), 1).holds);
  EXPECT_THROW(socle::condition_a(triangle_complex(), 0), socle::InvalidArgument);
}

TEST(ConditionA, WitnessIsPaddedToK) {
  SimplicialComplex c(4, {{0, 1}, {2, 3}});
  auto r = socle::condition_a(c, 4);
  ASSERT_TRUE(r.counterexample);
  EXPECT_EQ(r.counterexample->size(), 4u);
  EXPECT_EQ(socle::intersection((*r.counterexample)[0], (*r.counterexample)[1]), VertexSet{});
}

TEST(ConditionA, MonotoneInK) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    socle::Rng rng = socle::instance_rng(43, seed);
    SimplicialComplex c = socle::random_complex(rng, 5, 8);
    EXPECT_TRUE(socle::condition_a(c, 1).holds);
    bool previous = true;
    for (unsigned k = 1; k <= 5; ++k) {
      bool now = socle::condition_a(c, k).holds;
      EXPECT_TRUE(previous || !now);
      previous = now;
    }
  }
}

TEST(ConditionB, ExampleAWitnesses) {
  auto r = socle::condition_b(example_a4_complex(), 2);
  EXPECT_TRUE(r.holds);
  ASSERT_TRUE(r.witnesses[0]);
  EXPECT_EQ(*r.witnesses[0], (socle::FacetTuple{{0, 1, 2}, {0, 3}}));
  ASSERT_TRUE(r.witnesses[3]);
  EXPECT_EQ(*r.witnesses[3], (socle::FacetTuple{{0, 3}, {1, 3}}));
  for (std::size_t j = 0; j < 4; ++j) {
    ASSERT_TRUE(r.witnesses[j]);
    VertexSet meet = (*r.witnesses[j])[0];
    for (const VertexSet& f : *r.witnesses[j]) meet = socle::intersection(meet, f);
    EXPECT_EQ(meet, VertexSet{j});
  }
}

TEST(ConditionB, TriangleAtTwo) {
  EXPECT_TRUE(socle::condition_b(triangle_complex(), 2).holds);
  EXPECT_TRUE(socle::has_maximal_socle(triangle_complex(), 2));
}

TEST(ConditionB, ConePointBlocksOtherVertices) {
  SimplicialComplex cone(4, {{0, 1}, {0, 2}, {0, 3}});
  for (unsigned k = 1; k <= 4; ++k) {
    auto r = socle::condition_b(cone, k);
    EXPECT_FALSE(r.holds);
    for (std::size_t j = 1; j < 4; ++j) EXPECT_FALSE(r.witnesses[j]);
  }
  // A single facet: every intersection is that facet.
  auto single = socle::condition_b(SimplicialComplex(2, {{0, 1}}), 3);
  EXPECT_FALSE(single.holds);
  EXPECT_EQ(single.first_failure, 0u);
}

TEST(ConditionB, VertexOutsideAllFacetsFails) {
  SimplicialComplex c(4, {{0, 1}, {0, 2}, {1, 2}});
  auto r = socle::condition_b(c, 2);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.first_failure, 3u);
}

TEST(Criteria, AgreeWithMembershipOnRandomComplexes) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    socle::Rng rng = socle::instance_rng(47, seed);
    std::size_t n = 2 + seed % 4;
    SimplicialComplex c = socle::random_complex(rng, n, 2 * n);
    for (unsigned k = 1; k <= 3; ++k) {
      MonomialIdeal powered = socle::power(socle::facet_ideal(c), k);
      Monomial top = Monomial::uniform(n, k - 1);
      bool a = socle::condition_a(c, k).holds;
      ASSERT_EQ(a, !contains(powered, top));
      if (a) {
        bool all = true;
        for (std::size_t j = 0; j < n; ++j) all = all && contains(powered, top.times_variable(j));
        ASSERT_EQ(socle::condition_b(c, k).holds, all);
      }
      EXPECT_EQ(socle::has_maximal_socle(c, k), socle::is_socle_element(powered, top));
    }
  }
}
