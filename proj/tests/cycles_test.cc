//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "commoncert/cycles.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "commoncert/errors.h"
#include "support/oracles.h"

namespace commoncert {
namespace {

Graph c4_with_pendant() {
  return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}});
}

std::uint64_t mask_of(const EdgeSubset &s) {
  std::uint64_t m = 0;
  for (int i : s.members())
    m |= std::uint64_t{1} << i;
  return m;
}

std::vector<std::uint64_t> streamed_masks(const Graph &g,
                                          const Limits &limits = {}) {
  std::vector<std::uint64_t> masks;
  enumerate_even_subgraphs(
      g, [&](const EdgeSubset &s) { masks.push_back(mask_of(s)); }, limits);
  return masks;
}

bool is_connected_cycle(const Graph &g, const EdgeSubset &s) {
  std::vector<Edge> edges;
  for (int i : s.members())
    edges.push_back(g.edge(i));
  return is_cycle(without_isolated_vertices(Graph(g.vertex_count(), edges)));
}

TEST(GirthTest, Examples) {
  EXPECT_EQ(girth(cycle_graph(5)), Girth::of(5));
  EXPECT_EQ(girth(paw_graph()), Girth::of(3));
  EXPECT_TRUE(girth(path_graph(4)).is_acyclic());
  EXPECT_TRUE(girth(empty_graph(3)).is_acyclic());
  EXPECT_EQ(girth(petersen_graph()), Girth::of(5));
  EXPECT_EQ(girth(c4_with_pendant()), Girth::of(4));
  EXPECT_EQ(girth(complete_graph(4)), Girth::of(3));
  EXPECT_EQ(girth(disjoint_union(cycle_graph(7), cycle_graph(4))),
            Girth::of(4));
  EXPECT_EQ(Girth::acyclic().to_string(), "acyclic");
}

TEST(GirthTest, MatchesBruteForceOnAtlas) {
  for (const Graph &g : testing::atlas_graphs()) {
    const Girth k = girth(g);
    EXPECT_EQ(k.is_acyclic() ? 0 : k.length(), testing::brute_force_girth(g))
        << encode_graph6(g);
  }
}

TEST(IsCycleTest, Examples) {
  EXPECT_TRUE(is_cycle(cycle_graph(5)));
  EXPECT_TRUE(is_cycle(cycle_graph(3)));
  EXPECT_FALSE(is_cycle(paw_graph()));
  EXPECT_FALSE(is_cycle(disjoint_union(cycle_graph(3), cycle_graph(3))));
  EXPECT_FALSE(is_cycle(disjoint_union(cycle_graph(3), empty_graph(1))));
  EXPECT_FALSE(is_cycle(empty_graph(0)));
}

TEST(TheoremApplicableTest, Examples) {
  EXPECT_TRUE(theorem_applicable(paw_graph()));
  EXPECT_FALSE(theorem_applicable(cycle_graph(5)));
  EXPECT_FALSE(theorem_applicable(c4_with_pendant()));
  EXPECT_FALSE(theorem_applicable(path_graph(4)));
  EXPECT_TRUE(theorem_applicable(petersen_graph()));
  EXPECT_TRUE(theorem_applicable(complete_graph(4)));
  EXPECT_TRUE(
      theorem_applicable(disjoint_union(cycle_graph(3), cycle_graph(3))));
  // Odd girth but even-girth-free reading: C3 + C4 has girth 3.
  EXPECT_TRUE(
      theorem_applicable(disjoint_union(cycle_graph(3), cycle_graph(4))));
  // The edge set is a single triangle; isolated vertices do not count.
  EXPECT_FALSE(
      theorem_applicable(disjoint_union(cycle_graph(3), empty_graph(1))));
}

TEST(TheoremApplicableTest, MatchesDefinitionOnAtlas) {
  int applicable = 0;
  for (const Graph &g : testing::atlas_graphs()) {
    const int k = testing::brute_force_girth(g);
    const auto deg = g.degrees();
    const int non_isolated = static_cast<int>(
        std::count_if(deg.begin(), deg.end(), [](int d) { return d > 0; }));
    // The edges form one cycle iff there are as many edges as non-isolated
    // vertices, all of degree 2, and a cycle of that length exists.
    const bool single_cycle =
        g.edge_count() == non_isolated && k == g.edge_count() &&
        std::all_of(deg.begin(), deg.end(),
                    [](int d) { return d == 0 || d == 2; });
    const bool expected = k != 0 && k % 2 == 1 && !single_cycle;
    EXPECT_EQ(theorem_applicable(g), expected) << encode_graph6(g);
    applicable += expected;
  }
  EXPECT_EQ(applicable, 1083);
}

TEST(CountCyclesTest, Examples) {
  EXPECT_EQ(count_k_cycle_subsets(paw_graph(), 3), 1u);
  EXPECT_EQ(count_k_cycle_subsets(complete_graph(4), 3), 4u);
  EXPECT_EQ(count_k_cycle_subsets(complete_graph(4), 4), 3u);
  // 12 pentagons; value from exhaustive closed-walk enumeration.
  EXPECT_EQ(testing::brute_force_cycle_count(petersen_graph(), 5), 12u);
  EXPECT_EQ(count_k_cycle_subsets(petersen_graph(), 5), 12u);
  EXPECT_EQ(count_k_cycle_subsets(petersen_graph(), 3), 0u);
  EXPECT_EQ(count_k_cycle_subsets(cycle_graph(3), 4), 0u);
  EXPECT_THROW(count_k_cycle_subsets(paw_graph(), 2), std::invalid_argument);
}

TEST(CountCyclesTest, MatchesBruteForceOnAtlas) {
  for (const Graph &g : testing::atlas_graphs())
    for (int k = 3; k <= g.vertex_count(); ++k)
      ASSERT_EQ(count_k_cycle_subsets(g, k),
                testing::brute_force_cycle_count(g, k))
          << encode_graph6(g) << " k=" << k;
}

TEST(CycleSpaceTest, BasisExamples) {
  const auto c5 = cycle_space_basis(cycle_graph(5));
  ASSERT_EQ(c5.size(), 1u);
  EXPECT_EQ(c5[0], EdgeSubset::all(5));
  EXPECT_TRUE(cycle_space_basis(path_graph(4)).empty());
  EXPECT_EQ(cycle_space_basis(petersen_graph()).size(), 6u);
  EXPECT_EQ(cycle_space_dimension(petersen_graph()), 6);
}

TEST(CycleSpaceTest, BasisElementsAreEvenAndIndependent) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(rng, 3 + trial % 8, 0.45);
    const auto basis = cycle_space_basis(g);
    EXPECT_EQ(static_cast<int>(basis.size()), cycle_space_dimension(g));
    for (const EdgeSubset &b : basis)
      for (int d : subset_degrees(g, b))
        EXPECT_EQ(d % 2, 0);
  }
}

TEST(EvenSubgraphsTest, Examples) {
  EXPECT_EQ(streamed_masks(cycle_graph(5)),
            (std::vector<std::uint64_t>{0, 0b11111}));
  // Pendant edge (index 3) never appears.
  EXPECT_EQ(streamed_masks(paw_graph()),
            (std::vector<std::uint64_t>{0, 0b0111}));

  const Graph k4 = complete_graph(4);
  std::vector<std::uint64_t> masks = streamed_masks(k4);
  std::sort(masks.begin(), masks.end());
  EXPECT_EQ(masks, testing::brute_force_even_masks(k4));
  ASSERT_EQ(masks.size(), 8u);
  int triangles = 0;
  int squares = 0;
  for (std::uint64_t m : masks) {
    const EdgeSubset s = testing::subset_from_mask(6, m);
    if (s.size() == 3 && is_connected_cycle(k4, s))
      ++triangles;
    if (s.size() == 4 && is_connected_cycle(k4, s))
      ++squares;
  }
  EXPECT_EQ(triangles, 4);
  EXPECT_EQ(squares, 3);
}

TEST(EvenSubgraphsTest, RefusesOverCap) {
  Limits limits;
  limits.max_cycle_space_dim = 5;
  EXPECT_THROW(streamed_masks(petersen_graph(), limits), CapExceeded);
  try {
    streamed_masks(petersen_graph(), limits);
  } catch (const CapExceeded &e) {
    EXPECT_EQ(e.cap(), "cycle-space");
    EXPECT_NE(std::string(e.what()).find("direct"), std::string::npos);
  }
}

// Exactly 2^(e-v+c) distinct even subsets, equal to the brute-force filter.
TEST(EvenSubgraphsTest, PropertyAgainstBruteForce) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = testing::random_graph(rng, 2 + trial % 8, 0.5);
    if (g.edge_count() > 16)
      continue;
    std::vector<std::uint64_t> masks = streamed_masks(g);
    EXPECT_EQ(masks.size(), std::uint64_t{1} << cycle_space_dimension(g));
    std::sort(masks.begin(), masks.end());
    EXPECT_EQ(std::adjacent_find(masks.begin(), masks.end()), masks.end());
    EXPECT_EQ(masks, testing::brute_force_even_masks(g));
  }
}

// No nonempty even subgraph is shorter than the girth, and the k-cycles are
// exactly the connected 2-regular even subgraphs of size k.
TEST(EvenSubgraphsTest, GirthAndCycleCountFromStream) {
  for (const Graph &g : testing::atlas_graphs()) {
    const Girth k = girth(g);
    int smallest = 0;
    std::vector<std::uint64_t> cycles_by_size(g.edge_count() + 1, 0);
    enumerate_even_subgraphs(g, [&](const EdgeSubset &s) {
      if (s.empty())
        return;
      if (smallest == 0 || s.size() < smallest)
        smallest = s.size();
      if (is_connected_cycle(g, s))
        ++cycles_by_size[s.size()];
    });
    EXPECT_EQ(smallest, k.is_acyclic() ? 0 : k.length());
    for (int len = 3; len <= g.edge_count(); ++len)
      EXPECT_EQ(cycles_by_size[len], count_k_cycle_subsets(g, len));
  }
}

TEST(EvenSubgraphsTest, SizeProfile) {
  EXPECT_EQ(even_subgraph_size_profile(paw_graph()),
            (std::vector<std::uint64_t>{1, 0, 0, 1, 0}));
  EXPECT_EQ(even_subgraph_size_profile(complete_graph(4)),
            (std::vector<std::uint64_t>{1, 0, 0, 4, 3, 0, 0}));
  const auto petersen = even_subgraph_size_profile(petersen_graph());
  std::uint64_t total = 0;
  for (auto c : petersen)
    total += c;
  EXPECT_EQ(total, 64u);
  EXPECT_EQ(petersen[5], 12u);
}

} // namespace
} // namespace commoncert
