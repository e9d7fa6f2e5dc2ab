//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "commoncert/density.h"

#include <random>

#include <gtest/gtest.h>

#include "commoncert/cycles.h"
#include "commoncert/errors.h"
#include "support/oracles.h"

namespace commoncert {
namespace {

Rational q(const char *text) { return parse_rational(text); }

std::vector<std::pair<Rational, Rational>> alpha_eps_grid() {
  std::vector<std::pair<Rational, Rational>> grid;
  for (const char *a : {"0", "1/3", "1/2", "3/5", "3/4", "1", "-2/7", "5/4"})
    for (const char *e : {"0", "1/8", "-1/8", "1/3", "1/2", "-3/5"})
      grid.emplace_back(q(a), q(e));
  return grid;
}

TEST(HomDensityDirectTest, Examples) {
  EXPECT_EQ(hom_density_direct(complete_graph(2), constant_kernel(q("2/9"))),
            q("2/9"));
  EXPECT_EQ(hom_density_direct(cycle_graph(3),
                               witness_kernel(q("1/2"), q("1/2"))),
            0);
  // C3 under the complement [[1,0],[0,1]]: both vertices must agree.
  EXPECT_EQ(hom_density_direct(cycle_graph(3),
                               complement(witness_kernel(q("1/2"), q("1/2")))),
            q("1/4"));
}

TEST(HomDensityDirectTest, ConstantKernelLaw) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    const Graph h = testing::random_graph(rng, 1 + i % 7, 0.5);
    const Rational c = testing::random_rational(rng, 5);
    EXPECT_EQ(hom_density_direct(h, constant_kernel(c)),
              pow(c, h.edge_count()));
  }
}

TEST(HomDensityDirectTest, Multiplicative) {
  std::mt19937_64 rng(9);
  const StepKernel k({q("1/6"), q("1/3"), q("1/2")},
                     {{q("1/5"), q("-1"), q("2/3")},
                      {q("-1"), q("3/7"), 0},
                      {q("2/3"), 0, q("1/2")}});
  for (int i = 0; i < 30; ++i) {
    const Graph a = testing::random_graph(rng, 1 + i % 4, 0.6);
    const Graph b = testing::random_graph(rng, 1 + (i / 4) % 4, 0.6);
    EXPECT_EQ(hom_density_direct(disjoint_union(a, b), k),
              hom_density_direct(a, k) * hom_density_direct(b, k));
  }
}

TEST(HomDensityDirectTest, AssignmentCap) {
  Limits limits;
  limits.max_assignments = 512;
  const StepKernel w = witness_kernel(q("3/4"), q("1/8"));
  EXPECT_NO_THROW(hom_density_direct(cycle_graph(9), w, limits));
  EXPECT_THROW(hom_density_direct(petersen_graph(), w, limits), CapExceeded);
}

TEST(CorrelationTest, Examples) {
  const Graph p3 = path_graph(3);
  EXPECT_EQ(edge_subset_correlation(p3, EdgeSubset(2, {0, 1})), 0);
  EXPECT_EQ(edge_subset_correlation(cycle_graph(3), EdgeSubset::all(3)), -1);

  const Graph two = disjoint_union(cycle_graph(3), cycle_graph(3));
  const EdgeSubset all = EdgeSubset::all(6);
  EXPECT_EQ(testing::brute_force_correlation(two, all), 1);
  EXPECT_EQ(edge_subset_correlation(two, all), 1);
  EXPECT_EQ(edge_subset_correlation(two, EdgeSubset(6)), 1);
}

// Closed form against the 2^v expectation for every subset of every atlas
// graph with few edges, plus sampled subsets of the Petersen graph.
TEST(CorrelationTest, MatchesBruteForce) {
  for (const Graph &g : testing::atlas_graphs()) {
    if (g.edge_count() > 9)
      continue;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.edge_count()); ++m) {
      const EdgeSubset s = testing::subset_from_mask(g.edge_count(), m);
      ASSERT_EQ(edge_subset_correlation(g, s),
                testing::brute_force_correlation(g, s))
          << encode_graph6(g) << " mask " << m;
    }
  }
  std::mt19937_64 rng(10);
  const Graph p = petersen_graph();
  for (int i = 0; i < 300; ++i) {
    const EdgeSubset s = testing::subset_from_mask(15, rng() & 0x7fff);
    EXPECT_EQ(edge_subset_correlation(p, s),
              testing::brute_force_correlation(p, s));
  }
}

TEST(SubsetExpansionTest, Examples) {
  EXPECT_EQ(subset_expansion_density(paw_graph(), q("3/4"), 0),
            pow(q("3/4"), 4));
  for (const auto &[a, e] : alpha_eps_grid()) {
    EXPECT_EQ(subset_expansion_density(cycle_graph(3), a, e),
              pow(a, 3) - pow(e, 3));
    EXPECT_EQ(hom_density_direct(cycle_graph(3), witness_kernel(a, e)),
              pow(a, 3) - pow(e, 3));
  }
  EXPECT_EQ(subset_expansion_density(paw_graph(), q("3/4"), q("1/4")),
            hom_density_direct(paw_graph(),
                               witness_kernel(q("3/4"), q("1/4"))));
}

TEST(SubsetExpansionTest, EdgeCap) {
  Limits limits;
  limits.max_subset_edges = 10;
  EXPECT_THROW(subset_expansion_density(petersen_graph(), q("1/2"), q("1/4"),
                                        limits),
               CapExceeded);
}

TEST(EvenSubgraphDensityTest, Examples) {
  for (const auto &[a, e] : alpha_eps_grid()) {
    EXPECT_EQ(even_subgraph_density(cycle_graph(5), a, e),
              pow(a, 5) - pow(e, 5));
    EXPECT_EQ(even_subgraph_density(path_graph(5), a, e), pow(a, 4));
  }
  // 64 even subgraphs against 2^10 assignments.
  EXPECT_EQ(even_subgraph_density(petersen_graph(), q("3/5"), q("1/10")),
            hom_density_direct(petersen_graph(),
                               witness_kernel(q("3/5"), q("1/10"))));
}

TEST(EvenSubgraphDensityTest, TripleAgreementOnRandomGraphs) {
  std::mt19937_64 rng(12);
  const auto grid = alpha_eps_grid();
  for (int i = 0; i < 60; ++i) {
    const Graph h = testing::random_graph(rng, 2 + i % 7, 0.45);
    if (h.edge_count() > 14)
      continue;
    for (std::size_t j = i % 5; j < grid.size(); j += 5) {
      const auto &[a, e] = grid[j];
      const Rational direct = hom_density_direct(h, witness_kernel(a, e));
      EXPECT_EQ(subset_expansion_density(h, a, e), direct);
      EXPECT_EQ(even_subgraph_density(h, a, e), direct);
    }
  }
}

TEST(EpsPolynomialTest, Examples) {
  const Rational a = q("3/4");
  EXPECT_EQ(eps_polynomial(paw_graph(), a).coefficients(),
            (std::vector<Rational>{pow(a, 4), 0, 0, -a, 0}));
  EXPECT_EQ(eps_polynomial(cycle_graph(5), a).coefficients(),
            (std::vector<Rational>{pow(a, 5), 0, 0, 0, 0, -1}));
  EXPECT_EQ(eps_polynomial(paw_graph(), a).degree_bound(), 4);
  EXPECT_EQ(eps_polynomial(empty_graph(2), a).coefficients(),
            (std::vector<Rational>{1}));
}

TEST(EpsPolynomialTest, EvaluationMatchesDensity) {
  const EpsPolynomial p = eps_polynomial(petersen_graph(), q("2/3"));
  for (const char *e : {"0", "1/7", "-1/3"})
    EXPECT_EQ(p.evaluate(q(e)),
              hom_density_direct(petersen_graph(),
                                 witness_kernel(q("2/3"), q(e))));
  EXPECT_EQ(p.evaluate_truncated(q("1/7"), 0), pow(q("2/3"), 15));
}

TEST(EpsPolynomialTest, LowCoefficientsVanishBelowGirth) {
  for (const Graph &g : testing::atlas_graphs()) {
    const Girth k = girth(g);
    if (k.is_acyclic())
      continue;
    const Rational a = q("3/5");
    const EpsPolynomial p = eps_polynomial(g, a);
    EXPECT_EQ(p.coefficient(0), pow(a, g.edge_count()));
    for (int j = 1; j < k.length(); ++j)
      EXPECT_EQ(p.coefficient(j), 0);
    Rational n_k;
    mpz_set_ui(n_k.get_num_mpz_t(),
               testing::brute_force_cycle_count(g, k.length()));
    const Rational sign = k.length() % 2 == 0 ? 1 : -1;
    EXPECT_EQ(p.coefficient(k.length()),
              sign * pow(a, g.edge_count() - k.length()) * n_k);
  }
}

TEST(TruncationTest, TailBoundedByTwoToTheEdgesTimesEpsPower) {
  for (const Graph &g : testing::atlas_graphs()) {
    const Girth k = girth(g);
    if (k.is_acyclic() || g.vertex_count() < 6)
      continue;
    const EpsPolynomial p = eps_polynomial(g, q("2/3"));
    for (const char *e : {"1/2", "1/9", "99/100"}) {
      const Rational eps = q(e);
      const Rational tail = abs(p.evaluate(eps) -
                                p.evaluate_truncated(eps, k.length()));
      EXPECT_LE(tail, pow2(g.edge_count()) * pow(eps, k.length() + 1));
    }
  }
}

} // namespace
} // namespace commoncert
