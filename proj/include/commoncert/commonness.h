//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef COMMONCERT_COMMONNESS_H_
#define COMMONCERT_COMMONNESS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commoncert/graph.h"
#include "commoncert/kernel.h"
#include "commoncert/limits.h"
#include "commoncert/rational.h"

namespace commoncert {

// alpha in (0, 1) \ {1/2}, mirrored to 1 - alpha when below 1/2.
struct NormalizedAlpha {
  Rational original;
  Rational value;
  bool mirrored = false;
};

// Throws HypothesisError for alpha = 1/2 or alpha outside (0, 1).
NormalizedAlpha normalize_alpha(const Rational &alpha);

// Throws HypothesisError naming the failed condition (acyclic, even girth,
// or the edges form a single cycle). No-op when theorem_applicable(h).
void require_theorem_applicable(const Graph &h);

// min(1 - a, 2^(-2 e(H)) (a - 1/2)) with a the normalized alpha.
Rational epsilon_threshold(const Graph &h, const Rational &alpha);

// t_H(W) + t_H(1 - W) - a^e - (1 - a)^e for W = witness_kernel(a, eps),
// via even-subgraph enumeration. No hypotheses on a or eps.
Rational witness_deficit(const Graph &h, const Rational &alpha,
                         const Rational &epsilon, const Limits &limits = {});

// Exact values next to each intermediate upper bound used to show the
// witness deficit is negative. k is the girth and cycles the number of
// k-cycles.
struct ProofChainBounds {
  int k = 0;
  std::uint64_t cycles = 0;
  Rational t_phi;
  Rational t_complement;
  // a^e - eps^k a^(e-k) N_k + 2^e eps^(k+1)
  Rational upper_phi;
  // (1-a)^e + eps^k (1-a)^(e-k) N_k + 2^e eps^(k+1)
  Rational upper_complement;
  // a^e + (1-a)^e + eps^k ((1-a)^(e-k) - a^(e-k)) + 2^(e+1) eps^(k+1)
  Rational combined_upper;
  // a^e + (1-a)^e - 2^(k-e) eps^k (a - 1/2) + 2^(e+1) eps^(k+1)
  Rational mean_value_upper;
  // a^e + (1-a)^e
  Rational rhs;

  Rational lhs() const { return t_phi + t_complement; }
  bool phi_bound_holds() const { return t_phi <= upper_phi; }
  bool complement_bound_holds() const {
    return t_complement <= upper_complement;
  }
  bool combined_bound_holds() const {
    return upper_phi + upper_complement <= combined_upper &&
           lhs() <= combined_upper;
  }
  bool mean_value_bound_holds() const {
    return combined_upper <= mean_value_upper && lhs() <= mean_value_upper;
  }
  bool holds() const {
    return phi_bound_holds() && complement_bound_holds() &&
           combined_bound_holds() && mean_value_bound_holds();
  }
};

// Requires theorem_applicable(h), alpha in (1/2, 1) and 0 <= eps < 1;
// throws HypothesisError otherwise.
ProofChainBounds proof_chain_bounds(const Graph &h, const Rational &alpha,
                                    const Rational &epsilon,
                                    const Limits &limits = {});

inline constexpr int kCertificateSchemaVersion = 1;
inline constexpr const char *kEvenSubgraphEvaluator = "even_subgraph";
inline constexpr const char *kDirectEvaluator = "direct";
inline constexpr const char *kSubsetExpansionEvaluator = "subset_expansion";

// A checked instance of t_H(a + eps f) + t_H(1 - a - eps f) < a^e + (1-a)^e.
struct Certificate {
  Graph graph;
  int girth_k = 0;
  std::uint64_t num_k_cycles = 0;
  // As supplied; the witness uses normalized_alpha.
  Rational alpha;
  Rational normalized_alpha;
  bool alpha_mirrored = false;
  Rational epsilon;
  Rational epsilon0;
  Rational lhs;
  Rational rhs;
  Rational deficit;
  std::string evaluator;
  bool cross_checked = false;
  bool proof_chain_holds = false;

  friend bool operator==(const Certificate &, const Certificate &) = default;
};

// Builds a certificate for the witness at (alpha, epsilon); epsilon
// defaults to epsilon_threshold / 2 and must lie in (0, epsilon0). A
// supplied epsilon applies to the normalized alpha. Throws HypothesisError
// on a violated hypothesis and ConsistencyError if the evaluators disagree
// or the deficit is not negative.
Certificate certify(const Graph &h, const Rational &alpha,
                    const std::optional<Rational> &epsilon = std::nullopt,
                    const Limits &limits = {});

// t_H(W) + t_H(1-W) - t_K2(W)^e - (1 - t_K2(W))^e. Throws HypothesisError
// when k is not a graphon.
Rational strong_common_deficit(const Graph &h, const StepKernel &k,
                               const Limits &limits = {});

// t_H(W) + t_H(1-W) - 2^(1-e).
Rational common_deficit(const Graph &h, const StepKernel &k,
                        const Limits &limits = {});

struct ScanRow {
  Rational alpha;
  std::optional<Rational> epsilon0;
  std::optional<Rational> epsilon;
  std::optional<Rational> deficit;
  // "certified", "excluded: ..." or "error: ...".
  std::string status;
};

// One row per grid entry in grid order; failures are recorded in-row.
std::vector<ScanRow> scan_alpha_grid(const Graph &h,
                                     const std::vector<Rational> &grid,
                                     const Limits &limits = {});

} // namespace commoncert

#endif // COMMONCERT_COMMONNESS_H_
