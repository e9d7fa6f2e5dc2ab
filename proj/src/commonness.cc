//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "commoncert/commonness.h"

#include <optional>
#include <tuple>
#include <utility>

#include "commoncert/cycles.h"
#include "commoncert/density.h"
#include "commoncert/errors.h"

namespace commoncert {
namespace {

const Rational kHalf(1, 2);

Rational integer(std::uint64_t n) {
  Rational r;
  mpz_set_ui(r.get_num_mpz_t(), n);
  return r;
}

// t_H(W) and t_H(1 - W) for the witness from a shared profile.
std::pair<Rational, Rational>
witness_densities(const std::vector<std::uint64_t> &profile,
                  const Rational &alpha, const Rational &epsilon) {
  // 1 - (a + eps f) = (1 - a) + (-eps) f.
  return {eps_polynomial(profile, alpha).evaluate(epsilon),
          eps_polynomial(profile, 1 - alpha).evaluate(-epsilon)};
}

Rational balanced_rhs(const Rational &alpha, int e) {
  return pow(alpha, e) + pow(1 - alpha, e);
}

// Independent recomputation of (t_H(W), t_H(1 - W)) with the direct
// evaluator, falling back to the subset expansion. Returns the evaluator
// used, or nullopt when both are over their caps.
std::optional<std::string>
cross_check(const Graph &h, const Rational &alpha, const Rational &epsilon,
            const Rational &t_phi, const Rational &t_complement,
            const Limits &limits) {
  const StepKernel w = witness_kernel(alpha, epsilon);
  std::optional<std::pair<Rational, Rational>> other;
  std::string name;
  try {
    other.emplace(hom_density_direct(h, w, limits),
                  hom_density_direct(h, complement(w), limits));
    name = kDirectEvaluator;
  } catch (const CapExceeded &) {
  }
  if (!other) {
    try {
      other.emplace(subset_expansion_density(h, alpha, epsilon, limits),
                    subset_expansion_density(h, 1 - alpha, -epsilon, limits));
      name = kSubsetExpansionEvaluator;
    } catch (const CapExceeded &) {
      return std::nullopt;
    }
  }
  if (other->first != t_phi || other->second != t_complement)
    throw ConsistencyError("evaluator disagreement: " + name + " gives (" +
                           to_string(other->first) + ", " +
                           to_string(other->second) +
                           ") but even-subgraph enumeration gives (" +
                           to_string(t_phi) + ", " + to_string(t_complement) +
                           ")");
  return name;
}

} // namespace

NormalizedAlpha normalize_alpha(const Rational &alpha) {
  if (alpha <= 0 || alpha >= 1)
    throw HypothesisError("alpha=" + to_string(alpha) +
                          " is outside (0,1)");
  if (alpha == kHalf)
    throw HypothesisError("alpha=1/2 excluded");
  NormalizedAlpha out{alpha, alpha, false};
  if (alpha < kHalf) {
    out.value = 1 - alpha;
    out.mirrored = true;
  }
  return out;
}

void require_theorem_applicable(const Graph &h) {
  const Girth k = girth(h);
  if (k.is_acyclic())
    throw HypothesisError("graph is acyclic (no girth)");
  if (!k.is_odd())
    throw HypothesisError("girth is even (" + k.to_string() + ")");
  if (is_cycle(without_isolated_vertices(h)))
    throw HypothesisError("graph is a cycle");
}

Rational epsilon_threshold(const Graph &h, const Rational &alpha) {
  require_theorem_applicable(h);
  const Rational a = normalize_alpha(alpha).value;
  const Rational scaled = pow2(-2 * h.edge_count()) * (a - kHalf);
  const Rational gap = 1 - a;
  return scaled < gap ? scaled : gap;
}

Rational witness_deficit(const Graph &h, const Rational &alpha,
                         const Rational &epsilon, const Limits &limits) {
  const auto profile = even_subgraph_size_profile(h, limits);
  const auto [t_phi, t_complement] = witness_densities(profile, alpha, epsilon);
  return t_phi + t_complement - balanced_rhs(alpha, h.edge_count());
}

ProofChainBounds proof_chain_bounds(const Graph &h, const Rational &alpha,
                                    const Rational &epsilon,
                                    const Limits &limits) {
  require_theorem_applicable(h);
  if (alpha <= kHalf || alpha >= 1)
    throw HypothesisError("alpha=" + to_string(alpha) +
                          " is outside (1/2,1)");
  if (epsilon < 0 || epsilon >= 1)
    throw HypothesisError("epsilon=" + to_string(epsilon) +
                          " is outside [0,1)");

  const int e = h.edge_count();
  ProofChainBounds b;
  b.k = girth(h).length();
  b.cycles = count_k_cycle_subsets(h, b.k);
  const auto profile = even_subgraph_size_profile(h, limits);
  std::tie(b.t_phi, b.t_complement) =
      witness_densities(profile, alpha, epsilon);

  const int k = b.k;
  const Rational beta = 1 - alpha;
  const Rational eps_k = pow(epsilon, k);
  const Rational tail = pow2(e) * pow(epsilon, k + 1);
  const Rational n_k = integer(b.cycles);

  b.rhs = balanced_rhs(alpha, e);
  b.upper_phi = pow(alpha, e) - eps_k * pow(alpha, e - k) * n_k + tail;
  b.upper_complement = pow(beta, e) + eps_k * pow(beta, e - k) * n_k + tail;
  b.combined_upper =
      b.rhs + eps_k * (pow(beta, e - k) - pow(alpha, e - k)) + 2 * tail;
  b.mean_value_upper =
      b.rhs - pow2(k - e) * eps_k * (alpha - kHalf) + 2 * tail;
  return b;
}

Certificate certify(const Graph &h, const Rational &alpha,
                    const std::optional<Rational> &epsilon,
                    const Limits &limits) {
  require_theorem_applicable(h);
  const NormalizedAlpha na = normalize_alpha(alpha);

  Certificate c;
  c.graph = h;
  c.girth_k = girth(h).length();
  c.num_k_cycles = count_k_cycle_subsets(h, c.girth_k);
  c.alpha = na.original;
  c.normalized_alpha = na.value;
  c.alpha_mirrored = na.mirrored;
  c.epsilon0 = epsilon_threshold(h, na.value);
  c.epsilon = epsilon.value_or(c.epsilon0 / 2);
  if (c.epsilon <= 0 || c.epsilon >= c.epsilon0)
    throw HypothesisError(
        "epsilon=" + to_string(c.epsilon) + " is outside (0, epsilon0=" +
        to_string(c.epsilon0) + "); deficit there is " +
        to_string(witness_deficit(h, na.value, c.epsilon, limits)) +
        " but is not covered by the theorem");

  const auto profile = even_subgraph_size_profile(h, limits);
  const auto [t_phi, t_complement] =
      witness_densities(profile, na.value, c.epsilon);
  c.lhs = t_phi + t_complement;
  c.rhs = balanced_rhs(na.value, h.edge_count());
  c.deficit = c.lhs - c.rhs;
  c.evaluator = kEvenSubgraphEvaluator;
  c.cross_checked =
      cross_check(h, na.value, c.epsilon, t_phi, t_complement, limits)
          .has_value();

  const ProofChainBounds chain =
      proof_chain_bounds(h, na.value, c.epsilon, limits);
  c.proof_chain_holds = chain.holds();
  if (!c.proof_chain_holds)
    throw ConsistencyError("an intermediate bound of the witness argument "
                           "fails at epsilon=" +
                           to_string(c.epsilon));
  if (c.deficit >= 0)
    throw ConsistencyError("deficit " + to_string(c.deficit) +
                           " is not negative at alpha=" +
                           to_string(na.value) +
                           ", epsilon=" + to_string(c.epsilon));
  return c;
}

Rational strong_common_deficit(const Graph &h, const StepKernel &k,
                               const Limits &limits) {
  if (!is_graphon(k))
    throw HypothesisError("kernel takes values outside [0,1]; not a graphon");
  const Rational p = edge_density(k);
  return hom_density_direct(h, k, limits) +
         hom_density_direct(h, complement(k), limits) -
         balanced_rhs(p, h.edge_count());
}

Rational common_deficit(const Graph &h, const StepKernel &k,
                        const Limits &limits) {
  if (!is_graphon(k))
    throw HypothesisError("kernel takes values outside [0,1]; not a graphon");
  return hom_density_direct(h, k, limits) +
         hom_density_direct(h, complement(k), limits) -
         pow2(1 - h.edge_count());
}

std::vector<ScanRow> scan_alpha_grid(const Graph &h,
                                     const std::vector<Rational> &grid,
                                     const Limits &limits) {
  std::vector<ScanRow> rows;
  for (const Rational &alpha : grid) {
    ScanRow row;
    row.alpha = alpha;
    if (alpha == kHalf) {
      row.status = "excluded: alpha=1/2";
      rows.push_back(std::move(row));
      continue;
    }
    try {
      const Certificate c = certify(h, alpha, std::nullopt, limits);
      row.epsilon0 = c.epsilon0;
      row.epsilon = c.epsilon;
      row.deficit = c.deficit;
      row.status = "certified";
    } catch (const std::exception &e) {
      row.status = std::string("error: ") + e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace commoncert
