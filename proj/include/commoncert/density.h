//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef COMMONCERT_DENSITY_H_
#define COMMONCERT_DENSITY_H_

#include <cstdint>
#include <span>
#include <vector>

#include "commoncert/graph.h"
#include "commoncert/kernel.h"
#include "commoncert/limits.h"
#include "commoncert/rational.h"

namespace commoncert {

// t_H(W) by summing over all m^v maps V(H) -> points. Throws CapExceeded
// when m^v > limits.max_assignments.
Rational hom_density_direct(const Graph &h, const StepKernel &k,
                            const Limits &limits = {});

// E over uniform x in F_2^V(H) of prod_{vw in s} f(x_v, x_w) with
// f(x, y) = (-1)^(x+y+1). Since the product equals
// (-1)^|s| * prod_v (-1)^(deg_s(v) x_v), this is 0 when some vertex has odd
// degree in s and (-1)^|s| otherwise.
Rational edge_subset_correlation(const Graph &h, const EdgeSubset &s);

// t_H(alpha + epsilon f) as
//   sum over all S of epsilon^|S| alpha^(e-|S|) E[prod_S f].
// Throws CapExceeded when e(H) > limits.max_subset_edges.
Rational subset_expansion_density(const Graph &h, const Rational &alpha,
                                  const Rational &epsilon,
                                  const Limits &limits = {});

// Same value, summing alpha^(e-|S|) (-epsilon)^|S| over even subgraphs only.
Rational even_subgraph_density(const Graph &h, const Rational &alpha,
                               const Rational &epsilon,
                               const Limits &limits = {});

// t_H(alpha + epsilon f) as a polynomial in epsilon. Dense: coefficient j
// is stored for every j = 0..e(H).
class EpsPolynomial {
public:
  explicit EpsPolynomial(std::vector<Rational> coefficients);

  int degree_bound() const {
    return static_cast<int>(coefficients_.size()) - 1;
  }
  const Rational &coefficient(int j) const { return coefficients_[j]; }
  const std::vector<Rational> &coefficients() const { return coefficients_; }

  Rational evaluate(const Rational &epsilon) const;
  // Terms of degree <= max_degree only.
  Rational evaluate_truncated(const Rational &epsilon, int max_degree) const;

  friend bool operator==(const EpsPolynomial &,
                         const EpsPolynomial &) = default;

private:
  std::vector<Rational> coefficients_;
};

EpsPolynomial eps_polynomial(const Graph &h, const Rational &alpha,
                             const Limits &limits = {});

// From a precomputed even_subgraph_size_profile.
EpsPolynomial eps_polynomial(std::span<const std::uint64_t> profile,
                             const Rational &alpha);

} // namespace commoncert

#endif // COMMONCERT_DENSITY_H_
