//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "commoncert/density.h"

#include <algorithm>
#include <bit>
#include <string>

#include "commoncert/cycles.h"
#include "commoncert/errors.h"

namespace commoncert {
namespace {

std::vector<Rational> powers(const Rational &base, int max_exponent) {
  std::vector<Rational> out(max_exponent + 1);
  out[0] = 1;
  for (int i = 1; i <= max_exponent; ++i)
    out[i] = out[i - 1] * base;
  return out;
}

// Vertices are assigned in index order; edge uv with u < v is charged when
// v is placed, so every prefix carries a finished partial product.
class DirectEvaluator {
public:
  DirectEvaluator(const Graph &h, const StepKernel &k)
      : k_(k), back_edges_(h.vertex_count()), point_(h.vertex_count()),
        partial_(h.vertex_count() + 1) {
    for (const Edge &e : h.edges())
      back_edges_[e.v].push_back(e.u);
    partial_[0] = 1;
  }

  Rational run() {
    place(0);
    return total_;
  }

private:
  void place(std::size_t v) {
    if (v == point_.size()) {
      total_ += partial_[v];
      return;
    }
    for (int x = 0; x < k_.point_count(); ++x) {
      point_[v] = x;
      Rational &p = partial_[v + 1];
      p = partial_[v] * k_.weight(x);
      for (int u : back_edges_[v]) {
        p *= k_.value(point_[u], x);
        if (p == 0)
          break;
      }
      if (p != 0)
        place(v + 1);
    }
  }

  const StepKernel &k_;
  std::vector<std::vector<int>> back_edges_;
  std::vector<int> point_;
  std::vector<Rational> partial_;
  Rational total_ = 0;
};

} // namespace

Rational hom_density_direct(const Graph &h, const StepKernel &k,
                            const Limits &limits) {
  std::uint64_t assignments = 1;
  for (int v = 0; v < h.vertex_count(); ++v) {
    if (assignments > limits.max_assignments / k.point_count())
      throw CapExceeded("assignments",
                        std::to_string(k.point_count()) + "^" +
                            std::to_string(h.vertex_count()) +
                            " assignments exceed the cap of " +
                            std::to_string(limits.max_assignments));
    assignments *= k.point_count();
  }
  return DirectEvaluator(h, k).run();
}

Rational edge_subset_correlation(const Graph &h, const EdgeSubset &s) {
  for (int d : subset_degrees(h, s))
    if (d % 2 != 0)
      return 0;
  return s.size() % 2 == 0 ? 1 : -1;
}

Rational subset_expansion_density(const Graph &h, const Rational &alpha,
                                  const Rational &epsilon,
                                  const Limits &limits) {
  const int e = h.edge_count();
  if (e > limits.max_subset_edges || e > 62)
    throw CapExceeded("subsets", std::to_string(e) +
                                     " edges exceed the subset-expansion "
                                     "cap of " +
                                     std::to_string(std::min(limits.max_subset_edges, 62)));

  // correlation_sum[j] = sum over |S| = j of E[prod_S f]; S walks all
  // subsets in Gray-code order while the odd-degree vertex count is kept.
  std::vector<long long> correlation_sum(e + 1, 0);
  std::vector<char> odd(h.vertex_count(), 0);
  int odd_vertices = 0;
  int size = 0;
  std::uint64_t mask = 0;
  auto flip = [&](int vertex) {
    odd[vertex] ^= 1;
    odd_vertices += odd[vertex] ? 1 : -1;
  };
  correlation_sum[0] = 1;
  const std::uint64_t total = std::uint64_t{1} << e;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int edge = std::countr_zero(i);
    mask ^= std::uint64_t{1} << edge;
    size += (mask >> edge) & 1 ? 1 : -1;
    flip(h.edge(edge).u);
    flip(h.edge(edge).v);
    if (odd_vertices == 0)
      correlation_sum[size] += size % 2 == 0 ? 1 : -1;
  }

  const auto alpha_pow = powers(alpha, e);
  const auto eps_pow = powers(epsilon, e);
  Rational density = 0;
  for (int j = 0; j <= e; ++j)
    if (correlation_sum[j] != 0)
      density += Rational(static_cast<long>(correlation_sum[j])) * eps_pow[j] * alpha_pow[e - j];
  return density;
}

Rational even_subgraph_density(const Graph &h, const Rational &alpha,
                               const Rational &epsilon, const Limits &limits) {
  return eps_polynomial(h, alpha, limits).evaluate(epsilon);
}

EpsPolynomial::EpsPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {}

Rational EpsPolynomial::evaluate(const Rational &epsilon) const {
  return evaluate_truncated(epsilon, degree_bound());
}

Rational EpsPolynomial::evaluate_truncated(const Rational &epsilon,
                                           int max_degree) const {
  Rational value = 0;
  for (int j = std::min(max_degree, degree_bound()); j >= 0; --j)
    value = value * epsilon + coefficients_[j];
  return value;
}

EpsPolynomial eps_polynomial(const Graph &h, const Rational &alpha,
                             const Limits &limits) {
  const auto profile = even_subgraph_size_profile(h, limits);
  return eps_polynomial(profile, alpha);
}

EpsPolynomial eps_polynomial(std::span<const std::uint64_t> profile,
                             const Rational &alpha) {
  const int e = static_cast<int>(profile.size()) - 1;
  const auto alpha_pow = powers(alpha, e);
  std::vector<Rational> coefficients(e + 1);
  for (int j = 0; j <= e; ++j) {
    if (profile[j] == 0)
      continue;
    Rational count;
    mpz_set_ui(count.get_num_mpz_t(), profile[j]);
    coefficients[j] = (j % 2 == 0 ? count : Rational(-count)) * alpha_pow[e - j];
  }
  return EpsPolynomial(std::move(coefficients));
}

} // namespace commoncert
