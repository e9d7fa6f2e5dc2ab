//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef COMMONCERT_KERNEL_H_
#define COMMONCERT_KERNEL_H_

#include <vector>

#include <json.hpp>

#include "commoncert/rational.h"

namespace commoncert {

// A symmetric step function on a finite probability space: point i carries
// mass weights[i] and the kernel takes value values[i][j] on block (i, j).
// Values may be negative or exceed 1; see is_graphon().
class StepKernel {
public:
  // Throws std::invalid_argument unless there is at least one point, all
  // weights are positive and sum to exactly 1, and values is a symmetric
  // square matrix matching the number of weights.
  StepKernel(std::vector<Rational> weights,
             std::vector<std::vector<Rational>> values);

  int point_count() const { return static_cast<int>(weights_.size()); }
  const Rational &weight(int i) const { return weights_[i]; }
  const Rational &value(int i, int j) const { return values_[i][j]; }
  const std::vector<Rational> &weights() const { return weights_; }
  const std::vector<std::vector<Rational>> &values() const { return values_; }

  friend bool operator==(const StepKernel &, const StepKernel &) = default;

private:
  std::vector<Rational> weights_;
  std::vector<std::vector<Rational>> values_;
};

StepKernel constant_kernel(const Rational &c);

// alpha + epsilon * f on the uniform two-point space {0, 1}, where
// f(x, y) = (-1)^(x + y + 1): diagonal alpha - epsilon, off-diagonal
// alpha + epsilon.
StepKernel witness_kernel(const Rational &alpha, const Rational &epsilon);

StepKernel complement(const StepKernel &k);

// t_{K2}(k) = sum_ij w_i w_j k_ij.
Rational edge_density(const StepKernel &k);

bool is_graphon(const StepKernel &k);

// The kernel pulled back to [0,1] along the map sending
// [b_i, b_{i+1}) to point i.
struct StepGraphonExport {
  std::vector<Rational> breakpoints;
  std::vector<std::vector<Rational>> values;
};

// Throws HypothesisError when k has a value outside [0, 1].
StepGraphonExport export_step_graphon(const StepKernel &k);

// {"weights": ["1/2", ...], "values": [["5/8", ...], ...]}
nlohmann::ordered_json kernel_to_json(const StepKernel &k);
// Throws ParseError on a schema violation.
StepKernel kernel_from_json(const nlohmann::json &j);

nlohmann::ordered_json graphon_to_json(const StepGraphonExport &g);

} // namespace commoncert

#endif // COMMONCERT_KERNEL_H_
