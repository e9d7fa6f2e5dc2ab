//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "commoncert/kernel.h"

#include <stdexcept>
#include <string>
#include <utility>

#include "commoncert/errors.h"

namespace commoncert {

StepKernel::StepKernel(std::vector<Rational> weights,
                       std::vector<std::vector<Rational>> values)
    : weights_(std::move(weights)), values_(std::move(values)) {
  const std::size_t m = weights_.size();
  if (m == 0)
    throw std::invalid_argument("step kernel needs at least one point");
  Rational total = 0;
  for (const Rational &w : weights_) {
    if (w <= 0)
      throw std::invalid_argument("step kernel weight " + to_string(w) +
                                  " is not positive");
    total += w;
  }
  if (total != 1)
    throw std::invalid_argument("step kernel weights sum to " +
                                to_string(total) + ", not 1");
  if (values_.size() != m)
    throw std::invalid_argument("value matrix has " +
                                std::to_string(values_.size()) +
                                " rows for " + std::to_string(m) + " points");
  for (std::size_t i = 0; i < m; ++i) {
    if (values_[i].size() != m)
      throw std::invalid_argument("value matrix row " + std::to_string(i) +
                                  " has the wrong length");
    for (std::size_t j = 0; j < i; ++j)
      if (values_[i][j] != values_[j][i])
        throw std::invalid_argument("value matrix is not symmetric at (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + ")");
  }
}

StepKernel constant_kernel(const Rational &c) {
  return StepKernel({Rational(1)}, {{c}});
}

StepKernel witness_kernel(const Rational &alpha, const Rational &epsilon) {
  const Rational same = alpha - epsilon;
  const Rational cross = alpha + epsilon;
  return StepKernel({Rational(1, 2), Rational(1, 2)},
                    {{same, cross}, {cross, same}});
}

StepKernel complement(const StepKernel &k) {
  auto values = k.values();
  for (auto &row : values)
    for (Rational &v : row)
      v = 1 - v;
  return StepKernel(k.weights(), std::move(values));
}

Rational edge_density(const StepKernel &k) {
  Rational total = 0;
  for (int i = 0; i < k.point_count(); ++i)
    for (int j = 0; j < k.point_count(); ++j)
      total += k.weight(i) * k.weight(j) * k.value(i, j);
  return total;
}

bool is_graphon(const StepKernel &k) {
  for (const auto &row : k.values())
    for (const Rational &v : row)
      if (v < 0 || v > 1)
        return false;
  return true;
}

StepGraphonExport export_step_graphon(const StepKernel &k) {
  if (!is_graphon(k))
    throw HypothesisError("kernel takes values outside [0,1]; not a graphon");
  StepGraphonExport out;
  out.breakpoints.push_back(0);
  Rational running = 0;
  for (const Rational &w : k.weights()) {
    running += w;
    out.breakpoints.push_back(running);
  }
  out.values = k.values();
  return out;
}

namespace {

nlohmann::ordered_json matrix_to_json(
    const std::vector<std::vector<Rational>> &m) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto &row : m) {
    auto r = nlohmann::ordered_json::array();
    for (const Rational &v : row)
      r.push_back(to_string(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

Rational rational_field(const nlohmann::json &j, const std::string &where) {
  if (!j.is_string())
    throw ParseError(where + ": expected a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument &e) {
    throw ParseError(where + ": " + e.what());
  }
}

} // namespace

nlohmann::ordered_json kernel_to_json(const StepKernel &k) {
  nlohmann::ordered_json j;
  auto weights = nlohmann::ordered_json::array();
  for (const Rational &w : k.weights())
    weights.push_back(to_string(w));
  j["weights"] = std::move(weights);
  j["values"] = matrix_to_json(k.values());
  return j;
}

StepKernel kernel_from_json(const nlohmann::json &j) {
  if (!j.is_object() || !j.contains("weights") || !j.contains("values") ||
      !j["weights"].is_array() || !j["values"].is_array())
    throw ParseError("kernel JSON needs array fields \"weights\" and "
                     "\"values\"");
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < j["weights"].size(); ++i)
    weights.push_back(
        rational_field(j["weights"][i], "weights[" + std::to_string(i) + "]"));
  std::vector<std::vector<Rational>> values;
  for (std::size_t i = 0; i < j["values"].size(); ++i) {
    const auto &row = j["values"][i];
    if (!row.is_array())
      throw ParseError("values[" + std::to_string(i) + "] is not an array");
    auto &out = values.emplace_back();
    for (std::size_t c = 0; c < row.size(); ++c)
      out.push_back(rational_field(row[c], "values[" + std::to_string(i) +
                                               "][" + std::to_string(c) +
                                               "]"));
  }
  try {
    return StepKernel(std::move(weights), std::move(values));
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what());
  }
}

nlohmann::ordered_json graphon_to_json(const StepGraphonExport &g) {
  nlohmann::ordered_json j;
  auto breaks = nlohmann::ordered_json::array();
  for (const Rational &b : g.breakpoints)
    breaks.push_back(to_string(b));
  j["breakpoints"] = std::move(breaks);
  j["values"] = matrix_to_json(g.values);
  return j;
}

} // namespace commoncert
