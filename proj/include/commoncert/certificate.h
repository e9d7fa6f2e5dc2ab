//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef COMMONCERT_CERTIFICATE_H_
#define COMMONCERT_CERTIFICATE_H_

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "commoncert/commonness.h"
#include "commoncert/limits.h"

namespace commoncert {

nlohmann::ordered_json graph_to_json(const Graph &g);
Graph graph_from_json(const nlohmann::json &j);

// Fixed key order, rationals as "p/q" strings.
nlohmann::ordered_json certificate_to_json(const Certificate &c);
Certificate certificate_from_json(const nlohmann::json &j);

// Canonical text: two-space indented JSON plus a trailing newline.
std::string serialize_certificate(const Certificate &c);
// Throws ParseError.
Certificate parse_certificate(std::string_view text);

struct VerifyReport {
  bool ok = false;
  // Evaluator used for the independent recomputation.
  std::string evaluator;
  std::vector<std::string> problems;
};

// Replays a serialized certificate: recomputes lhs and rhs with an evaluator
// other than the one it names, re-certifies from its (graph, alpha,
// epsilon), and requires the re-serialization to match `text` byte for
// byte.
VerifyReport verify_certificate(std::string_view text,
                                const Limits &limits = {});

} // namespace commoncert

#endif // COMMONCERT_CERTIFICATE_H_
