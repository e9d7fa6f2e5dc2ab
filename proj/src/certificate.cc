//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "commoncert/certificate.h"

#include <stdexcept>

#include "commoncert/cycles.h"
#include "commoncert/density.h"
#include "commoncert/errors.h"

namespace commoncert {
namespace {

using ordered_json = nlohmann::ordered_json;

const nlohmann::json &field(const nlohmann::json &j, const char *name) {
  if (!j.is_object() || !j.contains(name))
    throw ParseError(std::string("certificate: missing field \"") + name +
                     "\"");
  return j[name];
}

Rational rational_field(const nlohmann::json &j, const char *name) {
  const auto &v = field(j, name);
  if (!v.is_string())
    throw ParseError(std::string("certificate: \"") + name +
                     "\" must be a \"p/q\" string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument &e) {
    throw ParseError(std::string("certificate: \"") + name + "\": " +
                     e.what());
  }
}

template <typename T> T typed_field(const nlohmann::json &j, const char *name) {
  try {
    return field(j, name).get<T>();
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("certificate: \"") + name + "\": " +
                     e.what());
  }
}

// (t_H(W), t_H(1 - W)) by the named evaluator.
std::pair<Rational, Rational> densities_by(const std::string &evaluator,
                                           const Graph &h,
                                           const Rational &alpha,
                                           const Rational &epsilon,
                                           const Limits &limits) {
  if (evaluator == kDirectEvaluator) {
    const StepKernel w = witness_kernel(alpha, epsilon);
    return {hom_density_direct(h, w, limits),
            hom_density_direct(h, complement(w), limits)};
  }
  if (evaluator == kSubsetExpansionEvaluator)
    return {subset_expansion_density(h, alpha, epsilon, limits),
            subset_expansion_density(h, 1 - alpha, -epsilon, limits)};
  return {even_subgraph_density(h, alpha, epsilon, limits),
          even_subgraph_density(h, 1 - alpha, -epsilon, limits)};
}

} // namespace

ordered_json graph_to_json(const Graph &g) {
  ordered_json j;
  j["vertex_count"] = g.vertex_count();
  auto edges = ordered_json::array();
  for (const Edge &e : g.edges())
    edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const nlohmann::json &j) {
  try {
    const int n = j.at("vertex_count").get<int>();
    std::vector<Edge> edges;
    for (const auto &e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw ParseError("graph: each edge must be a pair [u, v]");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Graph(n, std::move(edges));
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("graph: ") + e.what());
  } catch (const std::invalid_argument &e) {
    throw ParseError(std::string("graph: ") + e.what());
  }
}

ordered_json certificate_to_json(const Certificate &c) {
  ordered_json j;
  j["schema_version"] = kCertificateSchemaVersion;
  j["graph"] = graph_to_json(c.graph);
  j["girth_k"] = c.girth_k;
  j["num_k_cycles"] = c.num_k_cycles;
  j["alpha"] = to_string(c.alpha);
  j["normalized_alpha"] = to_string(c.normalized_alpha);
  j["alpha_mirrored"] = c.alpha_mirrored;
  j["epsilon"] = to_string(c.epsilon);
  j["epsilon0"] = to_string(c.epsilon0);
  j["lhs"] = to_string(c.lhs);
  j["rhs"] = to_string(c.rhs);
  j["deficit"] = to_string(c.deficit);
  j["evaluator"] = c.evaluator;
  j["cross_checked"] = c.cross_checked;
  j["proof_chain_holds"] = c.proof_chain_holds;
  return j;
}

Certificate certificate_from_json(const nlohmann::json &j) {
  const int version = typed_field<int>(j, "schema_version");
  if (version != kCertificateSchemaVersion)
    throw ParseError("certificate: unsupported schema_version " +
                     std::to_string(version));
  Certificate c;
  c.graph = graph_from_json(field(j, "graph"));
  c.girth_k = typed_field<int>(j, "girth_k");
  c.num_k_cycles = typed_field<std::uint64_t>(j, "num_k_cycles");
  c.alpha = rational_field(j, "alpha");
  c.normalized_alpha = rational_field(j, "normalized_alpha");
  c.alpha_mirrored = typed_field<bool>(j, "alpha_mirrored");
  c.epsilon = rational_field(j, "epsilon");
  c.epsilon0 = rational_field(j, "epsilon0");
  c.lhs = rational_field(j, "lhs");
  c.rhs = rational_field(j, "rhs");
  c.deficit = rational_field(j, "deficit");
  c.evaluator = typed_field<std::string>(j, "evaluator");
  c.cross_checked = typed_field<bool>(j, "cross_checked");
  c.proof_chain_holds = typed_field<bool>(j, "proof_chain_holds");
  return c;
}

std::string serialize_certificate(const Certificate &c) {
  return certificate_to_json(c).dump(2) + "\n";
}

Certificate parse_certificate(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
  return certificate_from_json(j);
}

VerifyReport verify_certificate(std::string_view text, const Limits &limits) {
  VerifyReport report;
  auto fail = [&](std::string what) {
    report.problems.push_back(std::move(what));
  };

  Certificate c;
  try {
    c = parse_certificate(text);
  } catch (const ParseError &e) {
    fail(e.what());
    return report;
  }

  try {
    if (c.deficit != c.lhs - c.rhs)
      fail("deficit is not lhs - rhs");
    if (c.deficit >= 0)
      fail("deficit is not negative");
    if (!(c.epsilon > 0 && c.epsilon < c.epsilon0))
      fail("epsilon is outside (0, epsilon0)");

    const NormalizedAlpha na = normalize_alpha(c.alpha);
    if (na.value != c.normalized_alpha || na.mirrored != c.alpha_mirrored)
      fail("normalized_alpha does not match alpha");
    if (epsilon_threshold(c.graph, c.alpha) != c.epsilon0)
      fail("epsilon0 does not match the threshold formula");
    const Girth k = girth(c.graph);
    if (k.is_acyclic() || k.length() != c.girth_k)
      fail("girth_k does not match the graph");
    else if (count_k_cycle_subsets(c.graph, c.girth_k) != c.num_k_cycles)
      fail("num_k_cycles does not match the graph");
    const Rational a = c.normalized_alpha;
    if (c.rhs != pow(a, c.graph.edge_count()) +
                     pow(1 - a, c.graph.edge_count()))
      fail("rhs does not match alpha^e + (1-alpha)^e");

    // Independent recomputation by a different evaluator.
    for (const char *candidate : {kDirectEvaluator, kSubsetExpansionEvaluator,
                                  kEvenSubgraphEvaluator}) {
      if (c.evaluator == candidate)
        continue;
      try {
        const auto [t_phi, t_complement] =
            densities_by(candidate, c.graph, a, c.epsilon, limits);
        report.evaluator = candidate;
        if (t_phi + t_complement != c.lhs)
          fail(std::string("lhs disagrees with the ") + candidate +
               " evaluator");
        break;
      } catch (const CapExceeded &) {
      }
    }
    if (report.evaluator.empty())
      fail("no independent evaluator within caps");

    const std::string replay =
        serialize_certificate(certify(c.graph, c.alpha, c.epsilon, limits));
    if (replay != text)
      fail("re-certification does not reproduce the certificate byte for "
           "byte");
  } catch (const std::exception &e) {
    fail(e.what());
  }
  report.ok = report.problems.empty();
  return report;
}

} // namespace commoncert
