//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "commoncert/cli.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "commoncert/certificate.h"
#include "commoncert/commonness.h"
#include "commoncert/cycles.h"
#include "commoncert/density.h"
#include "commoncert/errors.h"
#include "commoncert/graph_io.h"
#include "commoncert/kernel.h"

namespace commoncert {
namespace {

using ordered_json = nlohmann::ordered_json;

struct RunConfig {
  std::string graph_path;
  std::string format = "edgelist";
  std::string alpha;
  std::string alpha_grid;
  std::string epsilon;
  std::string kernel_path;
  std::string certificate_path;
  std::string output;
  Limits limits;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph load_graph(const RunConfig &config) {
  const std::string text = read_file(config.graph_path);
  try {
    if (config.format == "graph6") {
      std::istringstream in(text);
      const auto graphs = read_graph6_lines(in);
      if (graphs.empty())
        throw ParseError("graph6: empty input");
      return graphs.front();
    }
    return parse_edge_list(text);
  } catch (const ParseError &e) {
    throw ParseError(config.graph_path + ": " + e.what());
  }
}

Rational parse_flag(const std::string &flag, const std::string &text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument &e) {
    throw ParseError("--" + flag + ": " + e.what());
  }
}

std::vector<Rational> parse_grid(const std::string &text) {
  std::vector<Rational> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty())
      grid.push_back(parse_flag("alpha-grid", item));
  if (grid.empty())
    throw CLI::ValidationError("--alpha-grid", "the alpha grid is empty");
  return grid;
}

void emit(const RunConfig &config, std::ostream &out,
          const std::string &text) {
  if (config.output.empty() || config.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file)
    throw ParseError("cannot write '" + config.output + "'");
  file << text;
}

ordered_json rationals_to_json(const std::vector<Rational> &values) {
  auto a = ordered_json::array();
  for (const Rational &v : values)
    a.push_back(to_string(v));
  return a;
}

int cmd_analyze(const RunConfig &config, std::ostream &out) {
  const Graph g = load_graph(config);
  const Girth k = girth(g);
  const bool applicable = theorem_applicable(g);

  ordered_json report;
  report["graph"] = graph_to_json(g);
  report["vertex_count"] = g.vertex_count();
  report["edge_count"] = g.edge_count();
  if (k.is_acyclic())
    report["girth"] = "acyclic";
  else
    report["girth"] = k.length();
  report["is_cycle"] = is_cycle(g);
  report["theorem_applicable"] = applicable;
  if (!k.is_acyclic())
    report["num_k_cycles"] = count_k_cycle_subsets(g, k.length());
  report["cycle_space_dimension"] = cycle_space_dimension(g);

  std::optional<std::vector<std::uint64_t>> profile;
  if (cycle_space_dimension(g) <= config.limits.max_cycle_space_dim) {
    profile = even_subgraph_size_profile(g, config.limits);
    report["even_subgraph_profile"] = *profile;
  }

  if (!config.alpha.empty()) {
    const Rational alpha = parse_flag("alpha", config.alpha);
    report["alpha"] = to_string(alpha);
    if (profile)
      report["eps_polynomial"] =
          rationals_to_json(eps_polynomial(*profile, alpha).coefficients());
    if (applicable && alpha > 0 && alpha < 1 && alpha != Rational(1, 2))
      report["epsilon0"] = to_string(epsilon_threshold(g, alpha));

    if (!config.epsilon.empty()) {
      const Rational epsilon = parse_flag("epsilon", config.epsilon);
      const StepKernel w = witness_kernel(alpha, epsilon);
      ordered_json witness;
      witness["epsilon"] = to_string(epsilon);
      witness["kernel"] = kernel_to_json(w);
      if (profile) {
        witness["t_phi"] =
            to_string(eps_polynomial(*profile, alpha).evaluate(epsilon));
        witness["t_complement"] = to_string(
            eps_polynomial(*profile, 1 - alpha).evaluate(-epsilon));
        witness["deficit"] =
            to_string(witness_deficit(g, alpha, epsilon, config.limits));
      }
      witness["is_graphon"] = is_graphon(w);
      if (is_graphon(w))
        witness["graphon"] = graphon_to_json(export_step_graphon(w));
      report["witness"] = std::move(witness);
    }
  }

  if (!config.kernel_path.empty()) {
    nlohmann::json kj;
    try {
      kj = nlohmann::json::parse(read_file(config.kernel_path));
    } catch (const nlohmann::json::parse_error &e) {
      throw ParseError(config.kernel_path + ": " + e.what());
    }
    const StepKernel w = kernel_from_json(kj);
    ordered_json kr;
    kr["edge_density"] = to_string(edge_density(w));
    kr["t"] = to_string(hom_density_direct(g, w, config.limits));
    kr["t_complement"] =
        to_string(hom_density_direct(g, complement(w), config.limits));
    kr["is_graphon"] = is_graphon(w);
    if (is_graphon(w)) {
      kr["strong_common_deficit"] =
          to_string(strong_common_deficit(g, w, config.limits));
      kr["common_deficit"] = to_string(common_deficit(g, w, config.limits));
    }
    report["kernel"] = std::move(kr);
  }

  emit(config, out, report.dump(2) + "\n");
  return kExitOk;
}

int cmd_certify(const RunConfig &config, std::ostream &out) {
  const Graph g = load_graph(config);
  const Rational alpha = parse_flag("alpha", config.alpha);
  std::optional<Rational> epsilon;
  if (!config.epsilon.empty())
    epsilon = parse_flag("epsilon", config.epsilon);
  const Certificate c = certify(g, alpha, epsilon, config.limits);
  emit(config, out, serialize_certificate(c));
  return kExitOk;
}

int cmd_verify(const RunConfig &config, std::ostream &out,
               std::ostream &err) {
  const std::string text = read_file(config.certificate_path);
  const VerifyReport report = verify_certificate(text, config.limits);
  if (report.ok) {
    emit(config, out,
         "OK: certificate reproduced; lhs recomputed with the " +
             report.evaluator + " evaluator\n");
    return kExitOk;
  }
  for (const std::string &p : report.problems)
    err << "verify: " << p << "\n";
  return kExitConsistency;
}

int cmd_scan(const RunConfig &config, std::ostream &out) {
  const Graph g = load_graph(config);
  const auto grid = parse_grid(config.alpha_grid);
  const auto rows = scan_alpha_grid(g, grid, config.limits);

  std::ostringstream table;
  table << "alpha\tepsilon0\tepsilon\tdeficit\tsign\tstatus\n";
  auto cell = [](const std::optional<Rational> &v) {
    return v ? to_string(*v) : std::string("-");
  };
  for (const ScanRow &row : rows) {
    std::string sign = "-";
    if (row.deficit)
      sign = sgn(*row.deficit) < 0 ? "negative"
             : sgn(*row.deficit) == 0 ? "zero"
                                      : "positive";
    table << to_string(row.alpha) << '\t' << cell(row.epsilon0) << '\t'
          << cell(row.epsilon) << '\t' << cell(row.deficit) << '\t' << sign
          << '\t' << row.status << '\n';
  }
  emit(config, out, table.str());
  return kExitOk;
}

void add_caps(CLI::App *cmd, RunConfig &config) {
  cmd->add_option("--cap-assignments", config.limits.max_assignments,
                  "Maximum point assignments for direct evaluation")
      ->capture_default_str();
  cmd->add_option("--cap-cyclespace", config.limits.max_cycle_space_dim,
                  "Maximum cycle-space dimension to enumerate")
      ->capture_default_str();
  cmd->add_option("--cap-subsets", config.limits.max_subset_edges,
                  "Maximum edge count for the all-subsets expansion")
      ->capture_default_str();
}

void add_graph(CLI::App *cmd, RunConfig &config) {
  cmd->add_option("--graph", config.graph_path, "Graph file")->required();
  cmd->add_option("--format", config.format, "Graph file format")
      ->check(CLI::IsMember({"edgelist", "graph6"}))
      ->capture_default_str();
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  RunConfig config;
  CLI::App app{"Exact witness certificates against strong commonness"};
  app.name(args.empty() ? "commoncert" : args.front());
  app.require_subcommand(1);

  CLI::App *analyze = app.add_subcommand(
      "analyze", "Girth, cycle counts and the epsilon polynomial of a graph");
  add_graph(analyze, config);
  analyze->add_option("--alpha", config.alpha, "Edge density p/q");
  analyze->add_option("--epsilon", config.epsilon, "Witness amplitude p/q");
  analyze->add_option("--kernel", config.kernel_path,
                      "Step kernel JSON to evaluate");
  analyze->add_option("--out", config.output, "Output path");
  add_caps(analyze, config);

  CLI::App *certify_cmd =
      app.add_subcommand("certify", "Emit a certificate JSON");
  add_graph(certify_cmd, config);
  certify_cmd->add_option("--alpha", config.alpha, "Edge density p/q")
      ->required();
  certify_cmd->add_option("--epsilon", config.epsilon,
                          "Witness amplitude p/q (default epsilon0/2)");
  certify_cmd->add_option("--out", config.output, "Output path");
  add_caps(certify_cmd, config);

  CLI::App *verify = app.add_subcommand("verify", "Replay a certificate");
  verify->add_option("--certificate", config.certificate_path,
                     "Certificate JSON")
      ->required();
  verify->add_option("--out", config.output, "Output path");
  add_caps(verify, config);

  CLI::App *scan = app.add_subcommand("scan", "Certify over an alpha grid");
  add_graph(scan, config);
  scan->add_option("--alpha-grid", config.alpha_grid,
                   "Comma-separated p/q values")
      ->required();
  scan->add_option("--out", config.output, "Output path");
  add_caps(scan, config);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty())
    reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << app.get_name() << ": " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (analyze->parsed())
      return cmd_analyze(config, out);
    if (certify_cmd->parsed())
      return cmd_certify(config, out);
    if (verify->parsed())
      return cmd_verify(config, out, err);
    return cmd_scan(config, out);
  } catch (const HypothesisError &e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const CapExceeded &e) {
    err << "cap exceeded (" << e.cap() << "): " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const ConsistencyError &e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const CLI::ValidationError &e) {
    err << "usage: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

} // namespace commoncert
