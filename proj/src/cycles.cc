//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "commoncert/cycles.h"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

#include "commoncert/errors.h"

namespace commoncert {
namespace {

struct Incidence {
  int to;
  int edge;
};

std::vector<std::vector<Incidence>> incidence_lists(const Graph &g) {
  std::vector<std::vector<Incidence>> inc(g.vertex_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    inc[g.edge(i).u].push_back({g.edge(i).v, i});
    inc[g.edge(i).v].push_back({g.edge(i).u, i});
  }
  return inc;
}

// Counts simple paths start -> ... -> v of `remaining` more edges through
// vertices above `start` that close back to `start`.
std::uint64_t close_paths(const std::vector<std::vector<int>> &adj,
                          std::vector<char> &on_path, int start, int v,
                          int remaining) {
  if (remaining == 0) {
    return std::find(adj[v].begin(), adj[v].end(), start) != adj[v].end()
               ? 1
               : 0;
  }
  std::uint64_t total = 0;
  for (int w : adj[v]) {
    if (w <= start || on_path[w])
      continue;
    on_path[w] = 1;
    total += close_paths(adj, on_path, start, w, remaining - 1);
    on_path[w] = 0;
  }
  return total;
}

} // namespace

std::string Girth::to_string() const {
  return is_acyclic() ? "acyclic" : std::to_string(length_);
}

Girth girth(const Graph &g) {
  const auto inc = incidence_lists(g);
  const int n = g.vertex_count();
  int best = 0;
  std::vector<int> dist(n);
  std::vector<int> via(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(via.begin(), via.end(), -1);
    std::queue<int> frontier;
    dist[root] = 0;
    frontier.push(root);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      // Nothing found from this root can beat the current best.
      if (best != 0 && 2 * dist[u] >= best)
        break;
      for (const Incidence &next : inc[u]) {
        if (next.edge == via[u])
          continue;
        if (dist[next.to] < 0) {
          dist[next.to] = dist[u] + 1;
          via[next.to] = next.edge;
          frontier.push(next.to);
        } else {
          const int length = dist[u] + dist[next.to] + 1;
          if (best == 0 || length < best)
            best = length;
        }
      }
    }
  }
  return best == 0 ? Girth::acyclic() : Girth::of(best);
}

int connected_components(const Graph &g) {
  const auto adj = g.neighbors();
  std::vector<char> seen(g.vertex_count(), 0);
  int components = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (seen[s])
      continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return components;
}

bool is_cycle(const Graph &g) {
  if (g.vertex_count() < 3)
    return false;
  const auto deg = g.degrees();
  if (!std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; }))
    return false;
  return connected_components(g) == 1;
}

bool theorem_applicable(const Graph &g) {
  const Girth k = girth(g);
  if (k.is_acyclic() || !k.is_odd())
    return false;
  return !is_cycle(without_isolated_vertices(g));
}

std::uint64_t count_k_cycle_subsets(const Graph &g, int k) {
  if (k < 3)
    throw std::invalid_argument("cycle length must be at least 3, got " +
                                std::to_string(k));
  if (k > g.vertex_count())
    return 0;
  const auto adj = g.neighbors();
  std::vector<char> on_path(g.vertex_count(), 0);
  std::uint64_t directed = 0;
  // Anchor each cycle at its smallest vertex; both orientations are found.
  for (int start = 0; start < g.vertex_count(); ++start) {
    on_path[start] = 1;
    for (int w : adj[start]) {
      if (w <= start)
        continue;
      on_path[w] = 1;
      directed += close_paths(adj, on_path, start, w, k - 2);
      on_path[w] = 0;
    }
    on_path[start] = 0;
  }
  return directed / 2;
}

int cycle_space_dimension(const Graph &g) {
  return g.edge_count() - g.vertex_count() + connected_components(g);
}

std::vector<EdgeSubset> cycle_space_basis(const Graph &g) {
  const int e = g.edge_count();
  const auto inc = incidence_lists(g);
  // to_root[v]: tree edges on the path from v to the root of its tree.
  std::vector<EdgeSubset> to_root(g.vertex_count(), EdgeSubset(e));
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<char> tree_edge(e, 0);
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (seen[root])
      continue;
    seen[root] = 1;
    std::queue<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (const Incidence &next : inc[u]) {
        if (seen[next.to])
          continue;
        seen[next.to] = 1;
        tree_edge[next.edge] = 1;
        to_root[next.to] = to_root[u];
        to_root[next.to].insert(next.edge);
        frontier.push(next.to);
      }
    }
  }

  std::vector<EdgeSubset> basis;
  for (int i = 0; i < e; ++i) {
    if (tree_edge[i])
      continue;
    EdgeSubset cycle = to_root[g.edge(i).u] ^ to_root[g.edge(i).v];
    cycle.insert(i);
    basis.push_back(std::move(cycle));
  }
  return basis;
}

void enumerate_even_subgraphs(
    const Graph &g, const std::function<void(const EdgeSubset &)> &visit,
    const Limits &limits) {
  const int dim = cycle_space_dimension(g);
  if (dim > limits.max_cycle_space_dim)
    throw CapExceeded("cycle-space",
                      "cycle-space dimension " + std::to_string(dim) +
                          " exceeds the cap of " +
                          std::to_string(limits.max_cycle_space_dim) +
                          "; use direct evaluation instead");
  const std::vector<EdgeSubset> basis = cycle_space_basis(g);
  EdgeSubset current(g.edge_count());
  visit(current);
  const std::uint64_t total = std::uint64_t{1} << dim;
  for (std::uint64_t i = 1; i < total; ++i) {
    current ^= basis[std::countr_zero(i)];
    visit(current);
  }
}

std::vector<std::uint64_t> even_subgraph_size_profile(const Graph &g,
                                                      const Limits &limits) {
  std::vector<std::uint64_t> profile(g.edge_count() + 1, 0);
  enumerate_even_subgraphs(
      g, [&](const EdgeSubset &s) { ++profile[s.size()]; }, limits);
  return profile;
}

} // namespace commoncert
