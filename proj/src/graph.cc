//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "commoncert/graph.h"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace commoncert {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0)
    throw std::invalid_argument("negative vertex count");

  std::set<std::pair<int, int>> seen;
  for (Edge &e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_)
      throw std::invalid_argument(
          "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
          "} has an endpoint outside [0, " + std::to_string(vertex_count_) +
          ")");
    if (e.u == e.v)
      throw std::invalid_argument("loop edge at vertex " +
                                  std::to_string(e.u));
    if (e.u > e.v)
      std::swap(e.u, e.v);
    if (!seen.emplace(e.u, e.v).second)
      throw std::invalid_argument("duplicate edge {" + std::to_string(e.u) +
                                  "," + std::to_string(e.v) + "}");
  }
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(vertex_count_, 0);
  for (const Edge &e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::vector<int>> Graph::neighbors() const {
  std::vector<std::vector<int>> adj(vertex_count_);
  for (const Edge &e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

bool Graph::has_edge(int u, int v) const {
  if (u > v)
    std::swap(u, v);
  return std::any_of(edges_.begin(), edges_.end(),
                     [&](const Edge &e) { return e.u == u && e.v == v; });
}

EdgeSubset::EdgeSubset(int edge_count)
    : edge_count_(edge_count), words_((edge_count + 63) / 64, 0) {}

EdgeSubset::EdgeSubset(int edge_count, std::initializer_list<int> members)
    : EdgeSubset(edge_count) {
  for (int m : members)
    insert(m);
}

EdgeSubset EdgeSubset::all(int edge_count) {
  EdgeSubset s(edge_count);
  for (int i = 0; i < edge_count; ++i)
    s.insert(i);
  return s;
}

int EdgeSubset::size() const {
  int n = 0;
  for (std::uint64_t w : words_)
    n += std::popcount(w);
  return n;
}

bool EdgeSubset::contains(int edge) const {
  return (words_[edge / 64] >> (edge % 64)) & 1u;
}

void EdgeSubset::insert(int edge) {
  if (edge < 0 || edge >= edge_count_)
    throw std::out_of_range("edge index " + std::to_string(edge) +
                            " outside subset of " +
                            std::to_string(edge_count_) + " edges");
  words_[edge / 64] |= std::uint64_t{1} << (edge % 64);
}

void EdgeSubset::toggle(int edge) {
  words_[edge / 64] ^= std::uint64_t{1} << (edge % 64);
}

std::vector<int> EdgeSubset::members() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w)
    for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1)
      out.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
  return out;
}

EdgeSubset &EdgeSubset::operator^=(const EdgeSubset &other) {
  if (other.edge_count_ != edge_count_)
    throw std::invalid_argument("edge subsets of different graphs");
  for (std::size_t w = 0; w < words_.size(); ++w)
    words_[w] ^= other.words_[w];
  return *this;
}

std::vector<int> subset_degrees(const Graph &g, const EdgeSubset &s) {
  if (s.edge_count() != g.edge_count())
    throw std::invalid_argument("edge subset has " +
                                std::to_string(s.edge_count()) +
                                " bits but the graph has " +
                                std::to_string(g.edge_count()) + " edges");
  std::vector<int> deg(g.vertex_count(), 0);
  for (int i : s.members()) {
    ++deg[g.edge(i).u];
    ++deg[g.edge(i).v];
  }
  return deg;
}

Graph disjoint_union(const Graph &a, const Graph &b) {
  std::vector<Edge> edges = a.edges();
  const int shift = a.vertex_count();
  for (const Edge &e : b.edges())
    edges.push_back({e.u + shift, e.v + shift});
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

Graph without_isolated_vertices(const Graph &g) {
  const std::vector<int> deg = g.degrees();
  std::vector<int> relabel(g.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (deg[v] > 0)
      relabel[v] = next++;
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge &e : g.edges())
    edges.push_back({relabel[e.u], relabel[e.v]});
  return Graph(next, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3)
    throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph empty_graph(int n) { return Graph(n, std::vector<Edge>{}); }

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, std::move(edges));
}

Graph paw_graph() { return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

} // namespace commoncert
