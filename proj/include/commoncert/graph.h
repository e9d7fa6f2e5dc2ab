//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef COMMONCERT_GRAPH_H_
#define COMMONCERT_GRAPH_H_

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace commoncert {

struct Edge {
  int u;
  int v;

  friend bool operator==(const Edge &, const Edge &) = default;
};

// Simple undirected graph on vertices 0..n-1. Edge i is the i-th entry of
// edges(); the order is the construction order and is never changed.
class Graph {
public:
  Graph() = default;

  // Throws std::invalid_argument on a loop, a repeated unordered pair or an
  // endpoint outside [0, vertex_count). Each stored edge has u < v.
  Graph(int vertex_count, std::vector<Edge> edges);
  Graph(int vertex_count, std::initializer_list<Edge> edges)
      : Graph(vertex_count, std::vector<Edge>(edges)) {}

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge> &edges() const { return edges_; }
  const Edge &edge(int index) const { return edges_[index]; }

  std::vector<int> degrees() const;
  std::vector<std::vector<int>> neighbors() const;
  bool has_edge(int u, int v) const;

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// A subset S of the edges of a graph with `edge_count` edges, stored as a
// bitset over edge positions.
class EdgeSubset {
public:
  EdgeSubset() = default;
  explicit EdgeSubset(int edge_count);
  EdgeSubset(int edge_count, std::initializer_list<int> members);

  static EdgeSubset all(int edge_count);

  int edge_count() const { return edge_count_; }
  int size() const;
  bool empty() const { return size() == 0; }
  bool contains(int edge) const;
  void insert(int edge);
  void toggle(int edge);
  std::vector<int> members() const;

  EdgeSubset &operator^=(const EdgeSubset &other);
  friend EdgeSubset operator^(EdgeSubset lhs, const EdgeSubset &rhs) {
    return lhs ^= rhs;
  }
  friend bool operator==(const EdgeSubset &, const EdgeSubset &) = default;

private:
  int edge_count_ = 0;
  std::vector<std::uint64_t> words_;
};

// Degree of every vertex of `g` counted over the edges in `s` only.
std::vector<int> subset_degrees(const Graph &g, const EdgeSubset &s);

Graph disjoint_union(const Graph &a, const Graph &b);

// Drops degree-0 vertices and renumbers the rest in increasing order.
Graph without_isolated_vertices(const Graph &g);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph petersen_graph();
// Triangle {0,1,2} with pendant edge {2,3}.
Graph paw_graph();

} // namespace commoncert

#endif // COMMONCERT_GRAPH_H_
