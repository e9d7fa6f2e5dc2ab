//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef COMMONCERT_CYCLES_H_
#define COMMONCERT_CYCLES_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "commoncert/graph.h"
#include "commoncert/limits.h"

namespace commoncert {

// Length of a shortest cycle, or acyclic for forests.
class Girth {
public:
  static Girth acyclic() { return Girth(0); }
  static Girth of(int length) { return Girth(length); }

  bool is_acyclic() const { return length_ == 0; }
  bool is_odd() const { return length_ % 2 == 1; }
  // Only meaningful when !is_acyclic().
  int length() const { return length_; }
  std::string to_string() const;

  friend bool operator==(const Girth &, const Girth &) = default;

private:
  explicit Girth(int length) : length_(length) {}
  int length_;
};

// Breadth-first search from every vertex.
Girth girth(const Graph &g);

int connected_components(const Graph &g);

// Connected, 2-regular, at least three vertices. Isolated vertices make
// this false.
bool is_cycle(const Graph &g);

// The witness construction applies: the girth is finite and odd, and the
// edges of g do not form a single cycle. Isolated vertices are ignored for
// the cycle test since they leave every homomorphism density unchanged.
bool theorem_applicable(const Graph &g);

// Number of edge subsets of g that form a cycle of length exactly k.
// Requires k >= 3.
std::uint64_t count_k_cycle_subsets(const Graph &g, int k);

// e - v + c.
int cycle_space_dimension(const Graph &g);

// Fundamental cycles of a breadth-first spanning forest; a GF(2) basis of
// the cycle space.
std::vector<EdgeSubset> cycle_space_basis(const Graph &g);

// Visits every even subgraph (every vertex has even degree) exactly once,
// starting with the empty set, in Gray-code order over the basis. Throws
// CapExceeded when the cycle-space dimension exceeds
// limits.max_cycle_space_dim.
void enumerate_even_subgraphs(
    const Graph &g, const std::function<void(const EdgeSubset &)> &visit,
    const Limits &limits = {});

// profile[j] = number of even subgraphs with exactly j edges, j = 0..e(g).
std::vector<std::uint64_t> even_subgraph_size_profile(const Graph &g,
                                                      const Limits &limits = {});

} // namespace commoncert

#endif // COMMONCERT_CYCLES_H_
