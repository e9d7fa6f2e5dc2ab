//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef COMMONCERT_GRAPH_IO_H_
#define COMMONCERT_GRAPH_IO_H_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "commoncert/graph.h"

namespace commoncert {

// Edge-list text: the first content line is the vertex count n, every
// following content line is "u v" with two distinct endpoints below n.
// Blank lines and lines whose first non-blank character is '#' are skipped.
// Throws ParseError naming the offending line.
Graph parse_edge_list(std::string_view text);
Graph parse_edge_list(std::istream &in);

// One graph6 record (optional ">>graph6<<" header and trailing newline are
// tolerated). Throws ParseError on empty input, bytes outside 63..126,
// truncated or over-long bit vectors, and non-zero padding bits.
Graph parse_graph6(std::string_view text);

// Every non-blank line of `in` as a graph6 record; errors carry the line.
std::vector<Graph> read_graph6_lines(std::istream &in);

std::string encode_graph6(const Graph &g);

} // namespace commoncert

#endif // COMMONCERT_GRAPH_IO_H_
