//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "commoncert/graph_io.h"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "commoncert/errors.h"

namespace commoncert {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Splits on blanks and parses every token as a non-negative int.
bool parse_ints(std::string_view line, std::vector<long long> &out) {
  out.clear();
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
      ++pos;
    if (pos == line.size())
      break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t')
      ++end;
    long long value = 0;
    const char *first = line.data() + pos;
    const char *last = line.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || value < 0)
      return false;
    out.push_back(value);
    pos = end;
  }
  return true;
}

// Decodes N(n); advances `pos` past it.
std::uint64_t decode_size(std::string_view s, std::size_t &pos) {
  auto byte = [&](std::size_t i) -> std::uint64_t {
    if (i >= s.size())
      throw ParseError("graph6: truncated vertex count");
    return static_cast<unsigned char>(s[i]) - 63;
  };
  if (byte(0) != 63) {
    pos = 1;
    return byte(0);
  }
  const std::size_t groups = byte(1) == 63 ? 6 : 3;
  const std::size_t start = groups == 6 ? 2 : 1;
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < groups; ++i)
    n = (n << 6) | byte(start + i);
  pos = start + groups;
  return n;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
  int vertex_count = -1;
  std::vector<Edge> edges;
  std::vector<long long> ints;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#')
      continue;

    if (!parse_ints(line, ints))
      throw ParseError("malformed line '" + std::string(line) + "'", line_no);
    if (vertex_count < 0) {
      if (ints.size() != 1 || ints[0] > (1 << 30))
        throw ParseError("expected the vertex count, got '" +
                             std::string(line) + "'",
                         line_no);
      vertex_count = static_cast<int>(ints[0]);
      continue;
    }
    if (ints.size() != 2)
      throw ParseError("expected two endpoints, got '" + std::string(line) +
                           "'",
                       line_no);
    const long long u = ints[0];
    const long long v = ints[1];
    if (u >= vertex_count || v >= vertex_count)
      throw ParseError("endpoint out of range in '" + std::string(line) +
                           "' (n = " + std::to_string(vertex_count) + ")",
                       line_no);
    if (u == v)
      throw ParseError("loop edge '" + std::string(line) + "'", line_no);
    const Edge edge{static_cast<int>(std::min(u, v)),
                    static_cast<int>(std::max(u, v))};
    for (const Edge &seen : edges)
      if (seen == edge)
        throw ParseError("duplicate edge '" + std::string(line) + "'",
                         line_no);
    edges.push_back(edge);
  }
  if (vertex_count < 0)
    throw ParseError("empty edge list: missing vertex count");
  return Graph(vertex_count, std::move(edges));
}

Graph parse_edge_list(std::istream &in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header)
    text.remove_prefix(kGraph6Header.size());
  if (text.empty())
    throw ParseError("graph6: empty input");
  for (char c : text) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
      throw ParseError("graph6: byte " + std::to_string(b) +
                       " outside the printable range 63..126");
  }

  std::size_t pos = 0;
  const std::uint64_t n = decode_size(text, pos);
  if (n > (1u << 20))
    throw ParseError("graph6: vertex count " + std::to_string(n) +
                     " too large");
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes)
    throw ParseError("graph6: truncated adjacency bit vector (need " +
                     std::to_string(bytes) + " bytes, have " +
                     std::to_string(text.size() - pos) + ")");
  if (text.size() - pos > bytes)
    throw ParseError("graph6: trailing bytes after adjacency bit vector");

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t v = 1; v < n; ++v) {
    for (std::uint64_t u = 0; u < v; ++u, ++k) {
      const auto chunk = static_cast<unsigned char>(text[pos + k / 6]) - 63;
      if ((chunk >> (5 - k % 6)) & 1)
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
  }
  for (; k < bytes * 6; ++k) {
    const auto chunk = static_cast<unsigned char>(text[pos + k / 6]) - 63;
    if ((chunk >> (5 - k % 6)) & 1)
      throw ParseError("graph6: non-zero padding bits");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::vector<Graph> read_graph6_lines(std::istream &in) {
  std::vector<Graph> graphs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty())
      continue;
    try {
      graphs.push_back(parse_graph6(trim(line)));
    } catch (const ParseError &e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return graphs;
}

std::string encode_graph6(const Graph &g) {
  const auto n = static_cast<std::uint64_t>(g.vertex_count());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<unsigned char> packed((bits + 5) / 6, 0);
  for (const Edge &e : g.edges()) {
    // Column-major position of (u, v), u < v, in the upper triangle.
    const std::uint64_t k =
        static_cast<std::uint64_t>(e.v) * (e.v - 1) / 2 + e.u;
    packed[k / 6] |= static_cast<unsigned char>(1u << (5 - k % 6));
  }
  for (unsigned char c : packed)
    out.push_back(static_cast<char>(c + 63));
  return out;
}

} // namespace commoncert
