#pragma once

// Text formats.
//
// Vertex: exactly n characters over {0,1}, coordinate n leftmost, so the
// string is the plain binary expansion of the vertex number ("110" = 6).
// Set file: one vertex per line.
// Tree file: first line "n=<dim>", then exactly 2^n - 1 lines of
// "<vertex> <vertex>" separated by a single space.
//
// Parsers reject anything off-format and report 1-based line numbers.

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cubedom/core.hpp"
#include "cubedom/spanning_tree.hpp"

namespace cubedom {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string format_vertex(Vertex v, int n) {
  check_dimension(n);
  check_vertex(v, n);
  std::string out(std::size_t(n), '0');
  for (int i = 0; i < n; ++i)
    if ((v >> i) & 1) out[std::size_t(n - 1 - i)] = '1';
  return out;
}

inline Vertex parse_vertex(std::string_view text, int n) {
  check_dimension(n);
  if (int(text.size()) != n)
    throw ParseError("vertex '" + std::string(text) + "' has length " +
                     std::to_string(text.size()) + ", expected " + std::to_string(n));
  Vertex v = 0;
  for (int i = 0; i < n; ++i) {
    const char c = text[std::size_t(i)];
    if (c != '0' && c != '1')
      throw ParseError("vertex '" + std::string(text) + "' has a character other than 0/1");
    if (c == '1') v |= Vertex{1} << (n - 1 - i);
  }
  return v;
}

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

// Trailing \r tolerated so CRLF files read cleanly.
inline void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace detail

inline void write_set_file(std::ostream& out, const VertexSet& set) {
  const int n = set.dimension();
  set.for_each([&](Vertex v) { out << format_vertex(v, n) << '\n'; });
}

inline VertexSet read_set_file(std::istream& in, int n) {
  VertexSet set(n);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
    try {
      set.insert(parse_vertex(line, n));
    } catch (const ParseError& e) {
      detail::parse_fail(line_no, e.what());
    }
  }
  return set;
}

inline void write_tree_file(std::ostream& out, const SpanningTree& tree) {
  out << "n=" << tree.n << '\n';
  for (const CubeEdge& e : tree.edges)
    out << format_vertex(e.u, tree.n) << ' ' << format_vertex(e.v, tree.n) << '\n';
}

inline SpanningTree read_tree_file(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) detail::parse_fail(1, "missing 'n=<dim>' header");
  ++line_no;
  detail::strip_cr(line);
  if (line.rfind("n=", 0) != 0) detail::parse_fail(line_no, "header must be 'n=<dim>'");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(line.substr(2), &used);
    if (used != line.size() - 2) throw std::invalid_argument("trailing junk");
  } catch (const std::exception&) {
    detail::parse_fail(line_no, "header must be 'n=<dim>'");
  }
  check_dimension(n);

  const std::uint64_t expected = universe_size(n) - 1;
  std::vector<CubeEdge> edges;
  edges.reserve(expected);
  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
    const std::size_t space = line.find(' ');
    if (space == std::string::npos || line.find(' ', space + 1) != std::string::npos)
      detail::parse_fail(line_no, "edge line must be '<vertex> <vertex>'");
    try {
      const Vertex a = parse_vertex(std::string_view(line).substr(0, space), n);
      const Vertex b = parse_vertex(std::string_view(line).substr(space + 1), n);
      edges.push_back(make_edge(a, b));
    } catch (const ParseError& e) {
      detail::parse_fail(line_no, e.what());
    }
    if (edges.size() > expected)
      detail::parse_fail(line_no, "more than " + std::to_string(expected) + " edge lines");
  }
  if (edges.size() != expected)
    detail::parse_fail(line_no + 1, "found " + std::to_string(edges.size()) +
                                        " edge lines, expected " + std::to_string(expected));
  return make_spanning_tree(n, std::move(edges));
}

}  // namespace cubedom
