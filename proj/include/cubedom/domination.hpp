#pragma once

// Domination predicates and bounds for Q_n.
//
// A set D dominates Q_n when every vertex is in D or adjacent to a member.
// The check is word-parallel: OR the set with its n direction shifts and
// compare against the full universe, so it costs n passes over the bitset
// rather than a neighborhood probe per vertex.

#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cubedom/core.hpp"

namespace cubedom {

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
  return (a + b - 1) / b;
}

inline bool is_dominating(const VertexSet& s) {
  VertexSet cover = s;
  for (int d = 0; d < s.dimension(); ++d) cover |= s.shifted(d);
  return cover.is_universe();
}

// Dominating and inducing a connected subgraph.  Empty sets are simply not
// dominating; is_connected is only consulted once nonempty.
inline bool is_connected_dominating(const VertexSet& s) {
  if (s.empty()) return false;
  return is_dominating(s) && is_connected(s);
}

struct DominationBounds {
  int n = 0;
  // ceil(2^n/(n+1)): each closed neighborhood covers n+1 vertices.
  std::uint64_t gamma_lower = 0;
  // ceil((2^n-2)/(n-1)) for n >= 2: a connected dominating set of size c has
  // at most c-1 internal tree edges, so it reaches at most c(n-1)+2 vertices.
  std::optional<std::uint64_t> gamma_c_lower;
};

// Pure arithmetic; valid well beyond explicit-set dimensions (n <= 62).
inline DominationBounds lower_bounds(int n) {
  if (n < 1 || n > 62)
    throw std::invalid_argument("lower_bounds needs n in [1, 62], got " + std::to_string(n));
  DominationBounds b;
  b.n = n;
  const std::uint64_t p = universe_size(n);
  b.gamma_lower = ceil_div(p, std::uint64_t(n) + 1);
  if (n >= 2) b.gamma_c_lower = ceil_div(p - 2, std::uint64_t(n) - 1);
  return b;
}

// Greedy set cover over closed neighborhoods: repeatedly take the vertex
// covering the most still-uncovered vertices, ties to the smallest vertex.
// Gains only ever shrink, so stale heap entries are re-scored on pop and
// pushed back (lazy greedy); the selection matches the naive rescan exactly.
inline VertexSet greedy_dominating(int n) {
  check_dimension(n);
  VertexSet chosen(n);
  VertexSet uncovered = VertexSet::universe(n);

  struct Entry {
    std::uint64_t gain;
    Vertex v;
  };
  struct Worse {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.gain != b.gain) return a.gain < b.gain;
      return a.v > b.v;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, Worse> heap;
  for (std::uint64_t v = 0; v < universe_size(n); ++v)
    heap.push({std::uint64_t(n) + 1, Vertex(v)});

  auto gain_of = [&](Vertex v) {
    std::uint64_t g = uncovered.contains(v) ? 1 : 0;
    for (int d = 0; d < n; ++d)
      if (uncovered.contains(v ^ (Vertex{1} << d))) ++g;
    return g;
  };

  std::uint64_t remaining = universe_size(n);
  while (remaining > 0) {
    Entry top = heap.top();
    heap.pop();
    const std::uint64_t fresh = gain_of(top.v);
    if (fresh != top.gain) {
      if (fresh > 0) heap.push({fresh, top.v});
      continue;
    }
    chosen.insert(top.v);
    if (uncovered.contains(top.v)) uncovered.erase(top.v);
    for (int d = 0; d < n; ++d) {
      const Vertex w = top.v ^ (Vertex{1} << d);
      if (uncovered.contains(w)) uncovered.erase(w);
    }
    remaining -= fresh;
  }
  return chosen;
}

}  // namespace cubedom
