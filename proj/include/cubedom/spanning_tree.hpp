#pragma once

// Spanning trees of Q_n and their leaf counts.
//
// The interesting trees here are "leafy": a connected dominating set D yields
// a spanning tree whose internal vertices all lie in D, so the tree has at
// least 2^n - |D| leaves.  Conversely every spanning tree's internal vertices
// form a connected dominating set, which is why max-leaf numbers and
// connected domination numbers add up to 2^n.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubedom/core.hpp"
#include "cubedom/domination.hpp"

namespace cubedom {

struct SpanningTree {
  int n = 0;
  std::vector<CubeEdge> edges;  // 2^n - 1 edges when well-formed
  VertexSet backbone;           // internal vertices (degree >= 2)
  std::uint64_t leaf_count = 0;

  SpanningTree() : backbone(1) {}
};

// Packages an edge list with its derived degree data.  No validity checking
// beyond endpoint range; verify_tree reports on malformed inputs.
inline SpanningTree make_spanning_tree(int n, std::vector<CubeEdge> edges) {
  check_dimension(n);
  std::vector<std::uint32_t> degree(universe_size(n), 0);
  for (const auto& e : edges) {
    check_vertex(e.u, n);
    check_vertex(e.v, n);
    ++degree[e.u];
    ++degree[e.v];
  }
  SpanningTree t;
  t.n = n;
  t.edges = std::move(edges);
  t.backbone = VertexSet(n);
  for (std::uint64_t v = 0; v < universe_size(n); ++v) {
    if (degree[v] >= 2) t.backbone.insert(Vertex(v));
    if (degree[v] == 1) ++t.leaf_count;
  }
  return t;
}

// Hamilton path of Q_n in reflected Gray order: vertex i of the walk is
// i ^ (i >> 1), consecutive values differing in exactly one bit.
inline SpanningTree gray_code_path(int n) {
  check_dimension(n);
  std::vector<CubeEdge> edges;
  edges.reserve(universe_size(n) - 1);
  auto gray = [](std::uint64_t i) { return Vertex(i ^ (i >> 1)); };
  for (std::uint64_t i = 0; i + 1 < universe_size(n); ++i)
    edges.push_back(make_edge(gray(i), gray(i + 1)));
  return make_spanning_tree(n, std::move(edges));
}

// Spanning tree housing a connected dominating set: BFS tree over the
// subgraph induced by `cds`, rooted at its smallest member, then every
// outside vertex hangs off its smallest neighbor inside `cds`.
inline SpanningTree tree_from_cds(const VertexSet& cds) {
  if (!is_connected_dominating(cds))
    throw std::invalid_argument("tree_from_cds needs a connected dominating set");
  const int n = cds.dimension();
  std::vector<CubeEdge> edges;
  edges.reserve(universe_size(n) - 1);

  VertexSet visited(n);
  std::vector<Vertex> queue;
  queue.push_back(cds.min_vertex());
  visited.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (int d = 0; d < n; ++d) {
      const Vertex w = u ^ (Vertex{1} << d);
      if (cds.contains(w) && !visited.contains(w)) {
        visited.insert(w);
        queue.push_back(w);
        edges.push_back(make_edge(u, w));
      }
    }
  }

  for (std::uint64_t v = 0; v < universe_size(n); ++v) {
    if (cds.contains(Vertex(v))) continue;
    Vertex best = 0;
    bool found = false;
    for (int d = 0; d < n; ++d) {
      const Vertex w = Vertex(v) ^ (Vertex{1} << d);
      if (cds.contains(w) && (!found || w < best)) {
        best = w;
        found = true;
      }
    }
    // found is guaranteed: cds dominates and v is outside it
    edges.push_back(make_edge(Vertex(v), best));
  }
  return make_spanning_tree(n, std::move(edges));
}

struct TreeVerification {
  bool valid = true;
  std::uint64_t recomputed_leaf_count = 0;
  std::vector<std::string> violations;
};

// Full integrity check of a SpanningTree value: edge count, cube adjacency,
// endpoint ordering, acyclicity, connectivity, and agreement of the stored
// backbone/leaf_count with the degrees recomputed from the edge list.
// Every violation found is reported, not just the first.
inline TreeVerification verify_tree(const SpanningTree& t) {
  TreeVerification report;
  auto flag = [&](std::string msg) {
    report.valid = false;
    report.violations.push_back(std::move(msg));
  };

  check_dimension(t.n);
  const std::uint64_t vertices = universe_size(t.n);
  if (t.edges.size() != vertices - 1)
    flag("edge count " + std::to_string(t.edges.size()) + ", expected " +
         std::to_string(vertices - 1));

  std::vector<std::uint32_t> degree(vertices, 0);
  std::vector<Vertex> parent(vertices);
  for (std::uint64_t v = 0; v < vertices; ++v) parent[v] = Vertex(v);
  auto find = [&](Vertex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };

  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const CubeEdge& e = t.edges[i];
    if (e.u >= vertices || e.v >= vertices) {
      flag("edge " + std::to_string(i) + " has an endpoint outside Q_" + std::to_string(t.n));
      continue;
    }
    if (e.u >= e.v)
      flag("edge " + std::to_string(i) + " endpoints not in increasing order");
    if (!is_cube_edge(e)) {
      flag("edge " + std::to_string(i) + " (" + std::to_string(e.u) + "," +
           std::to_string(e.v) + ") is not a cube edge");
      continue;
    }
    ++degree[e.u];
    ++degree[e.v];
    const Vertex ru = find(e.u), rv = find(e.v);
    if (ru == rv)
      flag("edge " + std::to_string(i) + " (" + std::to_string(e.u) + "," +
           std::to_string(e.v) + ") closes a cycle");
    else
      parent[ru] = rv;
  }

  const Vertex root = find(0);
  bool connected = true;
  for (std::uint64_t v = 1; v < vertices && connected; ++v)
    if (find(Vertex(v)) != root) connected = false;
  if (!connected) flag("edge set does not connect all of Q_" + std::to_string(t.n));

  std::uint64_t leaves = 0;
  VertexSet internal(t.n);
  for (std::uint64_t v = 0; v < vertices; ++v) {
    if (degree[v] == 1) ++leaves;
    if (degree[v] >= 2) internal.insert(Vertex(v));
  }
  report.recomputed_leaf_count = leaves;
  if (leaves != t.leaf_count)
    flag("stored leaf_count " + std::to_string(t.leaf_count) + ", recomputed " +
         std::to_string(leaves));
  if (!(internal == t.backbone)) flag("stored backbone differs from recomputed internal vertices");
  return report;
}

// Maximum leaf count over all spanning trees of Q_n by exhausting every
// (2^n - 1)-subset of the edge set.  Q_3 already means C(12,7) = 792
// candidates; the check refuses anything past n = 3.
inline std::uint64_t max_leaf_bruteforce(int n) {
  if (n < 1 || n > 3)
    throw std::invalid_argument("max_leaf_bruteforce handles n in [1, 3], got " +
                                std::to_string(n));
  const std::uint64_t vertices = universe_size(n);
  std::vector<CubeEdge> all_edges;
  for (std::uint64_t u = 0; u < vertices; ++u)
    for (int d = 0; d < n; ++d) {
      const Vertex w = Vertex(u) ^ (Vertex{1} << d);
      if (w > u) all_edges.push_back({Vertex(u), w});
    }

  const std::size_t pick = std::size_t(vertices - 1);
  std::vector<std::size_t> idx(pick);
  for (std::size_t i = 0; i < pick; ++i) idx[i] = i;

  std::uint64_t best = 0;
  std::vector<Vertex> parent(vertices);
  std::vector<std::uint32_t> degree(vertices);
  while (true) {
    for (std::uint64_t v = 0; v < vertices; ++v) parent[v] = Vertex(v);
    auto find = [&](Vertex v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
      }
      return v;
    };
    std::fill(degree.begin(), degree.end(), 0);
    bool acyclic = true;
    for (std::size_t i : idx) {
      const CubeEdge& e = all_edges[i];
      const Vertex ru = find(e.u), rv = find(e.v);
      if (ru == rv) {
        acyclic = false;
        break;
      }
      parent[ru] = rv;
      ++degree[e.u];
      ++degree[e.v];
    }
    if (acyclic) {  // |V|-1 acyclic edges: spanning tree
      std::uint64_t leaves = 0;
      for (std::uint64_t v = 0; v < vertices; ++v)
        if (degree[v] == 1) ++leaves;
      best = std::max(best, leaves);
    }

    // next combination in lexicographic order
    std::size_t i = pick;
    while (i > 0 && idx[i - 1] == all_edges.size() - pick + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

}  // namespace cubedom
