#pragma once

// Constructions of small connected dominating sets in Q_n.
//
// The machinery: partition the cube into stars around a dominating set
// (perfectly, for Hamming codewords), connect the stars into one tree by
// promoting a few leaves, double a set into the next dimension, and "expand"
// a base set from Q_N into Q_{N+j} by stacking 2^j layers whose center copies
// are chained along a Gray-code walk of the new coordinates.  Expansion is
// the workhorse: it multiplies the centers by 2^j but pays the star
// connection surcharge only once, in layer 0.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubedom/core.hpp"
#include "cubedom/domination.hpp"
#include "cubedom/hamming.hpp"

namespace cubedom {

// Partition of Q_n into stars around the members of a dominating set: every
// outside vertex is assigned to its smallest adjacent center.  Components of
// the forest are exactly the stars (adjacent centers still count separately).
struct StarForest {
  int n = 0;
  VertexSet centers;
  std::vector<Vertex> center_of;  // size 2^n; fixed point exactly on centers

  StarForest() : centers(1) {}

  std::uint64_t component_count() const { return centers.size(); }

  std::vector<CubeEdge> star_edges() const {
    std::vector<CubeEdge> edges;
    edges.reserve(center_of.size() - centers.size());
    for (std::uint64_t v = 0; v < center_of.size(); ++v)
      if (center_of[v] != Vertex(v)) edges.push_back(make_edge(Vertex(v), center_of[v]));
    return edges;
  }
};

inline StarForest star_forest(const VertexSet& ds) {
  if (!is_dominating(ds))
    throw std::invalid_argument("star_forest needs a dominating set");
  const int n = ds.dimension();
  StarForest forest;
  forest.n = n;
  forest.centers = ds;
  forest.center_of.resize(universe_size(n));
  for (std::uint64_t v = 0; v < universe_size(n); ++v) {
    if (ds.contains(Vertex(v))) {
      forest.center_of[v] = Vertex(v);
      continue;
    }
    Vertex best = 0;
    bool found = false;
    for (int d = 0; d < n; ++d) {
      const Vertex w = Vertex(v) ^ (Vertex{1} << d);
      if (ds.contains(w) && (!found || w < best)) {
        best = w;
        found = true;
      }
    }
    forest.center_of[v] = best;  // exists: ds dominates
  }
  return forest;
}

namespace detail {

struct ConnectResult {
  VertexSet backbone;
  std::vector<CubeEdge> added_edges;

  ConnectResult() : backbone(1) {}
};

// Joins the stars of a forest into one component by selecting cross-star cube
// edges greedily in three passes: first edges whose endpoints are both
// already backbone vertices (cost 0), then one endpoint (cost 1), then any
// (cost 2).  Within a pass edges are scanned in lexicographic (u, v) order;
// union-find tracks components keyed by center.  The final pass is plain
// Kruskal over all cube edges, so the result is always a single component.
inline ConnectResult connect_components(const StarForest& forest) {
  const int n = forest.n;
  const std::vector<Vertex> centers = forest.centers.to_vector();  // ascending
  std::vector<std::uint32_t> parent(centers.size());
  for (std::uint32_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto center_index = [&](Vertex v) {
    return std::uint32_t(std::lower_bound(centers.begin(), centers.end(),
                                          forest.center_of[v]) -
                         centers.begin());
  };

  ConnectResult result;
  result.backbone = forest.centers;
  std::uint64_t components = centers.size();

  for (int need_in_backbone = 2; need_in_backbone >= 0 && components > 1;
       --need_in_backbone) {
    for (std::uint64_t u = 0; u < universe_size(n) && components > 1; ++u) {
      for (int d = 0; d < n; ++d) {
        const Vertex v = Vertex(u) ^ (Vertex{1} << d);
        if (v <= u) continue;
        const std::uint32_t cu = find(center_index(Vertex(u)));
        const std::uint32_t cv = find(center_index(v));
        if (cu == cv) continue;
        const int present = int(result.backbone.contains(Vertex(u))) +
                            int(result.backbone.contains(v));
        if (present < need_in_backbone) continue;
        parent[cu] = cv;
        --components;
        result.added_edges.push_back({Vertex(u), v});
        result.backbone.insert(Vertex(u));
        result.backbone.insert(v);
        if (components == 1) break;
      }
    }
  }
  if (components != 1) throw std::logic_error("star connection left the forest split");
  return result;
}

}  // namespace detail

// Connected dominating set from a star forest: the centers plus the leaves
// promoted while stitching the stars together.  At most 2 promotions per
// added edge gives the 3c-2 ceiling for c stars.
inline VertexSet connect_stars(const StarForest& forest) {
  return detail::connect_components(forest).backbone;
}

// The same set in both halves of Q_{n+1}.  Domination carries over because
// each half dominates itself; connectivity carries over through the vertical
// edges between the two copies of any member.
inline VertexSet double_set(const VertexSet& set, bool connected) {
  const int n = set.dimension();
  if (!is_dominating(set))
    throw std::invalid_argument("double_set needs a dominating set");
  if (connected && !is_connected(set))
    throw std::invalid_argument("double_set(connected) needs a connected set");
  VertexSet out(n + 1);
  set.for_each([&](Vertex v) {
    out.insert(v);
    out.insert(v | (Vertex{1} << n));
  });
  return out;
}

// Expansion of a dominating set of Q_N into a connected dominating set of
// Q_{N+j}: each of the 2^j layers carries a copy of every star center (the
// copies of one center trace a Gray-code path through the new coordinates,
// so they stay connected), and the stars of layer 0 are stitched together
// once.  Size: 2^j * |ds| + (layer-0 promotions) <= 2^j|ds| + 2(|ds|-1).
inline VertexSet expand(const VertexSet& ds, int layer_bits) {
  if (layer_bits < 1)
    throw std::invalid_argument("expand needs layer_bits >= 1, got " +
                                std::to_string(layer_bits));
  const int base_n = ds.dimension();
  VertexSet out(base_n + layer_bits);  // enforces the explicit-set cap

  const StarForest forest = star_forest(ds);
  const auto connected_layer0 = detail::connect_components(forest);
  connected_layer0.backbone.for_each([&](Vertex v) { out.insert(v); });
  for (Vertex layer = 1; layer < (Vertex{1} << layer_bits); ++layer)
    forest.centers.for_each(
        [&](Vertex c) { out.insert(c | (layer << base_n)); });
  return out;
}

// ---- size formulas -------------------------------------------------------

// Connecting c stars costs at most 2 promoted leaves per of the c-1 edges.
inline std::uint64_t star_connection_bound(std::uint64_t star_count) {
  return 3 * star_count - 2;
}

// 2^j layers of base centers plus the one-off layer-0 connection surcharge.
inline std::uint64_t expansion_size_bound(int layer_bits, std::uint64_t base_size) {
  return (std::uint64_t{1} << layer_bits) * base_size + 2 * (base_size - 1);
}

// Largest p with 2^p - 1 <= n.
inline int largest_code_parity_bits(int n) {
  if (n < 1) throw std::invalid_argument("largest_code_parity_bits needs n >= 1");
  int p = 1;
  while (p < 5 && (1 << (p + 1)) - 1 <= n) ++p;
  return p;
}

// Size of the best dominating set of Q_n obtainable by doubling up from the
// largest Hamming code fitting below: 2^(n-p).  Exact 2^n/(n+1) when n is
// itself a Hamming dimension.
inline std::uint64_t doubling_ds_size(int n) {
  return std::uint64_t{1} << (n - largest_code_parity_bits(n));
}

// The set behind doubling_ds_size, built explicitly.
inline VertexSet build_doubling_ds(int n) {
  check_dimension(n);
  const int p = largest_code_parity_bits(n);
  VertexSet ds = codewords(build_hamming(p));
  while (ds.dimension() < n) ds = double_set(ds, false);
  return ds;
}

// ---- reports -------------------------------------------------------------

struct ConstructionReport {
  int n = 0;
  std::string method;                   // "hamming" | "doubling" | "expansion"
  std::optional<int> base_dimension;    // N, the dimension expanded from
  std::optional<int> layer_bits;        // j (0 means no expansion step)
  std::optional<int> parity_bits;       // set when the base is a Hamming code
  std::uint64_t ds_size = 0;            // base dominating-set size
  std::uint64_t cds_size = 0;           // built size, or bound when formula-only
  std::uint64_t bound_value = 0;
  std::uint64_t leaf_count = 0;         // 2^n - cds_size
  std::uint64_t gamma_lower = 0;
  std::uint64_t gamma_c_lower = 0;
  double ratio_gamma_c = 0.0;           // cds_size / (2^n / n)
  bool explicit_build = false;
  std::optional<VertexSet> backbone;    // present on explicit builds
};

namespace detail {

inline void finish_report(ConstructionReport& r) {
  const DominationBounds lb = lower_bounds(r.n);
  r.gamma_lower = lb.gamma_lower;
  r.gamma_c_lower = lb.gamma_c_lower.value_or(0);
  r.leaf_count = universe_size(r.n) - r.cds_size;
  r.ratio_gamma_c =
      double(r.cds_size) * double(r.n) / double(universe_size(r.n));
  if (r.cds_size > r.bound_value)
    throw std::logic_error("construction exceeded its size bound");
}

inline void attach_backbone(ConstructionReport& r, VertexSet backbone) {
  if (!is_connected_dominating(backbone))
    throw std::logic_error("construction produced a non-CDS backbone");
  r.cds_size = backbone.size();
  r.explicit_build = true;
  r.backbone = std::move(backbone);
}

}  // namespace detail

// Star connection straight over the Hamming codewords of Q_{2^p-1}.
inline ConstructionReport construct_hamming_direct(int parity_bits) {
  const HammingCode code = build_hamming(parity_bits);
  const int n = code.block_length;
  if (n > 62) throw std::invalid_argument("dimension out of formula range");

  ConstructionReport r;
  r.n = n;
  r.method = "hamming";
  r.base_dimension = n;
  r.layer_bits = 0;
  r.parity_bits = parity_bits;
  r.ds_size = code.codeword_count();
  r.bound_value = star_connection_bound(r.ds_size);
  if (n <= max_explicit_dimension())
    detail::attach_backbone(r, connect_stars(star_forest(codewords(code))));
  else
    r.cds_size = r.bound_value;
  detail::finish_report(r);
  return r;
}

// Doubling ladder: star-connect the largest Hamming code at or below n (or
// the one requested), then double the connected set up to dimension n.
inline ConstructionReport construct_doubling(int n,
                                             std::optional<int> parity_bits = {}) {
  if (n < 2 || n > 62) throw std::invalid_argument("construct_doubling needs n in [2, 62]");
  const int p = parity_bits.value_or(largest_code_parity_bits(n));
  const HammingCode code = build_hamming(p);
  if (code.block_length > n)
    throw std::invalid_argument("doubling base Q_" + std::to_string(code.block_length) +
                                " does not fit inside Q_" + std::to_string(n));
  const int steps = n - code.block_length;

  ConstructionReport r;
  r.n = n;
  r.method = "doubling";
  r.base_dimension = code.block_length;
  r.layer_bits = steps;
  r.parity_bits = p;
  r.ds_size = code.codeword_count() << steps;
  r.bound_value = star_connection_bound(code.codeword_count()) << steps;
  if (n <= max_explicit_dimension()) {
    VertexSet backbone = connect_stars(star_forest(codewords(code)));
    for (int i = 0; i < steps; ++i) backbone = double_set(backbone, true);
    detail::attach_backbone(r, std::move(backbone));
  } else {
    r.cds_size = r.bound_value;
  }
  detail::finish_report(r);
  return r;
}

// Expansion with base dimension N = n - layer_bits.  The base dominating set
// is the Hamming code when N is a Hamming dimension (parity_bits may pin
// that explicitly), otherwise the doubled-Hamming set for Q_N.
inline ConstructionReport construct_expansion(int n, int layer_bits,
                                              std::optional<int> parity_bits = {}) {
  if (n < 2 || n > 62) throw std::invalid_argument("construct_expansion needs n in [2, 62]");
  if (layer_bits < 1 || layer_bits >= n)
    throw std::invalid_argument("expansion needs layer_bits in [1, n-1]");
  const int base_n = n - layer_bits;
  const int p = largest_code_parity_bits(base_n);
  const bool hamming_base = (1 << p) - 1 == base_n;
  if (parity_bits) {
    if ((1 << *parity_bits) - 1 != base_n)
      throw std::invalid_argument(
          "parity_bits inconsistent with base dimension " + std::to_string(base_n));
  }

  ConstructionReport r;
  r.n = n;
  r.method = "expansion";
  r.base_dimension = base_n;
  r.layer_bits = layer_bits;
  if (hamming_base) r.parity_bits = p;
  r.ds_size = doubling_ds_size(base_n);
  r.bound_value = expansion_size_bound(layer_bits, r.ds_size);
  if (n <= max_explicit_dimension())
    detail::attach_backbone(r, expand(build_doubling_ds(base_n), layer_bits));
  else
    r.cds_size = r.bound_value;
  detail::finish_report(r);
  return r;
}

// Best construction for Q_n among every decomposition n = N + j (expansion
// from the best base set of Q_N) plus, at Hamming dimensions, the direct star
// connection.  Smallest bound wins, ties to the smaller j; the direct
// construction counts as j = 0.
inline ConstructionReport auto_construct(int n) {
  if (n < 2 || n > 62) throw std::invalid_argument("auto_construct needs n in [2, 62]");

  struct Candidate {
    std::uint64_t bound;
    int layer_bits;
    std::optional<int> direct_parity;
  };
  std::optional<Candidate> best;
  auto consider = [&](const Candidate& c) {
    if (!best || c.bound < best->bound) best = c;
  };

  const int p = largest_code_parity_bits(n);
  if ((1 << p) - 1 == n)
    consider({star_connection_bound(std::uint64_t{1} << (n - p)), 0, p});
  for (int j = 1; j < n; ++j)
    consider({expansion_size_bound(j, doubling_ds_size(n - j)), j, {}});

  if (best->layer_bits == 0) return construct_hamming_direct(*best->direct_parity);
  return construct_expansion(n, best->layer_bits);
}

// Both constructions of interest at a Hamming dimension n = 2^p - 1: the
// direct star connection, and (for p >= 2) the expansion from the Hamming
// code of the previous generation, N = 2^(p-1) - 1 with j = 2^(p-1), which
// overtakes the direct route from p = 3 on.
struct HammingDimensionReport {
  ConstructionReport star_connection;
  std::optional<ConstructionReport> expansion;
};

inline HammingDimensionReport hamming_cds_for_code_dim(int parity_bits) {
  HammingDimensionReport out;
  out.star_connection = construct_hamming_direct(parity_bits);
  if (parity_bits >= 2) {
    const int n = (1 << parity_bits) - 1;
    const int j = 1 << (parity_bits - 1);
    out.expansion = construct_expansion(n, j, parity_bits - 1);
  }
  return out;
}

}  // namespace cubedom
