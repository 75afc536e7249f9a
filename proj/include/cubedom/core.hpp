#pragma once

// Bit-level primitives for the hypercube Q_n.
//
// A vertex of Q_n is an n-bit string packed into an unsigned integer:
// coordinate i is bit i-1, so coordinate 1 is the least-significant bit.
// The text form used by the I/O layer prints coordinate n first (leftmost),
// which makes the string read as the plain binary expansion of the integer.
//
// A VertexSet is a bitset over all 2^n vertices.  Set algebra and the
// direction shifts (XOR every member with a fixed basis vector) operate a
// word at a time, which is what makes domination checks cheap even at the
// largest explicit dimensions.

#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubedom {

using Vertex = std::uint32_t;

// 2^30 bits is a 128 MiB set; past that explicit sets stop being sensible.
inline constexpr int kDimensionHardCap = 30;
inline constexpr int kDefaultMaxExplicitDimension = 24;

// Thrown when an operation would materialize a set over more than
// 2^max_explicit_dimension() vertices.  Formula-level reports stay available
// above the cap.
class ExplicitSetTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

namespace detail {
inline std::atomic<int>& max_explicit_dimension_storage() {
  static std::atomic<int> value{kDefaultMaxExplicitDimension};
  return value;
}
}  // namespace detail

inline int max_explicit_dimension() {
  return detail::max_explicit_dimension_storage().load(std::memory_order_relaxed);
}

// Process-wide policy knob, intended to be set once at startup (the CLI wires
// it to the CUBEDOM_NMAX environment variable).
inline void set_max_explicit_dimension(int n) {
  if (n < 1 || n > kDimensionHardCap)
    throw std::invalid_argument("max explicit dimension must be in [1, " +
                                std::to_string(kDimensionHardCap) + "], got " +
                                std::to_string(n));
  detail::max_explicit_dimension_storage().store(n, std::memory_order_relaxed);
}

inline std::uint64_t universe_size(int n) { return std::uint64_t{1} << n; }

inline void check_dimension(int n) {
  if (n < 1 || n > max_explicit_dimension())
    throw std::invalid_argument("dimension " + std::to_string(n) + " outside [1, " +
                                std::to_string(max_explicit_dimension()) + "]");
}

inline void check_vertex(Vertex v, int n) {
  if (v >= universe_size(n))
    throw std::invalid_argument("vertex " + std::to_string(v) + " outside Q_" +
                                std::to_string(n));
}

inline int hamming_distance(Vertex a, Vertex b) { return std::popcount(a ^ b); }

// Edge of Q_n, endpoints stored with u < v.  The distance-1 property is a
// convention of well-formed edges, not enforced by the type: file input may
// carry junk pairs, and verify_tree re-checks adjacency explicitly.
struct CubeEdge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const CubeEdge&, const CubeEdge&) = default;
};

inline CubeEdge make_edge(Vertex a, Vertex b) {
  return a < b ? CubeEdge{a, b} : CubeEdge{b, a};
}

inline bool is_cube_edge(const CubeEdge& e) { return hamming_distance(e.u, e.v) == 1; }

class VertexSet {
 public:
  explicit VertexSet(int dimension) : n_(dimension) {
    if (dimension < 1)
      throw std::invalid_argument("VertexSet dimension must be >= 1, got " +
                                  std::to_string(dimension));
    if (dimension > max_explicit_dimension())
      throw ExplicitSetTooLarge("explicit set over Q_" + std::to_string(dimension) +
                                " exceeds the cap of " +
                                std::to_string(max_explicit_dimension()) +
                                " (raise CUBEDOM_NMAX / set_max_explicit_dimension)");
    words_.assign(word_count(n_), 0);
  }

  static VertexSet universe(int dimension) {
    VertexSet s(dimension);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.words_.back() &= s.tail_mask();
    return s;
  }

  int dimension() const { return n_; }
  std::uint64_t universe_size() const { return cubedom::universe_size(n_); }

  bool contains(Vertex v) const {
    check_vertex(v, n_);
    return (words_[v >> 6] >> (v & 63)) & 1;
  }

  void insert(Vertex v) {
    check_vertex(v, n_);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void erase(Vertex v) {
    check_vertex(v, n_);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  std::uint64_t size() const {
    std::uint64_t total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_universe() const {
    for (std::size_t i = 0; i + 1 < words_.size(); ++i)
      if (words_[i] != ~std::uint64_t{0}) return false;
    return words_.back() == tail_mask();
  }

  // Smallest member; requires a nonempty set.
  Vertex min_vertex() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return Vertex(i * 64 + std::countr_zero(words_[i]));
    throw std::invalid_argument("min_vertex on empty set");
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_same_dimension(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    check_same_dimension(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  // Image of the set under XOR with the basis vector 2^direction, i.e. every
  // member moved along one cube direction.  For directions inside a word the
  // bits swap between the two halves selected by that bit of the position;
  // for higher directions whole words swap.
  VertexSet shifted(int direction) const {
    if (direction < 0 || direction >= n_)
      throw std::invalid_argument("shift direction " + std::to_string(direction) +
                                  " outside [0, " + std::to_string(n_) + ")");
    VertexSet out(n_);
    if (direction < 6) {
      const std::uint64_t m = kHalfMask[direction];
      const int s = 1 << direction;
      for (std::size_t i = 0; i < words_.size(); ++i)
        out.words_[i] = ((words_[i] & m) << s) | ((words_[i] >> s) & m);
    } else {
      const std::size_t stride = std::size_t{1} << (direction - 6);
      for (std::size_t i = 0; i < words_.size(); ++i)
        out.words_[i] = words_[i ^ stride];
    }
    return out;
  }

  template <typename F>
  void for_each(F&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t bits = words_[i];
      while (bits) {
        fn(Vertex(i * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  static std::size_t word_count(int n) {
    return n >= 6 ? (std::size_t{1} << (n - 6)) : 1;
  }

  // All-ones over the used bits of the last word (partial only when n < 6).
  std::uint64_t tail_mask() const {
    if (n_ >= 6) return ~std::uint64_t{0};
    return (std::uint64_t{1} << (std::uint64_t{1} << n_)) - 1;
  }

  void check_same_dimension(const VertexSet& o) const {
    if (n_ != o.n_)
      throw std::invalid_argument("dimension mismatch: Q_" + std::to_string(n_) +
                                  " vs Q_" + std::to_string(o.n_));
  }

  // kHalfMask[d] selects positions whose bit d is clear.
  static constexpr std::uint64_t kHalfMask[6] = {
      0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
      0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull,
  };

  int n_;
  std::vector<std::uint64_t> words_;
};

// The n neighbors of v, in increasing flipped-coordinate order
// (v^1, v^2, v^4, ...).
inline std::vector<Vertex> neighbors(Vertex v, int n) {
  check_dimension(n);
  check_vertex(v, n);
  std::vector<Vertex> out;
  out.reserve(std::size_t(n));
  for (int d = 0; d < n; ++d) out.push_back(v ^ (Vertex{1} << d));
  return out;
}

// {v} together with its n neighbors, as a set.
inline VertexSet closed_neighborhood(Vertex v, int n) {
  check_dimension(n);
  check_vertex(v, n);
  VertexSet s(n);
  s.insert(v);
  for (int d = 0; d < n; ++d) s.insert(v ^ (Vertex{1} << d));
  return s;
}

// Connectivity of the subgraph of Q_n induced by `s`: BFS from the smallest
// member, visiting neighbors in increasing flipped-coordinate order.
inline bool is_connected(const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("is_connected on empty set");
  const int n = s.dimension();
  VertexSet visited(n);
  std::vector<Vertex> queue;
  queue.push_back(s.min_vertex());
  visited.insert(queue.front());
  std::uint64_t reached = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (int d = 0; d < n; ++d) {
      const Vertex w = u ^ (Vertex{1} << d);
      if (s.contains(w) && !visited.contains(w)) {
        visited.insert(w);
        queue.push_back(w);
        ++reached;
      }
    }
  }
  return reached == s.size();
}

}  // namespace cubedom
