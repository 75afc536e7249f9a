#pragma once

// Binary Hamming codes over GF(2), used as perfect dominating sets.
//
// With p parity bits the block length is N = 2^p - 1 and the code has
// 2^(N-p) words.  The generator is systematic: row i is the unit vector at
// coordinate i plus a p-bit suffix of weight >= 2 in the trailing p
// coordinates; suffixes are assigned in increasing integer order, which pins
// the generator (and everything derived from it) down deterministically.
// Minimum distance 3 makes closed neighborhoods of codewords tile Q_N:
// every vertex is within distance 1 of exactly one codeword, so syndrome
// decoding assigns each vertex its star center in O(1) after a small table.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubedom/core.hpp"
#include "cubedom/domination.hpp"

namespace cubedom {

struct HammingCode {
  int parity_bits = 0;   // p >= 1
  int block_length = 0;  // N = 2^p - 1
  std::vector<Vertex> generator_rows;  // N - p rows, identity part in low bits
  std::vector<Vertex> row_suffixes;    // top p bits of each row
  std::vector<int> position_of_syndrome;  // size 2^p; entry 0 unused

  int message_bits() const { return block_length - parity_bits; }
  std::uint64_t codeword_count() const { return std::uint64_t{1} << message_bits(); }
};

// p is capped by vertex width: N = 2^p - 1 must fit in 32 bits, so p <= 5.
// Explicit sets over Q_31 additionally need the dimension cap raised; the
// syndrome routines below work without ever materializing one.
inline HammingCode build_hamming(int parity_bits) {
  if (parity_bits < 1 || parity_bits > 5)
    throw std::invalid_argument("parity_bits must be in [1, 5], got " +
                                std::to_string(parity_bits));
  HammingCode code;
  code.parity_bits = parity_bits;
  code.block_length = (1 << parity_bits) - 1;
  const int mb = code.message_bits();

  for (Vertex suffix = 0; suffix < (Vertex{1} << parity_bits); ++suffix) {
    if (std::popcount(suffix) < 2) continue;
    const int i = int(code.row_suffixes.size());
    code.row_suffixes.push_back(suffix);
    code.generator_rows.push_back((Vertex{1} << i) | (suffix << mb));
  }
  // 2^p - 1 - p suffixes of weight >= 2: exactly the message dimension
  if (int(code.generator_rows.size()) != mb)
    throw std::logic_error("hamming generator has wrong rank");

  // Parity-check columns: suffix_i at message position i, unit vectors at
  // the parity positions.  All 2^p - 1 nonzero values appear exactly once.
  code.position_of_syndrome.assign(std::size_t{1} << parity_bits, -1);
  for (int i = 0; i < mb; ++i) code.position_of_syndrome[code.row_suffixes[i]] = i;
  for (int j = 0; j < parity_bits; ++j)
    code.position_of_syndrome[std::size_t{1} << j] = mb + j;
  return code;
}

// p-bit syndrome of v; zero exactly on codewords.  The low message bits of v
// pick generator rows, whose suffix sum must reproduce the parity bits of v.
inline Vertex syndrome(const HammingCode& code, Vertex v) {
  check_vertex(v, code.block_length);
  const int mb = code.message_bits();
  Vertex low = mb > 0 ? (v & ((Vertex{1} << mb) - 1)) : 0;
  Vertex syn = v >> mb;
  while (low) {
    syn ^= code.row_suffixes[std::countr_zero(low)];
    low &= low - 1;
  }
  return syn;
}

inline bool is_codeword(const HammingCode& code, Vertex v) {
  return syndrome(code, v) == 0;
}

// The unique codeword within distance 1 of v (v itself when its syndrome
// vanishes; otherwise one flip at the position whose check column matches).
inline Vertex decode_to_center(const HammingCode& code, Vertex v) {
  const Vertex syn = syndrome(code, v);
  if (syn == 0) return v;
  return v ^ (Vertex{1} << code.position_of_syndrome[syn]);
}

// All codewords as an explicit set over Q_N.
inline VertexSet codewords(const HammingCode& code) {
  VertexSet out(code.block_length);  // throws ExplicitSetTooLarge past the cap
  const int mb = code.message_bits();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << mb); ++m) {
    Vertex w = 0;
    std::uint64_t bits = m;
    while (bits) {
      w ^= code.generator_rows[std::countr_zero(bits)];
      bits &= bits - 1;
    }
    out.insert(w);
  }
  return out;
}

// Partition of Q_N into closed stars around the codewords: center_of[v] is
// the codeword owning v.  Construction re-counts the classes and fails loudly
// if they do not tile the cube; that can only mean a broken generator.
struct StarPartition {
  HammingCode code;
  std::vector<Vertex> center_of;  // size 2^N

  std::uint64_t star_count() const { return code.codeword_count(); }
  int star_size() const { return code.block_length + 1; }
};

inline StarPartition star_partition(const HammingCode& code) {
  check_dimension(code.block_length);
  const std::uint64_t vertices = universe_size(code.block_length);
  StarPartition part;
  part.code = code;
  part.center_of.resize(vertices);

  std::vector<std::uint32_t> class_size(vertices, 0);
  for (std::uint64_t v = 0; v < vertices; ++v) {
    const Vertex c = decode_to_center(code, Vertex(v));
    if (hamming_distance(Vertex(v), c) > 1)
      throw std::logic_error("star partition: decoded center not adjacent");
    part.center_of[v] = c;
    ++class_size[c];
  }

  std::uint64_t centers = 0;
  for (std::uint64_t v = 0; v < vertices; ++v) {
    const bool cw = is_codeword(code, Vertex(v));
    if (cw != (part.center_of[v] == Vertex(v)))
      throw std::logic_error("star partition: codeword/center mismatch");
    if (cw) {
      ++centers;
      if (class_size[v] != std::uint32_t(code.block_length) + 1)
        throw std::logic_error("star partition: class of " + std::to_string(v) +
                               " has size " + std::to_string(class_size[v]));
    } else if (class_size[v] != 0) {
      throw std::logic_error("star partition: non-codeword " + std::to_string(v) +
                             " owns a class");
    }
  }
  if (centers != code.codeword_count())
    throw std::logic_error("star partition: wrong number of centers");
  return part;
}

}  // namespace cubedom
