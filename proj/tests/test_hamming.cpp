#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cubedom/hamming.hpp"

using namespace cubedom;

namespace {

// Independent span of the generator: XOR over every subset of rows.
std::vector<Vertex> span_bruteforce(const HammingCode& code) {
  std::vector<Vertex> words;
  const int mb = code.message_bits();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << mb); ++m) {
    Vertex w = 0;
    for (int i = 0; i < mb; ++i)
      if ((m >> i) & 1) w ^= code.generator_rows[std::size_t(i)];
    words.push_back(w);
  }
  std::sort(words.begin(), words.end());
  return words;
}

}  // namespace

TEST_CASE("build_hamming parameter range") {
  CHECK_THROWS_AS(build_hamming(0), std::invalid_argument);
  CHECK_THROWS_AS(build_hamming(6), std::invalid_argument);
  CHECK_NOTHROW(build_hamming(1));
  CHECK_NOTHROW(build_hamming(5));
}

TEST_CASE("one parity bit: repetition-free degenerate code") {
  HammingCode code = build_hamming(1);
  CHECK(code.block_length == 1);
  CHECK(code.message_bits() == 0);
  CHECK(code.codeword_count() == 1);
  CHECK(is_codeword(code, 0));
  CHECK_FALSE(is_codeword(code, 1));
  CHECK(decode_to_center(code, 1) == 0);
}

TEST_CASE("two parity bits: the 8-vertex cube splits into two stars") {
  HammingCode code = build_hamming(2);
  CHECK(code.block_length == 3);
  CHECK(code.message_bits() == 1);
  REQUIRE(code.generator_rows.size() == 1);
  CHECK(code.generator_rows[0] == 0b111);
  VertexSet words = codewords(code);
  CHECK(words.size() == 2);
  CHECK(words.contains(0b000));
  CHECK(words.contains(0b111));

  StarPartition part = star_partition(code);
  CHECK(part.star_count() == 2);
  CHECK(part.star_size() == 4);
  const std::vector<Vertex> expected{0, 0, 0, 7, 0, 7, 7, 7};
  for (Vertex v = 0; v < 8; ++v) CHECK(part.center_of[v] == expected[v]);
}

TEST_CASE("three parity bits: systematic generator is pinned down") {
  HammingCode code = build_hamming(3);
  CHECK(code.block_length == 7);
  CHECK(code.message_bits() == 4);
  CHECK(code.codeword_count() == 16);
  // Suffixes of weight >= 2 in increasing order: 011, 101, 110, 111.
  REQUIRE(code.generator_rows.size() == 4);
  CHECK(code.generator_rows[0] == 0x31);
  CHECK(code.generator_rows[1] == 0x52);
  CHECK(code.generator_rows[2] == 0x64);
  CHECK(code.generator_rows[3] == 0x78);
}

TEST_CASE("codewords match the brute-force span and the syndrome test") {
  for (int p : {1, 2, 3, 4}) {
    HammingCode code = build_hamming(p);
    std::vector<Vertex> expected = span_bruteforce(code);
    VertexSet words = codewords(code);
    INFO("p=" << p);
    CHECK(words.to_vector() == expected);
    for (Vertex v = 0; v < universe_size(code.block_length); ++v) {
      const bool in_span = std::binary_search(expected.begin(), expected.end(), v);
      CHECK(is_codeword(code, v) == in_span);
    }
  }
}

TEST_CASE("minimum distance is 3") {
  HammingCode code = build_hamming(3);
  std::vector<Vertex> words = codewords(code).to_vector();
  REQUIRE(words.size() == 16);
  int min_dist = code.block_length;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      min_dist = std::min(min_dist, hamming_distance(words[i], words[j]));
  CHECK(min_dist == 3);
  // Linearity: distance spectrum equals weight spectrum, so the same holds
  // at p = 4 if no nonzero word has weight < 3.
  HammingCode big = build_hamming(4);
  codewords(big).for_each([&](Vertex w) {
    if (w != 0) CHECK(std::popcount(w) >= 3);
  });
}

TEST_CASE("decoding sends each vertex to the unique codeword within distance 1") {
  for (int p : {2, 3}) {
    HammingCode code = build_hamming(p);
    for (Vertex v = 0; v < universe_size(code.block_length); ++v) {
      const Vertex c = decode_to_center(code, v);
      INFO("p=" << p << " v=" << v);
      CHECK(is_codeword(code, c));
      CHECK(hamming_distance(v, c) <= 1);
    }
  }
}

TEST_CASE("star partition tiles the cube at four parity bits") {
  HammingCode code = build_hamming(4);
  StarPartition part = star_partition(code);  // self-checks the tiling
  CHECK(part.star_count() == 2048);
  CHECK(part.star_size() == 16);
  CHECK(part.star_count() * part.star_size() == universe_size(15));
  // Spot-check ownership: codewords own themselves, others their neighbor.
  CHECK(part.center_of[0] == 0);
  for (int d = 0; d < 15; ++d) CHECK(part.center_of[Vertex{1} << d] == 0);
}

TEST_CASE("five parity bits stay formula-only") {
  HammingCode code = build_hamming(5);
  CHECK(code.block_length == 31);
  CHECK(code.codeword_count() == std::uint64_t{1} << 26);
  // Q_31 is past the explicit-set hard cap, so no materialization.
  CHECK_THROWS_AS(codewords(code), ExplicitSetTooLarge);

  // Syndrome arithmetic still works without a set.
  CHECK(syndrome(code, 0) == 0);
  const int mb = code.message_bits();
  for (int j = 0; j < 5; ++j)
    CHECK(syndrome(code, Vertex{1} << (mb + j)) == (Vertex{1} << j));
  for (int i = 0; i < 4; ++i)
    CHECK(syndrome(code, Vertex{1} << i) == code.row_suffixes[std::size_t(i)]);
  const Vertex word = code.generator_rows[0] ^ code.generator_rows[3];
  CHECK(is_codeword(code, word));
  const Vertex corrupted = word ^ (Vertex{1} << 17);
  CHECK_FALSE(is_codeword(code, corrupted));
  CHECK(decode_to_center(code, corrupted) == word);
}
