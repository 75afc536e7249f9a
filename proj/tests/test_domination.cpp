#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "cubedom/domination.hpp"

using namespace cubedom;

namespace {

// Per-vertex domination oracle: probe each vertex's closed neighborhood.
bool dominating_oracle(const VertexSet& s) {
  const int n = s.dimension();
  for (Vertex v = 0; v < universe_size(n); ++v) {
    if (s.contains(v)) continue;
    bool hit = false;
    for (int d = 0; d < n && !hit; ++d) hit = s.contains(v ^ (Vertex{1} << d));
    if (!hit) return false;
  }
  return true;
}

// Naive greedy: full rescan every round, largest gain, ties to the smallest
// vertex.  The lazy-heap implementation must match this selection exactly.
VertexSet greedy_oracle(int n) {
  VertexSet chosen(n);
  VertexSet uncovered = VertexSet::universe(n);
  auto gain_of = [&](Vertex v) {
    std::uint64_t g = uncovered.contains(v) ? 1 : 0;
    for (int d = 0; d < n; ++d)
      if (uncovered.contains(v ^ (Vertex{1} << d))) ++g;
    return g;
  };
  while (!uncovered.empty()) {
    Vertex best = 0;
    std::uint64_t best_gain = 0;
    for (Vertex v = 0; v < universe_size(n); ++v) {
      const std::uint64_t g = gain_of(v);
      if (g > best_gain) {
        best_gain = g;
        best = v;
      }
    }
    chosen.insert(best);
    uncovered.erase(best);
    for (int d = 0; d < n; ++d) {
      const Vertex w = best ^ (Vertex{1} << d);
      if (uncovered.contains(w)) uncovered.erase(w);
    }
  }
  return chosen;
}

}  // namespace

TEST_CASE("ceil_div") {
  CHECK(ceil_div(8, 4) == 2);
  CHECK(ceil_div(9, 4) == 3);
  CHECK(ceil_div(1, 7) == 1);
  CHECK(ceil_div(0, 3) == 0);
}

TEST_CASE("is_dominating on hand-built sets") {
  VertexSet perfect(3);
  perfect.insert(0b000);
  perfect.insert(0b111);
  CHECK(is_dominating(perfect));

  VertexSet corner(2);
  corner.insert(0);
  CHECK_FALSE(is_dominating(corner));  // misses the opposite corner
  corner.insert(3);
  CHECK(is_dominating(corner));

  CHECK(is_dominating(VertexSet::universe(4)));
  CHECK_FALSE(is_dominating(VertexSet(4)));
}

TEST_CASE("is_dominating agrees with the per-vertex oracle") {
  std::mt19937 rng(424242);
  for (int n = 1; n <= 8; ++n)
    for (double density : {0.1, 0.3, 0.6}) {
      std::bernoulli_distribution coin(density);
      for (int trial = 0; trial < 8; ++trial) {
        VertexSet s(n);
        for (Vertex v = 0; v < universe_size(n); ++v)
          if (coin(rng)) s.insert(v);
        INFO("n=" << n << " density=" << density << " trial=" << trial);
        CHECK(is_dominating(s) == dominating_oracle(s));
      }
    }
}

TEST_CASE("is_connected_dominating") {
  VertexSet edge(2);
  edge.insert(0b00);
  edge.insert(0b01);
  CHECK(is_connected_dominating(edge));

  VertexSet antipodal(3);
  antipodal.insert(0b000);
  antipodal.insert(0b111);
  CHECK(is_dominating(antipodal));
  CHECK_FALSE(is_connected_dominating(antipodal));

  VertexSet path(3);
  for (Vertex v : {0b000u, 0b001u, 0b011u, 0b111u}) path.insert(v);
  CHECK(is_connected_dominating(path));

  CHECK_FALSE(is_connected_dominating(VertexSet(3)));
}

TEST_CASE("lower_bounds arithmetic") {
  DominationBounds b1 = lower_bounds(1);
  CHECK(b1.gamma_lower == 1);
  CHECK_FALSE(b1.gamma_c_lower.has_value());

  DominationBounds b3 = lower_bounds(3);
  CHECK(b3.gamma_lower == 2);
  CHECK(b3.gamma_c_lower == 3);

  DominationBounds b7 = lower_bounds(7);
  CHECK(b7.gamma_lower == 16);
  CHECK(b7.gamma_c_lower == 21);

  DominationBounds b62 = lower_bounds(62);
  CHECK(b62.gamma_lower == ceil_div(std::uint64_t{1} << 62, 63));
  CHECK_THROWS_AS(lower_bounds(0), std::invalid_argument);
  CHECK_THROWS_AS(lower_bounds(63), std::invalid_argument);
}

TEST_CASE("connected bound dominates the plain bound") {
  for (int n = 2; n <= 62; ++n) {
    DominationBounds b = lower_bounds(n);
    REQUIRE(b.gamma_c_lower.has_value());
    INFO("n=" << n);
    CHECK(*b.gamma_c_lower >= b.gamma_lower);
  }
}

TEST_CASE("greedy_dominating small exact outputs") {
  CHECK(greedy_dominating(1).to_vector() == std::vector<Vertex>{0});
  CHECK(greedy_dominating(2).to_vector() == std::vector<Vertex>{0, 1});
  // At n = 3 greedy happens to find the perfect code.
  CHECK(greedy_dominating(3).to_vector() == std::vector<Vertex>{0, 7});
}

TEST_CASE("greedy_dominating matches the rescan oracle") {
  for (int n = 1; n <= 7; ++n) {
    INFO("n=" << n);
    CHECK(greedy_dominating(n) == greedy_oracle(n));
  }
}

TEST_CASE("greedy_dominating output dominates and stays near the bound") {
  for (int n = 1; n <= 10; ++n) {
    VertexSet d = greedy_dominating(n);
    INFO("n=" << n);
    CHECK(is_dominating(d));
    // Greedy set cover is within a ln factor; in this range a factor of 2
    // of the sphere-covering bound already holds comfortably.
    CHECK(d.size() <= 2 * lower_bounds(n).gamma_lower + 7);
  }
}
