// Builds the best connected dominating set for Q_10, hangs a spanning tree
// off it and prints how leafy the result is next to the theoretical limits.

#include <cstdio>

#include "cubedom/cubedom.hpp"

int main() {
  const int n = 10;
  const cubedom::ConstructionReport report = cubedom::auto_construct(n);
  const cubedom::SpanningTree tree = cubedom::tree_from_cds(*report.backbone);
  const cubedom::TreeVerification check = cubedom::verify_tree(tree);

  std::printf("Q_%d: %llu vertices\n", n,
              (unsigned long long)cubedom::universe_size(n));
  std::printf("construction: %s (base Q_%d, %d layer bits)\n",
              report.method.c_str(), *report.base_dimension, *report.layer_bits);
  std::printf("backbone size %llu, bound %llu, gamma_c lower bound %llu\n",
              (unsigned long long)report.cds_size,
              (unsigned long long)report.bound_value,
              (unsigned long long)report.gamma_c_lower);
  std::printf("spanning tree: %llu leaves (%.1f%% of all vertices), %s\n",
              (unsigned long long)tree.leaf_count,
              100.0 * double(tree.leaf_count) / double(cubedom::universe_size(n)),
              check.valid ? "verified" : "INVALID");
  return check.valid ? 0 : 1;
}
