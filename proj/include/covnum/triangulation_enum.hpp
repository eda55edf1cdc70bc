#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covnum/combinatorial_map.hpp"

namespace covnum {

enum class TraversalOrder { kAscending, kDescending };

struct TriangulationClass {
  std::string canonical;
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int genus = 0;
  int max_degree = 0;
  bool delta_member = false;  // in Delta(k, g) with the caps read individually
};

struct EnumerationOptions {
  bool allow_reflection = true;
  TraversalOrder order = TraversalOrder::kAscending;
  int threads = 1;
};

struct EnumerationResult {
  int genus = 0;
  int max_edges = 0;
  int k = 0;
  std::vector<TriangulationClass> classes;  // sorted by (edges, canonical)
  std::uint64_t leaves = 0;                 // complete rooted maps reached
  std::vector<std::pair<int, std::uint64_t>> rooted_by_edges;  // (E, rooted maps)
};

// All connected triangle-faced maps of genus g (loops and multiple edges
// allowed) with E <= max_edges and every vertex degree <= k, one per
// isomorphism class. Maps are generated directly as breadth-first codes and
// a code is kept only when it is minimal over all roots.
EnumerationResult enumerate_triangulation_classes(int genus, int max_edges, int k,
                                                  const EnumerationOptions& options = {});

// K = max over matched faces of the straightening dilatation, each face
// using the best of its three vertex placements. `iso` sends
// darts of m1 to darts of m2; lengths are per dart and must lie in
// [eps/2, eps].
double global_dilatation_bound(const CombinatorialMap& m1, const CombinatorialMap& m2,
                               const std::vector<int>& iso, double eps, int subdivisions = 24);

}  // namespace covnum
