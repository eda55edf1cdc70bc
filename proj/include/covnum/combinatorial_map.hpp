#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace covnum {

// Rotation system on darts 0..2E-1: alpha pairs darts into edges, sigma is
// the counterclockwise successor around a vertex. Faces are the orbits of
// phi(d) = sigma(alpha(d)). Optional lengths are stored per dart and must
// agree on the two darts of an edge.
class CombinatorialMap {
 public:
  CombinatorialMap() = default;
  CombinatorialMap(std::vector<int> sigma, std::vector<int> alpha,
                   std::optional<std::vector<double>> lengths = std::nullopt);

  // One face per triangle (u, v, w), traced by the darts u->v, v->w, w->u;
  // triangle i contributes darts 3i, 3i+1, 3i+2. Each directed edge must
  // occur once together with its reverse, and the triangles around every
  // vertex label must form a single disk.
  static CombinatorialMap from_oriented_triangles(const std::vector<std::array<int, 3>>& triangles);

  int darts() const { return static_cast<int>(sigma_.size()); }
  int sigma(int d) const { return sigma_[d]; }
  int alpha(int d) const { return alpha_[d]; }
  int phi(int d) const { return sigma_[alpha_[d]]; }
  const std::vector<int>& sigma() const { return sigma_; }
  const std::vector<int>& alpha() const { return alpha_; }
  const std::optional<std::vector<double>>& lengths() const { return lengths_; }

  std::vector<std::vector<int>> vertices() const;  // sigma orbits
  std::vector<std::vector<int>> edges() const;     // alpha orbits
  std::vector<std::vector<int>> faces() const;     // phi orbits, each starting at its min dart
  int max_degree() const;
  bool all_faces_triangles() const;

  // Dart d becomes perm[d].
  CombinatorialMap relabeled(const std::vector<int>& perm) const;
  // (sigma^{-1}, alpha): the same graph on the oppositely oriented surface.
  CombinatorialMap mirror() const;
  CombinatorialMap with_lengths(std::vector<double> lengths) const;

 private:
  std::vector<int> sigma_;
  std::vector<int> alpha_;
  std::optional<std::vector<double>> lengths_;
};

std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm);

struct EulerData {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int genus = 0;
};

// Throws "not an oriented map" when V - E + F is odd or above 2.
EulerData euler_genus(const CombinatorialMap& m);

struct DeltaMembership {
  bool is_member = false;
  int genus = 0;
  bool triangles = false;
  int max_degree = 0;
  bool degree_ok = false;
  bool vertex_cap_ok = false;  // V <= k g
  bool edge_cap_ok = false;    // E <= k g
};

DeltaMembership in_delta_kg(const CombinatorialMap& m, int k);

// Tries every image of dart 0 and propagates along sigma and alpha.
bool map_isomorphic(const CombinatorialMap& m1, const CombinatorialMap& m2,
                    bool allow_reflection = true);
// The bijection found by map_isomorphic, orientation preserving only.
std::optional<std::vector<int>> find_isomorphism(const CombinatorialMap& m1,
                                                 const CombinatorialMap& m2);

// Breadth-first code from a root dart: darts are labelled in discovery
// order, visiting sigma(d) then alpha(d), and the code lists
// (label sigma(d_i), label alpha(d_i)) for i = 0, 1, ...
std::vector<int> bfs_code(const std::vector<int>& sigma, const std::vector<int>& alpha, int root);

// Lexicographically least bfs_code over all roots (and over the mirror when
// allow_reflection), rendered as "n:s0,a0,s1,a1,...". Ignores lengths.
std::string canonical_form(const CombinatorialMap& m, bool allow_reflection = true);
CombinatorialMap from_canonical_form(const std::string& form);

CombinatorialMap tetrahedron();
CombinatorialMap torus_one_vertex_square();     // two loops, one square face
CombinatorialMap torus_one_vertex_triangles();  // three loops, two triangles
CombinatorialMap barycentric_subdivision(const CombinatorialMap& m);

}  // namespace covnum
