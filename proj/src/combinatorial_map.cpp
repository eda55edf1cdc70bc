#include "covnum/combinatorial_map.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "covnum/errors.hpp"

namespace covnum {

namespace {

bool is_permutation(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

std::vector<int> inverse(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

bool connected(const std::vector<int>& sigma, const std::vector<int>& alpha) {
  if (sigma.empty()) return true;
  std::vector<char> seen(sigma.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    for (int e : {sigma[d], alpha[d]}) {
      if (!seen[e]) {
        seen[e] = 1;
        ++count;
        stack.push_back(e);
      }
    }
  }
  return count == sigma.size();
}

}  // namespace

std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    for (int d = static_cast<int>(s); !seen[d]; d = perm[d]) {
      seen[d] = 1;
      cyc.push_back(d);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

CombinatorialMap::CombinatorialMap(std::vector<int> sigma, std::vector<int> alpha,
                                   std::optional<std::vector<double>> lengths)
    : sigma_(std::move(sigma)), alpha_(std::move(alpha)), lengths_(std::move(lengths)) {
  require(!sigma_.empty(), "map needs at least one edge");
  require(sigma_.size() == alpha_.size(), "sigma and alpha differ in size");
  require(sigma_.size() % 2 == 0, "dart count must be even");
  require(is_permutation(sigma_), "sigma is not a permutation");
  require(is_permutation(alpha_), "alpha is not a permutation");
  for (std::size_t d = 0; d < alpha_.size(); ++d) {
    require(alpha_[d] != static_cast<int>(d), "alpha has a fixed point");
    require(alpha_[alpha_[d]] == static_cast<int>(d), "alpha is not an involution");
  }
  require(connected(sigma_, alpha_), "map is not connected");
  if (lengths_) {
    require(lengths_->size() == sigma_.size(), "need one length per dart");
    for (std::size_t d = 0; d < lengths_->size(); ++d) {
      const double l = (*lengths_)[d];
      require(std::isfinite(l) && l > 0.0, "edge lengths must be positive");
      require(l == (*lengths_)[alpha_[d]], "the two darts of an edge need the same length");
    }
  }
}

CombinatorialMap CombinatorialMap::from_oriented_triangles(
    const std::vector<std::array<int, 3>>& triangles) {
  require(!triangles.empty(), "need at least one triangle");
  const int n = static_cast<int>(triangles.size()) * 3;
  std::map<std::pair<int, int>, int> dart_of;
  std::vector<int> phi(n);
  for (int t = 0; t < static_cast<int>(triangles.size()); ++t) {
    for (int j = 0; j < 3; ++j) {
      const std::pair<int, int> key{triangles[t][j], triangles[t][(j + 1) % 3]};
      require(key.first != key.second, "triangle has a repeated vertex");
      require(dart_of.emplace(key, 3 * t + j).second, "directed edge occurs twice");
      phi[3 * t + j] = 3 * t + (j + 1) % 3;
    }
  }
  std::vector<int> alpha(n);
  std::set<int> labels;
  for (const auto& [key, d] : dart_of) {
    const auto rev = dart_of.find({key.second, key.first});
    require(rev != dart_of.end(), "directed edge without its reverse");
    alpha[d] = rev->second;
    labels.insert(key.first);
  }
  std::vector<int> sigma(n);
  for (int d = 0; d < n; ++d) sigma[d] = phi[alpha[d]];
  CombinatorialMap m(std::move(sigma), std::move(alpha));
  require(m.vertices().size() == labels.size(), "triangles around a vertex do not form a disk");
  return m;
}

std::vector<std::vector<int>> CombinatorialMap::vertices() const { return cycles_of(sigma_); }
std::vector<std::vector<int>> CombinatorialMap::edges() const { return cycles_of(alpha_); }

std::vector<std::vector<int>> CombinatorialMap::faces() const {
  std::vector<int> phi(sigma_.size());
  for (int d = 0; d < darts(); ++d) phi[d] = this->phi(d);
  return cycles_of(phi);
}

int CombinatorialMap::max_degree() const {
  std::size_t m = 0;
  for (const auto& v : vertices()) m = std::max(m, v.size());
  return static_cast<int>(m);
}

bool CombinatorialMap::all_faces_triangles() const {
  for (int d = 0; d < darts(); ++d) {
    if (phi(d) == d || phi(phi(d)) == d || phi(phi(phi(d))) != d) return false;
  }
  return true;
}

CombinatorialMap CombinatorialMap::relabeled(const std::vector<int>& perm) const {
  require(perm.size() == sigma_.size() && is_permutation(perm), "relabeling is not a permutation");
  std::vector<int> s(sigma_.size()), a(alpha_.size());
  for (std::size_t d = 0; d < sigma_.size(); ++d) {
    s[perm[d]] = perm[sigma_[d]];
    a[perm[d]] = perm[alpha_[d]];
  }
  std::optional<std::vector<double>> l;
  if (lengths_) {
    l.emplace(lengths_->size());
    for (std::size_t d = 0; d < lengths_->size(); ++d) (*l)[perm[d]] = (*lengths_)[d];
  }
  return CombinatorialMap(std::move(s), std::move(a), std::move(l));
}

CombinatorialMap CombinatorialMap::mirror() const {
  return CombinatorialMap(inverse(sigma_), alpha_, lengths_);
}

CombinatorialMap CombinatorialMap::with_lengths(std::vector<double> lengths) const {
  return CombinatorialMap(sigma_, alpha_, std::move(lengths));
}

EulerData euler_genus(const CombinatorialMap& m) {
  EulerData e;
  e.vertices = static_cast<int>(m.vertices().size());
  e.edges = m.darts() / 2;
  e.faces = static_cast<int>(m.faces().size());
  const int chi = e.vertices - e.edges + e.faces;
  require(chi <= 2 && chi % 2 == 0, "not an oriented map");
  e.genus = (2 - chi) / 2;
  return e;
}

DeltaMembership in_delta_kg(const CombinatorialMap& m, int k) {
  require(k >= 1, "k must be positive");
  const EulerData e = euler_genus(m);
  DeltaMembership out;
  out.genus = e.genus;
  out.triangles = m.all_faces_triangles();
  out.max_degree = m.max_degree();
  out.degree_ok = out.max_degree <= k;
  out.vertex_cap_ok = e.vertices <= k * e.genus;
  out.edge_cap_ok = e.edges <= k * e.genus;
  out.is_member = out.triangles && out.degree_ok && out.vertex_cap_ok && out.edge_cap_ok;
  return out;
}

namespace {

std::optional<std::vector<int>> try_root(const std::vector<int>& s1, const std::vector<int>& a1,
                                         const std::vector<int>& s2, const std::vector<int>& a2,
                                         int image) {
  const std::size_t n = s1.size();
  std::vector<int> f(n, -1), finv(n, -1);
  std::vector<int> stack{0};
  f[0] = image;
  finv[image] = 0;
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    const std::pair<int, int> steps[2] = {{s1[d], s2[f[d]]}, {a1[d], a2[f[d]]}};
    for (const auto& [x, y] : steps) {
      if (f[x] == -1) {
        if (finv[y] != -1) return std::nullopt;
        f[x] = y;
        finv[y] = x;
        stack.push_back(x);
      } else if (f[x] != y) {
        return std::nullopt;
      }
    }
  }
  return f;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const CombinatorialMap& m1,
                                                 const CombinatorialMap& m2) {
  if (m1.darts() != m2.darts()) return std::nullopt;
  for (int t = 0; t < m2.darts(); ++t) {
    if (auto f = try_root(m1.sigma(), m1.alpha(), m2.sigma(), m2.alpha(), t)) return f;
  }
  return std::nullopt;
}

bool map_isomorphic(const CombinatorialMap& m1, const CombinatorialMap& m2, bool allow_reflection) {
  if (find_isomorphism(m1, m2)) return true;
  return allow_reflection && find_isomorphism(m1, m2.mirror()).has_value();
}

std::vector<int> bfs_code(const std::vector<int>& sigma, const std::vector<int>& alpha, int root) {
  const std::size_t n = sigma.size();
  std::vector<int> label(n, -1), order;
  order.reserve(n);
  label[root] = 0;
  order.push_back(root);
  std::vector<int> code;
  code.reserve(2 * n);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int d = order[i];
    for (int e : {sigma[d], alpha[d]}) {
      if (label[e] == -1) {
        label[e] = static_cast<int>(order.size());
        order.push_back(e);
      }
      code.push_back(label[e]);
    }
  }
  return code;
}

std::string canonical_form(const CombinatorialMap& m, bool allow_reflection) {
  std::vector<int> best;
  auto scan = [&](const std::vector<int>& sigma) {
    for (int r = 0; r < m.darts(); ++r) {
      std::vector<int> code = bfs_code(sigma, m.alpha(), r);
      if (best.empty() || code < best) best = std::move(code);
    }
  };
  scan(m.sigma());
  if (allow_reflection) scan(inverse(m.sigma()));
  std::ostringstream os;
  os << m.darts() << ':';
  for (std::size_t i = 0; i < best.size(); ++i) os << (i ? "," : "") << best[i];
  return os.str();
}

CombinatorialMap from_canonical_form(const std::string& form) {
  const auto colon = form.find(':');
  require(colon != std::string::npos, "canonical form lacks a dart count");
  const int n = std::stoi(form.substr(0, colon));
  std::vector<int> values;
  std::stringstream ss(form.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(std::stoi(item));
  require(n > 0 && static_cast<int>(values.size()) == 2 * n, "canonical form has wrong length");
  std::vector<int> sigma(n), alpha(n);
  for (int i = 0; i < n; ++i) {
    sigma[i] = values[2 * i];
    alpha[i] = values[2 * i + 1];
  }
  return CombinatorialMap(std::move(sigma), std::move(alpha));
}

CombinatorialMap tetrahedron() {
  return CombinatorialMap::from_oriented_triangles({{{0, 1, 2}}, {{0, 2, 3}}, {{0, 3, 1}}, {{1, 3, 2}}});
}

CombinatorialMap torus_one_vertex_square() {
  return CombinatorialMap({1, 2, 3, 0}, {2, 3, 0, 1});
}

CombinatorialMap torus_one_vertex_triangles() {
  return CombinatorialMap({1, 2, 3, 4, 5, 0}, {3, 4, 5, 0, 1, 2});
}

CombinatorialMap barycentric_subdivision(const CombinatorialMap& m) {
  require(m.all_faces_triangles(), "subdivision needs a triangle-faced map");
  const int n = m.darts();
  std::vector<int> vertex_of(n), edge_of(n);
  const auto verts = m.vertices();
  for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
    for (int d : verts[v]) vertex_of[d] = v;
  }
  const auto edges = m.edges();
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    for (int d : edges[e]) edge_of[d] = e;
  }
  const int vcount = static_cast<int>(verts.size());
  const int ecount = static_cast<int>(edges.size());
  std::vector<std::array<int, 3>> tris;
  const auto faces = m.faces();
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    const int centre = vcount + ecount + f;
    for (int d : faces[f]) {
      const int u = vertex_of[d];
      const int mid = vcount + edge_of[d];
      const int v = vertex_of[m.phi(d)];
      tris.push_back({u, mid, centre});
      tris.push_back({mid, v, centre});
    }
  }
  return CombinatorialMap::from_oriented_triangles(tris);
}

}  // namespace covnum
