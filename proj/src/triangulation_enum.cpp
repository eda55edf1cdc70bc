#include "covnum/triangulation_enum.hpp"

#include <algorithm>
#include <limits>
#include <cmath>

#include "covnum/errors.hpp"
#include "covnum/hyperbolic.hpp"
#include "covnum/parallel.hpp"
#include "covnum/quasiconformal.hpp"

namespace covnum {

namespace {

// -1, 0, +1 as bfs_code(sigma, alpha, root) compares with `own`, stopping at
// the first difference.
int compare_code(const std::vector<int>& sigma, const std::vector<int>& alpha, int root,
                 const std::vector<int>& own, std::vector<int>& label, std::vector<int>& order) {
  std::fill(label.begin(), label.end(), -1);
  order.clear();
  label[root] = 0;
  order.push_back(root);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int d = order[i];
    for (int e : {sigma[d], alpha[d]}) {
      if (label[e] == -1) {
        label[e] = static_cast<int>(order.size());
        order.push_back(e);
      }
      if (label[e] != own[pos]) return label[e] < own[pos] ? -1 : 1;
      ++pos;
    }
  }
  return 0;
}

class Generator {
 public:
  Generator(int darts, int vertex_target, int k, const EnumerationOptions& opt)
      : n_(darts), v_target_(vertex_target), k_(k), opt_(opt),
        sigma_(n_, -1), sigma_inv_(n_, -1), alpha_(n_, -1), phi_(n_, -1), phi_inv_(n_, -1),
        label_(n_), order_() {}

  // Explores the subtree below the forced decision prefix. With collect_depth
  // >= 0, stops at that many decisions and records prefixes instead.
  void run(const std::vector<int>& forced, int collect_depth) {
    forced_ = &forced;
    collect_depth_ = collect_depth;
    step(0, 0, 0);
  }

  std::vector<std::vector<int>> prefixes;
  std::vector<std::string> found;
  std::uint64_t leaves = 0;

 private:
  std::vector<int> candidates(const std::vector<int>& used, int exclude) const {
    std::vector<int> c;
    for (int j = 0; j < next_; ++j) {
      if (used[j] == -1 && j != exclude) c.push_back(j);
    }
    if (next_ < n_) c.push_back(next_);
    if (opt_.order == TraversalOrder::kDescending) std::reverse(c.begin(), c.end());
    return c;
  }

  bool face_ok(int x) const {
    int starts[3] = {x, -1, -1};
    if (phi_inv_[x] != -1) {
      starts[1] = phi_inv_[x];
      if (phi_inv_[starts[1]] != -1) starts[2] = phi_inv_[starts[1]];
    }
    for (int s : starts) {
      if (s == -1) continue;
      const int p1 = phi_[s];
      if (p1 == -1) continue;
      if (p1 == s) return false;
      const int p2 = phi_[p1];
      if (p2 == -1) continue;
      if (p2 == s) return false;
      const int p3 = phi_[p2];
      if (p3 != -1 && p3 != s) return false;
    }
    return true;
  }

  void step(int i, int sub, int depth) {
    if (i == n_) {
      leaf();
      return;
    }
    if (i >= next_) return;  // disconnected
    if (sub == 1 && alpha_[i] != -1) {
      step(i + 1, 0, depth);
      return;
    }
    if (collect_depth_ >= 0 && depth == collect_depth_) {
      prefixes.push_back(path_);
      return;
    }
    std::vector<int> cands = sub == 0 ? candidates(sigma_inv_, -1) : candidates(alpha_, i);
    if (depth < static_cast<int>(forced_->size())) {
      const int want = (*forced_)[depth];
      if (std::find(cands.begin(), cands.end(), want) == cands.end()) return;
      cands.assign(1, want);
    }
    for (int j : cands) {
      const int saved_next = next_;
      const int saved_closed = closed_;
      if (j == next_) ++next_;
      path_.push_back(j);
      if (sub == 0) {
        if (assign_sigma(i, j)) step(i, 1, depth + 1);
        unassign_sigma(i, j);
      } else {
        if (assign_alpha(i, j)) step(i + 1, 0, depth + 1);
        unassign_alpha(i, j);
      }
      path_.pop_back();
      next_ = saved_next;
      closed_ = saved_closed;
    }
  }

  bool set_phi(int x, int y) {
    phi_[x] = y;
    phi_inv_[y] = x;
    return face_ok(x);
  }

  void clear_phi(int x) {
    if (x == -1 || phi_[x] == -1) return;
    phi_inv_[phi_[x]] = -1;
    phi_[x] = -1;
  }

  bool assign_sigma(int i, int j) {
    sigma_[i] = j;
    sigma_inv_[j] = i;
    int count = 1;
    int y = j;
    while (y != -1 && y != i) {
      ++count;
      y = sigma_[y];
    }
    bool ok = true;
    if (y == i) {
      --count;
      if (++closed_ > v_target_) ok = false;
    } else {
      for (int b = sigma_inv_[i]; b != -1; b = sigma_inv_[b]) ++count;
    }
    if (count > k_) ok = false;
    // phi(alpha(i)) = sigma(i)
    if (ok && alpha_[i] != -1) ok = set_phi(alpha_[i], j);
    return ok;
  }

  void unassign_sigma(int i, int j) {
    if (alpha_[i] != -1 && phi_[alpha_[i]] == j) clear_phi(alpha_[i]);
    sigma_[i] = -1;
    sigma_inv_[j] = -1;
  }

  bool assign_alpha(int i, int j) {
    alpha_[i] = j;
    alpha_[j] = i;
    bool ok = true;
    if (sigma_[j] != -1) ok = set_phi(i, sigma_[j]);
    if (ok && sigma_[i] != -1) ok = set_phi(j, sigma_[i]);
    return ok;
  }

  void unassign_alpha(int i, int j) {
    if (sigma_[j] != -1 && phi_[i] == sigma_[j]) clear_phi(i);
    if (sigma_[i] != -1 && phi_[j] == sigma_[i]) clear_phi(j);
    alpha_[i] = -1;
    alpha_[j] = -1;
  }

  void leaf() {
    if (collect_depth_ >= 0) {
      ++leaves;
      found.emplace_back();
      return;
    }
    if (next_ != n_ || closed_ != v_target_) return;
    ++leaves;
    std::vector<int> own(2 * n_);
    for (int d = 0; d < n_; ++d) {
      own[2 * d] = sigma_[d];
      own[2 * d + 1] = alpha_[d];
    }
    for (int r = 1; r < n_; ++r) {
      if (compare_code(sigma_, alpha_, r, own, label_, order_) < 0) return;
    }
    if (opt_.allow_reflection) {
      std::vector<int> inv(n_);
      for (int d = 0; d < n_; ++d) inv[sigma_[d]] = d;
      for (int r = 0; r < n_; ++r) {
        if (compare_code(inv, alpha_, r, own, label_, order_) < 0) return;
      }
    }
    found.push_back(canonical_form(CombinatorialMap(sigma_, alpha_), opt_.allow_reflection));
  }

  int n_;
  int v_target_;
  int k_;
  EnumerationOptions opt_;
  std::vector<int> sigma_, sigma_inv_, alpha_, phi_, phi_inv_;
  std::vector<int> label_, order_;
  int next_ = 1;
  int closed_ = 0;
  std::vector<int> path_;
  const std::vector<int>* forced_ = nullptr;
  int collect_depth_ = -1;
};

}  // namespace

EnumerationResult enumerate_triangulation_classes(int genus, int max_edges, int k,
                                                  const EnumerationOptions& options) {
  require(genus == 0 || genus == 1, "enumeration supports genus 0 and 1");
  require(max_edges >= 1 && max_edges <= 12, "max_edges must be in [1, 12]");
  require(k >= 1, "k must be positive");
  EnumerationResult out;
  out.genus = genus;
  out.max_edges = max_edges;
  out.k = k;
  std::vector<std::string> forms;
  for (int e = 3; e <= max_edges; e += 3) {
    const int v_target = 2 - 2 * genus + e / 3;
    if (v_target < 1) continue;
    const int darts = 2 * e;
    Generator seed(darts, v_target, k, options);
    const std::vector<int> none;
    seed.run(none, 6);
    ensure(seed.found.empty(), "leaf reached while splitting the search");
    auto parts = parallel_map(seed.prefixes.size(), options.threads, [&](std::size_t p) {
      Generator g(darts, v_target, k, options);
      g.run(seed.prefixes[p], -1);
      return std::pair<std::vector<std::string>, std::uint64_t>{std::move(g.found), g.leaves};
    });
    std::uint64_t rooted = 0;
    for (auto& [f, leaves] : parts) {
      forms.insert(forms.end(), f.begin(), f.end());
      rooted += leaves;
    }
    out.leaves += rooted;
    out.rooted_by_edges.emplace_back(e, rooted);
  }
  std::sort(forms.begin(), forms.end());
  ensure(std::adjacent_find(forms.begin(), forms.end()) == forms.end(),
         "a class was generated twice");
  for (const std::string& f : forms) {
    const CombinatorialMap m = from_canonical_form(f);
    const EulerData eu = euler_genus(m);
    ensure(eu.genus == genus && m.all_faces_triangles(), "enumerated map has wrong type");
    TriangulationClass c;
    c.canonical = f;
    c.vertices = eu.vertices;
    c.edges = eu.edges;
    c.faces = eu.faces;
    c.genus = eu.genus;
    c.max_degree = m.max_degree();
    c.delta_member = in_delta_kg(m, k).is_member;
    out.classes.push_back(std::move(c));
  }
  std::stable_sort(out.classes.begin(), out.classes.end(),
                   [](const TriangulationClass& a, const TriangulationClass& b) {
                     return a.edges < b.edges;
                   });
  return out;
}

double global_dilatation_bound(const CombinatorialMap& m1, const CombinatorialMap& m2,
                               const std::vector<int>& iso, double eps, int subdivisions) {
  require(eps > 0.0, "eps must be positive");
  require(m1.lengths() && m2.lengths(), "both maps need edge lengths");
  require(m1.all_faces_triangles() && m2.all_faces_triangles(), "non-triangle face");
  require(static_cast<int>(iso.size()) == m1.darts() && m1.darts() == m2.darts(),
          "bijection has wrong size");
  for (int d = 0; d < m1.darts(); ++d) {
    require(iso[d] >= 0 && iso[d] < m2.darts(), "bijection out of range");
    require(m2.sigma(iso[d]) == iso[m1.sigma(d)] && m2.alpha(iso[d]) == iso[m1.alpha(d)],
            "bijection is not an isomorphism");
  }
  const auto& l1 = *m1.lengths();
  const auto& l2 = *m2.lengths();
  for (int d = 0; d < m1.darts(); ++d) {
    for (double l : {l1[d], l2[d]}) {
      require(l >= eps / 2.0 && l <= eps, "edge length outside [eps/2, eps]");
    }
  }
  double k = 1.0;
  for (const auto& face : m1.faces()) {
    // The Klein-affine map depends on which vertex is placed at the origin,
    // so every face takes the best of its three rotations. The result does
    // not depend on the dart labels.
    double best = std::numeric_limits<double>::infinity();
    for (int rot = 0; rot < 3; ++rot) {
      // Face u -> v -> w: AB = len(d0), BC = len(d1), CA = len(d2).
      const int d0 = face[rot], d1 = face[(rot + 1) % 3], d2 = face[(rot + 2) % 3];
      const HypTriangle t1 = HypTriangle::from_sides(l1[d1], l1[d2], l1[d0]);
      const HypTriangle t2 = HypTriangle::from_sides(l2[iso[d1]], l2[iso[d2]], l2[iso[d0]]);
      best = std::min(best, straighten_dilatation(t1, t2, subdivisions));
    }
    k = std::max(k, best);
  }
  return k;
}

}  // namespace covnum
