#include "covnum/selftest.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "covnum/banach_cover.hpp"
#include "covnum/bounds.hpp"
#include "covnum/combinatorial_map.hpp"
#include "covnum/cover_enum.hpp"
#include "covnum/hyperbolic.hpp"
#include "covnum/metric_space.hpp"
#include "covnum/quad_diff.hpp"
#include "covnum/quasiconformal.hpp"
#include "covnum/triangulation_enum.hpp"

namespace covnum {

namespace {

// Path graph 0 - 1 - ... - (n-1) with unit edges.
FiniteMetricSpace path_space(std::size_t n) {
  std::vector<std::string> ids;
  std::vector<std::vector<double>> d(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back("p" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) d[i][j] = std::fabs(double(i) - double(j));
  }
  return FiniteMetricSpace(ids, d);
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(10);
  s << x;
  return s.str();
}

}  // namespace

std::vector<SelfTestResult> run_selftest(int threads) {
  std::vector<SelfTestResult> out;
  auto check = [&](const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
    SelfTestResult r{name, false, ""};
    try {
      auto [ok, detail] = fn();
      r.passed = ok;
      r.detail = detail;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(r);
  };

  check("metric.path_cover", [] {
    // A path on 10 points needs ceil(10/3) = 4 closed unit balls.
    const auto s = path_space(10);
    const auto all = s.all_points();
    const auto c = covering_number_exact(s, all, all, 1.0);
    const auto p = packing_number_exact(s, all, 1.0);
    const bool ok = c.count == 4 && validate_cover(s, all, all, c.certificate).valid &&
                    validate_packing(s, all, p.certificate).valid && p.count <= c.count;
    return std::pair{ok, "cover " + std::to_string(c.count) + ", packing " + std::to_string(p.count)};
  });

  check("metric.chain", [] {
    const auto s = path_space(12);
    const auto c = verify_chain_inequality(s, 5, 2.0, 1.0, 1.0);
    return std::pair{c.holds, std::to_string(c.lhs) + " <= " + std::to_string(c.rhs)};
  });

  check("banach.grid", [] {
    const auto g = real_grid_cover(2, 1.0, 0.4, 0.1);
    const auto v = verify_cover(g, 1.0, 0.01);
    const bool ok = g.center_count == 9 && v.certified && v.exact_covered &&
                    double(g.center_count) >= volume_lower_bound(2, 1.0, 0.5);
    return std::pair{ok, "count " + std::to_string(g.center_count)};
  });

  check("banach.complex", [] {
    const auto b = complex_sup_cover_bound(1, 1.0, 1.0);
    const auto v = verify_complex_cover(b, 1, 1.0, 1.0, 20000, 0);
    const bool ok = v.covered && double(b.constructed_count) <= b.bound;
    return std::pair{ok, "constructed " + std::to_string(b.constructed_count) + " <= " + fmt(b.bound)};
  });

  check("hyp.distance", [] {
    const double d = hyp_distance(Complex(0, 0), Complex(0.5, 0));
    return std::pair{std::fabs(d - std::log(3.0)) < 1e-12, fmt(d)};
  });

  check("hyp.law_of_cosines", [] {
    const auto t = HypTriangle::from_sides(1.0, 1.2, 0.9);
    const auto s = sides_from_angles(t.angles.alpha, t.angles.beta, t.angles.gamma);
    const double err = std::max({std::fabs(s.a - 1.0), std::fabs(s.b - 1.2), std::fabs(s.c - 0.9)});
    return std::pair{err < 1e-9, "round trip error " + fmt(err)};
  });

  check("qc.straighten_identity", [] {
    const auto t = HypTriangle::from_sides(1.0, 1.2, 0.9);
    const double k = straighten_dilatation(t, t, 12);
    return std::pair{std::fabs(k - 1.0) < 1e-6, "K " + fmt(k)};
  });

  check("qc.point_push", [] {
    const double k1 = reich_pointpush(1.0, 0.1, 16, 64).k_estimate;
    const double k2 = reich_pointpush(1.0, 0.01, 16, 64).k_estimate;
    return std::pair{k1 > k2 && k2 > 1.0, fmt(k1) + " > " + fmt(k2)};
  });

  check("qd.constant", [] {
    // sup (1-|z|^2)^2/4 is 1/4 at the origin.
    const auto n = q_norm_disk(PolyQuadDiff({Complex(1, 0)}));
    return std::pair{std::fabs(n.value - 0.25) < 1e-9, fmt(n.value)};
  });

  check("maps.canonical", [] {
    const auto t = tetrahedron();
    std::vector<int> perm(t.darts());
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    const auto r = t.relabeled(perm);
    const bool ok = canonical_form(t) == canonical_form(r) && map_isomorphic(t, r) &&
                    euler_genus(t).genus == 0;
    return std::pair{ok, canonical_form(t)};
  });

  check("maps.rooted_torus", [threads] {
    EnumerationOptions o;
    o.threads = threads;
    const auto r = enumerate_triangulation_classes(1, 6, 24, o);
    bool ok = r.rooted_by_edges.size() == 2 && r.rooted_by_edges[0].second == 1 &&
              r.rooted_by_edges[1].second == 28;
    return std::pair{ok, std::to_string(r.classes.size()) + " classes"};
  });

  check("covers.degree2", [threads] {
    const auto e = census(2, threads, false);
    const bool ok = e.class_count && *e.class_count == 15 && e.oracles_agree && e.cover_genus == 3;
    return std::pair{ok, "classes " + (e.class_count ? std::to_string(*e.class_count) : "?")};
  });

  check("covers.mednykh_integral", [] {
    // Construction throws InternalError on a non-integral value.
    const BigInt h = mednykh_hom_count(6);
    return std::pair{h > 0, h.str()};
  });

  check("bounds.exact_vs_log", [] {
    const auto r = labeling_bound_report(5, 10, 3);
    const bool ok = r.exact && *r.exact == boost::multiprecision::pow(BigInt(6), 20) &&
                    exact_matches_log(r);
    return std::pair{ok, r.exact ? r.exact->str() : "none"};
  });

  return out;
}

}  // namespace covnum
