#include "covnum/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "covnum/errors.hpp"

namespace covnum {

DiskPoint::DiskPoint(Complex z) : z_(z) {
  require(std::isfinite(z.real()) && std::isfinite(z.imag()), "disk point must be finite");
  require(std::abs(z) < 1.0, "disk point must lie strictly inside the unit disk");
}

double hyp_density(Complex z) {
  const double s = std::norm(z);
  require(s < 1.0, "point outside the unit disk");
  return 2.0 / (1.0 - s);
}

double hyp_distance(Complex z, Complex w) {
  require(std::abs(z) < 1.0 && std::abs(w) < 1.0, "point outside the unit disk");
  // 2 atanh of the pseudo-hyperbolic distance; same value as the arccosh
  // form but well conditioned when z is close to w.
  const double t = std::abs(z - w) / std::abs(1.0 - std::conj(w) * z);
  return 2.0 * std::atanh(std::min(t, 1.0));
}

double euclidean_radius(double hyperbolic_radius) { return std::tanh(hyperbolic_radius / 2.0); }

double hyperbolic_radius(double euclidean_radius) {
  require(euclidean_radius >= 0.0 && euclidean_radius < 1.0, "euclidean radius must be in [0,1)");
  return 2.0 * std::atanh(euclidean_radius);
}

Complex mobius_from_origin(Complex p, Complex x) { return (x + p) / (1.0 + std::conj(p) * x); }

namespace {

// tan(gamma/2)^2 = sinh(s-a) sinh(s-b) / (sinh s sinh(s-c)).
double half_angle(double s, double sa, double sb, double sc) {
  return 2.0 * std::atan2(std::sqrt(std::sinh(sa) * std::sinh(sb)),
                          std::sqrt(std::sinh(s) * std::sinh(sc)));
}

}  // namespace

Angles angles_from_sides(double a, double b, double c) {
  require(std::isfinite(a) && std::isfinite(b) && std::isfinite(c), "sides must be finite");
  require(a > 0.0 && b > 0.0 && c > 0.0, "sides must be positive");
  const double sa = (b + c - a) / 2.0;
  const double sb = (a + c - b) / 2.0;
  const double sc = (a + b - c) / 2.0;
  require(sa > 0.0 && sb > 0.0 && sc > 0.0, "degenerate triangle");
  const double s = (a + b + c) / 2.0;
  Angles out;
  out.alpha = half_angle(s, sb, sc, sa);
  out.beta = half_angle(s, sa, sc, sb);
  out.gamma = half_angle(s, sa, sb, sc);
  return out;
}

Sides sides_from_angles(double alpha, double beta, double gamma) {
  constexpr double pi = std::numbers::pi;
  for (double t : {alpha, beta, gamma}) {
    require(std::isfinite(t) && t > 0.0 && t < pi, "angles must lie in (0, pi)");
  }
  require(alpha + beta + gamma < pi, "angle sum must be below pi");
  // sinh^2(a/2) = cos S cos(S - alpha) / (sin beta sin gamma), S the half sum.
  const double big_s = (alpha + beta + gamma) / 2.0;
  auto side = [&](double x, double y, double z) {
    const double v = std::cos(big_s) * std::cos(big_s - x) / (std::sin(y) * std::sin(z));
    return 2.0 * std::asinh(std::sqrt(v));
  };
  return Sides{side(alpha, beta, gamma), side(beta, alpha, gamma), side(gamma, alpha, beta)};
}

HypTriangle HypTriangle::from_sides(double a, double b, double c) {
  return HypTriangle{Sides{a, b, c}, angles_from_sides(a, b, c)};
}

double HypTriangle::min_angle() const {
  return std::min({angles.alpha, angles.beta, angles.gamma});
}

double HypTriangle::area() const {
  return std::numbers::pi - angles.alpha - angles.beta - angles.gamma;
}

namespace {

bool nondegenerate(double a, double b, double c) {
  return b + c - a > 0.0 && a + c - b > 0.0 && a + b - c > 0.0;
}

struct Search {
  double lo;
  double hi;
  MinAngleResult* out;
  bool found = false;

  void visit(double a, double b, double c) {
    a = std::clamp(a, lo, hi);
    b = std::clamp(b, lo, hi);
    c = std::clamp(c, lo, hi);
    if (!nondegenerate(a, b, c)) {
      ++out->skipped_degenerate;
      return;
    }
    ++out->evaluations;
    const Angles t = angles_from_sides(a, b, c);
    const double m = std::min({t.alpha, t.beta, t.gamma});
    if (!found || m < out->theta) {
      found = true;
      out->theta = m;
      out->minimizer = Sides{a, b, c};
    }
  }
};

}  // namespace

MinAngleResult min_angle_bound(double eps, int grid, int refinement_rounds,
                               int refinement_steps) {
  require(std::isfinite(eps) && eps > 0.0, "eps must be positive");
  require(grid >= 2, "grid needs at least two points per axis");
  require(refinement_rounds >= 0 && refinement_steps >= 1, "invalid refinement schedule");
  MinAngleResult out;
  out.grid = grid;
  Search search{eps / 2.0, eps, &out};
  double h = (eps / 2.0) / (grid - 1);
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      for (int k = 0; k < grid; ++k) {
        search.visit(eps / 2.0 + i * h, eps / 2.0 + j * h, eps / 2.0 + k * h);
      }
    }
  }
  ensure(search.found, "side cube has no nondegenerate grid point");
  out.round_minima.push_back(out.theta);
  for (int round = 0; round < refinement_rounds; ++round) {
    const Sides centre = out.minimizer;
    const double step = h / refinement_steps;
    const int s = refinement_steps;
    for (int i = -s; i <= s; ++i) {
      for (int j = -s; j <= s; ++j) {
        for (int k = -s; k <= s; ++k) {
          search.visit(centre.a + i * step, centre.b + j * step, centre.c + k * step);
        }
      }
    }
    h = step;
    out.round_minima.push_back(out.theta);
  }
  const auto n = out.round_minima.size();
  out.last_change = n >= 2 ? std::abs(out.round_minima[n - 1] - out.round_minima[n - 2]) : 0.0;
  return out;
}

}  // namespace covnum
