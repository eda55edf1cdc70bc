#include "covnum/quasiconformal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "covnum/errors.hpp"

namespace covnum {

Jacobian operator*(const Jacobian& p, const Jacobian& q) {
  return Jacobian{p.ux * q.ux + p.uy * q.vx, p.ux * q.uy + p.uy * q.vy,
                  p.vx * q.ux + p.vy * q.vx, p.vx * q.uy + p.vy * q.vy};
}

double dilatation(const Jacobian& j) {
  const double fz = std::hypot(j.ux + j.vy, j.vx - j.uy) / 2.0;
  const double fzbar = std::hypot(j.ux - j.vy, j.vx + j.uy) / 2.0;
  ensure(fz > fzbar, "map is not orientation preserving");
  return (fz + fzbar) / (fz - fzbar);
}

DiskTriangle realize(const HypTriangle& t) {
  return DiskTriangle{Complex(0.0, 0.0), Complex(std::tanh(t.sides.c / 2.0), 0.0),
                      std::polar(std::tanh(t.sides.b / 2.0), t.angles.alpha)};
}

Complex poincare_to_klein(Complex z) { return 2.0 * z / (1.0 + std::norm(z)); }

Complex klein_to_poincare(Complex k) {
  const double s = std::norm(k);
  require(s < 1.0, "point outside the Klein disk");
  return k / (1.0 + std::sqrt(1.0 - s));
}

namespace {

// J = g'(r) u u^T + (g(r)/r) (I - u u^T) for x -> g(|x|) x/|x|.
Jacobian radial_jacobian(Complex x, double dg, double g_over_r) {
  const double r = std::abs(x);
  if (r == 0.0) return Jacobian{dg, 0.0, 0.0, dg};
  const double ux = x.real() / r;
  const double uy = x.imag() / r;
  const double diff = dg - g_over_r;
  return Jacobian{g_over_r + diff * ux * ux, diff * ux * uy, diff * ux * uy,
                  g_over_r + diff * uy * uy};
}

Jacobian poincare_to_klein_jacobian(Complex z) {
  const double r2 = std::norm(z);
  const double dg = 2.0 * (1.0 - r2) / ((1.0 + r2) * (1.0 + r2));
  return radial_jacobian(z, dg, 2.0 / (1.0 + r2));
}

Jacobian klein_to_poincare_jacobian(Complex k) {
  const double s = std::sqrt(1.0 - std::norm(k));
  return radial_jacobian(k, 1.0 / (s * (1.0 + s)), 1.0 / (1.0 + s));
}

Complex klein(const Complex& poincare) { return poincare_to_klein(poincare); }

}  // namespace

StraighteningMap::StraighteningMap(const HypTriangle& from, const HypTriangle& to)
    : src_(realize(from)), dst_(realize(to)) {
  const Complex b1 = klein(src_.b), c1 = klein(src_.c);
  const Complex b2 = klein(dst_.b), c2 = klein(dst_.c);
  // M [b1 c1] = [b2 c2]
  const double det = b1.real() * c1.imag() - c1.real() * b1.imag();
  ensure(det > 0.0, "degenerate Klein triangle");
  const double i00 = c1.imag() / det, i01 = -c1.real() / det;
  const double i10 = -b1.imag() / det, i11 = b1.real() / det;
  linear_ = Jacobian{b2.real() * i00 + c2.real() * i10, b2.real() * i01 + c2.real() * i11,
                     b2.imag() * i00 + c2.imag() * i10, b2.imag() * i01 + c2.imag() * i11};
}

Complex StraighteningMap::apply(Complex z) const {
  const Complex k = poincare_to_klein(z);
  const Complex m(linear_.ux * k.real() + linear_.uy * k.imag(),
                  linear_.vx * k.real() + linear_.vy * k.imag());
  return klein_to_poincare(m);
}

Jacobian StraighteningMap::jacobian(Complex z) const {
  const Complex k = poincare_to_klein(z);
  const Complex m(linear_.ux * k.real() + linear_.uy * k.imag(),
                  linear_.vx * k.real() + linear_.vy * k.imag());
  return klein_to_poincare_jacobian(m) * linear_ * poincare_to_klein_jacobian(z);
}

DilatationSample straighten_dilatation_sampled(const HypTriangle& t1, const HypTriangle& t2,
                                              int subdivisions) {
  require(subdivisions >= 1, "need at least one subdivision");
  angles_from_sides(t1.sides.a, t1.sides.b, t1.sides.c);
  angles_from_sides(t2.sides.a, t2.sides.b, t2.sides.c);
  const StraighteningMap f(t1, t2);
  const Complex kb = poincare_to_klein(f.source().b);
  const Complex kc = poincare_to_klein(f.source().c);
  DilatationSample out;
  const double n = subdivisions;
  for (int j = 0; j <= subdivisions; ++j) {
    for (int k = 0; j + k <= subdivisions; ++k) {
      const Complex z = klein_to_poincare((j / n) * kb + (k / n) * kc);
      const double kz = dilatation(f.jacobian(z));
      ++out.samples;
      if (kz > out.k) {
        out.k = kz;
        out.argmax = z;
      }
    }
  }
  return out;
}

double straighten_dilatation(const HypTriangle& t1, const HypTriangle& t2, int subdivisions) {
  return straighten_dilatation_sampled(t1, t2, subdivisions).k;
}

double straighten_dilatation_bound(const HypTriangle& t1, const HypTriangle& t2) {
  const StraighteningMap f(t1, t2);
  return dilatation(f.klein_linear()) * std::cosh(std::max(t1.sides.b, t1.sides.c)) *
         std::cosh(std::max(t2.sides.b, t2.sides.c));
}

Complex PointPushMap::apply(Complex z) const {
  const double r = std::abs(z);
  if (r >= euclidean_radius) return z;
  return z + shift * (1.0 - r / euclidean_radius);
}

Jacobian PointPushMap::jacobian(Complex z) const {
  const double r = std::abs(z);
  if (r >= euclidean_radius || r == 0.0) return Jacobian{};
  const double k = shift / euclidean_radius;
  return Jacobian{1.0 - k * z.real() / r, -k * z.imag() / r, 0.0, 1.0};
}

PointPushMap reich_pointpush(double a, double delta, int radial_samples, int angular_samples) {
  require(std::isfinite(a) && std::isfinite(delta), "a and delta must be finite");
  require(delta > 0.0, "delta must be positive");
  require(delta < a, "push distance must be smaller than the ball radius");
  require(radial_samples >= 1 && angular_samples >= 1, "need samples");
  PointPushMap m;
  m.a = a;
  m.delta = delta;
  m.euclidean_radius = std::tanh(a / 2.0);
  m.shift = std::tanh(delta / 2.0);
  m.k_exact = 1.0 / (1.0 - m.shift / m.euclidean_radius);
  for (int i = 1; i <= radial_samples; ++i) {
    const double r = m.euclidean_radius * (i - 0.5) / radial_samples;
    for (int j = 0; j < angular_samples; ++j) {
      const double t = 2.0 * std::numbers::pi * j / angular_samples;
      m.k_estimate = std::max(m.k_estimate, dilatation(m.jacobian(std::polar(r, t))));
      ++m.samples;
    }
  }
  return m;
}

DistortionCheck distance_distortion(const std::function<Complex(Complex)>& f,
                                    const std::vector<Complex>& samples, double delta,
                                    double factor) {
  require(factor >= 1.0, "factor must be at least 1");
  DistortionCheck out;
  std::vector<Complex> images;
  images.reserve(samples.size());
  for (const Complex& z : samples) images.push_back(f(z));
  bool first = true;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      const double d = hyp_distance(samples[i], samples[j]);
      if (d < delta) continue;
      const double ratio = hyp_distance(images[i], images[j]) / d;
      if (first) {
        out.min_ratio = out.max_ratio = ratio;
        first = false;
      }
      out.min_ratio = std::min(out.min_ratio, ratio);
      out.max_ratio = std::max(out.max_ratio, ratio);
      ++out.pairs_checked;
    }
  }
  out.within_factor = out.min_ratio >= 1.0 / factor && out.max_ratio <= factor;
  return out;
}

}  // namespace covnum
