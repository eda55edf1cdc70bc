#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "covnum/hyperbolic.hpp"

namespace covnum {

// Real Jacobian [[ux, uy], [vx, vy]] of a planar map.
struct Jacobian {
  double ux = 1.0;
  double uy = 0.0;
  double vx = 0.0;
  double vy = 1.0;
};

Jacobian operator*(const Jacobian& p, const Jacobian& q);

// (|f_z| + |f_zbar|) / (|f_z| - |f_zbar|). Throws InternalError when the
// map is not orientation preserving at the point.
double dilatation(const Jacobian& j);

// Vertex A at the origin, B on the positive real axis at distance c, C at
// distance b from A in the upper half disk (angle alpha at A).
struct DiskTriangle {
  Complex a;
  Complex b;
  Complex c;
};
DiskTriangle realize(const HypTriangle& t);

Complex poincare_to_klein(Complex z);
Complex klein_to_poincare(Complex k);

// Vertex-respecting map T1 -> T2: into the Klein model, the linear map
// between the two (geodesic = straight) triangles, back to the Poincare
// model.
class StraighteningMap {
 public:
  StraighteningMap(const HypTriangle& from, const HypTriangle& to);

  Complex apply(Complex z) const;
  Jacobian jacobian(Complex z) const;
  const DiskTriangle& source() const { return src_; }
  const DiskTriangle& target() const { return dst_; }
  const Jacobian& klein_linear() const { return linear_; }

 private:
  DiskTriangle src_;
  DiskTriangle dst_;
  Jacobian linear_;
};

struct DilatationSample {
  double k = 1.0;
  Complex argmax;  // Poincare coordinates in T1
  std::uint64_t samples = 0;
};

// Max dilatation of the straightening map over the barycentric grid
// (i, j, k)/n of the Klein realization of T1, vertices included.
DilatationSample straighten_dilatation_sampled(const HypTriangle& t1, const HypTriangle& t2,
                                              int subdivisions = 40);
double straighten_dilatation(const HypTriangle& t1, const HypTriangle& t2, int subdivisions = 40);

// Dilatation bound K_affine * cosh(max(b1, c1)) * cosh(max(b2, c2)): the two
// model changes are radial with dilatation cosh of the distance to A.
double straighten_dilatation_bound(const HypTriangle& t1, const HypTriangle& t2);

// Point push on the hyperbolic ball B(0, a): z -> z + q (1 - |z| / R_e) inside
// the Euclidean radius R_e = tanh(a/2), identity outside, q = tanh(delta/2)
// on the positive real axis.
struct PointPushMap {
  double a = 0.0;
  double delta = 0.0;
  double euclidean_radius = 0.0;
  double shift = 0.0;
  double k_estimate = 1.0;
  double k_exact = 1.0;  // 1 / (1 - q / R_e)
  std::uint64_t samples = 0;

  Complex apply(Complex z) const;
  Jacobian jacobian(Complex z) const;  // undefined at 0 and on |z| = R_e
};

PointPushMap reich_pointpush(double a, double delta, int radial_samples = 64,
                             int angular_samples = 256);

struct DistortionCheck {
  bool within_factor = true;  // every checked pair has ratio in [1/factor, factor]
  double min_ratio = 1.0;
  double max_ratio = 1.0;
  std::uint64_t pairs_checked = 0;
};

// Compares d(f(x), f(y)) with d(x, y) over sample pairs with d(x, y) >= delta.
DistortionCheck distance_distortion(const std::function<Complex(Complex)>& f,
                                    const std::vector<Complex>& samples, double delta,
                                    double factor = 2.0);

}  // namespace covnum
