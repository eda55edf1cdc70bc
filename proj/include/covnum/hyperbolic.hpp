#pragma once

#include <complex>
#include <vector>

namespace covnum {

using Complex = std::complex<double>;

// A point of the open unit disk with the curvature -1 metric, density
// rho(z) = 2 / (1 - |z|^2).
class DiskPoint {
 public:
  DiskPoint() = default;
  explicit DiskPoint(Complex z);
  DiskPoint(double x, double y) : DiskPoint(Complex(x, y)) {}

  Complex z() const { return z_; }

 private:
  Complex z_{0.0, 0.0};
};

double hyp_density(Complex z);
double hyp_distance(Complex z, Complex w);
inline double hyp_distance(const DiskPoint& z, const DiskPoint& w) {
  return hyp_distance(z.z(), w.z());
}

// Euclidean radius of the hyperbolic ball B(0, rho) and its inverse.
double euclidean_radius(double hyperbolic_radius);
double hyperbolic_radius(double euclidean_radius);

// Disk isometry sending 0 to p.
Complex mobius_from_origin(Complex p, Complex x);

struct Sides {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

struct Angles {
  double alpha = 0.0;  // opposite a
  double beta = 0.0;
  double gamma = 0.0;
};

// Throws "degenerate triangle" unless every side is positive and shorter
// than the sum of the other two.
Angles angles_from_sides(double a, double b, double c);

// Throws unless every angle is in (0, pi) and the sum is below pi.
Sides sides_from_angles(double alpha, double beta, double gamma);

struct HypTriangle {
  Sides sides;
  Angles angles;

  static HypTriangle from_sides(double a, double b, double c);
  double min_angle() const;
  double area() const;  // pi - angle sum
};

struct MinAngleResult {
  double theta = 0.0;
  Sides minimizer;
  std::vector<double> round_minima;  // grid minimum, then one entry per refinement
  double last_change = 0.0;          // |round_minima[-1] - round_minima[-2]|
  int grid = 0;
  long evaluations = 0;
  long skipped_degenerate = 0;
};

// Minimum angle over triangles with every side in [eps/2, eps]: uniform grid
// on the side cube followed by local refinement rounds, each a (2s+1)^3
// sub-grid of step h/s around the incumbent. Degenerate grid points are
// skipped.
MinAngleResult min_angle_bound(double eps, int grid = 64, int refinement_rounds = 5,
                               int refinement_steps = 8);

}  // namespace covnum
