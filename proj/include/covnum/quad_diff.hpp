#pragma once

#include <cstdint>
#include <vector>

#include "covnum/disk_net.hpp"
#include "covnum/hyperbolic.hpp"

namespace covnum {

// phi(z) = sum_k c_k z^k, read as the quadratic differential phi(z) dz^2.
class PolyQuadDiff {
 public:
  PolyQuadDiff() = default;
  explicit PolyQuadDiff(std::vector<Complex> coefficients);

  const std::vector<Complex>& coefficients() const { return c_; }
  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return degree() < 0; }

  Complex operator()(Complex z) const;
  Complex derivative(Complex z) const;

  PolyQuadDiff operator+(const PolyQuadDiff& other) const;
  PolyQuadDiff scaled(double t) const;

 private:
  std::vector<Complex> c_;
};

// rho^{-2}(z) = (1 - |z|^2)^2 / 4.
double inverse_density_sq(Complex z);

struct QNorm {
  double value = 0.0;        // attained at `argmax`, so a lower bound on the sup
  double error_bound = 0.0;  // sup <= value + error_bound
  Complex argmax;
  double region_radius = 0.0;  // Euclidean radius actually searched
  std::uint64_t cells = 0;
};

struct QNormOptions {
  double relative_tolerance = 1e-7;
  double absolute_tolerance = 1e-12;
  std::uint64_t max_cells = 2'000'000;
};

// sup over |z| <= R of rho^{-2}(z) |phi(z)|, R the Euclidean radius (< 1), by
// best-first branch and bound over polar cells with a per-cell Lipschitz
// bound, then a local polish of the incumbent. The reported error bound is
// the largest remaining cell bound minus the polished value.
QNorm q_norm(const PolyQuadDiff& phi, double euclidean_radius, const QNormOptions& options = {});

// The same sup over the whole disk. For degree n the sup is attained in
// |z| <= sqrt(n / (n + 4)): M(r)/r^n is nonincreasing and (1-s)^2 s^{n/2}
// decreases for s >= n/(n+4).
QNorm q_norm_disk(const PolyQuadDiff& phi, const QNormOptions& options = {});
double disk_reduction_radius(int degree);

// (1 - delta^2)^2 C1 delta / 4 + 64 C2 delta / 9 with C1 = 128 / (9 (1 - 2 delta)^2)
// and C2 = 2 delta.
double variation_bound(double delta);

// Largest delta in (0, 0.49] (to bisection precision) with variation_bound < xi.
double variation_delta_for_xi(double xi);

// Complex-Gaussian coefficients, degree uniform in [0, max_degree], scaled to
// full-disk Q-norm 1.
struct QuadDiffFamily {
  std::vector<PolyQuadDiff> members;
  std::vector<double> norm_errors;  // q_norm_disk error bound after scaling
  std::uint64_t seed = 0;
  int max_degree = 0;
};
QuadDiffFamily random_family(std::size_t count, int max_degree, std::uint64_t seed,
                             int threads = 1);

struct VariationReport {
  double max_observed = 0.0;
  std::uint64_t pairs = 0;
  Complex worst_z;
  Complex worst_w;
};

// Random pairs z, w with d(z, w) < delta, z uniform in |z| <= euclidean_radius;
// `trials` pairs per family member.
VariationReport empirical_variation(const std::vector<PolyQuadDiff>& family, double delta,
                                    std::uint64_t trials, std::uint64_t seed,
                                    double euclidean_radius = 0.95, int threads = 1);

// f_j = rho^{-2}(z_j) phi(z_j) over the net points.
std::vector<Complex> sample_map(const PolyQuadDiff& phi, const DiskNet& net);
double sup_abs(const std::vector<Complex>& v);

struct BiLipschitzReport {
  double lower = 0.0;
  double upper = 0.0;
  double max_norm_error = 0.0;  // largest q_norm error bound in the family
  std::size_t family_size = 0;
};

BiLipschitzReport empirical_bilipschitz(const DiskNet& net, const std::vector<PolyQuadDiff>& family,
                                        int threads = 1);

struct CauchyReport {
  double max_abs_phi = 0.0;       // over sampled |p| <= 1/2
  double max_ratio = 0.0;         // max |phi(p)| / rho^2(p)
  double density_sq_max = 64.0 / 9.0;
  std::uint64_t samples = 0;
};

CauchyReport cauchy_check(const std::vector<PolyQuadDiff>& family, std::uint64_t samples_per_member,
                          std::uint64_t seed);

}  // namespace covnum
