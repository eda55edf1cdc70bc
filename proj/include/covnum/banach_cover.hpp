#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace covnum {

enum class ScalarMode { kReal, kComplex };

// R^m with the sup norm, or C^n presented as m = 2n real coordinates where
// the norm is the max over coordinate pairs of the Euclidean pair norm.
class SupNormSpace {
 public:
  SupNormSpace(int real_dimension, ScalarMode mode);

  int real_dimension() const { return m_; }
  ScalarMode mode() const { return mode_; }
  double norm(const std::vector<double>& x) const;
  double distance(const std::vector<double>& x, const std::vector<double>& y) const;

 private:
  int m_;
  ScalarMode mode_;
};

// Lattice cover of [-R, R]^m by sup-norm balls of radius r + delta centered
// at (2 i_1 r, ..., 2 i_m r), |i_j| <= half_width.
struct GridCover {
  int dimension = 1;
  double spacing = 0.0;  // 2r
  int half_width = 0;    // C
  double inflation = 0.0;
  double ball_radius = 0.0;  // r + delta
  std::uint64_t center_count = 0;

  double grid_radius() const { return spacing / 2.0; }
  std::vector<double> center(std::uint64_t index) const;  // mixed-radix index
};

// (R/r)^n, a lower bound on eta(B(0,R), r) in any n-dimensional normed space.
double volume_lower_bound(int n, double big_r, double r);

// Smallest C >= 0 with (2C+1) r + delta >= R, so the lattice reaches the cube
// boundary.
int grid_half_width(double big_r, double r, double delta);

// ceil((R/(r+delta) - 1)/2): the half width as printed alongside the lattice
// construction. Kept for comparison; it can undershoot (see tests).
int stated_half_width(double big_r, double r, double delta);

GridCover real_grid_cover(int m, double big_r, double r, double delta);

struct GridVerification {
  bool covered = false;        // every sample point lies in some ball, up to 1e-12 R
  bool certified = false;      // worst_margin >= step/2: the whole cube is covered
  bool exact_covered = false;  // interval-union test per axis
  double worst_margin = 0.0;   // min over samples of (ball_radius - distance)
  double corner_margin = 0.0;  // margin at (R, ..., R)
  double step = 0.0;
  std::uint64_t samples = 0;
  std::optional<std::vector<double>> counterexample;  // worst uncovered sample
};

// Sup distance from x to the nearest lattice center.
double distance_to_grid(const GridCover& grid, const std::vector<double>& x);

GridVerification verify_cover(const GridCover& grid, double big_r, double sample_resolution);

struct ComplexCoverBound {
  double bound = 0.0;  // (2 sqrt2 R / r + 2)^{2n}
  double bound_log10 = 0.0;
  GridCover construction;  // real grid on R^{2n} with ball radius r / sqrt2
  std::uint64_t constructed_count = 0;
};

ComplexCoverBound complex_sup_cover_bound(int n, double big_r, double r);

struct ComplexSampleCheck {
  bool covered = false;
  double worst_margin = 0.0;  // min over samples of (r - complex sup distance)
  std::uint64_t samples = 0;
};

// Samples the complex sup ball B(0, R) in C^n (interior and boundary) and
// checks every sample is within complex sup distance r of a lattice center.
ComplexSampleCheck verify_complex_cover(const ComplexCoverBound& cover, int n, double big_r,
                                        double r, std::uint64_t samples, std::uint64_t seed);

// Exact minimum number of closed sup-norm balls of radius r, centers anywhere
// in R^m, covering a finite point set. Uses the fact that a sup ball can be
// translated until each lower face touches a point, so candidate centers are
// (x_{i1} + r, ..., x_{im} + r) over sample coordinates.
std::uint64_t sup_norm_point_cover_number(const std::vector<std::vector<double>>& points,
                                          double r);

}  // namespace covnum
