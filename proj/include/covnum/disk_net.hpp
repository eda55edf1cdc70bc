#pragma once

#include <cstdint>
#include <vector>

#include "covnum/hyperbolic.hpp"

namespace covnum {

struct NetValidation {
  bool valid = false;
  double worst_gap = 0.0;  // max over samples of the distance to the net
  std::uint64_t samples = 0;
};

// A delta-net of the closed hyperbolic ball B(0, R): the origin plus rings at
// hyperbolic radius k * delta, ring k carrying the fewest equally spaced
// points for which every point within delta/2 radially and pi/n_k in angle
// lies within delta (checked with the hyperbolic law of cosines).
class DiskNet {
 public:
  DiskNet(double region_radius, double delta);

  double region_radius() const { return region_radius_; }
  double delta() const { return delta_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Complex>& points() const { return points_; }
  const std::vector<std::size_t>& ring_sizes() const { return ring_sizes_; }

  // Index of a net point within delta of z (the nearest among the candidate
  // rings), and its distance.
  std::pair<std::size_t, double> nearest(Complex z) const;

  // Samples uniform in hyperbolic area on B(0, R).
  NetValidation validate(std::uint64_t samples, std::uint64_t seed) const;

 private:
  double region_radius_;
  double delta_;
  std::vector<Complex> points_;
  std::vector<std::size_t> ring_sizes_;
  std::vector<std::size_t> ring_offsets_;
};

// Uniform (in hyperbolic area) random point of B(0, R).
Complex sample_hyperbolic_ball(double region_radius, double u_radius, double u_angle);

}  // namespace covnum
