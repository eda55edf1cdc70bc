#include "covnum/disk_net.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "covnum/errors.hpp"

namespace covnum {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double polar_distance(double r1, double r2, double dtheta) {
  const double v = std::cosh(r1) * std::cosh(r2) - std::sinh(r1) * std::sinh(r2) * std::cos(dtheta);
  return std::acosh(std::max(1.0, v));
}

std::size_t ring_count(double rho, double delta) {
  const double inner = std::max(0.0, rho - delta / 2.0);
  const double outer = rho + delta / 2.0;
  auto ok = [&](std::size_t n) {
    const double half = std::numbers::pi / static_cast<double>(n);
    return polar_distance(outer, rho, half) <= delta && polar_distance(inner, rho, half) <= delta;
  };
  std::size_t hi = 1;
  while (!ok(hi)) {
    hi *= 2;
    require(hi < (std::size_t{1} << 26), "disk net ring too large");
  }
  std::size_t lo = hi / 2;  // fails, or 0
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

Complex sample_hyperbolic_ball(double region_radius, double u_radius, double u_angle) {
  const double rho = std::acosh(1.0 + u_radius * (std::cosh(region_radius) - 1.0));
  return std::polar(std::tanh(rho / 2.0), kTwoPi * u_angle);
}

DiskNet::DiskNet(double region_radius, double delta) : region_radius_(region_radius), delta_(delta) {
  require(std::isfinite(region_radius) && region_radius >= 0.0, "region radius must be >= 0");
  require(std::isfinite(delta) && delta > 0.0, "delta must be positive");
  points_.emplace_back(0.0, 0.0);
  ring_sizes_.push_back(1);
  ring_offsets_.push_back(0);
  if (delta >= region_radius) return;
  const auto rings = static_cast<std::size_t>(std::ceil(region_radius / delta));
  for (std::size_t k = 1; k <= rings; ++k) {
    const double rho = static_cast<double>(k) * delta;
    const std::size_t n = ring_count(rho, delta);
    ring_offsets_.push_back(points_.size());
    ring_sizes_.push_back(n);
    const double e = std::tanh(rho / 2.0);
    for (std::size_t j = 0; j < n; ++j) {
      points_.push_back(std::polar(e, kTwoPi * static_cast<double>(j) / static_cast<double>(n)));
    }
  }
}

std::pair<std::size_t, double> DiskNet::nearest(Complex z) const {
  const double rho = hyperbolic_radius(std::abs(z));
  const double theta = std::arg(z);
  const auto rings = static_cast<long>(ring_sizes_.size());
  const long centre = std::lround(rho / delta_);
  std::pair<std::size_t, double> best{0, hyp_distance(z, points_[0])};
  for (long k = std::max(1L, centre - 1); k <= std::min(rings - 1, centre + 1); ++k) {
    const auto n = static_cast<long>(ring_sizes_[k]);
    const double pos = theta / kTwoPi * static_cast<double>(n);
    const long j0 = static_cast<long>(std::floor(pos));
    for (long j = j0; j <= j0 + 1; ++j) {
      const std::size_t idx = ring_offsets_[k] + static_cast<std::size_t>(((j % n) + n) % n);
      const double d = hyp_distance(z, points_[idx]);
      if (d < best.second) best = {idx, d};
    }
  }
  return best;
}

NetValidation DiskNet::validate(std::uint64_t samples, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  NetValidation out;
  out.samples = samples;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const double u = unit(rng);
    const double v = unit(rng);
    const Complex z = sample_hyperbolic_ball(region_radius_, u, v);
    out.worst_gap = std::max(out.worst_gap, nearest(z).second);
  }
  out.valid = out.worst_gap <= delta_;
  return out;
}

}  // namespace covnum
