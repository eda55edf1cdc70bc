#include "covnum/banach_cover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "covnum/errors.hpp"
#include "covnum/set_cover.hpp"

namespace covnum {

SupNormSpace::SupNormSpace(int real_dimension, ScalarMode mode) : m_(real_dimension), mode_(mode) {
  require(m_ >= 1, "dimension must be positive");
  require(mode_ == ScalarMode::kReal || m_ % 2 == 0, "complex mode needs an even real dimension");
}

double SupNormSpace::norm(const std::vector<double>& x) const {
  require(static_cast<int>(x.size()) == m_, "vector has wrong dimension");
  double out = 0.0;
  if (mode_ == ScalarMode::kReal) {
    for (double v : x) out = std::max(out, std::abs(v));
  } else {
    for (int j = 0; j < m_; j += 2) out = std::max(out, std::hypot(x[j], x[j + 1]));
  }
  return out;
}

double SupNormSpace::distance(const std::vector<double>& x, const std::vector<double>& y) const {
  require(x.size() == y.size(), "vectors differ in dimension");
  std::vector<double> diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - y[i];
  return norm(diff);
}

std::vector<double> GridCover::center(std::uint64_t index) const {
  const std::uint64_t side = 2 * static_cast<std::uint64_t>(half_width) + 1;
  std::vector<double> c(dimension);
  for (int j = 0; j < dimension; ++j) {
    const auto digit = static_cast<std::int64_t>(index % side);
    index /= side;
    c[j] = static_cast<double>(digit - half_width) * spacing;
  }
  return c;
}

double volume_lower_bound(int n, double big_r, double r) {
  require(n >= 1, "dimension must be positive");
  require(r > 0.0 && big_r > r, "volume bound needs R > r > 0");
  return std::pow(big_r / r, n);
}

int grid_half_width(double big_r, double r, double delta) {
  require(big_r > 0 && r > 0 && delta > 0, "grid cover needs R, r, delta > 0");
  const double c = std::ceil(((big_r - delta) / r - 1.0) / 2.0);
  return c > 0 ? static_cast<int>(c) : 0;
}

int stated_half_width(double big_r, double r, double delta) {
  require(big_r > 0 && r > 0 && delta > 0, "grid cover needs R, r, delta > 0");
  const double c = std::ceil((big_r / (r + delta) - 1.0) / 2.0);
  return c > 0 ? static_cast<int>(c) : 0;
}

GridCover real_grid_cover(int m, double big_r, double r, double delta) {
  require(m >= 1, "dimension must be positive");
  GridCover g;
  g.dimension = m;
  g.spacing = 2.0 * r;
  g.half_width = grid_half_width(big_r, r, delta);
  g.inflation = delta;
  g.ball_radius = r + delta;
  const double side = 2.0 * g.half_width + 1.0;
  require(std::pow(side, m) < 1.8e19, "grid cover has too many centers");
  g.center_count = 1;
  for (int j = 0; j < m; ++j) g.center_count *= static_cast<std::uint64_t>(side);
  return g;
}

namespace {

double axis_gap(const GridCover& grid, double x) {
  double i = std::round(x / grid.spacing);
  i = std::clamp(i, -static_cast<double>(grid.half_width), static_cast<double>(grid.half_width));
  return std::abs(x - i * grid.spacing);
}

}  // namespace

constexpr double kRoundingSlack = 1e-12;

double distance_to_grid(const GridCover& grid, const std::vector<double>& x) {
  double d = 0.0;
  for (double v : x) d = std::max(d, axis_gap(grid, v));
  return d;
}

GridVerification verify_cover(const GridCover& grid, double big_r, double sample_resolution) {
  require(big_r > 0.0, "cube half width must be positive");
  require(sample_resolution > 0.0, "sample resolution must be positive");
  GridVerification out;
  out.step = sample_resolution;

  // Samples per axis: -R + k*step, plus R itself.
  std::vector<double> axis;
  const auto steps = static_cast<std::uint64_t>(std::ceil(2.0 * big_r / sample_resolution));
  for (std::uint64_t k = 0; k <= steps; ++k) {
    axis.push_back(std::min(big_r, -big_r + static_cast<double>(k) * sample_resolution));
  }
  // Coverage is a product condition, so per-axis worst gaps combine by max.
  std::vector<double> gaps(axis.size());
  for (std::size_t k = 0; k < axis.size(); ++k) gaps[k] = axis_gap(grid, axis[k]);
  std::size_t worst = 0;
  for (std::size_t k = 1; k < gaps.size(); ++k) {
    if (gaps[k] > gaps[worst]) worst = k;
  }
  out.samples = 1;
  for (int j = 0; j < grid.dimension; ++j) out.samples *= axis.size();
  out.worst_margin = grid.ball_radius - gaps[worst];
  out.corner_margin = grid.ball_radius - axis_gap(grid, big_r);
  // Tight instances ((2C+1) r + delta == R) land on the boundary exactly;
  // allow for rounding there.
  out.covered = out.worst_margin >= -kRoundingSlack * std::max(1.0, big_r);
  out.certified = out.worst_margin >= sample_resolution / 2.0;
  if (!out.covered) out.counterexample = std::vector<double>(grid.dimension, axis[worst]);

  const double reach = grid.half_width * grid.spacing + grid.ball_radius;
  out.exact_covered = grid.spacing <= 2.0 * grid.ball_radius && reach >= big_r;
  return out;
}

ComplexCoverBound complex_sup_cover_bound(int n, double big_r, double r) {
  require(n >= 1, "complex dimension must be positive");
  require(big_r > 0.0 && r > 0.0, "complex cover bound needs R, r > 0");
  ComplexCoverBound out;
  const double base = 2.0 * std::numbers::sqrt2 * big_r / r + 2.0;
  out.bound_log10 = 2.0 * n * std::log10(base);
  out.bound = std::pow(base, 2.0 * n);
  // A real sup ball of radius r/sqrt2 sits inside the complex sup ball of
  // radius r with the same center.
  const double half = r / (2.0 * std::numbers::sqrt2);
  out.construction = real_grid_cover(2 * n, big_r, half, half);
  out.constructed_count = out.construction.center_count;
  return out;
}

namespace {

// Nearest point of the square lattice (spacing s, indices clamped to [-C, C])
// to (x, y) in the Euclidean norm.
double pair_gap(const GridCover& grid, double x, double y) {
  return std::hypot(axis_gap(grid, x), axis_gap(grid, y));
}

}  // namespace

ComplexSampleCheck verify_complex_cover(const ComplexCoverBound& cover, int n, double big_r,
                                        double r, std::uint64_t samples, std::uint64_t seed) {
  require(cover.construction.dimension == 2 * n, "construction does not match dimension");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ComplexSampleCheck out;
  out.samples = samples;
  out.worst_margin = std::numeric_limits<double>::infinity();
  for (std::uint64_t s = 0; s < samples; ++s) {
    double dist = 0.0;
    // Every other sample puts one coordinate on the boundary circle |z_j| = R.
    const int boundary_coord = (s % 2 == 0) ? static_cast<int>(s / 2 % n) : -1;
    for (int j = 0; j < n; ++j) {
      const double angle = 2.0 * std::numbers::pi * unit(rng);
      const double radius = (j == boundary_coord) ? big_r : big_r * std::sqrt(unit(rng));
      dist = std::max(dist, pair_gap(cover.construction, radius * std::cos(angle),
                                     radius * std::sin(angle)));
    }
    out.worst_margin = std::min(out.worst_margin, r - dist);
  }
  out.covered = out.worst_margin >= 0.0;
  return out;
}

std::uint64_t sup_norm_point_cover_number(const std::vector<std::vector<double>>& points,
                                          double r) {
  require(r >= 0.0, "radius must be non-negative");
  if (points.empty()) return 0;
  const std::size_t m = points.front().size();
  std::vector<std::vector<double>> axis_values(m);
  for (const auto& p : points) {
    require(p.size() == m, "points differ in dimension");
    for (std::size_t j = 0; j < m; ++j) axis_values[j].push_back(p[j]);
  }
  std::size_t candidates = 1;
  for (auto& v : axis_values) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    candidates *= v.size();
  }
  require(candidates <= 200000, "too many candidate centers for an exact sup-norm cover");

  constexpr double kSlack = 1e-12;
  SetCoverInstance inst;
  inst.universe = points.size();
  for (std::size_t idx = 0; idx < candidates; ++idx) {
    std::vector<double> center(m);
    std::size_t rest = idx;
    for (std::size_t j = 0; j < m; ++j) {
      center[j] = axis_values[j][rest % axis_values[j].size()] + r;
      rest /= axis_values[j].size();
    }
    Bits members(points.size());
    for (std::size_t e = 0; e < points.size(); ++e) {
      double d = 0.0;
      for (std::size_t j = 0; j < m; ++j) d = std::max(d, std::abs(points[e][j] - center[j]));
      if (d <= r + kSlack) members.set(e);
    }
    if (members.any()) inst.sets.push_back(std::move(members));
  }
  const SetCoverSolution sol = exact_set_cover(inst);
  ensure(sol.feasible, "sup-norm point cover infeasible");
  return sol.chosen.size();
}

}  // namespace covnum
