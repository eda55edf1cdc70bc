#pragma once

// Generators and brute-force oracles shared by the unit tests and the
// acceptance binary. None of this calls into the solvers under test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "covnum/metric_space.hpp"

namespace covnum::testing {

inline std::vector<std::string> ids_for(std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
  return ids;
}

// Points in the plane with Euclidean distance, rounded to 1e-6 so radii
// comparisons are not decided by the last ulp.
inline FiniteMetricSpace random_planar_space(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 10.0);
  std::vector<std::pair<double, double>> pts(n);
  for (auto& p : pts) p = {u(rng), u(rng)};
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double e = std::hypot(pts[i].first - pts[j].first, pts[i].second - pts[j].second);
      d[i][j] = d[j][i] = e;
    }
  }
  return FiniteMetricSpace(ids_for(n), d);
}

// Shortest-path metric of a random connected graph with integer weights
// in [1, max_weight]: a random spanning tree plus extra edges.
inline FiniteMetricSpace random_graph_space(std::size_t n, std::mt19937_64& rng, int max_weight = 1,
                                            double extra_edge_prob = 0.15) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  std::uniform_int_distribution<int> w(1, max_weight);
  std::bernoulli_distribution extra(extra_edge_prob);
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    const std::size_t p = parent(rng);
    d[i][p] = d[p][i] = w(rng);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d[i][j] == inf && extra(rng)) d[i][j] = d[j][i] = w(rng);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return FiniteMetricSpace(ids_for(n), d);
}

inline bool in_ball(double dist, double r, BallKind kind) {
  return kind == BallKind::kClosed ? dist <= r : dist < r;
}

// Smallest number of balls centered in `ambient` covering `subset`, by
// trying every center combination of size 1, 2, ... (n <= 32).
inline std::size_t brute_cover(const FiniteMetricSpace& s, const PointSet& subset, const PointSet& ambient,
                               double r, BallKind kind = BallKind::kClosed) {
  if (subset.empty()) return 0;
  std::uint32_t target = 0;
  for (PointIndex p : subset) target |= 1u << p;
  std::vector<std::uint32_t> ball;
  for (PointIndex c : ambient) {
    std::uint32_t b = 0;
    for (PointIndex p : subset) {
      if (in_ball(s.distance(c, p), r, kind)) b |= 1u << p;
    }
    ball.push_back(b);
  }
  const std::size_t m = ball.size();
  for (std::size_t k = 1; k <= m; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::uint32_t u = 0;
      for (std::size_t i : idx) u |= ball[i];
      if (u == target) return k;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::numeric_limits<std::size_t>::max();
}

// Largest subset of `subset` pairwise more than 2r apart, over all subsets.
inline std::size_t brute_packing(const FiniteMetricSpace& s, const PointSet& subset, double r) {
  const std::size_t n = subset.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto pop = static_cast<std::size_t>(__builtin_popcount(mask));
    if (pop <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        if ((mask >> j & 1u) && s.distance(subset[i], subset[j]) <= 2 * r) ok = false;
      }
    }
    if (ok) best = pop;
  }
  return best;
}

inline PointSet random_subset(std::size_t n, std::mt19937_64& rng, double keep = 0.6) {
  std::bernoulli_distribution b(keep);
  PointSet s;
  for (std::size_t i = 0; i < n; ++i) {
    if (b(rng)) s.push_back(i);
  }
  if (s.empty()) s.push_back(0);
  return s;
}

}  // namespace covnum::testing
