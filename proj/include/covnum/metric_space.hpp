#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace covnum {

enum class BallKind { kClosed, kOpen };

std::string_view to_string(BallKind kind);
BallKind ball_kind_from_string(std::string_view name);

using PointIndex = std::size_t;
using PointSet = std::vector<PointIndex>;  // sorted, duplicate free

// An explicit finite metric space. The constructor validates the distance
// matrix (square, finite, non-negative, symmetric, zero diagonal, triangle
// inequality) and throws ValidationError on the first violation.
class FiniteMetricSpace {
 public:
  static constexpr double kTolerance = 1e-9;

  FiniteMetricSpace() = default;
  FiniteMetricSpace(std::vector<std::string> ids, std::vector<std::vector<double>> dist);

  std::size_t size() const { return ids_.size(); }
  const std::string& id(PointIndex i) const { return ids_.at(i); }
  const std::vector<std::string>& ids() const { return ids_; }
  double distance(PointIndex i, PointIndex j) const { return dist_[i * ids_.size() + j]; }
  PointIndex index_of(std::string_view id) const;

  PointSet all_points() const;
  double diameter() const;

  // Points y with d(center, y) <= radius (closed) or < radius (open).
  PointSet ball(PointIndex center, double radius, BallKind kind = BallKind::kClosed) const;

  std::vector<std::vector<double>> matrix() const;

 private:
  std::vector<std::string> ids_;
  std::vector<double> dist_;  // row-major size() x size()
};

bool within(double distance, double radius, BallKind kind);

struct CoverCertificate {
  double radius = 0.0;
  BallKind kind = BallKind::kClosed;
  PointSet centers;
  std::vector<std::pair<PointIndex, PointIndex>> assignment;  // point -> center
};

struct PackingCertificate {
  double radius = 0.0;
  PointSet centers;
};

struct CoverResult {
  std::size_t count = 0;
  CoverCertificate certificate;
};

struct PackingResult {
  std::size_t count = 0;
  PackingCertificate certificate;
};

struct ExactOptions {
  std::size_t max_points = 64;  // exact solvers refuse larger instances
};

// Exact eta(E, r) with centers restricted to `ambient`.
CoverResult covering_number_exact(const FiniteMetricSpace& space, const PointSet& subset,
                                  const PointSet& ambient, double radius,
                                  BallKind kind = BallKind::kClosed,
                                  const ExactOptions& options = {});

// Valid cover, not necessarily minimal. Ties break toward the smaller index.
CoverResult covering_number_greedy(const FiniteMetricSpace& space, const PointSet& subset,
                                   const PointSet& ambient, double radius,
                                   BallKind kind = BallKind::kClosed);

// Maximum number of points of E pairwise more than 2r apart.
PackingResult packing_number_exact(const FiniteMetricSpace& space, const PointSet& subset,
                                   double radius, const ExactOptions& options = {});

struct CertificateCheck {
  bool valid = false;
  std::string reason;  // empty when valid
};

// Independent re-validation; no solver code is shared.
CertificateCheck validate_cover(const FiniteMetricSpace& space, const PointSet& subset,
                                const PointSet& ambient, const CoverCertificate& cert);
CertificateCheck validate_packing(const FiniteMetricSpace& space, const PointSet& subset,
                                  const PackingCertificate& cert);

struct ChainCheck {
  std::size_t lhs = 0;          // eta(B(x, r+p), q)
  std::size_t rhs = 0;          // eta(B(x, r), q) * max_y eta(B(y, p+q), q)
  std::size_t inner_ball = 0;   // eta(B(x, r), q)
  std::size_t sup_factor = 0;   // max_y eta(B(y, p+q), q)
  bool holds = false;
};

// Evaluates both sides of eta(B(x,r+p),q) <= eta(B(x,r),q) * sup_y eta(B(y,p+q),q)
// exactly, with every ball and cover taken in the whole space. The inequality
// is guaranteed on geodesic-like spaces (e.g. graph metrics with integer
// radii and closed balls) but can fail on arbitrary finite spaces; `holds`
// reports what was observed.
ChainCheck verify_chain_inequality(const FiniteMetricSpace& space, PointIndex x, double r,
                                   double p, double q, BallKind kind = BallKind::kClosed,
                                   const ExactOptions& options = {});

struct TransferredBound {
  std::uint64_t bound = 0;  // upper bound for eta_X(X, r)
  double lipschitz = 1.0;
  std::string provenance;
};

// Given eta_Y(Y, r/L) = eta_target for an L-bi-Lipschitz surjection X -> Y,
// records eta_target as an upper bound for eta_X(X, r).
TransferredBound bilipschitz_transfer(std::uint64_t eta_target, double lipschitz);

// Smallest L >= 1 with d_X/L <= d_Y <= L d_X for the bijection i -> i.
double bilipschitz_distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

// log(eta_unit) / log(sup_two_ball) - 1: the diameter lower bound obtained
// by iterating the chain inequality with p = q = 1.
double diameter_lower_bound(std::uint64_t eta_unit, std::uint64_t sup_two_ball);

}  // namespace covnum
