#include "covnum/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "covnum/errors.hpp"
#include "covnum/set_cover.hpp"

namespace covnum {

std::string_view to_string(BallKind kind) {
  return kind == BallKind::kClosed ? "closed" : "open";
}

BallKind ball_kind_from_string(std::string_view name) {
  if (name == "closed") return BallKind::kClosed;
  if (name == "open") return BallKind::kOpen;
  throw ValidationError("unknown ball kind '" + std::string(name) + "'");
}

bool within(double distance, double radius, BallKind kind) {
  return kind == BallKind::kClosed ? distance <= radius : distance < radius;
}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> ids,
                                     std::vector<std::vector<double>> dist)
    : ids_(std::move(ids)) {
  const std::size_t n = ids_.size();
  require(dist.size() == n, "distance matrix has " + std::to_string(dist.size()) +
                                " rows for " + std::to_string(n) + " points");
  {
    std::vector<std::string> sorted = ids_;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "duplicate point id");
  }
  dist_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    require(dist[i].size() == n, "distance matrix row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      const double d = dist[i][j];
      require(std::isfinite(d) && d >= 0.0, "distance entries must be finite and non-negative");
      dist_[i * n + j] = d;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    require(distance(i, i) == 0.0, "non-zero diagonal at point " + ids_[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      require(distance(i, j) == distance(j, i),
              "asymmetric distance between " + ids_[i] + " and " + ids_[j]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const double direct = distance(i, k);
        const double detour = distance(i, j) + distance(j, k);
        if (direct > detour + kTolerance * std::max(1.0, direct)) {
          std::ostringstream msg;
          msg << "triangle inequality violated: d(" << ids_[i] << "," << ids_[k] << ") > d("
              << ids_[i] << "," << ids_[j] << ") + d(" << ids_[j] << "," << ids_[k] << ")";
          throw ValidationError(msg.str());
        }
      }
    }
  }
}

PointIndex FiniteMetricSpace::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] == id) return i;
  }
  throw ValidationError("unknown point id '" + std::string(id) + "'");
}

PointSet FiniteMetricSpace::all_points() const {
  PointSet all(size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

double FiniteMetricSpace::diameter() const {
  double best = 0.0;
  for (double d : dist_) best = std::max(best, d);
  return best;
}

PointSet FiniteMetricSpace::ball(PointIndex center, double radius, BallKind kind) const {
  PointSet out;
  for (std::size_t j = 0; j < size(); ++j) {
    if (within(distance(center, j), radius, kind)) out.push_back(j);
  }
  return out;
}

std::vector<std::vector<double>> FiniteMetricSpace::matrix() const {
  const std::size_t n = size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = distance(i, j);
  }
  return m;
}

namespace {

void check_subset(const FiniteMetricSpace& space, const PointSet& set, const char* name) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    require(set[i] < space.size(), std::string(name) + " contains an unknown point");
    require(i == 0 || set[i - 1] < set[i], std::string(name) + " must be sorted and duplicate free");
  }
}

void check_cover_inputs(const FiniteMetricSpace& space, const PointSet& subset,
                        const PointSet& ambient, double radius) {
  check_subset(space, subset, "subset");
  check_subset(space, ambient, "ambient");
  require(std::includes(ambient.begin(), ambient.end(), subset.begin(), subset.end()),
          "subset must lie inside the ambient center set");
  require(std::isfinite(radius) && radius >= 0.0, "radius must be finite and non-negative");
}

// Sets indexed by ambient position, universe indexed by subset position.
SetCoverInstance build_instance(const FiniteMetricSpace& space, const PointSet& subset,
                                const PointSet& ambient, double radius, BallKind kind) {
  SetCoverInstance inst;
  inst.universe = subset.size();
  inst.sets.assign(ambient.size(), Bits(subset.size()));
  Bits coverable(subset.size());
  for (std::size_t c = 0; c < ambient.size(); ++c) {
    for (std::size_t e = 0; e < subset.size(); ++e) {
      if (within(space.distance(ambient[c], subset[e]), radius, kind)) inst.sets[c].set(e);
    }
    coverable |= inst.sets[c];
  }
  if (!coverable.all()) throw ValidationError("uncoverable");
  return inst;
}

CoverResult make_result(const FiniteMetricSpace& space, const PointSet& subset,
                        const PointSet& ambient, double radius, BallKind kind,
                        const std::vector<std::size_t>& chosen) {
  CoverResult out;
  out.count = chosen.size();
  out.certificate.radius = radius;
  out.certificate.kind = kind;
  for (std::size_t c : chosen) out.certificate.centers.push_back(ambient[c]);
  std::sort(out.certificate.centers.begin(), out.certificate.centers.end());
  for (PointIndex e : subset) {
    // nearest chosen center, smallest index on ties
    PointIndex best = out.certificate.centers.front();
    for (PointIndex c : out.certificate.centers) {
      if (space.distance(c, e) < space.distance(best, e)) best = c;
    }
    out.certificate.assignment.emplace_back(e, best);
  }
  return out;
}

}  // namespace

CoverResult covering_number_exact(const FiniteMetricSpace& space, const PointSet& subset,
                                  const PointSet& ambient, double radius, BallKind kind,
                                  const ExactOptions& options) {
  check_cover_inputs(space, subset, ambient, radius);
  require(space.size() <= options.max_points,
          "space has " + std::to_string(space.size()) + " points; exact cap is " +
              std::to_string(options.max_points));
  if (subset.empty()) {
    CoverResult empty;
    empty.certificate.radius = radius;
    empty.certificate.kind = kind;
    return empty;
  }
  const SetCoverInstance inst = build_instance(space, subset, ambient, radius, kind);
  const SetCoverSolution sol = exact_set_cover(inst);
  ensure(sol.feasible, "exact set cover failed on a coverable instance");
  return make_result(space, subset, ambient, radius, kind, sol.chosen);
}

CoverResult covering_number_greedy(const FiniteMetricSpace& space, const PointSet& subset,
                                   const PointSet& ambient, double radius, BallKind kind) {
  check_cover_inputs(space, subset, ambient, radius);
  if (subset.empty()) {
    CoverResult empty;
    empty.certificate.radius = radius;
    empty.certificate.kind = kind;
    return empty;
  }
  const SetCoverInstance inst = build_instance(space, subset, ambient, radius, kind);
  const SetCoverSolution sol = greedy_set_cover(inst);
  ensure(sol.feasible, "greedy set cover failed on a coverable instance");
  return make_result(space, subset, ambient, radius, kind, sol.chosen);
}

namespace {

// Maximum independent set in a conflict graph, branch and bound with a
// greedy clique-cover bound.
class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(std::vector<Bits> conflicts)
      : adj_(std::move(conflicts)), n_(adj_.size()) {}

  std::vector<std::size_t> run() {
    Bits all(n_);
    all.set();
    greedy_incumbent(all);
    std::vector<std::size_t> current;
    search(all, current);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void greedy_incumbent(Bits candidates) {
    std::vector<std::size_t> picked;
    while (candidates.any()) {
      std::size_t pick = Bits::npos;
      std::size_t lowest = n_ + 1;
      for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
        const std::size_t deg = (adj_[v] & candidates).count();
        if (deg < lowest) {
          lowest = deg;
          pick = v;
        }
      }
      picked.push_back(pick);
      candidates -= adj_[pick];
      candidates.reset(pick);
    }
    best_ = picked;
  }

  std::size_t clique_cover_bound(Bits candidates) const {
    std::size_t cliques = 0;
    while (candidates.any()) {
      ++cliques;
      Bits clique_pool = candidates;
      auto v = clique_pool.find_first();
      while (v != Bits::npos) {
        candidates.reset(v);
        clique_pool &= adj_[v];
        v = clique_pool.find_first();
      }
    }
    return cliques;
  }

  void search(const Bits& candidates, std::vector<std::size_t>& current) {
    if (candidates.none()) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }
    if (current.size() + clique_cover_bound(candidates) <= best_.size()) return;

    std::size_t pivot = Bits::npos;
    std::size_t max_deg = 0;
    for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
      const std::size_t deg = (adj_[v] & candidates).count();
      if (pivot == Bits::npos || deg > max_deg) {
        max_deg = deg;
        pivot = v;
      }
    }
    if (max_deg == 0) {
      const std::size_t before = current.size();
      for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
        current.push_back(v);
      }
      if (current.size() > best_.size()) best_ = current;
      current.resize(before);
      return;
    }
    Bits with = candidates - adj_[pivot];
    with.reset(pivot);
    current.push_back(pivot);
    search(with, current);
    current.pop_back();

    Bits without = candidates;
    without.reset(pivot);
    search(without, current);
  }

  std::vector<Bits> adj_;
  std::size_t n_;
  std::vector<std::size_t> best_;
};

}  // namespace

PackingResult packing_number_exact(const FiniteMetricSpace& space, const PointSet& subset,
                                   double radius, const ExactOptions& options) {
  check_subset(space, subset, "subset");
  require(std::isfinite(radius) && radius > 0.0, "packing radius must be positive");
  require(space.size() <= options.max_points,
          "space has " + std::to_string(space.size()) + " points; exact cap is " +
              std::to_string(options.max_points));
  PackingResult out;
  out.certificate.radius = radius;
  if (subset.empty()) return out;

  std::vector<Bits> conflicts(subset.size(), Bits(subset.size()));
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = 0; j < subset.size(); ++j) {
      if (i != j && space.distance(subset[i], subset[j]) <= 2.0 * radius) conflicts[i].set(j);
    }
  }
  for (std::size_t v : IndependentSetSearch(std::move(conflicts)).run()) {
    out.certificate.centers.push_back(subset[v]);
  }
  std::sort(out.certificate.centers.begin(), out.certificate.centers.end());
  out.count = out.certificate.centers.size();
  return out;
}

CertificateCheck validate_cover(const FiniteMetricSpace& space, const PointSet& subset,
                                const PointSet& ambient, const CoverCertificate& cert) {
  for (PointIndex c : cert.centers) {
    if (!std::binary_search(ambient.begin(), ambient.end(), c)) {
      return {false, "center " + std::to_string(c) + " is not in the ambient set"};
    }
  }
  std::map<PointIndex, PointIndex> assigned(cert.assignment.begin(), cert.assignment.end());
  for (PointIndex e : subset) {
    auto it = assigned.find(e);
    if (it == assigned.end()) return {false, "point " + space.id(e) + " has no assigned center"};
    if (!std::binary_search(cert.centers.begin(), cert.centers.end(), it->second)) {
      return {false, "point " + space.id(e) + " is assigned to a non-center"};
    }
    if (!within(space.distance(e, it->second), cert.radius, cert.kind)) {
      return {false, "point " + space.id(e) + " lies outside its assigned ball"};
    }
  }
  return {true, {}};
}

CertificateCheck validate_packing(const FiniteMetricSpace& space, const PointSet& subset,
                                  const PackingCertificate& cert) {
  for (std::size_t i = 0; i < cert.centers.size(); ++i) {
    if (!std::binary_search(subset.begin(), subset.end(), cert.centers[i])) {
      return {false, "packing center outside the packed set"};
    }
    for (std::size_t j = i + 1; j < cert.centers.size(); ++j) {
      if (space.distance(cert.centers[i], cert.centers[j]) <= 2.0 * cert.radius) {
        return {false, "centers " + space.id(cert.centers[i]) + " and " +
                           space.id(cert.centers[j]) + " are within twice the radius"};
      }
    }
  }
  return {true, {}};
}

ChainCheck verify_chain_inequality(const FiniteMetricSpace& space, PointIndex x, double r,
                                   double p, double q, BallKind kind,
                                   const ExactOptions& options) {
  require(x < space.size(), "base point out of range");
  require(r > 0 && p > 0 && q > 0, "chain inequality needs r, p, q > 0");
  const PointSet all = space.all_points();
  auto eta = [&](const PointSet& set) {
    return covering_number_exact(space, set, all, q, kind, options).count;
  };
  ChainCheck out;
  out.lhs = eta(space.ball(x, r + p, kind));
  out.inner_ball = eta(space.ball(x, r, kind));
  for (PointIndex y = 0; y < space.size(); ++y) {
    out.sup_factor = std::max(out.sup_factor, eta(space.ball(y, p + q, kind)));
  }
  out.rhs = out.inner_ball * out.sup_factor;
  out.holds = out.lhs <= out.rhs;
  return out;
}

TransferredBound bilipschitz_transfer(std::uint64_t eta_target, double lipschitz) {
  require(std::isfinite(lipschitz) && lipschitz >= 1.0, "bi-Lipschitz constant must be >= 1");
  TransferredBound out;
  out.bound = eta_target;
  out.lipschitz = lipschitz;
  std::ostringstream s;
  s << "eta_X(X, r) <= eta_Y(Y, r/L) = " << eta_target << " under an L-bi-Lipschitz surjection, L = "
    << lipschitz;
  out.provenance = s.str();
  return out;
}

double bilipschitz_distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  require(x.size() == y.size(), "bi-Lipschitz check needs spaces of equal size");
  double worst = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double dx = x.distance(i, j);
      const double dy = y.distance(i, j);
      if (dx == 0.0 && dy == 0.0) continue;
      if (dx == 0.0 || dy == 0.0) return std::numeric_limits<double>::infinity();
      worst = std::max({worst, dy / dx, dx / dy});
    }
  }
  return worst;
}

double diameter_lower_bound(std::uint64_t eta_unit, std::uint64_t sup_two_ball) {
  require(eta_unit >= 1, "eta at unit radius must be at least 1");
  require(sup_two_ball >= 2, "sup of two-ball covering numbers must be at least 2");
  return std::log(static_cast<double>(eta_unit)) / std::log(static_cast<double>(sup_two_ball)) -
         1.0;
}

}  // namespace covnum
