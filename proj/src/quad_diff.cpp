#include "covnum/quad_diff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <random>

#include "covnum/errors.hpp"
#include "covnum/parallel.hpp"

namespace covnum {

PolyQuadDiff::PolyQuadDiff(std::vector<Complex> coefficients) : c_(std::move(coefficients)) {
  for (const Complex& c : c_) {
    require(std::isfinite(c.real()) && std::isfinite(c.imag()), "coefficients must be finite");
  }
}

int PolyQuadDiff::degree() const {
  for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
    if (c_[k] != Complex(0.0, 0.0)) return k;
  }
  return -1;
}

Complex PolyQuadDiff::operator()(Complex z) const {
  Complex acc(0.0, 0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex PolyQuadDiff::derivative(Complex z) const {
  Complex acc(0.0, 0.0);
  for (std::size_t k = c_.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * c_[k];
  return acc;
}

PolyQuadDiff PolyQuadDiff::operator+(const PolyQuadDiff& other) const {
  std::vector<Complex> out(std::max(c_.size(), other.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) out[k] += c_[k];
  for (std::size_t k = 0; k < other.c_.size(); ++k) out[k] += other.c_[k];
  return PolyQuadDiff(std::move(out));
}

PolyQuadDiff PolyQuadDiff::scaled(double t) const {
  std::vector<Complex> out = c_;
  for (Complex& c : out) c *= t;
  return PolyQuadDiff(std::move(out));
}

double inverse_density_sq(Complex z) {
  const double s = 1.0 - std::norm(z);
  return s * s / 4.0;
}

namespace {

struct Cell {
  double r1, r2, t1, t2;
  double upper;
};

struct CellOrder {
  bool operator()(const Cell& x, const Cell& y) const { return x.upper < y.upper; }
};

double weight(double r) {
  const double s = 1.0 - r * r;
  return s * s / 4.0;
}

// max of r (1 - r^2) = |grad rho^{-2}| on [lo, hi]
double weight_slope(double lo, double hi) {
  const double peak = 1.0 / std::sqrt(3.0);
  const double r = std::clamp(peak, lo, hi);
  return r * (1.0 - r * r);
}

}  // namespace

QNorm q_norm(const PolyQuadDiff& phi, double euclidean_radius, const QNormOptions& options) {
  require(euclidean_radius > 0.0 && euclidean_radius < 1.0, "region radius must be in (0, 1)");
  QNorm out;
  out.region_radius = euclidean_radius;
  if (phi.is_zero()) return out;

  std::vector<double> abs_c;
  for (const Complex& c : phi.coefficients()) abs_c.push_back(std::abs(c));
  auto majorant = [&](double r) {  // sum |c_k| r^k
    double acc = 0.0;
    for (auto it = abs_c.rbegin(); it != abs_c.rend(); ++it) acc = acc * r + *it;
    return acc;
  };
  auto majorant_slope = [&](double r) {  // sum k |c_k| r^{k-1}
    double acc = 0.0;
    for (std::size_t k = abs_c.size(); k-- > 1;) acc = acc * r + static_cast<double>(k) * abs_c[k];
    return acc;
  };

  auto value_at = [&](double r, double t) {
    const Complex z = std::polar(r, t);
    return std::pair<double, Complex>{weight(r) * std::abs(phi(z)), z};
  };
  auto consider = [&](double r, double t) {
    const auto [v, z] = value_at(r, t);
    if (v > out.value) {
      out.value = v;
      out.argmax = z;
    }
    return v;
  };
  auto majorant_second = [&](double r) {  // sum k (k-1) |c_k| r^{k-2}
    double acc = 0.0;
    for (std::size_t k = abs_c.size(); k-- > 2;) {
      acc = acc * r + static_cast<double>(k) * static_cast<double>(k - 1) * abs_c[k];
    }
    return acc;
  };
  auto make_cell = [&](double r1, double r2, double t1, double t2) {
    const double rm = (r1 + r2) / 2.0;
    const double tm = (t1 + t2) / 2.0;
    const double v = consider(rm, tm);
    ++out.cells;
    const double dt = t2 - t1;
    const double reach = (r2 - r1) / 2.0 + r2 * dt / 2.0;  // cell lies in B(centre, reach)

    // First order: Lipschitz bound on rho^{-2}|phi|. Segments between cell
    // points stay in r1 cos(dt/2) <= |z| <= r2.
    const double lo = dt < std::numbers::pi ? r1 * std::cos(dt / 2.0) : 0.0;
    const double lip = weight_slope(lo, r2) * majorant(r2) + weight(lo) * majorant_slope(r2);
    const double first = v + lip * reach;

    // Second order on g = W |phi|^2, W = (1 - |z|^2)^4 / 16:
    // |grad W| <= 0.12, |Hess W| <= 1, |grad |phi|^2| = 2|phi||phi'|,
    // |Hess |phi|^2| <= 2|phi'|^2 + 2|phi||phi''|.
    const Complex c = std::polar(rm, tm);
    const Complex f = phi(c);
    const Complex df = phi.derivative(c);
    const double w_c = weight(rm);
    const double big_w = w_c * w_c;
    const double p_c = std::norm(f);
    const double s = 1.0 - rm * rm;
    const Complex grad = -p_c * (s * s * s / 2.0) * c + big_w * 2.0 * f * std::conj(df);
    const double outer = std::min(1.0, rm + reach);
    const double inner = std::max(0.0, rm - reach);
    const double a0 = majorant(outer), a1 = majorant_slope(outer), a2 = majorant_second(outer);
    const double w_in = weight(inner);
    const double hess = a0 * a0 + 0.24 * 2.0 * a0 * a1 + w_in * w_in * (2.0 * a1 * a1 + 2.0 * a0 * a2);
    const double second = std::sqrt(std::max(0.0, big_w * p_c + std::abs(grad) * reach +
                                                       hess * reach * reach / 2.0));
    return Cell{r1, r2, t1, t2, std::min(first, second)};
  };

  std::priority_queue<Cell, std::vector<Cell>, CellOrder> queue;
  constexpr int kRadial = 8;
  constexpr int kAngular = 32;
  const double two_pi = 2.0 * std::numbers::pi;
  for (int i = 0; i < kRadial; ++i) {
    for (int j = 0; j < kAngular; ++j) {
      queue.push(make_cell(euclidean_radius * i / kRadial, euclidean_radius * (i + 1) / kRadial,
                           two_pi * j / kAngular, two_pi * (j + 1) / kAngular));
    }
  }
  consider(0.0, 0.0);
  consider(euclidean_radius, 0.0);

  while (!queue.empty()) {
    const Cell top = queue.top();
    const double tol = options.absolute_tolerance + options.relative_tolerance * out.value;
    if (top.upper - out.value <= tol || out.cells >= options.max_cells) break;
    queue.pop();
    const double rm = (top.r1 + top.r2) / 2.0;
    const double tm = (top.t1 + top.t2) / 2.0;
    queue.push(make_cell(top.r1, rm, top.t1, tm));
    queue.push(make_cell(top.r1, rm, tm, top.t2));
    queue.push(make_cell(rm, top.r2, top.t1, tm));
    queue.push(make_cell(rm, top.r2, tm, top.t2));
  }
  // Pattern-search polish of the incumbent; only ever raises `value`.
  {
    Complex z = out.argmax;
    for (double step = euclidean_radius / 64.0; step > 1e-13; step /= 2.0) {
      bool moved = true;
      while (moved) {
        moved = false;
        for (const Complex dir : {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)}) {
          const Complex cand = z + step * dir;
          if (std::abs(cand) > euclidean_radius) continue;
          const double v = inverse_density_sq(cand) * std::abs(phi(cand));
          if (v > out.value) {
            out.value = v;
            out.argmax = z = cand;
            moved = true;
          }
        }
      }
    }
  }
  out.error_bound = queue.empty() ? 0.0 : std::max(0.0, queue.top().upper - out.value);
  return out;
}

double disk_reduction_radius(int degree) {
  if (degree <= 0) return 0.5;
  return std::sqrt(static_cast<double>(degree) / (degree + 4.0));
}

QNorm q_norm_disk(const PolyQuadDiff& phi, const QNormOptions& options) {
  return q_norm(phi, disk_reduction_radius(phi.degree()), options);
}

double variation_bound(double delta) {
  require(delta > 0.0 && delta < 0.5, "delta must be in (0, 1/2)");
  const double c1 = 128.0 / (9.0 * (1.0 - 2.0 * delta) * (1.0 - 2.0 * delta));
  const double c2 = 2.0 * delta;
  const double shrink = (1.0 - delta * delta) * (1.0 - delta * delta);
  return shrink * c1 * delta / 4.0 + 64.0 * c2 * delta / 9.0;
}

double variation_delta_for_xi(double xi) {
  require(std::isfinite(xi) && xi > 0.0, "xi must be positive");
  constexpr double kCap = 0.49;
  if (variation_bound(kCap) < xi) return kCap;
  double lo = 0.0;
  double hi = kCap;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = (lo + hi) / 2.0;
    (variation_bound(mid) < xi ? lo : hi) = mid;
  }
  ensure(lo > 0.0 && variation_bound(lo) < xi, "bisection for delta failed");
  return lo;
}

QuadDiffFamily random_family(std::size_t count, int max_degree, std::uint64_t seed, int threads) {
  require(max_degree >= 0, "max degree must be non-negative");
  QuadDiffFamily fam;
  fam.seed = seed;
  fam.max_degree = max_degree;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<PolyQuadDiff> raw;
  raw.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Complex> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (Complex& x : c) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      x = Complex(re, im);
    }
    raw.emplace_back(std::move(c));
  }
  auto normalized = parallel_map(count, threads, [&](std::size_t i) {
    const QNorm n = q_norm_disk(raw[i]);
    ensure(n.value > 0.0, "random quadratic differential has zero norm");
    return std::pair<PolyQuadDiff, double>{raw[i].scaled(1.0 / n.value),
                                           n.error_bound / n.value};
  });
  for (auto& [phi, err] : normalized) {
    fam.members.push_back(std::move(phi));
    fam.norm_errors.push_back(err);
  }
  return fam;
}

VariationReport empirical_variation(const std::vector<PolyQuadDiff>& family, double delta,
                                    std::uint64_t trials, std::uint64_t seed,
                                    double euclidean_radius, int threads) {
  require(delta > 0.0, "delta must be positive");
  require(euclidean_radius > 0.0 && euclidean_radius < 1.0, "region radius must be in (0, 1)");
  auto per_member = parallel_map(family.size(), threads, [&](std::size_t i) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(i)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const PolyQuadDiff& phi = family[i];
    VariationReport r;
    for (std::uint64_t t = 0; t < trials; ++t) {
      const Complex z = std::polar(euclidean_radius * std::sqrt(unit(rng)),
                                   2.0 * std::numbers::pi * unit(rng));
      const double d = delta * unit(rng);  // in [0, delta)
      const Complex w0 = std::polar(std::tanh(d / 2.0), 2.0 * std::numbers::pi * unit(rng));
      const Complex w = mobius_from_origin(z, w0);
      const double diff = std::abs(inverse_density_sq(z) * phi(z) - inverse_density_sq(w) * phi(w));
      ++r.pairs;
      if (diff > r.max_observed) {
        r.max_observed = diff;
        r.worst_z = z;
        r.worst_w = w;
      }
    }
    return r;
  });
  VariationReport out;
  for (const auto& r : per_member) {
    out.pairs += r.pairs;
    if (r.max_observed > out.max_observed) {
      out.max_observed = r.max_observed;
      out.worst_z = r.worst_z;
      out.worst_w = r.worst_w;
    }
  }
  return out;
}

std::vector<Complex> sample_map(const PolyQuadDiff& phi, const DiskNet& net) {
  std::vector<Complex> out;
  out.reserve(net.size());
  for (const Complex& z : net.points()) out.push_back(inverse_density_sq(z) * phi(z));
  return out;
}

double sup_abs(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const Complex& x : v) m = std::max(m, std::abs(x));
  return m;
}

BiLipschitzReport empirical_bilipschitz(const DiskNet& net, const std::vector<PolyQuadDiff>& family,
                                        int threads) {
  require(!family.empty(), "empty family");
  auto ratios = parallel_map(family.size(), threads, [&](std::size_t i) {
    const QNorm n = q_norm_disk(family[i]);
    require(n.value > 0.0, "family member has zero norm");
    return std::pair<double, double>{sup_abs(sample_map(family[i], net)) / n.value,
                                     n.error_bound / n.value};
  });
  BiLipschitzReport out;
  out.family_size = family.size();
  out.lower = ratios.front().first;
  out.upper = ratios.front().first;
  for (const auto& [ratio, err] : ratios) {
    out.lower = std::min(out.lower, ratio);
    out.upper = std::max(out.upper, ratio);
    out.max_norm_error = std::max(out.max_norm_error, err);
  }
  return out;
}

CauchyReport cauchy_check(const std::vector<PolyQuadDiff>& family, std::uint64_t samples_per_member,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  CauchyReport out;
  for (const PolyQuadDiff& phi : family) {
    for (std::uint64_t s = 0; s < samples_per_member; ++s) {
      // Half the samples on the circle |p| = 1/2, where rho^2 is largest.
      const double r = (s % 2 == 0) ? 0.5 : 0.5 * std::sqrt(unit(rng));
      const Complex p = std::polar(r, 2.0 * std::numbers::pi * unit(rng));
      const double a = std::abs(phi(p));
      out.max_abs_phi = std::max(out.max_abs_phi, a);
      out.max_ratio = std::max(out.max_ratio, a * inverse_density_sq(p));
      ++out.samples;
    }
  }
  return out;
}

}  // namespace covnum
