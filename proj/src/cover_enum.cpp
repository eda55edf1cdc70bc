#include "covnum/cover_enum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "covnum/errors.hpp"
#include "covnum/parallel.hpp"

namespace covnum {

using boost::multiprecision::cpp_rational;

Perm identity_perm() {
  Perm p{};
  for (int i = 0; i < kMaxPermDegree; ++i) p[i] = static_cast<std::uint8_t>(i);
  return p;
}

Perm compose(const Perm& x, const Perm& y) {
  Perm p{};
  for (int i = 0; i < kMaxPermDegree; ++i) p[i] = y[x[i]];
  return p;
}

Perm inverse(const Perm& x) {
  Perm p{};
  for (int i = 0; i < kMaxPermDegree; ++i) p[x[i]] = static_cast<std::uint8_t>(i);
  return p;
}

Perm commutator(const Perm& x, const Perm& y) {
  return compose(compose(compose(x, y), inverse(x)), inverse(y));
}

std::vector<Perm> all_perms(int d) {
  require(d >= 1 && d <= kMaxPermDegree, "degree out of range");
  std::vector<Perm> out;
  Perm p = identity_perm();
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.begin() + d));
  return out;
}

std::string perm_to_string(const Perm& p, int d) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < d; ++i) os << (i ? "," : "") << static_cast<int>(p[i]);
  os << ']';
  return os.str();
}

bool satisfies_relator(const PermTuple& t) {
  const Perm r = compose(commutator(t.gens[0], t.gens[1]), commutator(t.gens[2], t.gens[3]));
  return r == identity_perm();
}

bool is_transitive(const PermTuple& t) {
  std::uint32_t seen = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (const Perm& g : t.gens) {
      const int j = g[i];
      if (!(seen >> j & 1U)) {
        seen |= 1U << j;
        stack.push_back(j);
      }
    }
  }
  return seen == (1U << t.degree) - 1;
}

PermTuple conjugate(const PermTuple& t, const Perm& g) {
  PermTuple out{t.degree, {}};
  const Perm gi = inverse(g);
  for (int k = 0; k < 4; ++k) out.gens[k] = compose(compose(gi, t.gens[k]), g);
  return out;
}

std::uint64_t centralizer_order(const PermTuple& t) {
  std::uint64_t count = 0;
  for (const Perm& g : all_perms(t.degree)) {
    bool ok = true;
    for (const Perm& x : t.gens) {
      if (compose(x, g) != compose(g, x)) {
        ok = false;
        break;
      }
    }
    count += ok;
  }
  return count;
}

PermTuple canonical_representative(const PermTuple& t, bool marked) {
  PermTuple best = t;
  for (const Perm& g : all_perms(t.degree)) {
    if (marked && g[0] != 0) continue;
    const PermTuple c = conjugate(t, g);
    if (c < best) best = c;
  }
  return best;
}

namespace {

// Least element of each conjugacy class of S_d.
std::vector<Perm> class_minima(int d) {
  const auto perms = all_perms(d);
  std::set<Perm> minima;
  for (const Perm& x : perms) {
    Perm best = x;
    for (const Perm& g : perms) best = std::min(best, compose(compose(inverse(g), x), g));
    minima.insert(best);
  }
  return {minima.begin(), minima.end()};
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

constexpr int kExhaustiveCap = 4;

}  // namespace

std::vector<CoverClass> enumerate_cover_classes(int d, bool marked, int threads) {
  require(d >= 1, "degree must be positive");
  require(d <= kExhaustiveCap, "degree above the exhaustive cap of 4");
  const auto perms = all_perms(d);
  const auto firsts = class_minima(d);
  // When marked, conjugation only fixes 0, so a1 is not confined to class minima.
  const std::vector<Perm>& a1_range = marked ? perms : firsts;
  auto parts = parallel_map(a1_range.size(), threads, [&](std::size_t idx) {
    std::vector<CoverClass> found;
    PermTuple t{d, {}};
    t.gens[0] = a1_range[idx];
    for (const Perm& b1 : perms) {
      t.gens[1] = b1;
      const Perm c1 = commutator(t.gens[0], b1);
      for (const Perm& a2 : perms) {
        t.gens[2] = a2;
        for (const Perm& b2 : perms) {
          if (compose(c1, commutator(a2, b2)) != identity_perm()) continue;
          t.gens[3] = b2;
          if (!is_transitive(t)) continue;
          if (canonical_representative(t, marked) != t) continue;
          CoverClass c;
          c.representative = t;
          c.degree = d;
          c.transitive = true;
          c.cover_genus = riemann_hurwitz_genus(d);
          c.stabilizer_order = marked ? 1 : centralizer_order(t);
          found.push_back(c);
        }
      }
    }
    return found;
  });
  std::vector<CoverClass> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end(), [](const CoverClass& x, const CoverClass& y) {
    return x.representative < y.representative;
  });
  return out;
}

ScanResult exhaustive_scan(int d, int threads) {
  require(d >= 1, "degree must be positive");
  require(d <= kExhaustiveCap, "degree above the exhaustive cap of 4");
  const auto perms = all_perms(d);
  struct Partial {
    std::uint64_t homs = 0;
    std::uint64_t transitive = 0;
    std::uint64_t centralizer_sum = 0;
  };
  auto parts = parallel_map(perms.size(), threads, [&](std::size_t idx) {
    Partial p;
    PermTuple t{d, {}};
    t.gens[0] = perms[idx];
    for (const Perm& b1 : perms) {
      t.gens[1] = b1;
      const Perm c1 = commutator(t.gens[0], b1);
      for (const Perm& a2 : perms) {
        t.gens[2] = a2;
        for (const Perm& b2 : perms) {
          t.gens[3] = b2;
          if (compose(c1, commutator(a2, b2)) != identity_perm()) continue;
          ++p.homs;
          if (!is_transitive(t)) continue;
          ++p.transitive;
          p.centralizer_sum += centralizer_order(t);
        }
      }
    }
    return p;
  });
  ScanResult r;
  r.degree = d;
  std::uint64_t centralizer_sum = 0;
  for (const Partial& p : parts) {
    r.hom_count += p.homs;
    r.transitive_count += p.transitive;
    centralizer_sum += p.centralizer_sum;
  }
  ensure(centralizer_sum % factorial(d) == 0, "orbit count is not integral");
  r.class_count = centralizer_sum / factorial(d);
  ensure(r.transitive_count % factorial(d - 1) == 0, "marked count is not integral");
  r.marked_class_count = r.transitive_count / factorial(d - 1);
  return r;
}

namespace {

void partitions(int n, int max_part, std::vector<int>& current,
                std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions(n - p, p, current, out);
    current.pop_back();
  }
}

BigInt big_factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

BigInt mednykh_hom_count(int n) {
  require(n >= 1 && n <= kMaxPermDegree, "n must be in [1, 8]");
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions(n, n, cur, parts);
  const BigInt nf = big_factorial(n);
  cpp_rational sum = 0;
  for (const auto& lambda : parts) {
    BigInt hooks = 1;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      for (int j = 0; j < lambda[i]; ++j) {
        int below = 0;
        for (std::size_t r = i + 1; r < lambda.size() && lambda[r] > j; ++r) ++below;
        hooks *= (lambda[i] - j - 1) + below + 1;
      }
    }
    ensure(nf % hooks == 0, "hook length formula gave a non-integer dimension");
    const BigInt dim = nf / hooks;
    sum += cpp_rational(1, dim * dim);
  }
  const cpp_rational total = sum * cpp_rational(nf * nf * nf);
  ensure(denominator(total) == 1, "Mednykh count is not an integer");
  return numerator(total);
}

HallCounts hall_transitive_counts(const std::vector<BigInt>& hom_counts) {
  const int n_max = static_cast<int>(hom_counts.size());
  std::vector<BigInt> h(n_max + 1);
  h[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    require(hom_counts[n - 1] >= 0, "hom counts must be non-negative");
    h[n] = hom_counts[n - 1];
  }
  // binom(n-1, k-1) by Pascal's rule.
  std::vector<std::vector<BigInt>> binom(n_max + 1, std::vector<BigInt>(n_max + 1, 0));
  for (int a = 0; a <= n_max; ++a) {
    binom[a][0] = 1;
    for (int b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + binom[a - 1][b];
  }
  HallCounts out;
  std::vector<BigInt> t(n_max + 1, 0);
  for (int n = 1; n <= n_max; ++n) {
    BigInt v = h[n];
    for (int k = 1; k < n; ++k) v -= binom[n - 1][k - 1] * t[k] * h[n - k];
    t[n] = v;
    const BigInt f = big_factorial(n - 1);
    ensure(v % f == 0, "subgroup count is not an integer");
    out.transitive.push_back(v);
    out.subgroups.push_back(v / f);
  }
  return out;
}

int riemann_hurwitz_genus(int d) {
  require(d >= 1, "degree must be positive");
  // chi(cover) = d chi(base) = -2d, so 2 - 2g = -2d.
  return d + 1;
}

LabelingBound labeling_bound(std::uint64_t n_vertices, std::uint64_t n_gridpoints, std::uint64_t g) {
  require(n_vertices >= 1 && n_gridpoints >= 1 && g >= 1, "inputs must be positive");
  const std::uint64_t exponent = n_gridpoints * (g - 1);
  require(exponent <= 1'000'000, "exponent too large for exact evaluation");
  LabelingBound b;
  b.exact = boost::multiprecision::pow(BigInt(n_vertices + 1), static_cast<unsigned>(exponent));
  b.log10 = static_cast<double>(exponent) * std::log10(static_cast<double>(n_vertices + 1));
  return b;
}

CensusEntry census(int d, int threads, bool include_representatives) {
  require(d >= 1 && d <= kMaxPermDegree, "degree must be in [1, 8]");
  CensusEntry e;
  e.degree = d;
  e.cover_genus = riemann_hurwitz_genus(d);
  std::vector<BigInt> homs;
  for (int n = 1; n <= d; ++n) homs.push_back(mednykh_hom_count(n));
  const HallCounts hall = hall_transitive_counts(homs);
  e.hom_count = homs.back();
  e.transitive_count = hall.transitive.back();
  e.subgroup_count = hall.subgroups.back();
  if (d > kExhaustiveCap) {
    e.provenance = "oracle-only";
    return e;
  }
  e.provenance = "exhaustive";
  const ScanResult scan = exhaustive_scan(d, threads);
  const auto classes = enumerate_cover_classes(d, false, threads);
  BigInt from_classes = 0;
  for (const CoverClass& c : classes) {
    from_classes += BigInt(factorial(d) / c.stabilizer_order);
    if (include_representatives) e.representatives.push_back(c.representative);
  }
  e.class_count = classes.size();
  e.oracles_agree = BigInt(scan.hom_count) == e.hom_count &&
                    BigInt(scan.transitive_count) == e.transitive_count &&
                    from_classes == e.transitive_count && scan.class_count == classes.size() &&
                    BigInt(scan.marked_class_count) == e.subgroup_count;
  return e;
}

}  // namespace covnum
