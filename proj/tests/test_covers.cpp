#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "covnum/cover_enum.hpp"
#include "covnum/errors.hpp"

using namespace covnum;

namespace {

// Plain vector permutations, composed as functions: (p * q)(i) = p(q(i)).
using P = std::vector<int>;

P mul(const P& p, const P& q) {
  P r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

P inv(const P& p) {
  P r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

std::vector<P> every_perm(int d) {
  P p(d);
  std::iota(p.begin(), p.end(), 0);
  std::vector<P> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool transitive(const std::array<P, 4>& g) {
  const int d = static_cast<int>(g[0].size());
  std::vector<char> seen(d, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const auto& p : g) {
      if (!seen[p[x]]) {
        seen[p[x]] = 1;
        ++count;
        stack.push_back(p[x]);
      }
    }
  }
  return count == d;
}

struct Counts {
  std::uint64_t homs = 0;
  std::uint64_t transitive = 0;
  std::uint64_t classes = 0;
};

// The relator in either composition convention is the same condition up to
// inverting the tuple, so counts do not depend on it. Classes are counted by
// collecting the least conjugate of every transitive tuple.
Counts brute_force(int d) {
  const auto perms = every_perm(d);
  Counts c;
  std::set<std::array<P, 4>> classes;
  for (const auto& a1 : perms)
    for (const auto& b1 : perms) {
      const P k1 = mul(mul(a1, b1), mul(inv(a1), inv(b1)));
      for (const auto& a2 : perms)
        for (const auto& b2 : perms) {
          const P k2 = mul(mul(a2, b2), mul(inv(a2), inv(b2)));
          if (mul(k1, k2) != perms.front()) continue;
          ++c.homs;
          const std::array<P, 4> t{a1, b1, a2, b2};
          if (!transitive(t)) continue;
          ++c.transitive;
          std::array<P, 4> best = t;
          for (const auto& g : perms) {
            std::array<P, 4> conj;
            for (int i = 0; i < 4; ++i) conj[i] = mul(mul(inv(g), t[i]), g);
            best = std::min(best, conj);
          }
          classes.insert(best);
        }
    }
  c.classes = classes.size();
  return c;
}

Perm to_perm(const P& p) {
  Perm out = identity_perm();
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = static_cast<std::uint8_t>(p[i]);
  return out;
}

PermTuple random_transitive_tuple(int d, std::mt19937_64& rng) {
  const auto perms = all_perms(d);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  while (true) {
    PermTuple t;
    t.degree = d;
    for (auto& g : t.gens) g = perms[pick(rng)];
    if (satisfies_relator(t) && is_transitive(t)) return t;
  }
}

}  // namespace

TEST(Perm, CompositionConvention) {
  // x = (0 1), y = (1 2): left-to-right product sends 0 -> 1 -> 2.
  Perm x = identity_perm(), y = identity_perm();
  std::swap(x[0], x[1]);
  std::swap(y[1], y[2]);
  const Perm xy = compose(x, y);
  EXPECT_EQ(xy[0], 2);
  EXPECT_EQ(xy[1], 0);
  EXPECT_EQ(xy[2], 1);
  EXPECT_EQ(compose(x, inverse(x)), identity_perm());
  // [x, y] = x y x^-1 y^-1, read left to right.
  EXPECT_EQ(commutator(x, y), compose(compose(x, y), compose(inverse(x), inverse(y))));
  EXPECT_EQ(perm_to_string(xy, 3), "[2,0,1]");
  EXPECT_EQ(all_perms(4).size(), 24u);
}

TEST(Perm, RelatorAndTransitivity) {
  PermTuple t;
  t.degree = 3;
  for (auto& g : t.gens) g = identity_perm();
  EXPECT_TRUE(satisfies_relator(t));
  EXPECT_FALSE(is_transitive(t));
  EXPECT_EQ(centralizer_order(t), 6u);
  // a1 = (0 1 2) and everything else trivial: transitive, relator holds.
  t.gens[0][0] = 1;
  t.gens[0][1] = 2;
  t.gens[0][2] = 0;
  EXPECT_TRUE(satisfies_relator(t));
  EXPECT_TRUE(is_transitive(t));
  EXPECT_EQ(centralizer_order(t), 3u);
  // a1 = (0 1), b1 = (1 2) has commutator a 3-cycle.
  PermTuple u;
  u.degree = 3;
  for (auto& g : u.gens) g = identity_perm();
  std::swap(u.gens[0][0], u.gens[0][1]);
  std::swap(u.gens[1][1], u.gens[1][2]);
  EXPECT_FALSE(satisfies_relator(u));
}

TEST(Census, SmallDegrees) {
  const auto c1 = census(1);
  EXPECT_EQ(c1.hom_count, 1);
  EXPECT_EQ(c1.transitive_count, 1);
  ASSERT_TRUE(c1.class_count.has_value());
  EXPECT_EQ(*c1.class_count, 1u);
  const auto c2 = census(2);
  EXPECT_EQ(c2.hom_count, 16);
  EXPECT_EQ(c2.subgroup_count, 15);
  EXPECT_EQ(*c2.class_count, 15u);
  EXPECT_EQ(c2.cover_genus, 3);
  EXPECT_EQ(c2.representatives.size(), 15u);
  EXPECT_TRUE(c2.oracles_agree);
  EXPECT_EQ(c2.provenance, "exhaustive");
}

TEST(Census, AgreesWithIndependentBruteForce) {
  for (int d = 1; d <= 4; ++d) {
    const auto b = brute_force(d);
    const auto c = census(d, 1, false);
    EXPECT_EQ(c.hom_count, b.homs) << d;
    EXPECT_EQ(c.transitive_count, b.transitive) << d;
    ASSERT_TRUE(c.class_count.has_value());
    EXPECT_EQ(*c.class_count, b.classes) << d;
    EXPECT_TRUE(c.oracles_agree);
    const auto scan = exhaustive_scan(d);
    EXPECT_EQ(scan.hom_count, b.homs);
    EXPECT_EQ(scan.class_count, b.classes);
  }
}

TEST(Census, KnownValues) {
  const std::uint64_t homs[] = {1, 16, 486, 34176};
  const std::uint64_t trans[] = {1, 15, 440, 31650};
  const std::uint64_t subs[] = {1, 15, 220, 5275};
  const std::uint64_t classes[] = {1, 15, 100, 1615};
  for (int d = 1; d <= 4; ++d) {
    const auto c = census(d, 2, false);
    EXPECT_EQ(c.hom_count, homs[d - 1]);
    EXPECT_EQ(c.transitive_count, trans[d - 1]);
    EXPECT_EQ(c.subgroup_count, subs[d - 1]);
    EXPECT_EQ(*c.class_count, classes[d - 1]);
  }
}

TEST(Census, ThreadCountDoesNotMatter) {
  const auto a = census(4, 1, true), b = census(4, 3, true);
  EXPECT_EQ(a.representatives, b.representatives);
  EXPECT_EQ(a.class_count, b.class_count);
}

TEST(Census, OracleOnlyPathForLargerDegrees) {
  for (int d = 5; d <= 8; ++d) {
    const auto c = census(d);
    EXPECT_EQ(c.provenance, "oracle-only");
    EXPECT_FALSE(c.class_count.has_value());
    EXPECT_EQ(c.hom_count, mednykh_hom_count(d));
    EXPECT_EQ(c.cover_genus, d + 1);
    EXPECT_GT(c.subgroup_count, 0);
  }
  EXPECT_EQ(census(8).hom_count, BigInt("135486004792320"));
  EXPECT_THROW(census(9), ValidationError);
  EXPECT_THROW(census(0), ValidationError);
}

TEST(Mednykh, ClosedForms) {
  EXPECT_EQ(mednykh_hom_count(1), 1);
  EXPECT_EQ(mednykh_hom_count(2), 16);    // 8 (1 + 1)
  EXPECT_EQ(mednykh_hom_count(3), 486);   // 216 (1 + 1 + 1/4)
  // S_4 irreps have dimensions 1, 1, 2, 3, 3.
  const BigInt f = 24 * 24 * 24;
  EXPECT_EQ(mednykh_hom_count(4), f * 2 + f / 4 + f * 2 / 9);
}

TEST(Hall, RecursionInverts) {
  std::vector<BigInt> h;
  for (int n = 1; n <= 8; ++n) h.push_back(mednykh_hom_count(n));
  const auto hc = hall_transitive_counts(h);
  ASSERT_EQ(hc.transitive.size(), 8u);
  // Rebuild h from t and compare.
  std::vector<BigInt> hh{1};
  std::vector<BigInt> fact{1};
  for (int n = 1; n <= 8; ++n) fact.push_back(fact.back() * n);
  for (int n = 1; n <= 8; ++n) {
    BigInt s = 0;
    for (int k = 1; k <= n; ++k) {
      const BigInt binom = fact[n - 1] / (fact[k - 1] * fact[n - k]);
      s += binom * hc.transitive[k - 1] * hh[n - k];
    }
    hh.push_back(s);
    EXPECT_EQ(s, h[n - 1]);
    EXPECT_EQ(hc.transitive[n - 1] % fact[n - 1], 0);
    EXPECT_EQ(hc.subgroups[n - 1] * fact[n - 1], hc.transitive[n - 1]);
  }
}

TEST(CoverClasses, CanonicalIsLeastConjugate) {
  std::mt19937_64 rng(61);
  const auto perms = all_perms(4);
  for (int t = 0; t < 30; ++t) {
    const auto tuple = random_transitive_tuple(4, rng);
    const auto canon = canonical_representative(tuple);
    for (const auto& g : perms) {
      const auto conj = conjugate(tuple, g);
      EXPECT_LE(canon, conj);
      EXPECT_EQ(canonical_representative(conj), canon);
    }
  }
}

TEST(CoverClasses, ConjugateMatchesDefinition) {
  std::mt19937_64 rng(62);
  const auto tuple = random_transitive_tuple(4, rng);
  for (const auto& gv : every_perm(4)) {
    const Perm g = to_perm(gv);
    const auto c = conjugate(tuple, g);
    for (int i = 0; i < 4; ++i) {
      EXPECT_EQ(c.gens[i], compose(compose(inverse(g), tuple.gens[i]), g));
    }
    EXPECT_TRUE(satisfies_relator(c));
  }
}

TEST(CoverClasses, OrbitStabilizerSum) {
  for (int d = 2; d <= 4; ++d) {
    const auto classes = enumerate_cover_classes(d);
    std::uint64_t fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    std::uint64_t total = 0;
    for (const auto& c : classes) {
      EXPECT_EQ(fact % c.stabilizer_order, 0u);
      EXPECT_EQ(c.stabilizer_order, centralizer_order(c.representative));
      EXPECT_EQ(c.cover_genus, d + 1);
      total += fact / c.stabilizer_order;
    }
    EXPECT_EQ(total, census(d, 1, false).transitive_count);
  }
}

TEST(CoverClasses, MarkedClassesAreSubgroups) {
  for (int d = 1; d <= 4; ++d) {
    EXPECT_EQ(BigInt(enumerate_cover_classes(d, true).size()), census(d, 1, false).subgroup_count);
  }
}

TEST(RiemannHurwitz, UnbranchedGenus) {
  for (int d = 1; d <= 8; ++d) EXPECT_EQ(riemann_hurwitz_genus(d), d * (2 - 1) + 1);
}

TEST(LabelingBound, Examples) {
  const auto a = labeling_bound(5, 10, 3);
  EXPECT_EQ(a.exact, BigInt("3656158440062976"));
  EXPECT_NEAR(a.log10, 20 * std::log10(6.0), 1e-12);
  EXPECT_EQ(labeling_bound(5, 10, 1).exact, 1);
  EXPECT_THROW(labeling_bound(0, 3, 2), ValidationError);
  EXPECT_EQ(labeling_bound(1, 4, 2).exact, 16);
}
