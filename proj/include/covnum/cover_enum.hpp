#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace covnum {

using BigInt = boost::multiprecision::cpp_int;

// Permutations of {0, ..., d-1}, d <= 8, stored in a fixed array whose
// entries past d are the identity. Products read left to right:
// (x y)(i) = y(x(i)); the commutator is [x, y] = x y x^{-1} y^{-1}.
constexpr int kMaxPermDegree = 8;
using Perm = std::array<std::uint8_t, kMaxPermDegree>;

Perm identity_perm();
Perm compose(const Perm& x, const Perm& y);
Perm inverse(const Perm& x);
Perm commutator(const Perm& x, const Perm& y);
std::vector<Perm> all_perms(int d);  // lexicographic order
std::string perm_to_string(const Perm& p, int d);  // one-line image list

// (a1, b1, a2, b2) with [a1, b1][a2, b2] = 1: a homomorphism from the
// genus-2 surface group to S_d.
struct PermTuple {
  int degree = 1;
  std::array<Perm, 4> gens{};

  auto operator<=>(const PermTuple&) const = default;
};

bool satisfies_relator(const PermTuple& t);
bool is_transitive(const PermTuple& t);
// Simultaneous relabelling by g: x -> g^{-1} x g.
PermTuple conjugate(const PermTuple& t, const Perm& g);
// Number of g in S_d commuting with all four generators.
std::uint64_t centralizer_order(const PermTuple& t);
// Least conjugate over S_d, or over the stabilizer of 0 when marked.
PermTuple canonical_representative(const PermTuple& t, bool marked = false);

struct CoverClass {
  PermTuple representative;
  int degree = 1;
  bool transitive = true;
  int cover_genus = 2;
  std::uint64_t stabilizer_order = 1;  // centralizer order (marked: 1)
};

// Transitive tuples up to simultaneous conjugation (or conjugation fixing 0
// when marked), one canonical representative each, in increasing order.
// a1 runs only over the least element of each conjugacy class. d <= 4.
std::vector<CoverClass> enumerate_cover_classes(int d, bool marked = false, int threads = 1);

struct ScanResult {
  int degree = 1;
  std::uint64_t hom_count = 0;
  std::uint64_t transitive_count = 0;
  std::uint64_t class_count = 0;         // sum of |centralizer| / d! over transitive homs
  std::uint64_t marked_class_count = 0;  // transitive_count / (d-1)!
};

// Every quadruple in S_d^4. d <= 4.
ScanResult exhaustive_scan(int d, int threads = 1);

// (n!)^3 sum over partitions lambda of n of (dim lambda)^{-2}, dim by the
// hook length formula, in exact rational arithmetic. n <= 8.
BigInt mednykh_hom_count(int n);

struct HallCounts {
  std::vector<BigInt> transitive;  // t_1..t_N (index 0 is t_1)
  std::vector<BigInt> subgroups;   // s_n = t_n / (n-1)!
};

// h_n = sum_{k=1}^{n} C(n-1, k-1) t_k h_{n-k}, h_0 = 1; hom_counts[i] is h_{i+1}.
HallCounts hall_transitive_counts(const std::vector<BigInt>& hom_counts);

int riemann_hurwitz_genus(int d);

struct LabelingBound {
  BigInt exact;
  double log10 = 0.0;
};

// (n + 1)^{N (g - 1)}.
LabelingBound labeling_bound(std::uint64_t n_vertices, std::uint64_t n_gridpoints, std::uint64_t g);

struct CensusEntry {
  int degree = 1;
  int cover_genus = 2;
  BigInt hom_count;
  BigInt transitive_count;
  BigInt subgroup_count;
  std::optional<std::uint64_t> class_count;  // absent on the oracle-only path
  std::vector<PermTuple> representatives;
  std::string provenance;  // "exhaustive" or "oracle-only"
  bool oracles_agree = true;
};

// Exhaustive scan, Mednykh + Hall and class enumeration for d <= 4 (with
// cross-checks); Mednykh + Hall only for 5 <= d <= 8.
CensusEntry census(int d, int threads = 1, bool include_representatives = true);

}  // namespace covnum
