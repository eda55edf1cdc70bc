#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covnum/cover_enum.hpp"

namespace covnum {

// Explicit constants: b_l = 12 for the lower Bers constant and Nehari's
// radius 6. Everything else is a user input.
inline constexpr double kBersLowerConstant = 12.0;
inline constexpr double kNehariRadius = 6.0;

struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, double>> inputs;
  std::optional<double> value_log10;  // absent when the value is exactly 0
  std::optional<double> value;        // plain value, when it fits in a double
  std::optional<BigInt> exact;        // integer inputs and exponents <= 1e4
  std::string provenance;             // the formula evaluated
};

struct BoundPair {
  BoundReport lower;
  BoundReport upper;
};

// (c1 g)^{2g} and (c2 g)^{2g}, as 2g (log10 c + log10 g).
BoundPair main_theorem_bounds(int g, double c1, double c2);

struct CompositionReport {
  BoundReport report;      // ((P / sqrt D) g)^{2g}
  double c_l = 0.0;        // P / sqrt(D)
  double lhs_log10 = 0.0;  // log10 of (P g)^{2g} / D^g
  double rhs_log10 = 0.0;  // log10 of (c_l g)^{2g}
  double residual = 0.0;   // |lhs - rhs|
};

CompositionReport lower_bound_composition(double p, double d, int g);

// 2 (log g + log c1) / log d2 - 1.
BoundReport diameter_chain(int g, double c1, double d2);

struct TeichBallReport {
  BoundReport lower;  // d1^g
  BoundReport upper;  // d2^g
  bool ordered = false;  // lower <= upper, i.e. d1 <= d2
};

TeichBallReport teich_ball_bounds(int g, double d1, double d2);

// D^g - Q^g > 0, in log form g log10 D + log10(1 - (Q/D)^g).
BoundReport packing_budget(double big_d, double q, int g, double r_of_d);

BoundReport labeling_bound_report(std::uint64_t n_vertices, std::uint64_t n_gridpoints, std::uint64_t g);

// log10 of a positive big integer, accurate to double precision.
double big_log10(const BigInt& x);

// True when `exact` is absent, or agrees with value_log10 to the relative
// tolerance (or both are zero).
bool exact_matches_log(const BoundReport& r, double relative_tolerance = 1e-9);

}  // namespace covnum
