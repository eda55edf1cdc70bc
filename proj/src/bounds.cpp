#include "covnum/bounds.hpp"

#include <cmath>
#include <limits>

#include "covnum/errors.hpp"

namespace covnum {

namespace {

constexpr double kExactExponentCap = 1e4;

std::optional<std::uint64_t> as_integer(double x) {
  if (!(x >= 0.0) || x > 1e15) return std::nullopt;
  const double r = std::round(x);
  if (std::abs(x - r) > 1e-12 * std::max(1.0, r)) return std::nullopt;
  return static_cast<std::uint64_t>(r);
}

std::optional<BigInt> exact_power(double base, double exponent) {
  const auto b = as_integer(base);
  const auto e = as_integer(exponent);
  if (!b || !e || static_cast<double>(*e) > kExactExponentCap) return std::nullopt;
  return boost::multiprecision::pow(BigInt(*b), static_cast<unsigned>(*e));
}

void fill_value(BoundReport& r) {
  if (r.value_log10 && *r.value_log10 < 300.0 && *r.value_log10 > -300.0) {
    r.value = r.exact ? r.exact->convert_to<double>() : std::pow(10.0, *r.value_log10);
  }
}

BoundReport power_report(std::string name, double base, double exponent,
                         std::vector<std::pair<std::string, double>> inputs, std::string provenance) {
  BoundReport r;
  r.name = std::move(name);
  r.inputs = std::move(inputs);
  r.provenance = std::move(provenance);
  if (base == 0.0) {
    r.value = 0.0;
    r.exact = BigInt(0);
    return r;
  }
  r.value_log10 = exponent * std::log10(base);
  r.exact = exact_power(base, exponent);
  fill_value(r);
  return r;
}

}  // namespace

double big_log10(const BigInt& x) {
  require(x > 0, "log10 of a non-positive integer");
  const auto bits = boost::multiprecision::msb(x);
  if (bits < 53) return std::log10(x.convert_to<double>());
  const auto shift = bits - 52;
  const double mantissa = static_cast<BigInt>(x >> shift).convert_to<double>();
  return std::log10(mantissa) + static_cast<double>(shift) * std::log10(2.0);
}

bool exact_matches_log(const BoundReport& r, double relative_tolerance) {
  if (!r.exact) return true;
  if (*r.exact == 0) return !r.value_log10.has_value();
  if (!r.value_log10) return false;
  const double exact_log = big_log10(*r.exact);
  return std::abs(exact_log - *r.value_log10) <=
         relative_tolerance * std::max(1.0, std::abs(exact_log));
}

BoundPair main_theorem_bounds(int g, double c1, double c2) {
  require(g >= 2, "genus must be at least 2");
  require(c1 > 0.0 && c2 > 0.0, "constants must be positive");
  auto one = [&](const char* name, const char* cname, double c) {
    return power_report(name, c * g, 2.0 * g, {{"g", g}, {cname, c}}, "(c g)^(2g)");
  };
  BoundPair out{one("main_theorem_lower", "c1", c1), one("main_theorem_upper", "c2", c2)};
  // 2g (log10 c + log10 g), so the ratio is exactly (c2/c1)^(2g) in log space.
  out.lower.value_log10 = 2.0 * g * (std::log10(c1) + std::log10(static_cast<double>(g)));
  out.upper.value_log10 = 2.0 * g * (std::log10(c2) + std::log10(static_cast<double>(g)));
  fill_value(out.lower);
  fill_value(out.upper);
  return out;
}

CompositionReport lower_bound_composition(double p, double d, int g) {
  require(p > 0.0 && d > 0.0, "P and D must be positive");
  require(g >= 1, "genus must be positive");
  CompositionReport out;
  out.c_l = p / std::sqrt(d);
  const double lg = std::log10(static_cast<double>(g));
  out.lhs_log10 = 2.0 * g * (std::log10(p) + lg) - g * std::log10(d);
  out.rhs_log10 = 2.0 * g * (std::log10(out.c_l) + lg);
  out.residual = std::abs(out.lhs_log10 - out.rhs_log10);
  BoundReport& r = out.report;
  r.name = "lower_bound_composition";
  r.inputs = {{"P", p}, {"D", d}, {"g", g}, {"c_l", out.c_l}};
  r.provenance = "(P g)^(2g) / D^g = ((P / sqrt D) g)^(2g)";
  r.value_log10 = out.lhs_log10;
  fill_value(r);
  return out;
}

BoundReport diameter_chain(int g, double c1, double d2) {
  require(g >= 1, "genus must be positive");
  require(c1 > 0.0, "c1 must be positive");
  require(d2 > 1.0, "d2 must exceed 1");
  BoundReport r;
  r.name = "diameter_chain";
  r.inputs = {{"g", g}, {"c1", c1}, {"d2", d2}};
  r.provenance = "2 (log g + log c1) / log d2 - 1 <= diam";
  r.value = 2.0 * (std::log(static_cast<double>(g)) + std::log(c1)) / std::log(d2) - 1.0;
  return r;
}

TeichBallReport teich_ball_bounds(int g, double d1, double d2) {
  require(g >= 1, "genus must be positive");
  require(d1 >= 0.0, "d1 must be non-negative");
  require(d2 > 1.0, "d2 must exceed 1");
  TeichBallReport out;
  out.lower = power_report("teich_ball_lower", d1, g, {{"g", g}, {"d1", d1}}, "d1^g");
  out.upper = power_report("teich_ball_upper", d2, g, {{"g", g}, {"d2", d2}}, "d2^g");
  out.ordered = d1 <= d2;
  return out;
}

BoundReport packing_budget(double big_d, double q, int g, double r_of_d) {
  require(q > 0.0, "Q must be positive");
  require(big_d > q, "D must exceed Q");
  require(g >= 1, "genus must be positive");
  BoundReport r;
  r.name = "packing_budget";
  r.inputs = {{"D", big_d}, {"Q", q}, {"g", g}, {"delta0", r_of_d}};
  r.provenance = "D^g - Q^g > 0";
  const double tail = -std::expm1(g * std::log(q / big_d));  // 1 - (Q/D)^g
  r.value_log10 = g * std::log10(big_d) + std::log10(tail);
  const auto dd = as_integer(big_d);
  const auto qq = as_integer(q);
  if (dd && qq && g <= kExactExponentCap) {
    r.exact = boost::multiprecision::pow(BigInt(*dd), static_cast<unsigned>(g)) -
              boost::multiprecision::pow(BigInt(*qq), static_cast<unsigned>(g));
  }
  fill_value(r);
  return r;
}

BoundReport labeling_bound_report(std::uint64_t n_vertices, std::uint64_t n_gridpoints, std::uint64_t g) {
  const LabelingBound b = labeling_bound(n_vertices, n_gridpoints, g);
  BoundReport r;
  r.name = "labeling_bound";
  r.inputs = {{"n", static_cast<double>(n_vertices)},
              {"N", static_cast<double>(n_gridpoints)},
              {"g", static_cast<double>(g)}};
  r.provenance = "(n + 1)^(N (g - 1))";
  r.value_log10 = b.log10;
  if (static_cast<double>(n_gridpoints * (g - 1)) <= kExactExponentCap) r.exact = b.exact;
  fill_value(r);
  return r;
}

}  // namespace covnum
