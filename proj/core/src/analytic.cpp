#include "qecpath/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qecpath/lattice.hpp"

namespace qecpath {

namespace {

constexpr double kCrossoverPrefactor = 7.75;

void validate_probability(double p, const char* name) {
  if (!(p > 0.0) || p >= 1.0) {
    throw std::domain_error(std::string(name) + " must lie in (0, 1), got " +
                            std::to_string(p));
  }
}

}  // namespace

ConfigCount unrotated_count(int d) {
  const CodeDistance dist(d);
  return ConfigCount(d) * binomial(d, dist.min_errors());
}

double central_binomial_approx(int n) {
  if (n < 1) {
    throw std::invalid_argument("central_binomial_approx: n must be >= 1");
  }
  // ldexp keeps 4^n exact as long as it is representable.
  return std::ldexp(1.0, 2 * n) / std::sqrt(std::numbers::pi * n);
}

ConfigCount central_binomial_halved(int n) {
  if (n < 1) {
    throw std::invalid_argument("central_binomial_halved: n must be >= 1");
  }
  return binomial(2 * n - 1, n);
}

ConfigCount rotated_upper_bound(int d) {
  const CodeDistance dist(d);
  return ConfigCount(d) * (ConfigCount(1) << (d - 1)) * binomial(d, dist.min_errors());
}

double rotated_lower_bound(int d, double edge_constant) {
  const CodeDistance dist(d);
  if (!(edge_constant > 0.0)) {
    throw std::invalid_argument("edge constant must be positive");
  }
  // upper always carries the 2^{d-1} factor, so the shift below is exact.
  const ConfigCount scaled = rotated_upper_bound(d) >> (dist.min_errors() - 1);
  return edge_constant * scaled.convert_to<double>();
}

BoundPair rotated_bounds(int d, double edge_constant) {
  BoundPair out;
  out.lower = rotated_lower_bound(d, edge_constant);
  out.upper = rotated_upper_bound(d).convert_to<double>();
  return out;
}

double scaling_law(const ScalingParams& params, double p, int d) {
  const CodeDistance dist(d);
  if (!(params.prefactor > 0.0)) {
    throw std::invalid_argument("scaling prefactor must be positive");
  }
  validate_probability(params.threshold, "threshold");
  validate_probability(p, "physical error rate");
  return params.prefactor * std::pow(p / params.threshold, dist.min_errors());
}

CrossoverComparison compare_variants(double p, int d_e, double threshold_rotated,
                                     double threshold_unrotated) {
  if (d_e < 1) {
    throw std::invalid_argument("d_e must be >= 1");
  }
  validate_probability(p, "physical error rate");
  validate_probability(threshold_rotated, "rotated threshold");
  validate_probability(threshold_unrotated, "unrotated threshold");

  const double lhs_ln = (std::numbers::sqrt2 - 1.0) * d_e * std::log(p);
  const double rhs_ln = std::log(kCrossoverPrefactor) +
                        std::numbers::sqrt2 * d_e * std::log(threshold_rotated) -
                        d_e * std::log(threshold_unrotated);
  CrossoverComparison out;
  out.rotated_preferred = lhs_ln <= rhs_ln;
  out.lhs_log10 = lhs_ln / std::numbers::ln10;
  out.rhs_log10 = rhs_ln / std::numbers::ln10;
  return out;
}

bool rotated_preferred(double p, int d_e, double threshold_rotated,
                       double threshold_unrotated) {
  return compare_variants(p, d_e, threshold_rotated, threshold_unrotated).rotated_preferred;
}

}  // namespace qecpath
