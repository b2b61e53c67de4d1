#include "qecpath/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qecpath/counting.hpp"
#include "qecpath/lattice.hpp"
#include "qecpath/rates.hpp"

namespace qecpath {

namespace {

void validate_fit_range(int d_min, int d_max) {
  if (d_min % 2 == 0 || d_max % 2 == 0 || d_min < 3 || d_max < d_min) {
    throw std::invalid_argument("fit range must be odd distances with 3 <= d_min <= d_max");
  }
}

}  // namespace

ScalingFit fit_scaling(const std::vector<std::pair<int, double>>& points, double p) {
  if (points.size() < 3) {
    throw std::invalid_argument("scaling fit needs at least 3 points, got " +
                                std::to_string(points.size()));
  }
  if (!(p > 0.0) || p >= 1.0) {
    throw std::domain_error("physical error rate must lie in (0, 1)");
  }

  const double n = static_cast<double>(points.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& [d_e, rate] : points) {
    if (d_e < 1) {
      throw std::invalid_argument("fit points need d_e >= 1");
    }
    if (!(rate > 0.0)) {
      throw std::invalid_argument("fit points need strictly positive rates");
    }
    mean_x += d_e;
    mean_y += std::log(rate);
  }
  mean_x /= n;
  mean_y /= n;

  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [d_e, rate] : points) {
    const double dx = d_e - mean_x;
    sxx += dx * dx;
    sxy += dx * (std::log(rate) - mean_y);
  }
  if (sxx == 0.0) {
    throw std::invalid_argument("fit points need at least two distinct d_e values");
  }

  const double slope = sxy / sxx;
  const double intercept = mean_y - slope * mean_x;

  double ss_res = 0.0;
  double ss_tot = 0.0;
  for (const auto& [d_e, rate] : points) {
    const double y = std::log(rate);
    const double resid = y - (intercept + slope * d_e);
    ss_res += resid * resid;
    ss_tot += (y - mean_y) * (y - mean_y);
  }

  ScalingFit out;
  out.params.prefactor = std::exp(intercept);
  out.params.threshold = p * std::exp(-slope);
  out.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
  out.p_used = p;

  int lo = points.front().first;
  int hi = points.front().first;
  for (const auto& [d_e, rate] : points) {
    lo = std::min(lo, d_e);
    hi = std::max(hi, d_e);
  }
  out.d_min = 2 * lo - 1;
  out.d_max = 2 * hi - 1;
  return out;
}

ScalingFit fit_code_counts(CodeVariant variant, double p, int d_min, int d_max,
                           bool both_axes) {
  validate_fit_range(d_min, d_max);
  std::vector<std::pair<int, double>> points;
  for (int d = d_min; d <= d_max; d += 2) {
    const CodeDistance dist(d);
    RateResult rate = logical_rate(d, p, variant, both_axes);
    points.emplace_back(dist.min_errors(), rate.value);
  }
  return fit_scaling(points, p);
}

ScalingFit fit_bound(BoundSide side, double p, int d_min, int d_max, double edge_constant) {
  validate_fit_range(d_min, d_max);
  std::vector<std::pair<int, double>> points;
  for (int d = d_min; d <= d_max; d += 2) {
    const CodeDistance dist(d);
    const ConfigCount upper = rotated_upper_bound(d);
    double rate;
    if (side == BoundSide::upper) {
      rate = term_probability(upper, d, p, dist.min_errors()).value;
    } else {
      // 2^{d-1} divides the upper bound, so the shift below is exact.
      const ConfigCount scaled = upper >> (dist.min_errors() - 1);
      rate = edge_constant * term_probability(scaled, d, p, dist.min_errors()).value;
    }
    points.emplace_back(dist.min_errors(), rate);
  }
  return fit_scaling(points, p);
}

}  // namespace qecpath
