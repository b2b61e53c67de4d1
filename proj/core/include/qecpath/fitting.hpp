#pragma once

#include <utility>
#include <vector>

#include "qecpath/analytic.hpp"

namespace qecpath {

struct ScalingFit {
  ScalingParams params;
  double r_squared = 0.0;  // of the log-space linear fit
  double p_used = 0.0;
  int d_min = 0;
  int d_max = 0;
};

// Ordinary least squares on ln L = ln A + d_e (ln p - ln p_th) for points
// (d_e, L). Requires >= 3 points, positive L, and at least two distinct d_e.
ScalingFit fit_scaling(const std::vector<std::pair<int, double>>& points, double p);

// Fits the rate series built from exact rotated counts or the unrotated
// closed form over odd d in [d_min, d_max].
ScalingFit fit_code_counts(CodeVariant variant, double p, int d_min, int d_max,
                           bool both_axes = false);

enum class BoundSide { upper, lower };

// Same, with the closed-form upper/lower bounds standing in for the count.
ScalingFit fit_bound(BoundSide side, double p, int d_min, int d_max,
                     double edge_constant = 0.6);

}  // namespace qecpath
