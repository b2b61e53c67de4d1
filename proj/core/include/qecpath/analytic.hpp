#pragma once

#include <optional>

#include "qecpath/bigint.hpp"

namespace qecpath {

enum class CodeVariant { rotated, unrotated };

// Parameters of the scaling law L = A * (p / p_th)^{d_e}.
struct ScalingParams {
  double prefactor = 0.0;  // A
  double threshold = 0.0;  // p_th
};

// Reference scaling-law fits (exact counts, p = 1e-4, odd d in [3, 25]).
// Used as defaults by the variant comparator and the layout optimizer;
// callers can refit with module fitting and override.
inline constexpr ScalingParams kRotatedReferenceFit{2.09e-1, 7.33e-2};
inline constexpr ScalingParams kUnrotatedReferenceFit{1.62, 2.49e-1};

struct BoundPair {
  double lower = 0.0;
  double upper = 0.0;
  std::optional<ConfigCount> exact_reference;
};

// d * C(d, d_e): exact count for the unrotated code, per error type.
ConfigCount unrotated_count(int d);

// 4^n / sqrt(pi * n), the Stirling form of the central binomial coefficient.
double central_binomial_approx(int n);

// C(2n-1, n) == C(2n, n) / 2, exact companion identity.
ConfigCount central_binomial_halved(int n);

// d * 2^{d-1} * C(d, d_e), exact; paths-times-arrangements union bound.
ConfigCount rotated_upper_bound(int d);

// edge_constant * d * 2^{d-1} * C(d, d_e) / 2^{d_e - 1}. The default 0.6
// absorbs boundary effects, which fade as d grows.
double rotated_lower_bound(int d, double edge_constant = 0.6);

BoundPair rotated_bounds(int d, double edge_constant = 0.6);

// A * (p / p_th)^{d_e} for odd d.
double scaling_law(const ScalingParams& params, double p, int d);

// Rotated-vs-unrotated comparison at equal qubit budget, evaluated in log
// space: rotated wins while p^{(sqrt2-1) d_e} <= 7.75 * p_tr^{sqrt2 d_e} / p_tur^{d_e}.
struct CrossoverComparison {
  bool rotated_preferred = false;
  double lhs_log10 = 0.0;
  double rhs_log10 = 0.0;
};

CrossoverComparison compare_variants(double p, int d_e,
                                     double threshold_rotated = kRotatedReferenceFit.threshold,
                                     double threshold_unrotated = kUnrotatedReferenceFit.threshold);

bool rotated_preferred(double p, int d_e,
                       double threshold_rotated = kRotatedReferenceFit.threshold,
                       double threshold_unrotated = kUnrotatedReferenceFit.threshold);

}  // namespace qecpath
