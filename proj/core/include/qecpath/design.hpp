#pragma once

#include <vector>

#include "qecpath/analytic.hpp"

namespace qecpath {

// Rectangular rotated layout: h*w data qubits plus h*w - 1 syndrome qubits.
struct CodeLayout {
  CodeVariant variant = CodeVariant::rotated;
  int height = 0;  // vertical-chain dimension
  int width = 0;   // horizontal-chain dimension

  int data_qubits() const { return height * width; }
  int total_qubits() const { return 2 * height * width - 1; }
};

struct LayoutEvaluation {
  CodeLayout layout;
  double rate_x = 0.0;      // vertical chains, length = height
  double rate_z = 0.0;      // horizontal chains, length = width
  double rate_total = 0.0;  // rate_x + rate_z - rate_x * rate_z
};

struct DesignResult {
  LayoutEvaluation chosen;
  std::vector<LayoutEvaluation> visited;  // every layout the search evaluated
};

struct VariantRecommendation {
  CodeVariant variant = CodeVariant::rotated;
  double lhs_log10 = 0.0;
  double rhs_log10 = 0.0;
};

// Largest square-ish layout within a qubit budget: w = floor(sqrt((Q+1)/2)),
// h = w+1 when 2w(w+1)-1 still fits, else h = w. Budget must be >= 7.
CodeLayout square_layout(int qubit_budget);

// Scaling law along one dimension; the exponent generalizes to
// ceil(length / 2) so even lengths are usable mid-search.
double directional_rate(int dimension_length, double p_axis, const ScalingParams& fit);

// Starts from the square layout and raises the height (shrinking the width
// as needed to stay within budget, floor 2) until the vertical rate drops
// below the horizontal one; returns the visited layout with the smallest
// total rate. Tie-break: smaller height, then smaller width. Axes with
// p_x < p_z are handled by swapping and transposing the result.
DesignResult optimize_rectangular(int qubit_budget, double p_x, double p_z,
                                  const ScalingParams& fit = kRotatedReferenceFit);

// Rotated-vs-unrotated recommendation at equal qubit budget, with both
// log10 sides of the crossover inequality as the rationale.
VariantRecommendation recommend_variant(double p, int d_e,
                                        double threshold_rotated = kRotatedReferenceFit.threshold,
                                        double threshold_unrotated = kUnrotatedReferenceFit.threshold);

}  // namespace qecpath
