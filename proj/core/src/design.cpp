#include "qecpath/design.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qecpath {

namespace {

void validate_axis_rate(double p_axis, const ScalingParams& fit, const char* name) {
  if (!(p_axis > 0.0)) {
    throw std::domain_error(std::string(name) + " must be positive");
  }
  if (p_axis >= fit.threshold) {
    throw std::domain_error(std::string(name) + " = " + std::to_string(p_axis) +
                            " is at or above the threshold " + std::to_string(fit.threshold) +
                            "; the scaling law does not apply");
  }
}

LayoutEvaluation evaluate(int height, int width, double p_x, double p_z,
                          const ScalingParams& fit) {
  LayoutEvaluation ev;
  ev.layout = CodeLayout{CodeVariant::rotated, height, width};
  ev.rate_x = directional_rate(height, p_x, fit);
  ev.rate_z = directional_rate(width, p_z, fit);
  ev.rate_total = ev.rate_x + ev.rate_z - ev.rate_x * ev.rate_z;
  return ev;
}

LayoutEvaluation transpose(LayoutEvaluation ev) {
  std::swap(ev.layout.height, ev.layout.width);
  std::swap(ev.rate_x, ev.rate_z);
  return ev;
}

}  // namespace

CodeLayout square_layout(int qubit_budget) {
  if (qubit_budget < 7) {
    throw std::invalid_argument("qubit budget must be >= 7 (smallest 2x2 rotated layout)");
  }
  int w = static_cast<int>(std::sqrt((qubit_budget + 1) / 2.0));
  while (static_cast<long long>(w + 1) * (w + 1) * 2 <= qubit_budget + 1) {
    ++w;
  }
  while (static_cast<long long>(w) * w * 2 > qubit_budget + 1) {
    --w;
  }
  const int h = 2 * w * (w + 1) - 1 <= qubit_budget ? w + 1 : w;
  return CodeLayout{CodeVariant::rotated, h, w};
}

double directional_rate(int dimension_length, double p_axis, const ScalingParams& fit) {
  if (dimension_length < 1) {
    throw std::invalid_argument("dimension length must be >= 1");
  }
  if (!(fit.prefactor > 0.0) || !(fit.threshold > 0.0) || fit.threshold >= 1.0) {
    throw std::invalid_argument("scaling parameters must have A > 0 and p_th in (0, 1)");
  }
  validate_axis_rate(p_axis, fit, "axis error rate");
  const int min_errors = (dimension_length + 1) / 2;  // ceil(length / 2)
  return fit.prefactor * std::pow(p_axis / fit.threshold, min_errors);
}

DesignResult optimize_rectangular(int qubit_budget, double p_x, double p_z,
                                  const ScalingParams& fit) {
  validate_axis_rate(p_x, fit, "p_x");
  validate_axis_rate(p_z, fit, "p_z");
  if (p_x < p_z) {
    DesignResult swapped = optimize_rectangular(qubit_budget, p_z, p_x, fit);
    DesignResult out;
    out.chosen = transpose(swapped.chosen);
    out.visited.reserve(swapped.visited.size());
    for (const auto& ev : swapped.visited) {
      out.visited.push_back(transpose(ev));
    }
    return out;
  }

  const CodeLayout square = square_layout(qubit_budget);
  int h = square.height;
  int w = square.width;

  DesignResult out;
  while (true) {
    const LayoutEvaluation ev = evaluate(h, w, p_x, p_z, fit);
    out.visited.push_back(ev);
    if (ev.rate_x <= ev.rate_z) {
      break;
    }
    const int next_h = h + 1;
    const int next_w = std::min(w, (qubit_budget + 1) / (2 * next_h));
    if (next_w < 2) {
      break;
    }
    h = next_h;
    w = next_w;
  }

  out.chosen = *std::min_element(out.visited.begin(), out.visited.end(),
                                 [](const LayoutEvaluation& a, const LayoutEvaluation& b) {
                                   if (a.rate_total != b.rate_total) {
                                     return a.rate_total < b.rate_total;
                                   }
                                   if (a.layout.height != b.layout.height) {
                                     return a.layout.height < b.layout.height;
                                   }
                                   return a.layout.width < b.layout.width;
                                 });
  return out;
}

VariantRecommendation recommend_variant(double p, int d_e, double threshold_rotated,
                                        double threshold_unrotated) {
  const CrossoverComparison cmp =
      compare_variants(p, d_e, threshold_rotated, threshold_unrotated);
  VariantRecommendation out;
  out.variant = cmp.rotated_preferred ? CodeVariant::rotated : CodeVariant::unrotated;
  out.lhs_log10 = cmp.lhs_log10;
  out.rhs_log10 = cmp.rhs_log10;
  return out;
}

}  // namespace qecpath
