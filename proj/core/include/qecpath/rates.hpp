#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "qecpath/analytic.hpp"
#include "qecpath/bigint.hpp"

namespace qecpath {

enum class NoiseKind { uniform, per_axis, mixture };

struct MixtureComponent {
  double weight = 0.0;  // probability this component applies to all qubits at once
  double rate = 0.0;    // physical error rate under it
};

// Physical noise description. Mixture components are validated, normalized,
// sorted by strictly decreasing rate, and exact duplicate rates merged on
// construction.
struct NoiseSpec {
  NoiseKind kind = NoiseKind::uniform;
  double p = 0.0;
  double p_x = 0.0;
  double p_z = 0.0;
  std::vector<MixtureComponent> components;

  static NoiseSpec uniform(double p);
  static NoiseSpec per_axis(double p_x, double p_z);
  static NoiseSpec mixture(std::vector<MixtureComponent> components);
};

// Repeated stabilizer readout: odd M >= 3 repetitions, majority vote over
// them, N_a ancilla qubits.
struct MeasurementSpec {
  MeasurementSpec(double p_m, int repetitions, int ancilla_qubits);

  double p_m = 0.0;
  int repetitions = 3;     // M
  int ancilla_qubits = 1;  // N_a

  int majority() const { return (repetitions + 1) / 2; }  // M_e
};

enum class MeasurementModel { exact, leading, stirling };

// A probability together with its natural log, which is the primary
// representation (direct values underflow well inside the supported range).
struct RateResult {
  double value = 0.0;
  double log_value = -std::numeric_limits<double>::infinity();
  std::optional<std::pair<double, double>> truncation_interval;
};

// count * p^k * (1-p)^{d^2-k}, evaluated in log space.
RateResult term_probability(const ConfigCount& count, int d, double p, int k);

// Leading-term logical error rate: the k = d_e term with the exact rotated
// count or the unrotated closed form. Doubles exactly when both_axes is set.
// truncation_interval carries the multiplicative correction bounds below.
RateResult logical_rate(int d, double p, CodeVariant variant, bool both_axes = false);

// Bounds on the next-order correction: the k = d_e + 1 term sits between
// 0.5 * d^2 * p and d^2 * p times the leading term while d_e << d^2.
std::pair<double, double> correction_interval(int d, double p);

// (d^2 p)^k / k!, the decay bound for the k-th correction term.
double tail_bound(int d, double p, int k);

// Probability a single ancilla accumulates a majority of measurement errors.
double measurement_failure_prob(const MeasurementSpec& spec);
double measurement_failure_log_prob(const MeasurementSpec& spec);

// Logical error rate caused by measurement errors; exact form
// 1 - (1 - p_M)^{N_a} or its leading / Stirling approximations.
double measurement_logical_rate(const MeasurementSpec& spec,
                                MeasurementModel model = MeasurementModel::exact);
double measurement_logical_log_rate(const MeasurementSpec& spec,
                                    MeasurementModel model = MeasurementModel::exact);

// Syndrome qubit count: d^2 - 1 (rotated), 2d(d-1) (unrotated planar).
int ancilla_count(CodeVariant variant, int d);

// Smallest odd M >= 3 that pushes the exact measurement-induced rate below
// the data-induced rate; nullopt when no M up to `cap` suffices.
std::optional<int> required_measurements(double p, double p_m, int d, CodeVariant variant,
                                         int cap = 99);

struct MixtureRate {
  RateResult rate;
  std::size_t dominant_index = 0;  // component maximizing weight * rate^{d_e}
  double dominant_share = 0.0;     // that component's share of the total
  std::vector<double> component_log_terms;  // per-component natural-log contributions
};

// Leading-term rate under a global mixture: count * sum_j w_j p_j^{d_e}
// (1 - p_j)^{d^2 - d_e}. Uniform specs are treated as one-component mixtures.
MixtureRate mixture_rate(int d, const NoiseSpec& noise,
                         CodeVariant variant = CodeVariant::rotated);

}  // namespace qecpath
