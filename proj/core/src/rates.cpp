#include "qecpath/rates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qecpath/counting.hpp"
#include "qecpath/lattice.hpp"

namespace qecpath {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

void validate_rate(double p, const char* name) {
  if (!(p >= 0.0) || p >= 1.0) {
    throw std::domain_error(std::string(name) + " must lie in [0, 1), got " +
                            std::to_string(p));
  }
}

// Shared by term_probability and mixture_rate so a one-component mixture
// reduces to the plain rate bit-for-bit.
double log_term_value(double log_count, int data_qubits, double p, int k) {
  return log_count + k * std::log(p) + (data_qubits - k) * std::log1p(-p);
}

}  // namespace

NoiseSpec NoiseSpec::uniform(double p) {
  validate_rate(p, "physical error rate");
  NoiseSpec out;
  out.kind = NoiseKind::uniform;
  out.p = p;
  return out;
}

NoiseSpec NoiseSpec::per_axis(double p_x, double p_z) {
  validate_rate(p_x, "p_x");
  validate_rate(p_z, "p_z");
  NoiseSpec out;
  out.kind = NoiseKind::per_axis;
  out.p_x = p_x;
  out.p_z = p_z;
  return out;
}

NoiseSpec NoiseSpec::mixture(std::vector<MixtureComponent> components) {
  if (components.empty()) {
    throw std::invalid_argument("mixture needs at least one component");
  }
  double sum = 0.0;
  for (const auto& c : components) {
    if (!(c.weight > 0.0) || c.weight > 1.0) {
      throw std::invalid_argument("mixture weights must lie in (0, 1], got " +
                                  std::to_string(c.weight));
    }
    validate_rate(c.rate, "mixture rate");
    sum += c.weight;
  }
  if (std::fabs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("mixture weights must sum to 1 within 1e-9, got " +
                                std::to_string(sum));
  }
  for (auto& c : components) {
    c.weight /= sum;
  }
  std::stable_sort(components.begin(), components.end(),
                   [](const MixtureComponent& a, const MixtureComponent& b) {
                     return a.rate > b.rate;
                   });
  // Merge exact duplicates so rates end up strictly decreasing.
  std::vector<MixtureComponent> merged;
  for (const auto& c : components) {
    if (!merged.empty() && merged.back().rate == c.rate) {
      merged.back().weight += c.weight;
    } else {
      merged.push_back(c);
    }
  }
  NoiseSpec out;
  out.kind = NoiseKind::mixture;
  out.components = std::move(merged);
  return out;
}

MeasurementSpec::MeasurementSpec(double p_m_in, int repetitions_in, int ancilla_qubits_in)
    : p_m(p_m_in), repetitions(repetitions_in), ancilla_qubits(ancilla_qubits_in) {
  validate_rate(p_m, "measurement error rate");
  if (repetitions < 3 || repetitions % 2 == 0) {
    throw std::invalid_argument("measurement repetitions must be odd and >= 3, got " +
                                std::to_string(repetitions));
  }
  if (ancilla_qubits < 1) {
    throw std::invalid_argument("ancilla count must be >= 1");
  }
}

RateResult term_probability(const ConfigCount& count, int d, double p, int k) {
  const CodeDistance dist(d);
  if (k < 1 || k > dist.data_qubits()) {
    throw std::invalid_argument("term order must lie in [1, d^2], got " + std::to_string(k));
  }
  if (count < 0) {
    throw std::invalid_argument("configuration count cannot be negative");
  }
  validate_rate(p, "physical error rate");

  RateResult out;
  if (count == 0 || p == 0.0) {
    return out;  // exact zero
  }
  out.log_value = log_term_value(natural_log(count), dist.data_qubits(), p, k);
  out.value = std::exp(out.log_value);
  return out;
}

RateResult logical_rate(int d, double p, CodeVariant variant, bool both_axes) {
  const CodeDistance dist(d);
  const ConfigCount count = variant == CodeVariant::rotated
                                ? count_error_patterns(d, dist.min_errors())
                                : unrotated_count(d);
  RateResult out = term_probability(count, d, p, dist.min_errors());
  if (both_axes) {
    out.value *= 2.0;  // exact doubling by X/Z symmetry
    out.log_value += std::numbers::ln2;
  }
  out.truncation_interval = correction_interval(d, p);
  return out;
}

std::pair<double, double> correction_interval(int d, double p) {
  const CodeDistance dist(d);
  validate_rate(p, "physical error rate");
  const double high = p * dist.data_qubits();
  return {0.5 * high, high};
}

double tail_bound(int d, double p, int k) {
  const CodeDistance dist(d);
  validate_rate(p, "physical error rate");
  if (k < 0) {
    throw std::invalid_argument("tail order must be >= 0");
  }
  const double base = p * dist.data_qubits();
  double term = 1.0;
  for (int i = 1; i <= k; ++i) {
    term *= base / i;
  }
  return term;
}

double measurement_failure_log_prob(const MeasurementSpec& spec) {
  if (spec.p_m == 0.0) {
    return kNegInf;
  }
  double acc = kNegInf;
  for (int k = spec.majority(); k <= spec.repetitions; ++k) {
    const double term = natural_log(binomial(spec.repetitions, k)) +
                        k * std::log(spec.p_m) +
                        (spec.repetitions - k) * std::log1p(-spec.p_m);
    acc = log_add(acc, term);
  }
  return std::min(acc, 0.0);
}

double measurement_failure_prob(const MeasurementSpec& spec) {
  return std::exp(measurement_failure_log_prob(spec));
}

double measurement_logical_log_rate(const MeasurementSpec& spec, MeasurementModel model) {
  const double n_a = spec.ancilla_qubits;
  switch (model) {
    case MeasurementModel::exact: {
      const double log_pm_total = measurement_failure_log_prob(spec);
      if (log_pm_total == kNegInf) {
        return kNegInf;
      }
      const double pm_total = std::exp(log_pm_total);
      if (pm_total > 1e-10) {
        return std::log(-std::expm1(n_a * std::log1p(-pm_total)));
      }
      // 1 - (1-q)^n = n q (1 - (n-1) q / 2 + ...), second order is plenty here
      return std::log(n_a) + log_pm_total + std::log1p(-0.5 * (n_a - 1.0) * pm_total);
    }
    case MeasurementModel::leading:
      if (spec.p_m == 0.0) {
        return kNegInf;
      }
      return std::log(n_a) + natural_log(binomial(spec.repetitions, spec.majority())) +
             spec.majority() * std::log(spec.p_m);
    case MeasurementModel::stirling:
      if (spec.p_m == 0.0) {
        return kNegInf;
      }
      return std::log(n_a) - 0.5 * std::log(4.0 * spec.majority() * std::numbers::pi) +
             spec.majority() * std::log(4.0 * spec.p_m);
  }
  throw std::logic_error("unknown measurement model");
}

double measurement_logical_rate(const MeasurementSpec& spec, MeasurementModel model) {
  return std::exp(measurement_logical_log_rate(spec, model));
}

int ancilla_count(CodeVariant variant, int d) {
  const CodeDistance dist(d);
  return variant == CodeVariant::rotated ? d * d - 1 : 2 * d * (d - 1);
}

std::optional<int> required_measurements(double p, double p_m, int d, CodeVariant variant,
                                         int cap) {
  if (!(p > 0.0) || p >= 1.0) {
    throw std::domain_error("physical error rate must lie in (0, 1)");
  }
  validate_rate(p_m, "measurement error rate");
  if (cap < 3) {
    throw std::invalid_argument("repetition cap must be >= 3");
  }
  const double target = logical_rate(d, p, variant).log_value;
  const int n_a = ancilla_count(variant, d);
  for (int m = 3; m <= cap; m += 2) {
    const MeasurementSpec spec(p_m, m, n_a);
    if (measurement_logical_log_rate(spec, MeasurementModel::exact) < target) {
      return m;
    }
  }
  return std::nullopt;
}

MixtureRate mixture_rate(int d, const NoiseSpec& noise, CodeVariant variant) {
  const CodeDistance dist(d);
  std::vector<MixtureComponent> components;
  switch (noise.kind) {
    case NoiseKind::uniform:
      components.push_back({1.0, noise.p});
      break;
    case NoiseKind::mixture:
      components = noise.components;
      break;
    case NoiseKind::per_axis:
      throw std::invalid_argument("mixture_rate expects a uniform or mixture noise spec");
  }

  const ConfigCount count = variant == CodeVariant::rotated
                                ? count_error_patterns(d, dist.min_errors())
                                : unrotated_count(d);
  const double log_count = natural_log(count);
  const int k = dist.min_errors();

  MixtureRate out;
  double total = kNegInf;
  double best_weighted_power = kNegInf;
  for (std::size_t j = 0; j < components.size(); ++j) {
    const auto& c = components[j];
    // log(1) + log_count stays bit-identical to log_count, so a single
    // component reproduces term_probability exactly.
    const double term =
        c.rate > 0.0
            ? log_term_value(log_count + std::log(c.weight), dist.data_qubits(), c.rate, k)
            : kNegInf;
    out.component_log_terms.push_back(term);
    total = log_add(total, term);
    const double weighted_power =
        c.rate > 0.0 ? std::log(c.weight) + k * std::log(c.rate) : kNegInf;
    if (weighted_power > best_weighted_power) {
      best_weighted_power = weighted_power;
      out.dominant_index = j;
    }
  }

  if (total != kNegInf) {
    out.rate.log_value = total;
    out.rate.value = std::exp(out.rate.log_value);
    const double dominant_term = out.component_log_terms[out.dominant_index];
    out.dominant_share =
        dominant_term == kNegInf ? 0.0 : std::exp(dominant_term - out.rate.log_value);
  }
  out.rate.truncation_interval =
      correction_interval(d, components[out.dominant_index].rate);
  return out;
}

}  // namespace qecpath
