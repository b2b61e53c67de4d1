#include "qecpath/bigint.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qecpath {

ConfigCount binomial(int n, int k) {
  if (n < 0) {
    throw std::invalid_argument("binomial: n must be non-negative");
  }
  if (k < 0 || k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  ConfigCount result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;  // numerator factor keeps every prefix divisible
    result /= i;
  }
  return result;
}

double natural_log(const ConfigCount& value) {
  if (value <= 0) {
    throw std::domain_error("natural_log: value must be positive");
  }
  const unsigned bits = boost::multiprecision::msb(value);
  if (bits <= 52) {
    return std::log(value.convert_to<double>());
  }
  const ConfigCount top = value >> (bits - 52);
  return std::log(top.convert_to<double>()) +
         static_cast<double>(bits - 52) * std::numbers::ln2;
}

}  // namespace qecpath
