#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qecpath {

// Exact configuration/path count. Counts grow roughly like 16^{d_e}, which
// leaves 64-bit range near d = 15, so counting is arbitrary precision
// throughout and never rounds.
using ConfigCount = boost::multiprecision::cpp_int;

// binomial(n, k), exact (multiplicative form with running integer division).
ConfigCount binomial(int n, int k);

// Natural log of a positive count. Splits off the top 53 bits so the result
// stays accurate far beyond double range; absolute error on the log is a few
// ulps (~1e-16).
double natural_log(const ConfigCount& value);

}  // namespace qecpath
