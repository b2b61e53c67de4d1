#pragma once

#include <cstdint>
#include <stdexcept>

#include "qecpath/bigint.hpp"
#include "qecpath/lattice.hpp"

namespace qecpath {

// Thrown when a brute-force instance is larger than the configured cap.
class OracleScopeExceeded : public std::runtime_error {
 public:
  explicit OracleScopeExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Default enumeration-space cap for brute_force_count: admits d = 9, n = 5
// (about 7.4e6 configurations) and rejects anything much past that.
inline constexpr std::uint64_t kDefaultOracleCap = 100'000'000;

// Exact number of n-error placements on a distance-d lattice: the first
// error sits in rows 0..d-n (any column) and every later error sits in a
// strictly lower row with a valid transition from the previous one.
// Memoization is per invocation, keyed (row, col, remaining); layers are
// filled bottom-up so there is no recursion. Deterministic, independent
// of any error rate.
ConfigCount count_error_patterns(int d, int n,
                                 ParityConvention convention = ParityConvention::even_right);

// Number of minimum-length logical paths: one error per row, i.e.
// count_error_patterns(d, d). Always <= d * 2^{d-1}.
ConfigCount count_paths(int d, ParityConvention convention = ParityConvention::even_right);

// Independent validation oracle: enumerates every n-subset of cells with
// pairwise-distinct rows, orders it by row, and accepts it iff the first
// row is <= d-n and every consecutive pair is a valid transition. Shares
// nothing with the memoized count except the transition predicate. Throws
// OracleScopeExceeded when the enumeration space, rows-choose-n times d^n,
// exceeds `cap`.
ConfigCount brute_force_count(int d, int n, std::uint64_t cap = kDefaultOracleCap,
                              ParityConvention convention = ParityConvention::even_right);

}  // namespace qecpath
