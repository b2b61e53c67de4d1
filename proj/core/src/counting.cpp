#include "qecpath/counting.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qecpath {

namespace {

void validate_error_count(int d, int n) {
  if (n < 1 || n > d) {
    throw std::invalid_argument("error count must lie in [1, d], got " + std::to_string(n) +
                                " for d = " + std::to_string(d));
  }
}

}  // namespace

ConfigCount count_error_patterns(int d, int n, ParityConvention convention) {
  const CodeDistance dist(d);
  validate_error_count(d, n);

  // chains[row * d + col] = number of ways to extend a chain whose latest
  // error sits at (row, col) by the remaining errors of the current layer.
  // Layers run remaining = 0 (all ones) up to n-1, so no recursion is needed
  // and the table holds two d^2 layers at a time.
  std::vector<ConfigCount> chains(static_cast<std::size_t>(d) * d, 1);
  std::vector<ConfigCount> next_layer(static_cast<std::size_t>(d) * d);
  for (int remaining = 1; remaining < n; ++remaining) {
    for (int row = 0; row < d; ++row) {
      for (int col = 0; col < d; ++col) {
        ConfigCount acc = 0;
        for (int next_row = row + 1; next_row < d; ++next_row) {
          for (int next_col = 0; next_col < d; ++next_col) {
            if (is_valid_transition({row, col}, {next_row, next_col}, convention)) {
              acc += chains[static_cast<std::size_t>(next_row) * d + next_col];
            }
          }
        }
        next_layer[static_cast<std::size_t>(row) * d + col] = std::move(acc);
      }
    }
    chains.swap(next_layer);
  }

  ConfigCount total = 0;
  for (int row = 0; row <= d - n; ++row) {
    for (int col = 0; col < d; ++col) {
      total += chains[static_cast<std::size_t>(row) * d + col];
    }
  }
  return total;
}

ConfigCount count_paths(int d, ParityConvention convention) {
  return count_error_patterns(d, d, convention);
}

ConfigCount brute_force_count(int d, int n, std::uint64_t cap, ParityConvention convention) {
  const CodeDistance dist(d);
  validate_error_count(d, n);

  ConfigCount space = binomial(d, n);
  for (int i = 0; i < n; ++i) {
    space *= d;
  }
  if (space > cap) {
    throw OracleScopeExceeded("oracle scope exceeded: d = " + std::to_string(d) + ", n = " +
                              std::to_string(n) + " enumerates " + space.str() +
                              " configurations, cap is " + std::to_string(cap));
  }

  ConfigCount accepted = 0;
  std::vector<int> rows(n);
  for (int i = 0; i < n; ++i) {
    rows[i] = i;
  }
  std::vector<int> cols(n);
  while (true) {
    // Full column odometer for this row subset; no pruning, every
    // configuration is checked whole.
    std::fill(cols.begin(), cols.end(), 0);
    while (true) {
      bool ok = rows[0] <= d - n;
      for (int i = 0; ok && i + 1 < n; ++i) {
        ok = is_valid_transition({rows[i], cols[i]}, {rows[i + 1], cols[i + 1]}, convention);
      }
      if (ok) {
        ++accepted;
      }
      int digit = n - 1;
      while (digit >= 0 && cols[digit] == d - 1) {
        cols[digit--] = 0;
      }
      if (digit < 0) {
        break;
      }
      ++cols[digit];
    }

    int i = n - 1;
    while (i >= 0 && rows[i] == d - n + i) {
      --i;
    }
    if (i < 0) {
      break;
    }
    ++rows[i];
    for (int j = i + 1; j < n; ++j) {
      rows[j] = rows[j - 1] + 1;
    }
  }
  return accepted;
}

}  // namespace qecpath
