#pragma once

#include <stdexcept>
#include <string>

namespace qecpath {

// A data-qubit cell of the d x d lattice; row 0 is the top boundary.
struct GridPosition {
  int row = 0;
  int col = 0;
};

// Which exactly-diagonal step a destination cell accepts, keyed by its
// parity. `even_right` is the default rule (even cells reject approaches
// from the right, i.e. forbid dx < 0). Flipping the convention mirrors the
// lattice left-right: individual transitions change, counting totals do not.
enum class ParityConvention { even_right, even_left };

// Odd code distance d >= 3 plus the derived minimum error count (d+1)/2.
class CodeDistance {
 public:
  explicit CodeDistance(int d) : d_(d) {
    if (d < 3 || d % 2 == 0) {
      throw std::invalid_argument("code distance must be odd and >= 3, got " +
                                  std::to_string(d));
    }
  }

  int d() const { return d_; }
  int min_errors() const { return (d_ + 1) / 2; }  // fewest errors that can defeat a perfect decoder
  int data_qubits() const { return d_ * d_; }

 private:
  int d_;
};

inline int cell_parity(GridPosition pos) { return (pos.row + pos.col) & 1; }

// True when an error at `next` may follow an error at `prev` on a
// minimum-length logical path: strictly lower row, vertical distance at
// least horizontal distance, and exactly-diagonal steps only in the
// direction the destination parity permits. Total over all in-range pairs.
inline bool is_valid_transition(GridPosition prev, GridPosition next,
                                ParityConvention convention = ParityConvention::even_right) {
  if (next.row <= prev.row) {
    return false;
  }
  const int dx = next.col - prev.col;
  const int dy = next.row - prev.row;
  const int adx = dx < 0 ? -dx : dx;
  if (dy < adx) {
    return false;
  }
  if (dy == adx) {
    const bool even_dest = cell_parity(next) == 0;
    const bool forbid_leftward = even_dest == (convention == ParityConvention::even_right);
    if (forbid_leftward ? dx < 0 : dx > 0) {
      return false;
    }
  }
  return true;
}

}  // namespace qecpath
