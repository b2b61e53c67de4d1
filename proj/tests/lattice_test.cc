#include "qecpath/lattice.hpp"

#include <gtest/gtest.h>

#include <vector>

using namespace qecpath;

TEST(CellParity, MatchesRowPlusColumn) {
  EXPECT_EQ(cell_parity({0, 0}), 0);
  EXPECT_EQ(cell_parity({1, 2}), 1);
  EXPECT_EQ(cell_parity({2, 2}), 0);
}

TEST(CodeDistanceTest, DerivedQuantities) {
  const CodeDistance d3(3);
  EXPECT_EQ(d3.d(), 3);
  EXPECT_EQ(d3.min_errors(), 2);
  EXPECT_EQ(d3.data_qubits(), 9);
  EXPECT_EQ(CodeDistance(49).min_errors(), 25);
}

TEST(CodeDistanceTest, RejectsEvenOrSmall) {
  EXPECT_THROW(CodeDistance(4), std::invalid_argument);
  EXPECT_THROW(CodeDistance(2), std::invalid_argument);
  EXPECT_THROW(CodeDistance(1), std::invalid_argument);
  EXPECT_THROW(CodeDistance(-5), std::invalid_argument);
}

TEST(ValidTransition, SpecCases) {
  EXPECT_FALSE(is_valid_transition({0, 0}, {0, 1}));  // same row
  EXPECT_FALSE(is_valid_transition({0, 0}, {1, 2}));  // dy < |dx|
  EXPECT_FALSE(is_valid_transition({0, 1}, {1, 2}));  // odd destination, dx > 0
  EXPECT_TRUE(is_valid_transition({0, 0}, {1, 1}));   // even destination, dx > 0
  EXPECT_TRUE(is_valid_transition({0, 0}, {2, 1}));   // strictly vertical dominant
}

TEST(ValidTransition, AntisymmetricInRows) {
  const int d = 5;
  for (int r1 = 0; r1 < d; ++r1)
    for (int c1 = 0; c1 < d; ++c1)
      for (int r2 = 0; r2 < d; ++r2)
        for (int c2 = 0; c2 < d; ++c2) {
          if (is_valid_transition({r1, c1}, {r2, c2})) {
            EXPECT_FALSE(is_valid_transition({r2, c2}, {r1, c1}));
          }
        }
}

TEST(ValidTransition, StrictVerticalDominanceAlwaysPasses) {
  const int d = 7;
  for (int r1 = 0; r1 < d; ++r1)
    for (int c1 = 0; c1 < d; ++c1)
      for (int r2 = r1 + 1; r2 < d; ++r2)
        for (int c2 = 0; c2 < d; ++c2) {
          const int dy = r2 - r1;
          const int adx = c2 > c1 ? c2 - c1 : c1 - c2;
          if (dy > adx) {
            EXPECT_TRUE(is_valid_transition({r1, c1}, {r2, c2}));
          }
        }
}

TEST(ValidTransition, ExactDiagonalAllowsOneSidePerDestination) {
  const int d = 5;
  for (int r2 = 1; r2 < d; ++r2)
    for (int c2 = 0; c2 < d; ++c2)
      for (int k = 1; k <= r2; ++k) {
        const int left = c2 - k;
        const int right = c2 + k;
        if (left < 0 || right >= d) continue;
        const bool from_left = is_valid_transition({r2 - k, left}, {r2, c2});
        const bool from_right = is_valid_transition({r2 - k, right}, {r2, c2});
        EXPECT_NE(from_left, from_right);
      }
}

TEST(ValidTransition, ColumnMirrorSwapsConventions) {
  const int d = 7;
  for (int r1 = 0; r1 < d; ++r1)
    for (int c1 = 0; c1 < d; ++c1)
      for (int r2 = 0; r2 < d; ++r2)
        for (int c2 = 0; c2 < d; ++c2) {
          const bool direct = is_valid_transition({r1, c1}, {r2, c2},
                                                  ParityConvention::even_right);
          const bool mirrored = is_valid_transition({r1, d - 1 - c1}, {r2, d - 1 - c2},
                                                    ParityConvention::even_left);
          EXPECT_EQ(direct, mirrored);
        }
}
