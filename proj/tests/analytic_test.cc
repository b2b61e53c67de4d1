#include "qecpath/analytic.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "qecpath/counting.hpp"

using namespace qecpath;

TEST(Binomial, ExactSmallValues) {
  EXPECT_EQ(binomial(3, 2), 3);
  EXPECT_EQ(binomial(5, 3), 10);
  EXPECT_EQ(binomial(10, 5), 252);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(UnrotatedCount, ClosedForm) {
  EXPECT_EQ(unrotated_count(3), 9);    // 3 * C(3,2)
  EXPECT_EQ(unrotated_count(5), 50);   // 5 * C(5,3)
  EXPECT_THROW(unrotated_count(4), std::invalid_argument);
}

TEST(UnrotatedCount, TwoFormsAgreeExactly) {
  // d * C(d, d_e) == (d/2) * C(d+1, d_e), cleared of the half.
  for (int d = 3; d <= 49; d += 2) {
    const int d_e = (d + 1) / 2;
    EXPECT_EQ(2 * ConfigCount(d) * binomial(d, d_e), ConfigCount(d) * binomial(d + 1, d_e))
        << "d=" << d;
  }
}

TEST(CentralBinomial, HalvingIdentity) {
  EXPECT_EQ(central_binomial_halved(5), 126);  // C(9,5) == C(10,5)/2
  for (int n = 1; n <= 64; ++n) {
    EXPECT_EQ(central_binomial_halved(n) * 2, binomial(2 * n, n)) << "n=" << n;
  }
}

TEST(CentralBinomial, StirlingFormValues) {
  EXPECT_NEAR(central_binomial_approx(1), 2.2567583341910251, 1e-15);  // 4/sqrt(pi)
  // The approximation overshoots: at n=1 the relative error against the
  // exact value is 12.84%, just past 1/(8n).
  EXPECT_NEAR(central_binomial_approx(1) / 2.0 - 1.0, 0.12837916709551256, 1e-12);
  const double ratio10 =
      central_binomial_approx(10) / binomial(20, 10).convert_to<double>();
  EXPECT_GE(ratio10, 1.0);
  EXPECT_LE(ratio10, 1.02);
}

TEST(CentralBinomial, StirlingEnvelopeHoldsAgainstApprox) {
  // 1 - exact/approx <= 1/(8n); the overshoot measured against the exact
  // value exceeds 1/(8n) by the second-order term, so the valid direction
  // normalizes by the approximation.
  for (int n = 1; n <= 64; ++n) {
    const double approx = central_binomial_approx(n);
    const double exact = binomial(2 * n, n).convert_to<double>();
    EXPECT_LE(std::fabs(1.0 - exact / approx), 1.0 / (8.0 * n) + 1e-12) << "n=" << n;
    EXPECT_GT(approx / exact - 1.0, 1.0 / (8.0 * n)) << "n=" << n;
  }
}

TEST(RotatedBounds, ClosedFormValues) {
  EXPECT_EQ(rotated_upper_bound(3), 36);   // 3 * 4 * 3
  EXPECT_EQ(rotated_upper_bound(5), 800);  // 5 * 16 * 10
  EXPECT_DOUBLE_EQ(rotated_lower_bound(3), 10.8);
  EXPECT_DOUBLE_EQ(rotated_lower_bound(3, 1.0), 18.0);
}

TEST(RotatedBounds, SandwichExactCountAtDThree) {
  const ConfigCount exact = count_error_patterns(3, 2);
  EXPECT_EQ(exact, 18);
  EXPECT_LE(rotated_lower_bound(3), exact.convert_to<double>());
  EXPECT_LE(exact, rotated_upper_bound(3));
  const BoundPair pair = rotated_bounds(3);
  EXPECT_DOUBLE_EQ(pair.lower, 10.8);
  EXPECT_DOUBLE_EQ(pair.upper, 36.0);
}

TEST(ScalingLaw, DirectEvaluation) {
  EXPECT_NEAR(scaling_law({0.209, 0.0733}, 1e-4, 3), 3.8898991045787275e-07, 1e-18);
  EXPECT_DOUBLE_EQ(scaling_law({0.37, 0.05}, 0.05, 9), 0.37);  // p == p_th
  EXPECT_DOUBLE_EQ(scaling_law({1.0, 0.999999}, 0.5, 3), std::pow(0.5 / 0.999999, 2));
}

TEST(ScalingLaw, MonotoneInRateAndDistance) {
  const ScalingParams fit{0.209, 0.0733};
  double prev = 0.0;
  for (double p : {1e-5, 3e-5, 1e-4, 3e-4, 1e-3}) {
    const double rate = scaling_law(fit, p, 7);
    EXPECT_GT(rate, prev);
    prev = rate;
  }
  prev = 1.0;
  for (int d = 3; d <= 21; d += 2) {
    const double rate = scaling_law(fit, 1e-4, d);
    EXPECT_LT(rate, prev) << "d=" << d;
    prev = rate;
  }
}

TEST(ScalingLaw, RejectsBadParameters) {
  EXPECT_THROW(scaling_law({0.0, 0.5}, 1e-4, 3), std::invalid_argument);
  EXPECT_THROW(scaling_law({1.0, 0.5}, 1.5, 3), std::domain_error);
  EXPECT_THROW(scaling_law({1.0, 1.5}, 1e-4, 3), std::domain_error);
}

TEST(CompareVariants, SpecExample) {
  const CrossoverComparison cmp = compare_variants(1e-4, 3, 0.0733, 0.249);
  EXPECT_TRUE(cmp.rotated_preferred);
  EXPECT_NEAR(std::pow(10.0, cmp.lhs_log10), 1.0701317551369462e-05, 1e-17);
  EXPECT_NEAR(std::pow(10.0, cmp.rhs_log10), 0.007686835875443497, 1e-14);
}

TEST(CompareVariants, HoldsWhenThresholdsCoincide) {
  // p == p_tr == p_tur collapses the inequality to 1 <= 7.75 at any small d_e.
  for (int d_e : {1, 2, 3, 5, 8}) {
    EXPECT_TRUE(rotated_preferred(0.0733, d_e, 0.0733, 0.0733)) << "d_e=" << d_e;
  }
}

TEST(CompareVariants, LoweringRateNeverFlipsAwayFromRotated) {
  for (int d_e : {2, 5, 10, 20}) {
    bool was_preferred = false;
    for (double p = 0.9; p > 1e-12; p /= 4.0) {
      const bool now = rotated_preferred(p, d_e);
      if (was_preferred) {
        EXPECT_TRUE(now) << "p=" << p << " d_e=" << d_e;
      }
      was_preferred = now;
    }
    EXPECT_TRUE(was_preferred);
  }
}
