#include <gtest/gtest.h>

#include "bmp/coefficients.hpp"
#include "oracle.hpp"

using bmp::Integer;
using bmp::Rational;

TEST(DCoeff, SmallValues) {
  EXPECT_EQ(bmp::d_coeff(0, 0), 1);
  EXPECT_EQ(bmp::d_coeff(1, 0), Rational(3, 2));
  EXPECT_EQ(bmp::d_coeff(2, 1), Rational(15, 4));
}

TEST(DCoeff, LastCoefficientIsCentralBinomialOverPowerOfTwo) {
  for (long m = 0; m <= 20; ++m)
    EXPECT_EQ(bmp::d_coeff(m, m), oracle::ratio(oracle::binomial(2 * m, m), oracle::power(2, m))) << m;
}

TEST(DCoeff, RejectsLAboveM) { EXPECT_THROW(bmp::d_coeff(3, 4), bmp::domain_error); }

TEST(CoefficientRow, KnownRows) {
  EXPECT_EQ(bmp::coefficient_row(0).values, (std::vector<Rational>{1}));
  EXPECT_EQ(bmp::coefficient_row(1).values, (std::vector<Rational>{Rational(3, 2), 1}));
  EXPECT_EQ(bmp::coefficient_row(2).values, (std::vector<Rational>{Rational(21, 8), Rational(15, 4), Rational(3, 2)}));
  // Frozen from an independent Fraction-based evaluation.
  EXPECT_EQ(bmp::coefficient_row(5).values,
            (std::vector<Rational>{Rational(4389, 256), Rational(8589, 128), Rational(7161, 64), Rational(777, 8),
                                   Rational(693, 16), Rational(63, 8)}));
}

TEST(CoefficientRow, MatchesLiteralOracle) {
  for (long m = 0; m <= 40; ++m) {
    const auto row = bmp::coefficient_row(m);
    ASSERT_EQ(row.values.size(), static_cast<std::size_t>(m + 1));
    for (long l = 0; l <= m; ++l) {
      EXPECT_EQ(row.values[l], oracle::d_coeff(m, l)) << m << "," << l;
      EXPECT_EQ(row.values[l], bmp::d_coeff(m, l));
    }
  }
}

TEST(CoefficientRow, ScaledEntriesAreIntegersAndPositive) {
  for (bmp::Index m = 0; m <= 120; ++m) {
    const auto row = bmp::coefficient_row(m);
    const auto scaled = bmp::scaled_row(m);
    for (std::size_t l = 0; l < row.values.size(); ++l) {
      const Rational b = row.values[l] * row.scale();
      EXPECT_TRUE(bmp::is_integer(b));
      EXPECT_EQ(b, Rational(scaled[l]));
      EXPECT_GT(row.values[l], 0);
    }
    EXPECT_EQ(row.scaled(), scaled);
  }
}

TEST(PolyP, Values) {
  EXPECT_EQ(bmp::poly_P(0), bmp::RationalPolynomial({1}));
  EXPECT_EQ(bmp::poly_P(1), bmp::RationalPolynomial({Rational(3, 2), 1}));
  EXPECT_EQ(bmp::poly_P(1).evaluate(Rational(1)), Rational(5, 2));
  EXPECT_EQ(bmp::poly_P(2).evaluate(Rational(1)), Rational(63, 8));
}

TEST(Delta, KnownValues) {
  EXPECT_EQ(bmp::delta_direct(2, 0), Rational(9, 8));
  EXPECT_EQ(bmp::delta_direct(2, 1), Rational(-9, 4));
  EXPECT_EQ(bmp::delta_direct(1, 0), Rational(-1, 2));
  EXPECT_EQ(bmp::delta_closed(2, 0), Rational(9, 8));
  EXPECT_EQ(bmp::delta_closed(2, 1), Rational(-9, 4));
  const std::vector<Rational> m5{Rational(12789, 256), Rational(5733, 128), Rational(-945, 64), Rational(-861, 16),
                                 Rational(-567, 16)};
  for (bmp::Index l = 0; l < 5; ++l) EXPECT_EQ(bmp::delta_closed(5, l), m5[l]);
}

TEST(Delta, DomainErrors) {
  EXPECT_THROW(bmp::delta_direct(3, 3), bmp::domain_error);
  EXPECT_THROW(bmp::delta_closed(0, 0), bmp::domain_error);
}

TEST(Delta, ClosedFormEqualsDirectDifference) {
  for (bmp::Index m = 1; m <= 60; ++m)
    for (bmp::Index l = 0; l < m; ++l) ASSERT_EQ(bmp::delta_closed(m, l), bmp::delta_direct(m, l)) << m << "," << l;
}

TEST(Delta, SignPattern) {
  for (bmp::Index m = 1; m <= 120; ++m) {
    const auto b = bmp::scaled_row(m);
    for (bmp::Index l = 0; l < m; ++l) {
      if (l < m / 2)
        ASSERT_GT(b[l + 1], b[l]) << m << "," << l;
      else
        ASSERT_LT(b[l + 1], b[l]) << m << "," << l;
    }
  }
}
