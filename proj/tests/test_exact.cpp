#include "burnside/exact.hpp"
#include "burnside/kernel.hpp"
#include "burnside/log_real.hpp"
#include "burnside/matrix.hpp"
#include "burnside/sampler.hpp"
#include "burnside/spectral.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace burnside;

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_THROW(binomial(-1, 0), std::domain_error);
}

TEST(RisingFactorial, Examples) {
  EXPECT_EQ(rising_factorial(frac(1, 2), 2), frac(3, 4));
  EXPECT_EQ(rising_factorial(frac(1, 2), 3), frac(15, 8));
  EXPECT_EQ(rising_factorial(frac(7, 3), 0), 1);
  // (1/2)_m = (2m)! / (4^m m!)
  for (long m = 0; m <= 8; ++m)
    EXPECT_EQ(rising_factorial(frac(1, 2), m), make_rational(factorial(2 * m), (BigInt(1) << (2 * m)) * factorial(m)));
}

TEST(Rational, CanonicalConstruction) {
  EXPECT_EQ(frac(2, -4), frac(-1, 2));
  EXPECT_EQ(frac(2, -4).get_den(), 2);
  EXPECT_THROW(frac(1, 0), std::domain_error);
  EXPECT_EQ(to_string(Rational(3)), "3/1");
  EXPECT_EQ(to_string(frac(-6, 4)), "-3/2");
  EXPECT_EQ(parse_rational("-3/2"), frac(-3, 2));
  EXPECT_EQ(parse_rational("5"), 5);
  EXPECT_EQ(parse_rational("4/-6"), frac(-2, 3));
  EXPECT_THROW(parse_rational("x/2"), std::invalid_argument);
}

TEST(Rational, ExactnessProperty) {
  RngStream rng(7, 0);
  auto draw = [&] {
    long p = static_cast<long>(rng.below(2001)) - 1000, q = static_cast<long>(rng.below(999)) + 1;
    return frac(p, q);
  };
  for (int t = 0; t < 2000; ++t) {
    const Rational a = draw(), b = draw();
    EXPECT_EQ(Rational((a + b) - b), a);
    if (sgn(b) != 0) {
      EXPECT_EQ(Rational((a * b) / b), a);
    }
  }
}

TEST(MatPow, Examples) {
  RationalMatrix M = from_rows({{frac(1, 3), 2}, {-1, frac(5, 7)}});
  EXPECT_EQ(mat_pow(M, 0), RationalMatrix::identity(2));
  const RationalMatrix K1 = build_kernel(1, 2).matrix;
  for (unsigned long l = 1; l <= 5; ++l) EXPECT_EQ(mat_pow(K1, l), K1);
  EXPECT_THROW(mat_pow(RationalMatrix(2, 3), 2), std::invalid_argument);
}

TEST(MatPow, TwoStepRowsCloseToStationary) {
  const Kernel K = build_kernel(2, 2);
  const RationalMatrix P = mat_pow(K.matrix, 2);
  for (std::size_t x = 0; x < 4; ++x) {
    Rational tv = 0;
    for (std::size_t y = 0; y < 4; ++y) tv += abs(P(x, y) - K.stationary[y]);
    EXPECT_LE(tv / 2, frac(1, 8));
  }
}

TEST(MatPow, AdditivityProperty) {
  RngStream rng(11, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 1 + rng.below(4);
    RationalMatrix M(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) M(i, j) = frac(static_cast<long>(rng.below(9)) - 4, 1 + static_cast<long>(rng.below(5)));
    const unsigned long i = rng.below(5), j = rng.below(5);
    EXPECT_EQ(mat_pow(M, i + j), mat_pow(M, i) * mat_pow(M, j));
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rational_rank(RationalMatrix(3, 4)), 0U);
  EXPECT_EQ(rational_rank(RationalMatrix::identity(5)), 5U);
  std::vector<Vec> rows;
  for (Subset S = 0; S < 16; ++S)
    if (subset_size(S) == 2) rows.push_back(f_subset_vector(4, S));
  EXPECT_EQ(rational_rank(from_rows(rows)), 6U);
  EXPECT_EQ(rational_rank(from_rows({{1, 2, 3}, {2, 4, 6}, {frac(1, 2), 1, frac(3, 2)}})), 1U);
  EXPECT_EQ(rational_rank(from_rows({{0, 0, 1}, {0, 1, 0}})), 2U);
}

TEST(Rank, MatchesDeterminantOnRandomSquares) {
  RngStream rng(5, 0);
  for (int trial = 0; trial < 30; ++trial) {
    RationalMatrix M(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) M(i, j) = frac(static_cast<long>(rng.below(3)) - 1, 1 + static_cast<long>(rng.below(3)));
    const Rational det = M(0, 0) * (M(1, 1) * M(2, 2) - M(1, 2) * M(2, 1)) - M(0, 1) * (M(1, 0) * M(2, 2) - M(1, 2) * M(2, 0)) +
                         M(0, 2) * (M(1, 0) * M(2, 1) - M(1, 1) * M(2, 0));
    EXPECT_EQ(rational_rank(M) == 3, sgn(det) != 0);
  }
}

TEST(Kron, IndexConvention) {
  const RationalMatrix A = from_rows({{1, 2}, {3, 4}}), B = from_rows({{5, 6}, {7, 8}});
  const RationalMatrix C = kron(A, B);
  // row ia + 2 ib, column ja + 2 jb
  EXPECT_EQ(C(1 + 2 * 0, 0 + 2 * 1), A(1, 0) * B(0, 1));
  EXPECT_EQ(C(0 + 2 * 1, 1 + 2 * 1), A(0, 1) * B(1, 1));
}

TEST(LogReal, RoundTrip) {
  RngStream rng(3, 0);
  for (int t = 0; t < 500; ++t) {
    const Rational q = make_rational(BigInt(static_cast<unsigned long>(rng.below(1000000) + 1)),
                                     BigInt(static_cast<unsigned long>(rng.below(1000000) + 1)));
    const double v = q.get_d();
    EXPECT_LT(std::fabs(LogReal::from_rational(q).to_double() - v) / v, 1e-12);
  }
  BigInt huge = BigInt(1) << 5000;
  EXPECT_NEAR(LogReal::from_rational(Rational(huge)).logmag, 5000 * std::log(2.0), 1e-9);
}

TEST(LogReal, SignedSum) {
  const LogReal a = LogReal::from_double(3.0), b = LogReal::from_double(-1.0);
  EXPECT_NEAR((a + b).to_double(), 2.0, 1e-14);
  EXPECT_NEAR((b + b).to_double(), -2.0, 1e-14);
  EXPECT_TRUE((a + (-a)).is_zero());
  EXPECT_NEAR((a * b).to_double(), -3.0, 1e-14);
}
