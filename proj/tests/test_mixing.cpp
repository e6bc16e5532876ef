#include "burnside/kernel.hpp"
#include "burnside/lumping.hpp"
#include "burnside/mixing.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace burnside;

TEST(Chi2Exact, Examples) {
  const State x = State::parse("01", 2);
  EXPECT_EQ(chi2_exact(2, x, 1), frac(1, 8));
  EXPECT_EQ(tv_exact(2, x, 1), frac(1, 6));
  for (int n = 1; n <= 4; ++n) {
    const Kernel K = build_kernel(n, 2);
    for (std::size_t i = 0; i < K.size(); ++i) {
      const State s = State::from_index(i, n, 2);
      EXPECT_EQ(chi2_exact(K, s, 0), 1 / K.stationary[i] - 1);
      EXPECT_EQ(tv_exact(K, s, 0), 1 - K.stationary[i]);
    }
  }
}

TEST(Chi2Exact, MatchesMatrixPowerOracle) {
  for (int k = 2; k <= 3; ++k)
    for (int n = 1; n <= 3; ++n) {
      const Kernel K = build_kernel(n, k);
      for (unsigned long l = 0; l <= 3; ++l)
        for (std::size_t x = 0; x < K.size(); ++x) {
          const Vec row = oracle::power_row(K.matrix, x, l);
          EXPECT_EQ(chi2_exact(K, State::from_index(x, n, k), l), oracle::chi2(row, K.stationary));
          EXPECT_EQ(tv_exact(K, State::from_index(x, n, k), l), oracle::tv(row, K.stationary));
        }
    }
}

TEST(Chi2Spectral, EqualsMatrixPower) {
  for (int n = 1; n <= 5; ++n) {
    const Kernel K = build_kernel(n, 2);
    const auto basis = build_basis(n);
    for (std::size_t x = 0; x < K.size(); ++x) {
      const State s = State::from_index(x, n, 2);
      const DistanceCurve c = distance_curve(K, s, Metric::chi2, 1, 4);
      for (const auto& [l, v] : c.points) ASSERT_EQ(chi2_spectral(basis, s, l), v) << "n=" << n << " x=" << x << " s=" << l;
    }
  }
  EXPECT_THROW(chi2_spectral(build_basis(2), State(2, 2), 0), std::domain_error);
}

TEST(Chi2Spectral, DecaysToZero) {
  const auto basis = build_basis(4);
  const State x = State::parse("0001", 2);
  Rational prev = chi2_spectral(basis, x, 1);
  for (unsigned long s = 2; s <= 12; ++s) {
    const Rational v = chi2_spectral(basis, x, s);
    EXPECT_LT(v, prev);
    prev = v;
  }
  EXPECT_LT(prev.get_d(), 1e-12);
}

TEST(Chi2Avg, Examples) {
  EXPECT_EQ(chi2_avg_exact(2, 1), frac(1, 16));
  EXPECT_EQ(chi2_avg_exact(4, 1), frac(3, 8) + frac(81, 4096));
  EXPECT_THROW(chi2_avg_exact(4, 0), std::domain_error);
  EXPECT_THROW(chi2_avg_log(4, 0), std::domain_error);
  EXPECT_EQ(chi2_avg(4, 1, Mode::exact).exact, frac(3, 8) + frac(81, 4096));
}

TEST(Chi2Avg, MatchesDefinition) {
  for (int n = 1; n <= 5; ++n) {
    const Kernel K = build_kernel(n, 2);
    for (unsigned long l = 1; l <= 3; ++l) EXPECT_EQ(chi2_avg_exact(n, l), chi2_avg_definition(K, l)) << n << " " << l;
  }
  // l = 0: the definition counts every non-constant direction
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(chi2_avg_definition(build_kernel(n, 2), 0), Rational((BigInt(1) << n) - 1));
}

TEST(Chi2Avg, LogAgreesWithExact) {
  for (long n = 2; n <= 30; ++n)
    for (unsigned long l : {1UL, 2UL, 5UL, 20UL}) {
      const double exact = std::log(chi2_avg_exact(n, l).get_d());
      const double lg = chi2_avg_log(n, l).logmag;
      EXPECT_LT(std::fabs(lg - exact), 1e-9 * std::max(1.0, std::fabs(exact))) << n << " " << l;
    }
  EXPECT_TRUE(chi2_avg_log(1, 3).is_zero());
}

TEST(Chi2Avg, OrbitConstancyAndAverageDecomposition) {
  for (int n = 1; n <= 6; ++n) {
    const Kernel K = build_kernel(n, 2);
    for (unsigned long l = 1; l <= 2; ++l) {
      std::vector<Rational> per_orbit(static_cast<std::size_t>(n + 1));
      std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
      for (std::size_t x = 0; x < K.size(); ++x) {
        const State s = State::from_index(x, n, 2);
        const Rational v = chi2_exact(K, s, l);
        const auto o = static_cast<std::size_t>(s.ones());
        if (!seen[o]) {
          per_orbit[o] = v;
          seen[o] = true;
        }
        ASSERT_EQ(v, per_orbit[o]);
      }
      Rational avg = 0;
      for (const auto& v : per_orbit) avg += v;
      EXPECT_EQ(avg / (n + 1), chi2_avg_exact(n, l));
    }
  }
}

TEST(Bounds, EnvelopesHold) {
  for (int n = 1; n <= 6; ++n) {
    const Kernel K = build_kernel(n, 2);
    for (std::size_t x = 0; x < K.size(); ++x)
      for (unsigned long l = 1; l <= 4; ++l) {
        const BoundReport r = bound_envelopes(K, State::from_index(x, n, 2), l);
        for (const auto& e : r.entries) EXPECT_TRUE(e.holds()) << e.name << " n=" << n << " x=" << x << " l=" << l;
      }
  }
}

TEST(Bounds, TvFromZeros) {
  EXPECT_EQ(tv_exact(1, State(1, 2), 1), 0);
  for (int n = 2; n <= 8; ++n) {
    const Kernel K = build_kernel(n, 2);
    const DistanceCurve c = distance_curve(K, State(n, 2), Metric::tv, 0, 6);
    for (const auto& [l, v] : c.points) {
      const Rational q = power(frac(1, 4), l);
      EXPECT_LE(q / 4, v);
      EXPECT_LE(v, 4 * q);
    }
  }
}

TEST(Bounds, SelfLoop) {
  EXPECT_EQ(self_loop_lower_bound(State::parse("01", 2), 1), frac(1, 24));
  EXPECT_EQ(self_loop_lower_bound(State::parse("01", 2), 2), 0);  // (1/4)^2 < 1/6
  const Kernel K = build_kernel(4, 2);
  for (std::size_t x = 0; x < K.size(); ++x)
    for (unsigned long l = 1; l <= 4; ++l) {
      const State s = State::from_index(x, 4, 2);
      EXPECT_LE(self_loop_lower_bound(s, l), chi2_exact(K, s, l));
    }
  // half-half at n = 100: large after 5 steps, vacuous once K(x,x)^l < pi(x)
  State half = orbit_representative(100, 50);
  EXPECT_GT(self_loop_lower_bound(half, 5), Rational(1000000));
  EXPECT_EQ(self_loop_lower_bound(half, 20), 0);
  Rational prev = self_loop_lower_bound(half, 1);
  for (unsigned long l = 2; l <= 30; ++l) {
    const Rational v = self_loop_lower_bound(half, l);
    EXPECT_LE(v, prev);
    prev = v;
  }
}

TEST(OneOnes, ClosedPiecesAndEnvelope) {
  EXPECT_EQ(f0_at_one_one(3, 2), -3);
  for (long n = 3; n <= 12; ++n) EXPECT_EQ(f0_at_one_one(n, 2), frac((n - 1) * (n - 6), 2));
  for (int n = 3; n <= 10; ++n)
    for (unsigned long s = 3; s <= 6; ++s) {
      const OneOneChi2 r = chi2_from_one_one(n, s);
      EXPECT_TRUE(r.within) << n << " " << s;
      EXPECT_LE(r.beta1_part, r.value);
    }
  EXPECT_THROW(chi2_from_one_one(2, 3), std::domain_error);
}

TEST(OneOnes, EqualsMatrixPower) {
  for (int n = 3; n <= 6; ++n) {
    const Kernel K = build_kernel(n, 2);
    const DistanceCurve c = distance_curve(K, unit_state(n, n), Metric::chi2, 1, 5);
    for (const auto& [s, v] : c.points) EXPECT_EQ(chi2_from_one_one(n, s).value, v) << n << " " << s;
  }
}

TEST(Cutoff, SignsAndMonotonicity) {
  const auto rows = cutoff_scan({100000}, {0.8, 0.9, 1.0, 1.1, 1.2});
  ASSERT_EQ(rows.size(), 5U);
  EXPECT_GT(rows[1].chi2.logmag, 0);
  EXPECT_LT(rows[3].chi2.logmag, 0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GE(rows[i].l, rows[i - 1].l);
    EXPECT_LE(rows[i].chi2.logmag, rows[i - 1].chi2.logmag);
  }
  EXPECT_GT(cutoff_time(1e5, 1.0, false), 0);
  EXPECT_LT(cutoff_time(1e5, 1.0, true), cutoff_time(1e5, 1.0, false));
}

TEST(Curve, ReusesRowAcrossSteps) {
  const Kernel K = build_kernel(3, 2);
  const State x = State::parse("011", 2);
  const DistanceCurve c = distance_curve(K, x, Metric::chi2, 2, 5);
  ASSERT_EQ(c.points.size(), 4U);
  for (const auto& [l, v] : c.points) EXPECT_EQ(v, chi2_exact(K, x, l));
}
