#include "burnside/kernel.hpp"
#include "burnside/lumping.hpp"
#include "burnside/polynomials.hpp"
#include "burnside/sampler.hpp"
#include "burnside/verifier.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <limits>
#include <numeric>

using namespace burnside;

namespace {
State st(const char* s, int k = 2) { return State::parse(s, k); }
}  // namespace

TEST(State, IndexIsLittleEndian) {
  EXPECT_EQ(st("10").index(), 1U);
  EXPECT_EQ(st("01").index(), 2U);
  EXPECT_EQ(st("21", 3).index(), 5U);
  for (std::uint64_t i = 0; i < 81; ++i) EXPECT_EQ(State::from_index(i, 4, 3).index(), i);
  EXPECT_THROW(State::parse("012", 2), std::invalid_argument);
  EXPECT_THROW(State(1, 11), std::invalid_argument);
}

TEST(KernelEntry, BinaryExamples) {
  EXPECT_EQ(kernel_entry_binary(st("0"), st("0")), frac(1, 2));
  EXPECT_EQ(kernel_entry_binary(st("00"), st("00")), frac(3, 8));
  EXPECT_EQ(kernel_entry_binary(st("01"), st("11")), frac(1, 4));
}

TEST(KernelEntry, AlphabetExamples) {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) EXPECT_EQ(kernel_entry_alphabet(State(3, std::vector<int>{a}), State(3, std::vector<int>{b})), frac(1, 3));
  EXPECT_EQ(kernel_entry_alphabet(st("00", 3), st("11", 3)), frac(2, 9));
  EXPECT_EQ(kernel_entry_alphabet(st("00", 3), st("12", 3)), frac(1, 18));
}

TEST(KernelEntry, AlphabetFormulaAgreesWithBinaryAtK2) {
  for (int n = 1; n <= 6; ++n)
    for (std::uint64_t x = 0; x < (1U << n); ++x)
      for (std::uint64_t y = 0; y < (1U << n); ++y) {
        const State a = State::from_index(x, n, 2), b = State::from_index(y, n, 2);
        ASSERT_EQ(kernel_entry_alphabet(a, b), kernel_entry_binary(a, b));
      }
}

TEST(BuildKernel, MatchesStabilizerOracle) {
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(build_kernel(n, 2).matrix, oracle::stabilizer_kernel(n, 2)) << "k=2 n=" << n;
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(build_kernel(n, 3).matrix, oracle::stabilizer_kernel(n, 3)) << "k=3 n=" << n;
  EXPECT_EQ(build_kernel(2, 4).matrix, oracle::stabilizer_kernel(2, 4));
}

TEST(BuildKernel, StationaryMatchesOrbitCount) {
  for (int k = 2; k <= 3; ++k)
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(build_kernel(n, k).stationary, oracle::stationary(n, k));
}

TEST(BuildKernel, SmallCases) {
  const Kernel K2 = build_kernel(2, 2);
  // index order 00, 10, 01, 11
  EXPECT_EQ(K2.matrix.row(0), (Vec{frac(3, 8), frac(1, 8), frac(1, 8), frac(3, 8)}));
  EXPECT_EQ(K2.matrix.row(1), (Vec{frac(1, 4), frac(1, 4), frac(1, 4), frac(1, 4)}));
  EXPECT_EQ(K2.stationary, (Vec{frac(1, 3), frac(1, 6), frac(1, 6), frac(1, 3)}));
  const Kernel K1 = build_kernel(1, 2);
  for (const auto& q : K1.matrix.data()) EXPECT_EQ(q, frac(1, 2));
  const Kernel K3 = build_kernel(3, 2);
  for (std::size_t i = 0; i < 8; ++i) {
    const Vec row = K3.matrix.row(i);
    EXPECT_EQ(std::accumulate(row.begin(), row.end(), Rational(0)), 1);
  }
}

TEST(BuildKernel, SymmetrySuite) {
  RngStream rng(1, 0);
  for (int n = 1; n <= 6; ++n) {
    const Kernel K = build_kernel(n, 2);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<int> sigma(static_cast<std::size_t>(n));
      std::iota(sigma.begin(), sigma.end(), 0);
      shuffle(sigma, rng);
      for (std::uint64_t x = 0; x < K.size(); ++x)
        for (std::uint64_t y = 0; y < K.size(); ++y) {
          const State a = State::from_index(x, n, 2), b = State::from_index(y, n, 2);
          const Rational& v = K(x, y);
          ASSERT_EQ(K(x, complement(b).index()), v);
          ASSERT_EQ(K(complement(a).index(), complement(b).index()), v);
          ASSERT_EQ(K(permute(a, sigma).index(), permute(b, sigma).index()), v);
        }
    }
  }
}

TEST(BuildKernel, Reversibility) {
  for (int n = 1; n <= 6; ++n) EXPECT_NO_THROW(check_kernel_invariants(build_kernel(n, 2, CapConfig{}, false)));
  for (int n = 1; n <= 5; ++n) EXPECT_NO_THROW(check_kernel_invariants(build_kernel(n, 3, CapConfig{}, false)));
}

TEST(BuildKernel, CapsAreEnforcedAndOverridable) {
  EXPECT_THROW(build_kernel(13, 2), CapExceeded);
  EXPECT_EQ(state_count(64, 2), std::numeric_limits<std::uint64_t>::max());
  EXPECT_EQ(state_count(63, 2), std::uint64_t{1} << 63);
  EXPECT_THROW(build_kernel(100, 2), CapExceeded);
  EXPECT_THROW(build_kernel(8, 3), CapExceeded);
  EXPECT_THROW(build_kernel(3, 2, CapConfig{4, 4}), CapExceeded);
  try {
    build_kernel(13, 2);
  } catch (const CapExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("BURNSIDE_MAX_STATES_K2"), std::string::npos);
  }
  setenv("BURNSIDE_MAX_STATES_K2", "16", 1);
  EXPECT_EQ(CapConfig::from_env().binary, 16U);
  EXPECT_THROW(build_kernel(5, 2), CapExceeded);
  unsetenv("BURNSIDE_MAX_STATES_K2");
  EXPECT_EQ(CapConfig::from_env().binary, 4096U);
}

TEST(OrbitLumping, BinaryN2) {
  const OrbitKernel L = lump_to_orbits(build_kernel(2, 2));
  ASSERT_EQ(L.matrix.rows(), 3U);
  // uniform stationary: 1^T L = 1^T for a doubly stochastic orbit chain
  Vec pi(3, frac(1, 3));
  EXPECT_EQ(left_apply(pi, L.matrix), pi);
  EXPECT_EQ(L.matrix, orbit_kernel_direct(2, 2).matrix);
}

TEST(OrbitLumping, ChebyshevEigenvectors) {
  for (int n = 1; n <= 10; ++n) EXPECT_TRUE(verify_orbit_chebyshev(n).pass) << n;
}

TEST(OrbitLumping, AlphabetN2) {
  const OrbitKernel L = lump_to_orbits(build_kernel(2, 3));
  ASSERT_EQ(L.matrix.rows(), 6U);
  for (std::size_t i = 0; i < 6; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < 6; ++j) s += L.matrix(i, j);
    EXPECT_EQ(s, 1);
  }
  EXPECT_EQ(L.matrix, orbit_kernel_direct(2, 3).matrix);
}

TEST(CoordinateLumping, Examples) {
  EXPECT_EQ(lump_to_coordinates(3, 2, {1, 3}), build_kernel(2, 2).matrix);
  const RationalMatrix M = lump_to_coordinates(4, 3, {2});
  for (const auto& q : M.data()) EXPECT_EQ(q, frac(1, 3));
  EXPECT_EQ(lump_to_coordinates(3, 2, {1, 2, 3}), build_kernel(3, 2).matrix);
  EXPECT_THROW(lump_to_coordinates(3, 2, {2, 1}), std::invalid_argument);
  EXPECT_THROW(lump_to_coordinates(3, 2, {4}), std::invalid_argument);
}

TEST(CoordinateLumping, GroupingOracleAllSubsets) {
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(verify_coordinate_lumping(n, 2).pass);
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(verify_coordinate_lumping(n, 3).pass);
}

TEST(Duality, TensorIdentity) {
  for (int n = 2; n <= 6; ++n) EXPECT_TRUE(verify_tensor_identity(n).pass) << n;
}

TEST(ValueQuotient, ClassSizesAndSpectrumAgree) {
  for (int n = 1; n <= 5; ++n) {
    const ValueQuotient Q = value_quotient(n, 3);
    BigInt total = 0;
    for (const auto& s : Q.class_sizes) total += s;
    EXPECT_EQ(total, BigInt(static_cast<unsigned long>(state_count(n, 3))));
  }
  // nonzero multiplicities of K and of the quotient coincide
  for (int n = 2; n <= 5; ++n) {
    const Kernel K = build_kernel(n, 3);
    const ValueQuotient Q = value_quotient(n, 3);
    for (const Rational& lam : {Rational(1), frac(1, 3), frac(1, 9), frac(1, 18), frac(2, 27)}) {
      EXPECT_EQ(K.size() - rational_rank(shift(K.matrix, lam)), Q.matrix.rows() - rational_rank(shift(Q.matrix, lam)))
          << "n=" << n << " lambda=" << to_string(lam);
    }
    EXPECT_EQ(rational_rank(K.matrix), rational_rank(Q.matrix));
  }
}
