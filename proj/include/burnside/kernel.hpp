#pragma once

#include "burnside/exact.hpp"
#include "burnside/matrix.hpp"
#include "burnside/state.hpp"

#include <cstdint>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace burnside {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

// Dense-kernel state caps. Overridable with BURNSIDE_MAX_STATES_K2 and
// BURNSIDE_MAX_STATES_KN (k >= 3).
struct CapConfig {
  std::uint64_t binary = 4096;
  std::uint64_t alphabet = 2187;

  static CapConfig from_env() {
    CapConfig c;
    if (const char* v = std::getenv("BURNSIDE_MAX_STATES_K2")) c.binary = std::strtoull(v, nullptr, 10);
    if (const char* v = std::getenv("BURNSIDE_MAX_STATES_KN")) c.alphabet = std::strtoull(v, nullptr, 10);
    return c;
  }

  std::uint64_t cap_for(int k) const { return k == 2 ? binary : alphabet; }

  void check(int n, int k) const {
    std::uint64_t need = state_count(n, k);
    if (need > cap_for(k))
      throw CapExceeded("state space " + std::to_string(k) + "^" + std::to_string(n) +
                        (need == std::numeric_limits<std::uint64_t>::max() ? "" : " = " + std::to_string(need)) +
                        " exceeds cap " + std::to_string(cap_for(k)) +
                        (k == 2 ? " (BURNSIDE_MAX_STATES_K2)" : " (BURNSIDE_MAX_STATES_KN)"));
  }
};

// table[a*k + b] = #{i : x_i = a, y_i = b}
struct PairCounts {
  int k = 2;
  std::vector<int> table;

  static PairCounts of(const State& x, const State& y) {
    if (x.n != y.n || x.k != y.k) throw std::invalid_argument("PairCounts: states differ in shape");
    PairCounts p{x.k, std::vector<int>(static_cast<std::size_t>(x.k * x.k), 0)};
    for (int i = 0; i < x.n; ++i) ++p.table[static_cast<std::size_t>(x[i] * x.k + y[i])];
    return p;
  }
  int operator()(int a, int b) const { return table[static_cast<std::size_t>(a * k + b)]; }
  int row_total(int a) const {
    int s = 0;
    for (int b = 0; b < k; ++b) s += (*this)(a, b);
    return s;
  }
};

inline Rational kernel_entry_binary(const PairCounts& p) {
  if (p.k != 2) throw std::invalid_argument("kernel_entry_binary: k must be 2");
  const int n00 = p(0, 0), n01 = p(0, 1), n10 = p(1, 0), n11 = p(1, 1);
  const long n = n00 + n01 + n10 + n11;
  BigInt num = binomial(2 * n00, n00) * binomial(2 * n01, n01) * binomial(2 * n10, n10) * binomial(2 * n11, n11);
  BigInt den = binomial(n00 + n01, n00) * binomial(n10 + n11, n10);
  den <<= static_cast<mp_bitcnt_t>(2 * n);
  return make_rational(num, den);
}

inline Rational kernel_entry_binary(const State& x, const State& y) {
  if (x.k != 2 || y.k != 2) throw std::invalid_argument("kernel_entry_binary: k must be 2");
  return kernel_entry_binary(PairCounts::of(x, y));
}

// Summing (1/k)^{cycles} over each block S_{n_ab} gives (1/k)_{n_ab}; dividing
// by |G_x| = prod_a n_a! gives the two-stage transition probability.
inline Rational kernel_entry_alphabet(const PairCounts& p) {
  const Rational inv_k = frac(1, p.k);
  Rational r = 1;
  for (int a = 0; a < p.k; ++a) {
    for (int b = 0; b < p.k; ++b) r *= rising_factorial(inv_k, p(a, b));
    r /= factorial(p.row_total(a));
  }
  return r;
}

inline Rational kernel_entry_alphabet(const State& x, const State& y) {
  return kernel_entry_alphabet(PairCounts::of(x, y));
}

inline Rational kernel_entry(const State& x, const State& y) {
  return x.k == 2 ? kernel_entry_binary(x, y) : kernel_entry_alphabet(x, y);
}

inline BigInt orbit_count(int n, int k) { return binomial(n + k - 1, k - 1); }

inline BigInt orbit_size(const State& x) {
  BigInt s = factorial(x.n);
  for (int c : x.counts()) s /= factorial(c);
  return s;
}

inline Rational stationary_prob(const State& x) {
  return make_rational(1, orbit_count(x.n, x.k) * orbit_size(x));
}

struct Kernel {
  int n = 0;
  int k = 2;
  RationalMatrix matrix;
  Vec stationary;

  std::size_t size() const { return matrix.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return matrix(i, j); }
};

inline void check_kernel_invariants(const Kernel& K) {
  const std::size_t N = K.size();
  Rational total = 0;
  for (std::size_t i = 0; i < N; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < N; ++j) s += K(i, j);
    if (s != 1) throw InvariantError("kernel row " + std::to_string(i) + " sums to " + to_string(s));
    total += K.stationary[i];
  }
  if (total != 1) throw InvariantError("stationary distribution sums to " + to_string(total));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      if (K.stationary[i] * K(i, j) != K.stationary[j] * K(j, i))
        throw InvariantError("detailed balance fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

inline Kernel build_kernel(int n, int k, const CapConfig& caps = CapConfig::from_env(), bool verify = true) {
  caps.check(n, k);
  const std::uint64_t N = state_count(n, k);
  Kernel K{n, k, RationalMatrix(N, N), Vec(N)};
  std::vector<State> states;
  states.reserve(N);
  for (std::uint64_t i = 0; i < N; ++i) states.push_back(State::from_index(i, n, k));
  // Entries depend only on the pair-count table.
  std::map<std::vector<int>, Rational> cache;
  for (std::uint64_t i = 0; i < N; ++i) {
    K.stationary[i] = stationary_prob(states[i]);
    for (std::uint64_t j = 0; j < N; ++j) {
      PairCounts p = PairCounts::of(states[i], states[j]);
      auto it = cache.find(p.table);
      if (it == cache.end())
        it = cache.emplace(p.table, k == 2 ? kernel_entry_binary(p) : kernel_entry_alphabet(p)).first;
      K.matrix(i, j) = it->second;
    }
  }
  if (verify) check_kernel_invariants(K);
  return K;
}

}  // namespace burnside
