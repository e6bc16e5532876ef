#pragma once

#include "burnside/exact.hpp"
#include "burnside/kernel.hpp"
#include "burnside/matrix.hpp"
#include "burnside/polynomials.hpp"
#include "burnside/state.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace burnside {

// Coordinate sets over C_2^n as bitmasks: bit i is coordinate i+1.
using Subset = std::uint64_t;

inline Subset subset_of(const std::vector<int>& coords) {
  Subset s = 0;
  for (int c : coords) {
    if (c < 1 || c > 63) throw std::out_of_range("subset_of: coordinate out of range");
    s |= Subset{1} << (c - 1);
  }
  return s;
}

inline int subset_size(Subset s) { return std::popcount(s); }

struct Eigenvalue {
  Rational value;
  std::optional<long> index;  // k for beta_k; empty for the zero eigenvalue

  static Eigenvalue beta_k(long k) { return {beta(k), k}; }
  static Eigenvalue zero() { return {Rational(0), std::nullopt}; }
};

// f_S(x) = (-1)^{|x_S|} C(|S|, |x_S|)
inline Rational f_subset_eval(Subset S, std::uint64_t x_index) {
  const int h = std::popcount(S & x_index);
  BigInt c = binomial(subset_size(S), h);
  return Rational(h % 2 ? BigInt(-c) : c);
}

inline Rational f_subset_eval(Subset S, const State& x) {
  if (x.k != 2) throw std::invalid_argument("f_subset_eval: k must be 2");
  return f_subset_eval(S, x.index());
}

inline Vec f_subset_vector(int n, Subset S) {
  Vec v(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < v.size(); ++x) v[x] = f_subset_eval(S, x);
  return v;
}

inline Eigenvalue subset_eigenvalue(Subset S) {
  const int s = subset_size(S);
  return s % 2 ? Eigenvalue::zero() : Eigenvalue::beta_k(s / 2);
}

struct MultiplicityEntry {
  Eigenvalue eigenvalue;
  BigInt multiplicity;
};

inline std::vector<MultiplicityEntry> multiplicity_table(int n) {
  std::vector<MultiplicityEntry> t;
  for (long k = 0; 2 * k <= n; ++k) t.push_back({Eigenvalue::beta_k(k), binomial(n, 2 * k)});
  BigInt z = 1;
  z <<= static_cast<mp_bitcnt_t>(n > 0 ? n - 1 : 0);
  if (n > 0) t.push_back({Eigenvalue::zero(), z});
  return t;
}

// Stationary weights for k = 2: pi(x) = 1 / ((n+1) C(n, |x|)).
inline Vec binary_stationary(int n) {
  Vec pi(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < pi.size(); ++x) pi[x] = make_rational(1, (n + 1) * binomial(n, std::popcount(x)));
  return pi;
}

inline Rational inner_product(const Vec& f, const Vec& g, const Vec& pi) {
  Rational s = 0, t;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (sgn(f[x]) == 0 || sgn(g[x]) == 0) continue;
    t = f[x] * g[x];
    t *= pi[x];
    s += t;
  }
  return s;
}

// Normalized Gram entry <f_S, f_S'> / <f_S, f_S> for |S| = |S'| = m even:
// 1 / C(2m+1-t, m+1) with t = |S ∩ S'|. Different sizes are orthogonal by
// grading and flagged as such.
struct GramValue {
  Rational value;
  bool orthogonal_by_grading = false;
};

inline GramValue gram_normalized(Subset S, Subset T) {
  const int m = subset_size(S);
  if (subset_size(T) != m) return {Rational(0), true};
  if (m % 2) throw std::invalid_argument("gram_normalized: |S| must be even");
  const int t = subset_size(S & T);
  return {make_rational(1, binomial(2 * m + 1 - t, m + 1)), false};
}

// <f_S, f_S>_pi = C(2m, m) / (m+1)
inline Rational subset_self_norm(int m) { return make_rational(binomial(2 * m, m), m + 1); }

// Johnson-scheme eigenvalue of the normalized Gram matrix on m-subsets of [n]:
//   lambda_t = sum_l g(l) sum_i (-1)^{t-i} C(m-i, l-i) C(n-m+i-t, m-l+i-t) C(t, i),
// g(l) = 1 / C(2m+1-l, m+1), multiplicity C(n,t) - C(n,t-1).
inline Rational johnson_eigenvalue(int n, int m, int t) {
  if (2 * m > n || t < 0 || t > m) throw std::out_of_range("johnson_eigenvalue: parameters out of range");
  Rational lam = 0;
  for (int l = 0; l <= m; ++l) {
    BigInt inner = 0;
    for (int i = 0; i <= t; ++i) {
      BigInt term = binomial(m - i, l - i) * binomial(n - m + i - t, m - l + i - t) * binomial(t, i);
      if ((t - i) % 2) inner -= term;
      else inner += term;
    }
    lam += make_rational(inner, binomial(2 * m + 1 - l, m + 1));
  }
  return lam;
}

inline BigInt johnson_multiplicity(int n, int t) { return binomial(n, t) - (t > 0 ? binomial(n, t - 1) : BigInt(0)); }

}  // namespace burnside
