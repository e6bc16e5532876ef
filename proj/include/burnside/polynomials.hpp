#pragma once

#include "burnside/exact.hpp"

#include <stdexcept>
#include <vector>

namespace burnside {

// C(2k,k)^2 / 16^k
inline Rational beta(long k) {
  if (k < 0) throw std::domain_error("beta: negative index");
  BigInt c = binomial(2 * k, k);
  BigInt den = 1;
  den <<= static_cast<mp_bitcnt_t>(4 * k);
  return make_rational(c * c, den);
}

// Discrete Chebyshev polynomials on {0..n} via the three-term recurrence
//   (j+1)(n-j) T^{j+1} = (2j+1)(n-2x) T^j - j(j+n+1) T^{j-1}.
// Returns T^0(i), ..., T^n(i).
inline std::vector<Rational> chebyshev_all(long n, long i) {
  if (n < 0 || i < 0 || i > n) throw std::out_of_range("chebyshev: point out of range");
  std::vector<Rational> T(static_cast<std::size_t>(n + 1));
  T[0] = 1;
  if (n == 0) return T;
  T[1] = frac(n - 2 * i, n);
  for (long j = 1; j + 1 <= n; ++j)
    T[static_cast<std::size_t>(j + 1)] =
        (Rational((2 * j + 1) * (n - 2 * i)) * T[static_cast<std::size_t>(j)] -
         Rational(j * (j + n + 1)) * T[static_cast<std::size_t>(j - 1)]) /
        Rational((j + 1) * (n - j));
  return T;
}

inline Rational chebyshev_eval(long n, long m, long i) {
  if (m < 0 || m > n) throw std::out_of_range("chebyshev_eval: degree out of range");
  return chebyshev_all(n, i)[static_cast<std::size_t>(m)];
}

// Q^l_{n;a,b}(x) = sum_k (-l)_k (l+a+b+1)_k (-x)_k / ((a+1)_k (-n)_k k!), with Q(0) = 1.
inline Rational hahn_eval(long n, const Rational& a, const Rational& b, long l, long x) {
  if (a <= -1 || b <= -1) throw std::out_of_range("hahn_eval: parameters must exceed -1");
  if (l < 0 || l > n || x < 0 || x > n) throw std::out_of_range("hahn_eval: degree or point out of range");
  Rational sum = 0, term = 1;
  // term_k / term_{k-1} = (k-1-l)(l+a+b+k)(k-1-x) / ((a+k)(k-1-n) k)
  for (long k = 0; k <= std::min(l, x); ++k) {
    if (k > 0)
      term *= Rational(k - 1 - l) * (l + a + b + k) * Rational(k - 1 - x) / ((a + k) * Rational(k - 1 - n) * Rational(k));
    sum += term;
  }
  return sum;
}

// Level coefficients of the column-reading basis vectors:
//   T^{(l)}_{m,n}(i) = sum_j (-1)^{m+j} C(2m+l, m+j) C(i, j) C(n-2m-i, l-j).
inline Rational t_scalar(long m, long n, long l, long i) {
  if (m < 0 || 2 * m > n) throw std::out_of_range("t_scalar: m out of range");
  if (l < 0 || i < 0 || l > n - 2 * m || i > n - 2 * m) throw std::out_of_range("t_scalar: l or i out of range");
  BigInt s = 0;
  for (long j = 0; j <= std::min(i, l); ++j) {
    BigInt t = binomial(2 * m + l, m + j) * binomial(i, j) * binomial(n - 2 * m - i, l - j);
    if ((m + j) % 2) s -= t;
    else s += t;
  }
  return Rational(s);
}

}  // namespace burnside
