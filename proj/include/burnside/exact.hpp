#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace burnside {

using BigInt = mpz_class;
// mpq_class canonicalizes after every arithmetic operation, so values are
// always in lowest terms with a positive denominator.
using Rational = mpq_class;

inline BigInt binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// (a)_j = a(a+1)...(a+j-1), with (a)_0 = 1.
inline Rational rising_factorial(const Rational& a, long j) {
  if (j < 0) throw std::domain_error("rising_factorial: negative length");
  Rational r = 1;
  for (long i = 0; i < j; ++i) r *= a + i;
  return r;
}

// The two-argument mpq_class constructor does not canonicalize; always build
// fractions through these.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational frac(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

inline Rational power(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;
}

inline Rational signed_unit(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

// Always "p/q", including integers ("3/1").
inline std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(std::string_view s) {
  std::string t(s);
  auto slash = t.find('/');
  BigInt num, den = 1;
  if (num.set_str(t.substr(0, slash), 10) != 0) throw std::invalid_argument("bad rational: " + t);
  if (slash != std::string::npos && den.set_str(t.substr(slash + 1), 10) != 0)
    throw std::invalid_argument("bad rational: " + t);
  return make_rational(num, den);
}

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace burnside
