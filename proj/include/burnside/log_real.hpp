#pragma once

#include "burnside/exact.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace burnside {

// sign * exp(logmag). sign == 0 iff logmag == -inf.
struct LogReal {
  int sign = 0;
  double logmag = -std::numeric_limits<double>::infinity();

  static LogReal zero() { return {}; }
  static LogReal from_log(double lm, int s = 1) {
    if (s == 0 || (std::isinf(lm) && lm < 0)) return {};
    return {s > 0 ? 1 : -1, lm};
  }
  static LogReal from_double(double v) {
    if (v == 0) return {};
    return {v > 0 ? 1 : -1, std::log(std::fabs(v))};
  }
  static LogReal from_rational(const Rational& q) {
    if (sgn(q) == 0) return {};
    return {sgn(q), log_abs(q.get_num()) - log_abs(q.get_den())};
  }

  bool is_zero() const { return sign == 0; }
  double to_double() const { return sign == 0 ? 0.0 : sign * std::exp(logmag); }

  static double log_abs(const BigInt& z) {
    long e;
    double m = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
  }
};

inline LogReal operator*(const LogReal& a, const LogReal& b) {
  if (a.sign == 0 || b.sign == 0) return {};
  return {a.sign * b.sign, a.logmag + b.logmag};
}

inline LogReal operator-(const LogReal& a) { return {-a.sign, a.logmag}; }

// log-sum-exp with sign tracking.
inline LogReal operator+(const LogReal& a, const LogReal& b) {
  if (a.sign == 0) return b;
  if (b.sign == 0) return a;
  const LogReal& hi = a.logmag >= b.logmag ? a : b;
  const LogReal& lo = a.logmag >= b.logmag ? b : a;
  double r = std::exp(lo.logmag - hi.logmag);
  if (hi.sign == lo.sign) return {hi.sign, hi.logmag + std::log1p(r)};
  if (r == 1.0) return {};
  return {hi.sign, hi.logmag + std::log1p(-r)};
}

inline LogReal& operator+=(LogReal& a, const LogReal& b) { return a = a + b; }

inline long double log_factorial(long double n) { return std::lgamma(n + 1.0L); }

inline long double log_binomial(long double n, long double k) {
  if (k < 0 || k > n) throw std::domain_error("log_binomial: k out of range");
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

}  // namespace burnside
