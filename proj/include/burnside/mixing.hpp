#pragma once

#include "burnside/kernel.hpp"
#include "burnside/log_real.hpp"
#include "burnside/matrix.hpp"
#include "burnside/orthobasis.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace burnside {

// Row x of K^l, by repeated vector-matrix products.
inline Vec distribution_after(const Kernel& K, std::size_t x, unsigned long l) {
  Vec p(K.size());
  p[x] = 1;
  for (unsigned long s = 0; s < l; ++s) p = left_apply(p, K.matrix);
  return p;
}

inline Rational chi2_of(const Vec& p, const Vec& pi) {
  Rational s = 0, d;
  for (std::size_t y = 0; y < p.size(); ++y) {
    d = p[y] - pi[y];
    s += d * d / pi[y];
  }
  return s;
}

inline Rational tv_of(const Vec& p, const Vec& pi) {
  Rational s = 0;
  for (std::size_t y = 0; y < p.size(); ++y) s += abs(p[y] - pi[y]);
  return s / 2;
}

inline Rational chi2_exact(const Kernel& K, const State& x, unsigned long l) {
  return chi2_of(distribution_after(K, x.index(), l), K.stationary);
}

inline Rational chi2_exact(int n, const State& x, unsigned long l, const CapConfig& caps = CapConfig::from_env()) {
  return chi2_exact(build_kernel(n, x.k, caps), x, l);
}

inline Rational tv_exact(const Kernel& K, const State& x, unsigned long l) {
  return tv_of(distribution_after(K, x.index(), l), K.stationary);
}

inline Rational tv_exact(int n, const State& x, unsigned long l, const CapConfig& caps = CapConfig::from_env()) {
  return tv_exact(build_kernel(n, x.k, caps), x, l);
}

// sum over the non-constant basis vectors of f(x)^2 / ||f||^2 * eigenvalue^{2s}
inline Rational chi2_spectral(const std::vector<OrthoVector>& basis, const State& x, unsigned long s) {
  if (s < 1) throw std::domain_error("chi2_spectral: s must be at least 1");
  Rational total = 0;
  const std::size_t xi = x.index();
  for (const OrthoVector& f : basis) {
    if (f.m == 0 && f.l == 0) continue;
    if (sgn(f.eigenvalue.value) == 0 || sgn(f.coords[xi]) == 0) continue;
    total += f.coords[xi] * f.coords[xi] / f.squared_norm * power(f.eigenvalue.value, 2 * s);
  }
  return total;
}

enum class Mode { exact, log };

inline void require_positive_steps(unsigned long l) {
  if (l == 0)
    throw std::domain_error(
        "chi2_avg: l = 0 rejected; the eigenvalue sum drops the zero eigenvalues, so at l = 0 it gives 2^(n-1) - 1 "
        "while the definition gives 2^n - 1 (0^0 ambiguity)");
}

// sum_{k=1}^{floor(n/2)} C(n,2k) beta_k^{2l}
inline Rational chi2_avg_exact(long n, unsigned long l) {
  require_positive_steps(l);
  Rational s = 0;
  for (long k = 1; 2 * k <= n; ++k) s += Rational(binomial(n, 2 * k)) * power(beta(k), 2 * l);
  return s;
}

inline long double log_beta(long k) {
  return 2 * (log_binomial(2.0L * k, static_cast<long double>(k)) - 2.0L * k * std::numbers::ln2_v<long double>);
}

inline LogReal chi2_avg_log(long n, unsigned long l) {
  require_positive_steps(l);
  std::vector<long double> terms;
  for (long k = 1; 2 * k <= n; ++k)
    terms.push_back(log_binomial(static_cast<long double>(n), 2.0L * k) + 2.0L * static_cast<long double>(l) * log_beta(k));
  if (terms.empty()) return LogReal::zero();
  long double mx = terms.front();
  for (long double t : terms) mx = std::max(mx, t);
  long double acc = 0;
  for (long double t : terms) acc += std::exp(t - mx);
  return LogReal::from_log(static_cast<double>(mx + std::log(acc)));
}

struct AvgChi2 {
  Mode mode;
  Rational exact;
  LogReal log;
};

inline AvgChi2 chi2_avg(long n, unsigned long l, Mode mode) {
  if (mode == Mode::exact) return {mode, chi2_avg_exact(n, l), LogReal::from_rational(chi2_avg_exact(n, l))};
  return {mode, Rational(0), chi2_avg_log(n, l)};
}

// sum_x pi(x) chi2_x(l), straight from the definition via K^l.
inline Rational chi2_avg_definition(const Kernel& K, unsigned long l) {
  RationalMatrix P = mat_pow(K.matrix, l);
  Rational s = 0;
  for (std::size_t x = 0; x < K.size(); ++x) s += K.stationary[x] * chi2_of(P.row(x), K.stationary);
  return s;
}

struct BoundEntry {
  std::string name;
  std::string source;
  std::optional<Rational> lower;
  Rational value;
  std::optional<Rational> upper;

  bool holds() const { return (!lower || *lower <= value) && (!upper || value <= *upper); }
};

struct BoundReport {
  unsigned long l = 0;
  Rational tv, chi2;
  std::vector<BoundEntry> entries;

  bool holds() const {
    for (const auto& e : entries)
      if (!e.holds()) return false;
    return true;
  }
};

inline BoundReport bound_envelopes(const Kernel& K, const State& x, unsigned long l) {
  BoundReport r;
  r.l = l;
  Vec p = distribution_after(K, x.index(), l);
  r.tv = tv_of(p, K.stationary);
  r.chi2 = chi2_of(p, K.stationary);
  const Rational pix = K.stationary[x.index()];
  r.entries.push_back({"tv_coupling", "Aldous coupling bound n(1/2)^l", std::nullopt, r.tv,
                       Rational(K.n) * power(frac(1, 2), l)});
  r.entries.push_back({"chi2_from_tv", "4 TV^2 <= chi2", 4 * r.tv * r.tv, r.chi2, std::nullopt});
  Vec p2 = p;
  for (unsigned long s = 0; s < l; ++s) p2 = left_apply(p2, K.matrix);
  r.entries.push_back({"chi2_two_step", "chi2_x(l) <= TV_x(2l)/pi(x)", std::nullopt, r.chi2, tv_of(p2, K.stationary) / pix});
  bool zeros = true;
  for (int v : x.digits) zeros = zeros && v == 0;
  if (K.k == 2 && zeros && K.n >= 2) {  // K_1 is exact after one step
    const Rational q = power(frac(1, 4), l);
    r.entries.push_back({"tv_from_zeros", "(1/4)(1/4)^l <= TV <= 4(1/4)^l", q / 4, r.tv, 4 * q});
  }
  return r;
}

// (K(x,x)^l / pi(x) - 1)^2 pi(x). K^l(x,x) >= K(x,x)^l, so this bounds the
// single-state term of chi2_x(l) only while K(x,x)^l >= pi(x); below that the
// bound is 0.
inline Rational self_loop_lower_bound(const State& x, unsigned long l) {
  const Rational kxx = kernel_entry(x, x), pi = stationary_prob(x);
  const Rational a = power(kxx, l);
  if (a < pi) return 0;
  const Rational d = a / pi - 1;
  return d * d * pi;
}

// chi2 from e_n (single one at coordinate n), assembled from the two families
// that do not vanish there: m = 0 with even l, and m = 1 with the tableau whose
// second row is (n), odd l.
struct OneOneChi2 {
  int n = 0;
  unsigned long s = 0;
  Rational value;
  Rational beta1_part;  // the two beta_1 terms
  Rational lower, upper;
  bool within = false;
};

inline Rational f0_at_one_one(long n, long l) {
  return Rational(binomial(n - 1, l) - (l >= 1 ? BigInt(l * binomial(n - 1, l - 1)) : BigInt(0)));
}

inline Rational f1_at_one_one(long n, long l) { return Rational(-(2 + l) * binomial(n - 2, l)); }

inline OneOneChi2 chi2_from_one_one(int n, unsigned long s) {
  if (n < 3) throw std::domain_error("chi2_from_one_one: n must be at least 3");
  OneOneChi2 r{n, s, 0, 0, 0, 0, false};
  const Tableau T0 = Tableau::column_reading(n, 0);
  for (int l = 2; l <= n; l += 2) {
    Rational f = f0_at_one_one(n, l);
    Rational term = f * f / norm_f_Q(n, 0, l, T0) * power(beta(l / 2), 2 * s);
    r.value += term;
    if (l == 2) r.beta1_part += term;
  }
  const Tableau Q1{n, {n}};
  for (int l = 1; l <= n - 2; l += 2) {
    Rational f = f1_at_one_one(n, l);
    Rational term = f * f / norm_f_Q(n, 1, l, Q1) * power(beta((1 + l) / 2), 2 * s);
    r.value += term;
    if (l == 1) r.beta1_part += term;
  }
  const Rational q = power(frac(1, 4), 2 * s);
  r.lower = 5 * q;
  r.upper = 270 * q;
  r.within = r.lower <= r.value && r.value <= r.upper;
  return r;
}

// factor * (log 2 / 2) * n / log((pi/2) n), or / log n when refined = false.
inline double cutoff_time(double n, double factor, bool refined = true) {
  const double denom = refined ? std::log(std::numbers::pi / 2 * n) : std::log(n);
  return factor * std::numbers::ln2 / 2 * n / denom;
}

struct CutoffRow {
  long n;
  double factor;
  unsigned long l;
  LogReal chi2;
};

inline std::vector<CutoffRow> cutoff_scan(const std::vector<long>& ns, const std::vector<double>& factors, bool refined = true) {
  std::vector<CutoffRow> out;
  for (long n : ns)
    for (double f : factors) {
      auto l = static_cast<unsigned long>(std::ceil(cutoff_time(static_cast<double>(n), f, refined)));
      if (l == 0) l = 1;
      out.push_back({n, f, l, chi2_avg_log(n, l)});
    }
  return out;
}

enum class Metric { chi2, tv };

struct DistanceCurve {
  int n = 0, k = 2;
  std::string start;
  Metric metric = Metric::chi2;
  std::vector<std::pair<unsigned long, Rational>> points;
};

// Points l = lo..hi from a single start, reusing the propagated row.
inline DistanceCurve distance_curve(const Kernel& K, const State& x, Metric metric, unsigned long lo, unsigned long hi) {
  DistanceCurve c{K.n, K.k, x.str(), metric, {}};
  Vec p = distribution_after(K, x.index(), lo);
  for (unsigned long l = lo; l <= hi; ++l) {
    c.points.emplace_back(l, metric == Metric::chi2 ? chi2_of(p, K.stationary) : tv_of(p, K.stationary));
    if (l < hi) p = left_apply(p, K.matrix);
  }
  return c;
}

}  // namespace burnside
