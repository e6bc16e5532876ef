#pragma once

#include "burnside/exact.hpp"
#include "burnside/sampler.hpp"
#include "burnside/state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace burnside {

inline int alternations(const State& x) {
  if (x.k != 2) throw std::invalid_argument("alternations: k must be 2");
  int t = 0;
  for (int i = 0; i + 1 < x.n; ++i) t += x[i] != x[i + 1];
  return t;
}

// E[T(X_l) | X_0 = x] = (n-1)/3 - 4^{-l} ((n-1)/3 - T(x))
inline Rational expected_alternations_after(const State& x, unsigned long l) {
  const Rational mean = frac(x.n - 1, 3);
  return mean - power(frac(1, 4), l) * (mean - alternations(x));
}

inline Rational stationary_alternation_mean(int n) { return frac(n - 1, 3); }

inline Rational stationary_alternation_variance(int n) {
  if (n < 2) throw std::domain_error("stationary_alternation_variance: n must be at least 2");
  return frac(static_cast<long>(n) * n + 10L * n - 14, 45);
}

struct MomentReport {
  std::string quantity;
  unsigned long l = 0;
  Rational mean, variance;
  std::string provenance;
};

// Ones count after l steps from x: mean n/2 (l >= 1),
// variance n(n+2)/12 (1 - 4^{-l}) + (|x| - n/2)^2 4^{-l}.
inline MomentReport ones_moments(const State& x, unsigned long l) {
  if (x.k != 2) throw std::invalid_argument("ones_moments: k must be 2");
  const Rational q = power(frac(1, 4), l), half = frac(x.n, 2);
  MomentReport r{"ones", l, {}, {}, "closed form"};
  if (l == 0) {  // point mass; the closed form below is the second moment about n/2
    r.mean = x.ones();
    r.variance = 0;
    return r;
  }
  r.mean = half;
  const Rational dev = x.ones() - half;
  r.variance = frac(static_cast<long>(x.n) * (x.n + 2), 12) * (1 - q) + dev * dev * q;
  return r;
}

// Exact law of T under pi. A string with j ones and t alternations has t+1
// runs; starting with value v, the runs of v number ceil((t+1)/2).
inline std::vector<Rational> alternation_law(int n) {
  if (n < 1) throw std::domain_error("alternation_law: n must be positive");
  std::vector<Rational> p(static_cast<std::size_t>(n), 0);
  auto compositions = [](long total, long parts) -> BigInt {
    if (parts == 0) return total == 0 ? 1 : 0;
    if (total == 0) return 0;
    return binomial(total - 1, parts - 1);
  };
  for (long j = 0; j <= n; ++j) {
    const Rational w = make_rational(1, (n + 1) * binomial(n, j));
    for (long t = 0; t < n; ++t) {
      const long runs = t + 1, major = (runs + 1) / 2, minor = runs / 2;
      BigInt count = compositions(n - j, major) * compositions(j, minor) + compositions(j, major) * compositions(n - j, minor);
      p[static_cast<std::size_t>(t)] += w * count;
    }
  }
  return p;
}

struct Histogram {
  std::vector<double> edges;
  std::vector<std::uint64_t> counts;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct HistogramFit {
  double mean = 0, mean_se = 0, variance = 0;
  double sup_discrepancy_limit = 0;  // vs F(t) = 1 - sqrt(1 - 2t)
  double sup_discrepancy_exact = 0;  // vs the exact finite-n law of T/(n-1)
};

struct HistogramRun {
  Histogram histogram;
  HistogramFit fit;
  std::vector<int> values;  // T for each draw
};

inline double limit_cdf(double t) {
  if (t <= 0) return 0;
  if (t >= 0.5) return 1;
  return 1 - std::sqrt(1 - 2 * t);
}

// Draws `samples` exact stationary states at size n, streams split in blocks
// of 4096 draws so results do not depend on scheduling.
inline HistogramRun alternation_histogram(int n, std::uint64_t samples, int bins, std::uint64_t seed) {
  if (n < 2 || bins < 1) throw std::invalid_argument("alternation_histogram: need n >= 2 and bins >= 1");
  HistogramRun run;
  run.values.reserve(samples);
  constexpr std::uint64_t block = 4096;
  for (std::uint64_t b = 0; b * block < samples; ++b) {
    RngStream rng(seed, b);
    for (std::uint64_t s = b * block; s < std::min(samples, (b + 1) * block); ++s)
      run.values.push_back(alternations(sample_stationary(n, 2, rng)));
  }
  Histogram& h = run.histogram;
  h.samples = samples;
  h.seed = seed;
  for (int i = 0; i <= bins; ++i) h.edges.push_back(static_cast<double>(i) / bins);
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  const double scale = n - 1;
  double sum = 0, sumsq = 0;
  for (int t : run.values) {
    const double u = t / scale;
    sum += u;
    sumsq += u * u;
    auto bin = static_cast<std::size_t>(std::min<double>(std::floor(u * bins), bins - 1));
    ++h.counts[bin];
  }
  const double N = static_cast<double>(samples);
  run.fit.mean = sum / N;
  run.fit.variance = (sumsq - N * run.fit.mean * run.fit.mean) / (N - 1);
  run.fit.mean_se = std::sqrt(run.fit.variance / N);

  // Sup distance of step CDFs: check both sides of every atom of T.
  std::vector<std::uint64_t> freq(static_cast<std::size_t>(n), 0);
  for (int t : run.values) ++freq[static_cast<std::size_t>(t)];
  std::vector<Rational> law = alternation_law(n);
  double below = 0, exact_below = 0, dl = 0, de = 0;
  for (int t = 0; t < n; ++t) {
    const double u = t / scale, at = below + freq[static_cast<std::size_t>(t)] / N;
    const double exact_at = exact_below + law[static_cast<std::size_t>(t)].get_d();
    dl = std::max({dl, std::fabs(below - limit_cdf(u)), std::fabs(at - limit_cdf(u))});
    de = std::max({de, std::fabs(below - exact_below), std::fabs(at - exact_at)});
    below = at;
    exact_below = exact_at;
  }
  run.fit.sup_discrepancy_limit = dl;
  run.fit.sup_discrepancy_exact = de;
  return run;
}

}  // namespace burnside
