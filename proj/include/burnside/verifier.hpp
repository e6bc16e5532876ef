#pragma once

#include "burnside/kernel.hpp"
#include "burnside/lumping.hpp"
#include "burnside/orthobasis.hpp"
#include "burnside/polynomials.hpp"
#include "burnside/sampler.hpp"
#include "burnside/spectral.hpp"
#include "burnside/statistics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace burnside {

struct CheckResult {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = true;
  std::string witness;  // first counterexample on failure, summary on pass
  bool tolerance_tagged = false;

  // Keeps the first counterexample.
  void fail(const std::string& w) {
    if (pass) witness = w;
    pass = false;
  }
  void summary(const std::string& s) {
    if (pass) witness = s;
  }
  std::string param_key() const {
    std::string s;
    for (const auto& [k, v] : params) s += k + "=" + v + ";";
    return s;
  }
};

inline void sort_results(std::vector<CheckResult>& rs) {
  std::stable_sort(rs.begin(), rs.end(), [](const CheckResult& a, const CheckResult& b) {
    return std::pair(a.name, a.param_key()) < std::pair(b.name, b.param_key());
  });
}

inline bool all_pass(const std::vector<CheckResult>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.pass; });
}

// Row i of M as N_i / L_i with L_i the lcm of the row's denominators, so that
// M f costs one integer dot product per row.
struct IntegerRows {
  std::size_t rows = 0, cols = 0;
  std::vector<BigInt> denom;
  std::vector<BigInt> num;
};

inline IntegerRows integer_rows(const RationalMatrix& M) {
  IntegerRows R{M.rows(), M.cols(), std::vector<BigInt>(M.rows()), std::vector<BigInt>(M.rows() * M.cols())};
  for (std::size_t i = 0; i < M.rows(); ++i) {
    BigInt L = 1;
    for (std::size_t j = 0; j < M.cols(); ++j) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), M(i, j).get_den_mpz_t());
    R.denom[i] = L;
    for (std::size_t j = 0; j < M.cols(); ++j)
      R.num[i * M.cols() + j] = M(i, j).get_num() * (L / M(i, j).get_den());
  }
  return R;
}

inline Vec apply(const IntegerRows& R, const Vec& f) {
  if (f.size() != R.cols) throw std::invalid_argument("apply: shape mismatch");
  BigInt D = 1;
  for (const auto& q : f) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), q.get_den_mpz_t());
  std::vector<BigInt> F(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) F[j] = f[j].get_num() * (D / f[j].get_den());
  Vec out(R.rows);
  BigInt acc;
  for (std::size_t i = 0; i < R.rows; ++i) {
    acc = 0;
    const BigInt* row = &R.num[i * R.cols];
    for (std::size_t j = 0; j < R.cols; ++j)
      if (sgn(F[j]) != 0) mpz_addmul(acc.get_mpz_t(), row[j].get_mpz_t(), F[j].get_mpz_t());
    out[i] = make_rational(acc, R.denom[i] * D);
  }
  return out;
}

inline RationalMatrix shift(const RationalMatrix& M, const Rational& lambda) {
  RationalMatrix A = M;
  for (std::size_t i = 0; i < A.rows(); ++i) A(i, i) -= lambda;
  return A;
}

inline std::string n_param(int n) { return std::to_string(n); }

// ---------------------------------------------------------------------------
// Subset eigenvectors and multiplicities of the binary kernel.

inline CheckResult verify_eigenstructure(int n, const CapConfig& caps = CapConfig::from_env()) {
  CheckResult r{"eigenstructure", {{"n", n_param(n)}}, true, {}, false};
  const Kernel K = build_kernel(n, 2, caps);
  const IntegerRows R = integer_rows(K.matrix);
  const std::size_t N = K.size();
  std::vector<Vec> even_rows;
  for (Subset S = 0; S < N; ++S) {
    const Vec f = f_subset_vector(n, S);
    const Rational lam = subset_eigenvalue(S).value;
    const Vec Kf = apply(R, f);
    for (std::size_t x = 0; x < N; ++x)
      if (Kf[x] != lam * f[x]) {
        r.fail("K f_S != beta f_S for S mask " + std::to_string(S) + " at state " + std::to_string(x));
        break;
      }
    if (subset_size(S) % 2 == 0) even_rows.push_back(f);
  }
  const std::size_t even_rank = rational_rank(from_rows(even_rows));
  if (even_rank != N / 2) r.fail("even subset family has rank " + std::to_string(even_rank));

  std::ostringstream mult;
  BigInt total = 0;
  for (const MultiplicityEntry& e : multiplicity_table(n)) {
    const BigInt got = BigInt(static_cast<unsigned long>(N - rational_rank(shift(K.matrix, e.eigenvalue.value))));
    total += got;
    mult << (mult.tellp() > 0 ? " " : "") << to_string(e.eigenvalue.value) << ":" << got.get_str();
    if (got != e.multiplicity)
      r.fail("eigenvalue " + to_string(e.eigenvalue.value) + " has multiplicity " + got.get_str() + ", expected " +
             e.multiplicity.get_str());
  }
  if (total != BigInt(static_cast<unsigned long>(N))) r.fail("multiplicities sum to " + total.get_str());
  r.summary("multiplicities " + mult.str() + "; even-family rank " + std::to_string(even_rank));
  return r;
}

// ---------------------------------------------------------------------------
// Orthogonal eigenbasis.

struct ReferenceRow {
  int m, l;
  std::vector<int> second_row;
  std::vector<Rational> values;  // states 000, 001, ..., 111 with coordinate 1 first
  Rational norm;
};

inline std::vector<ReferenceRow> reference_g_n3() {
  auto h = frac(1, 2);
  return {{0, 0, {}, {1, 0, 0, 0, 0, 0, 0, 0}, 0},  {0, 1, {}, {0, 1, 1, 0, 1, 0, 0, 0}, 0},
          {1, 0, {3}, {0, 1, -h, 0, -h, 0, 0, 0}, 0}, {1, 0, {2}, {0, 0, 1, 0, -1, 0, 0, 0}, 0},
          {0, 2, {}, {0, 0, 0, 1, 0, 1, 1, 0}, 0},  {1, 1, {3}, {0, 0, 0, h, 0, h, -1, 0}, 0},
          {1, 1, {2}, {0, 0, 0, 1, 0, -1, 0, 0}, 0}, {0, 3, {}, {0, 0, 0, 0, 0, 0, 0, 1}, 0}};
}

inline std::vector<ReferenceRow> reference_f_n3() {
  auto h = frac(3, 2);
  return {{0, 0, {}, {1, 1, 1, 1, 1, 1, 1, 1}, 1},
          {0, 1, {}, {3, 1, 1, -1, 1, -1, -1, -3}, 5},
          {1, 0, {3}, {0, -2, 1, -1, 1, -1, 2, 0}, 1},
          {1, 0, {2}, {0, 0, -2, -2, 2, 2, 0, 0}, frac(4, 3)},
          {0, 2, {}, {3, -3, -3, -3, -3, -3, -3, 3}, 9},
          {1, 1, {3}, {0, -3, h, h, h, h, -3, 0}, frac(9, 4)},
          {1, 1, {2}, {0, 0, -3, 3, 3, -3, 0, 0}, 3},
          {0, 3, {}, {1, -3, -3, 3, -3, 3, 3, -1}, 5}};
}

inline std::uint64_t reference_index(std::size_t column) {
  std::string s;
  for (int b = 2; b >= 0; --b) s += ((column >> b) & 1U) ? '1' : '0';
  return State::parse(s, 2).index();
}

inline void check_reference_tables(CheckResult& r) {
  for (const ReferenceRow& row : reference_g_n3()) {
    const Tableau Q{3, row.second_row};
    const Vec g = g_vector(Q, row.l);
    for (std::size_t c = 0; c < 8; ++c)
      if (g[reference_index(c)] != row.values[c])
        r.fail("g vector (m,l,Q)=(" + std::to_string(row.m) + "," + std::to_string(row.l) + "," + Q.str() +
               ") differs in column " + std::to_string(c));
  }
  for (const ReferenceRow& row : reference_f_n3()) {
    const Tableau Q{3, row.second_row};
    const OrthoVector f = build_f_Q(3, row.m, row.l, Q);
    for (std::size_t c = 0; c < 8; ++c)
      if (f.coords[reference_index(c)] != row.values[c])
        r.fail("f vector (m,l,Q)=(" + std::to_string(row.m) + "," + std::to_string(row.l) + "," + Q.str() +
               ") differs in column " + std::to_string(c));
    if (f.squared_norm != row.norm) r.fail("norm of f vector " + Q.str() + " is " + to_string(f.squared_norm));
  }
}

inline CheckResult verify_orthobasis(int n, const CapConfig& caps = CapConfig::from_env()) {
  CheckResult r{"orthobasis", {{"n", n_param(n)}}, true, {}, false};
  if (n < 1 || n > 7) throw std::out_of_range("verify_orthobasis: n must be in 1..7");
  const std::vector<OrthoVector> basis = build_basis(n);
  const std::size_t N = std::size_t{1} << n;
  if (basis.size() != N) r.fail("basis has " + std::to_string(basis.size()) + " vectors");
  const Vec pi = binary_stationary(n);
  const Kernel K = build_kernel(n, 2, caps);
  const IntegerRows R = integer_rows(K.matrix);

  std::vector<Vec> weighted;
  for (const OrthoVector& f : basis) {
    Vec w(N);
    for (std::size_t x = 0; x < N; ++x) w[x] = f.coords[x] * pi[x];
    weighted.push_back(std::move(w));
  }
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a; b < basis.size(); ++b) {
      Rational ip = 0;
      for (std::size_t x = 0; x < N; ++x)
        if (sgn(weighted[a][x]) != 0 && sgn(basis[b].coords[x]) != 0) ip += weighted[a][x] * basis[b].coords[x];
      if (a == b && ip != basis[a].squared_norm)
        r.fail("norm of " + basis[a].tableau.str() + " l=" + std::to_string(basis[a].l) + " is " + to_string(ip) +
               ", closed form " + to_string(basis[a].squared_norm));
      if (a != b && sgn(ip) != 0)
        r.fail("vectors " + std::to_string(a) + " and " + std::to_string(b) + " have inner product " + to_string(ip));
      pairs += a != b;
    }
    const OrthoVector& f = basis[a];
    const Vec Kf = apply(R, f.coords);
    for (std::size_t x = 0; x < N; ++x)
      if (Kf[x] != f.eigenvalue.value * f.coords[x]) {
        r.fail("eigen-equation fails for " + f.tableau.str() + " l=" + std::to_string(f.l));
        break;
      }
    for (int j = 2; j <= n; ++j) {
      const Vec Mf = jm_apply(j, f.coords);
      const Rational c = f.tableau.content(j);
      for (std::size_t x = 0; x < N; ++x)
        if (Mf[x] != c * f.coords[x]) {
          r.fail("Jucys-Murphy grading fails for " + f.tableau.str() + " at r=" + std::to_string(j));
          break;
        }
    }
  }
  if (n <= 6)
    for (std::size_t x = 0; x < N; ++x) {
      Rational s = 0;
      for (const OrthoVector& f : basis) s += f.coords[x] * f.coords[x] / f.squared_norm;
      if (s * pi[x] != 1) r.fail("Parseval fails at state " + std::to_string(x));
    }
  if (n == 3) check_reference_tables(r);
  r.summary(std::to_string(basis.size()) + " vectors, " + std::to_string(pairs) + " orthogonal pairs" +
            (n <= 6 ? ", Parseval exact" : "") + (n == 3 ? ", reference tables match" : ""));
  return r;
}

// ---------------------------------------------------------------------------
// Lumpings.

inline std::vector<std::vector<int>> coordinate_subsets(int n, std::size_t sample, std::uint64_t seed) {
  std::vector<std::vector<int>> all;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1U) s.push_back(i + 1);
    all.push_back(std::move(s));
  }
  if (sample == 0 || sample >= all.size()) return all;
  RngStream rng(seed, static_cast<std::uint64_t>(n));
  for (std::size_t i = 0; i < sample; ++i) std::swap(all[i], all[i + rng.below(all.size() - i)]);
  all.resize(sample);
  std::sort(all.begin(), all.end());
  return all;
}

inline std::string subset_str(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

struct LumpingOptions {
  int exhaustive_max_n = 5;
  std::size_t sample_size = 8;
  std::uint64_t seed = 20240917;
};

inline CheckResult verify_coordinate_lumping(int n, int k, const LumpingOptions& opt = {},
                                             const CapConfig& caps = CapConfig::from_env()) {
  CheckResult r{"lumping.coordinates", {{"k", std::to_string(k)}, {"n", n_param(n)}}, true, {}, false};
  const Kernel K = build_kernel(n, k, caps);
  const auto subsets = coordinate_subsets(n, n <= opt.exhaustive_max_n ? 0 : opt.sample_size, opt.seed);
  for (const auto& s : subsets) {
    try {
      lump_to_coordinates(K, s);
    } catch (const InvariantError& e) {
      r.fail(subset_str(s) + ": " + e.what());
    }
  }
  r.summary(std::to_string(subsets.size()) + (n <= opt.exhaustive_max_n ? " subsets (all)" : " sampled subsets"));
  return r;
}

inline CheckResult verify_orbit_chebyshev(int n) {
  CheckResult r{"lumping.orbit_chebyshev", {{"n", n_param(n)}}, true, {}, false};
  const OrbitKernel L = orbit_kernel_direct(n, 2);
  std::vector<std::vector<Rational>> T(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) T[static_cast<std::size_t>(i)] = chebyshev_all(n, i);
  for (int j = 0; j <= n; ++j) {
    Vec v(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    const Rational lam = j % 2 ? Rational(0) : beta(j / 2);
    Vec scaled = v;
    for (auto& q : scaled) q *= lam;
    if (burnside::apply(L.matrix, v) != scaled)
      r.fail("degree " + std::to_string(j) + " Chebyshev vector is not an eigenvector with eigenvalue " + to_string(lam));
  }
  r.summary(std::to_string(n + 1) + " degrees");
  return r;
}

// K_n (I_{2^{n-1}} ⊗ K_1) = K_{n-1} ⊗ K_1, the second factor acting on coordinate n.
inline CheckResult verify_tensor_identity(int n, const CapConfig& caps = CapConfig::from_env()) {
  CheckResult r{"lumping.tensor_identity", {{"n", n_param(n)}}, true, {}, false};
  if (n < 2) throw std::out_of_range("verify_tensor_identity: n must be at least 2");
  const RationalMatrix K1 = build_kernel(1, 2, caps).matrix;
  const RationalMatrix lhs = build_kernel(n, 2, caps).matrix * kron(RationalMatrix::identity(std::size_t{1} << (n - 1)), K1);
  const RationalMatrix rhs = kron(build_kernel(n - 1, 2, caps).matrix, K1);
  if (!(lhs == rhs)) r.fail("matrices differ");
  r.summary("exact equality, " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()));
  return r;
}

inline std::vector<CheckResult> verify_lumpings(int n, const CapConfig& caps = CapConfig::from_env(),
                                                const LumpingOptions& opt = {}) {
  std::vector<CheckResult> out{verify_coordinate_lumping(n, 2, opt, caps), verify_orbit_chebyshev(n)};
  if (n >= 2) out.push_back(verify_tensor_identity(n, caps));
  return out;
}

// ---------------------------------------------------------------------------
// Binomial identities and their telescoping certificates.

// C(n, k) with value 0 for a negative top or an out-of-range bottom.
inline BigInt binom0(long n, long k) { return (n < 0 || k < 0 || k > n) ? BigInt(0) : binomial(n, k); }

// (1/(c3+c1+1)) sum_i C(c3,i)/C(c3+c1,i+c2) = 1/((c1+1) C(c1,c2)), c1 >= c2.
inline std::pair<Rational, Rational> lemma_a1_sides(long c1, long c2, long c3) {
  Rational s = 0;
  for (long i = 0; i <= c3; ++i) s += make_rational(binomial(c3, i), binomial(c3 + c1, i + c2));
  return {s / (c3 + c1 + 1), make_rational(1, (c1 + 1) * binomial(c1, c2))};
}

// Summand of H̄(m, s); zero off 0 <= s <= m and outside the factorial range.
inline Rational hbar_summand(long m, long s, long a, long b, long c) {
  if (m < 0 || s < 0 || m - s < 0 || a < 0 || b < 0 || c < 0 || m + s - a - b - c < 0) return 0;
  BigInt num = binom0(m - s, a) * binom0(s, b) * binom0(s, c) * binom0(m, a + b) * binom0(m, a + c);
  if (sgn(num) == 0) return 0;
  num *= factorial(a + b + c) * factorial(m + s - a - b - c) * factorial(m);
  if ((b + c) % 2) num = -num;
  return make_rational(num, factorial(s) * factorial(2 * m));
}

inline Rational hbar(long m, long s) {
  Rational t = 0;
  for (long a = 0; a <= m - s; ++a)
    for (long b = 0; b <= s; ++b)
      for (long c = 0; c <= s; ++c) t += hbar_summand(m, s, a, b, c);
  return t;
}

// Certificate ratio R = F/H as a rational function; nullopt where its
// denominator vanishes.
using Certificate = std::function<std::optional<Rational>(long, long, long, long, long)>;

inline std::optional<Rational> ratio(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) return std::nullopt;
  return make_rational(num, den);
}

inline std::vector<Certificate> m_shift_certificates() {
  return {
      [](long m_, long s_, long a_, long b_, long c_) {
        const BigInt m = m_, s = s_, a = a_, b = b_, c = c_;
        BigInt num = 2 * a * b * c - 2 * a * a * b * c + 4 * a * b * c * m - 2 * a * a * b * c * m + 2 * a * b * c * m * m +
                     a * a * s - a * a * a * s - 2 * a * b * s + a * a * b * s - 2 * a * c * s + a * a * c * s -
                     2 * a * b * c * s + 2 * a * a * m * s - a * a * a * m * s - 4 * a * b * m * s + a * a * b * m * s -
                     4 * a * c * m * s + a * a * c * m * s - 2 * a * b * c * m * s + a * a * m * m * s -
                     2 * a * b * m * m * s - 2 * a * c * m * m * s + 3 * a * s * s - 2 * a * a * s * s + a * b * s * s +
                     a * c * s * s + 6 * a * m * s * s - 2 * a * a * m * s * s + a * b * m * s * s + a * c * m * s * s +
                     3 * a * m * m * s * s - a * s * s * s - a * m * s * s * s;
        BigInt den = 2 * (-1 + a + b - m) * (-1 + a + c - m) * (1 + 2 * m) * s * (-1 + a - m + s);
        return ratio(num, den);
      },
      [](long m_, long s_, long a_, long b_, long c_) {
        const BigInt m = m_, s = s_, a = a_, b = b_, c = c_;
        BigInt num = -2 * a * b + 2 * a * a * b + 2 * a * b * b + 2 * a * b * c + 2 * b * m - 8 * a * b * m +
                     4 * a * a * b * m - 2 * b * b * m + 4 * a * b * b * m - 2 * b * c * m + 4 * a * b * c * m +
                     2 * b * b * c * m + 4 * b * m * m - 6 * a * b * m * m - 2 * b * b * m * m - 2 * b * c * m * m +
                     2 * b * m * m * m - b * s - a * b * s + b * b * s + b * c * s - 2 * b * m * s - a * b * m * s +
                     b * b * m * s + b * c * m * s - b * m * m * s - b * s * s - b * m * s * s;
        BigInt den = 2 * (-1 + a + b - m) * (-1 + a + c - m) * (1 + 2 * m) * s;
        return ratio(num, den);
      },
      [](long m_, long s_, long a_, long b_, long c_) {
        const BigInt m = m_, s = s_, a = a_, b = b_, c = c_;
        BigInt num = 2 * a * b * c - 2 * b * c * m + 4 * a * b * c * m + 2 * b * c * c * m - 2 * b * c * m * m + c * s -
                     3 * a * c * s + b * c * s - c * c * s + 4 * c * m * s - 5 * a * c * m * s + b * c * m * s -
                     3 * c * c * m * s + 3 * c * m * m * s - c * s * s - c * m * s * s;
        BigInt den = 2 * (1 + a + b) * (-1 + a + c - m) * (1 + 2 * m) * s;
        return ratio(num, den);
      }};
}

inline std::vector<Certificate> s_shift_certificates() {
  return {
      [](long m_, long s_, long a_, long, long) { return ratio(BigInt(a_), BigInt(m_ - s_)); },
      [](long m_, long s_, long a_, long b_, long c_) {
        const BigInt m = m_, s = s_, a = a_, b = b_, c = c_;
        BigInt num = a * b - a * a * b - a * b * b - a * b * c - b * m + 2 * a * b * m + b * b * m + b * c * m -
                     b * m * m + b * s - b * b * s - b * c * s + b * s * s;
        BigInt den = (-1 + b - s) * (1 - c + s) * (-m + s);
        return ratio(num, den);
      },
      [](long m_, long s_, long a_, long b_, long c_) {
        const BigInt m = m_, s = s_, a = a_, b = b_, c = c_;
        BigInt num = a * a * c + a * b * c - 2 * a * c * m - b * c * m + c * m * m + a * c * s + b * c * s - c * m * s;
        BigInt den = (1 + a + b) * (m - s) * (1 - c + s);
        return ratio(num, den);
      }};
}

// Orthogonality summand for the column reading tableau, scaled by (l1 - l2).
inline Rational lemma_a2_summand(long n, long m, long l1, long l2, long i, long j1, long j2) {
  BigInt t = binom0(2 * m + l1, m + j1) * binom0(2 * m + l2, m + j2) * binom0(i, j1) * binom0(i, j2) *
             binom0(n - 2 * m - i, l1 - j1) * binom0(n - 2 * m - i, l2 - j2) * binom0(m + i, i) * binom0(n - m - i, m) *
             (l1 - l2);
  if ((j1 + j2) % 2) t = -t;
  return Rational(t);
}

using Certificate7 = std::function<std::optional<Rational>(long, long, long, long, long, long, long)>;

inline std::vector<Certificate7> n_shift_certificates() {
  return {
      [](long n_, long m_, long l1_, long l2_, long i_, long j1_, long j2_) {
        const BigInt n = n_, m = m_, l1 = l1_, l2 = l2_, i = i_, j1 = j1_, j2 = j2_;
        BigInt num = -j1 + 2 * i * j1 - i * i * j1 + j2 - 2 * i * j2 + i * i * j2 + 3 * j1 * m - 3 * i * j1 * m -
                     3 * j2 * m + 3 * i * j2 * m - 2 * j1 * m * m + 2 * j2 * m * m - 2 * j1 * n + 2 * i * j1 * n +
                     2 * j2 * n - 2 * i * j2 * n + 3 * j1 * m * n - 3 * j2 * m * n - j1 * n * n + j2 * n * n;
        BigInt den = (l1 - l2) * (-1 + i - j1 + l1 + 2 * m - n) * (-1 + i - j2 + l2 + 2 * m - n);
        return ratio(num, den);
      },
      [](long, long m_, long l1_, long l2_, long i_, long j1_, long) {
        const BigInt m = m_, j1 = j1_;
        return ratio(-j1 * j1 - j1 * m, BigInt((1 + i_ - j1_) * (l1_ - l2_)));
      },
      [](long, long m_, long l1_, long l2_, long i_, long, long j2_) {
        const BigInt m = m_, j2 = j2_;
        return ratio(j2 * j2 + j2 * m, BigInt((1 + i_ - j2_) * (l1_ - l2_)));
      }};
}

struct AppendixGrid {
  long c_max = 8;
  long hbar_max = 6;
  long a2_max_n = 10;
  std::size_t certificate_points = 500;
  long certificate_max_m = 8;  // also bounds n for the orthogonality family
  std::uint64_t seed = 20240917;
};

inline CheckResult verify_lemma_a1(const AppendixGrid& g) {
  CheckResult r{"identity.lemma_a1", {{"c_max", std::to_string(g.c_max)}}, true, {}, false};
  std::size_t points = 0;
  for (long c1 = 0; c1 <= g.c_max; ++c1)
    for (long c2 = 0; c2 <= c1; ++c2)
      for (long c3 = 0; c3 <= g.c_max; ++c3, ++points) {
        auto [lhs, rhs] = lemma_a1_sides(c1, c2, c3);
        if (lhs != rhs)
          r.fail("(c1,c2,c3)=(" + std::to_string(c1) + "," + std::to_string(c2) + "," + std::to_string(c3) + "): " +
                 to_string(lhs) + " vs " + to_string(rhs));
      }
  r.summary(std::to_string(points) + " grid points exact");
  return r;
}

inline CheckResult verify_hbar(const AppendixGrid& g) {
  CheckResult r{"identity.hbar", {{"max", std::to_string(g.hbar_max)}}, true, {}, false};
  std::size_t points = 0;
  for (long m = 0; m <= g.hbar_max; ++m)
    for (long s = 0; s <= m; ++s, ++points)
      if (Rational v = hbar(m, s); v != 1)
        r.fail("Hbar(" + std::to_string(m) + "," + std::to_string(s) + ") = " + to_string(v));
  r.summary(std::to_string(points) + " values equal 1");
  return r;
}

inline CheckResult verify_lemma_a2(const AppendixGrid& g) {
  CheckResult r{"identity.lemma_a2", {{"max_n", std::to_string(g.a2_max_n)}}, true, {}, false};
  std::size_t cases = 0;
  for (long n = 0; n <= g.a2_max_n; ++n)
    for (long m = 0; 2 * m <= n; ++m)
      for (long l1 = 0; l1 <= n - 2 * m; ++l1)
        for (long l2 = 0; l2 <= n - 2 * m; ++l2) {
          if (l1 == l2) continue;
          Rational s = 0;
          for (long i = 0; i <= n - 2 * m; ++i)
            for (long j1 = 0; j1 <= i; ++j1)
              for (long j2 = 0; j2 <= i; ++j2) s += lemma_a2_summand(n, m, l1, l2, i, j1, j2);
          ++cases;
          if (sgn(s) != 0)
            r.fail("(n,m,l1,l2)=(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(l1) + "," +
                   std::to_string(l2) + ") sums to " + to_string(s));
        }
  r.summary(std::to_string(cases) + " triple sums vanish");
  return r;
}

// H(m+1) - H(m) [or H(s+1) - H(s)] = sum over a, b, c of R(+1) H(+1) - R H.
inline CheckResult verify_hbar_certificates(bool m_shift, const AppendixGrid& g) {
  CheckResult r{m_shift ? "identity.certificates_m" : "identity.certificates_s",
                {{"points", std::to_string(g.certificate_points)}, {"seed", std::to_string(g.seed)}}, true, {}, false};
  const auto certs = m_shift ? m_shift_certificates() : s_shift_certificates();
  RngStream rng(g.seed, m_shift ? 1 : 2);
  std::size_t ok = 0, skipped = 0;
  while (ok < g.certificate_points && skipped < 100 * g.certificate_points) {
    const long m = static_cast<long>(rng.below(static_cast<std::uint64_t>(g.certificate_max_m + 1)));
    const long s = static_cast<long>(rng.below(static_cast<std::uint64_t>(m + 2)));
    const long a = static_cast<long>(rng.below(static_cast<std::uint64_t>(m + 3)));
    const long b = static_cast<long>(rng.below(static_cast<std::uint64_t>(s + 3)));
    const long c = static_cast<long>(rng.below(static_cast<std::uint64_t>(s + 3)));
    const Rational lhs = m_shift ? hbar_summand(m + 1, s, a, b, c) - hbar_summand(m, s, a, b, c)
                                 : hbar_summand(m, s + 1, a, b, c) - hbar_summand(m, s, a, b, c);
    Rational rhs = 0;
    bool skip = false;
    const long step[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int t = 0; t < 3 && !skip; ++t) {
      const long a1 = a + step[t][0], b1 = b + step[t][1], c1 = c + step[t][2];
      auto up = certs[static_cast<std::size_t>(t)](m, s, a1, b1, c1);
      auto here = certs[static_cast<std::size_t>(t)](m, s, a, b, c);
      if (!up || !here) {
        skip = true;
        break;
      }
      rhs += *up * hbar_summand(m, s, a1, b1, c1) - *here * hbar_summand(m, s, a, b, c);
    }
    if (skip) {
      ++skipped;
      continue;
    }
    ++ok;
    if (lhs != rhs)
      r.fail("(m,s,a,b,c)=(" + std::to_string(m) + "," + std::to_string(s) + "," + std::to_string(a) + "," +
             std::to_string(b) + "," + std::to_string(c) + ")");
  }
  if (ok < g.certificate_points) r.fail("only " + std::to_string(ok) + " evaluable points");
  r.summary(std::to_string(ok) + " points telescope, " + std::to_string(skipped) + " skipped for zero denominators");
  return r;
}

inline CheckResult verify_orthogonality_certificates(const AppendixGrid& g) {
  CheckResult r{"identity.certificates_n",
                {{"points", std::to_string(g.certificate_points)}, {"seed", std::to_string(g.seed)}}, true, {}, false};
  const auto certs = n_shift_certificates();
  RngStream rng(g.seed, 3);
  std::size_t ok = 0, skipped = 0;
  auto draw = [&](long hi) { return static_cast<long>(rng.below(static_cast<std::uint64_t>(hi + 1))); };
  while (ok < g.certificate_points && skipped < 100 * g.certificate_points) {
    const long n = draw(g.certificate_max_m), m = draw(n / 2), l1 = draw(n - 2 * m), l2 = draw(n - 2 * m);
    if (l1 == l2) continue;
    const long i = draw(n - 2 * m + 1), j1 = draw(i + 1), j2 = draw(i + 1);
    const Rational lhs = lemma_a2_summand(n + 1, m, l1, l2, i, j1, j2) - lemma_a2_summand(n, m, l1, l2, i, j1, j2);
    Rational rhs = 0;
    bool skip = false;
    const long step[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int t = 0; t < 3; ++t) {
      const long i1 = i + step[t][0], a1 = j1 + step[t][1], a2 = j2 + step[t][2];
      auto up = certs[static_cast<std::size_t>(t)](n, m, l1, l2, i1, a1, a2);
      auto here = certs[static_cast<std::size_t>(t)](n, m, l1, l2, i, j1, j2);
      if (!up || !here) {
        skip = true;
        break;
      }
      rhs += *up * lemma_a2_summand(n, m, l1, l2, i1, a1, a2) - *here * lemma_a2_summand(n, m, l1, l2, i, j1, j2);
    }
    if (skip) {
      ++skipped;
      continue;
    }
    ++ok;
    if (lhs != rhs)
      r.fail("(n,m,l1,l2,i,j1,j2)=(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(l1) + "," +
             std::to_string(l2) + "," + std::to_string(i) + "," + std::to_string(j1) + "," + std::to_string(j2) + ")");
  }
  if (ok < g.certificate_points) r.fail("only " + std::to_string(ok) + " evaluable points");
  r.summary(std::to_string(ok) + " points telescope, " + std::to_string(skipped) + " skipped for zero denominators");
  return r;
}

inline std::vector<CheckResult> verify_identities_appendixA(const AppendixGrid& g = {}) {
  return {verify_lemma_a1(g), verify_hbar(g), verify_lemma_a2(g), verify_hbar_certificates(true, g),
          verify_hbar_certificates(false, g), verify_orthogonality_certificates(g)};
}

// ---------------------------------------------------------------------------
// Normalized Gram matrix of the subset eigenvectors at one level.

inline std::vector<Subset> subsets_of_size(int n, int m) {
  std::vector<Subset> out;
  for (Subset S = 0; S < (Subset{1} << n); ++S)
    if (subset_size(S) == m) out.push_back(S);
  return out;
}

inline RationalMatrix normalized_gram(int n, int m) {
  const auto subsets = subsets_of_size(n, m);
  RationalMatrix G(subsets.size(), subsets.size());
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = 0; b < subsets.size(); ++b) G(a, b) = gram_normalized(subsets[a], subsets[b]).value;
  return G;
}

inline CheckResult verify_johnson_gram(int n, int m) {
  CheckResult r{"johnson_gram", {{"m", std::to_string(m)}, {"n", n_param(n)}}, true, {}, false};
  if (m % 2 || 2 * m > n) throw std::out_of_range("verify_johnson_gram: need m even and 2m <= n");
  const RationalMatrix G = normalized_gram(n, m);
  const std::size_t D = G.rows();
  if (rational_rank(G) != D) r.fail("Gram matrix is singular");
  if (n <= 10) {
    const auto subsets = subsets_of_size(n, m);
    const Vec pi = binary_stationary(n);
    const Rational self = subset_self_norm(m);
    for (std::size_t a = 0; a < D && r.pass; ++a) {
      const Vec fa = f_subset_vector(n, subsets[a]);
      if (inner_product(fa, fa, pi) != self) r.fail("self inner product differs at subset " + std::to_string(a));
      for (std::size_t b = a + 1; b < D; ++b)
        if (inner_product(fa, f_subset_vector(n, subsets[b]), pi) != G(a, b) * self) {
          r.fail("Gram entry (" + std::to_string(a) + "," + std::to_string(b) + ") differs from direct summation");
          break;
        }
    }
  }
  std::map<Rational, BigInt> expected;
  for (int t = 0; t <= m; ++t) expected[johnson_eigenvalue(n, m, t)] += johnson_multiplicity(n, t);
  std::ostringstream w;
  for (const auto& [lam, mult] : expected) {
    const BigInt got = BigInt(static_cast<unsigned long>(D - rational_rank(shift(G, lam))));
    w << (w.tellp() > 0 ? " " : "") << to_string(lam) << ":" << got.get_str();
    if (got != mult) r.fail("eigenvalue " + to_string(lam) + " multiplicity " + got.get_str() + ", expected " + mult.get_str());
  }
  r.summary("rank " + std::to_string(D) + "; " + w.str());
  return r;
}

// ---------------------------------------------------------------------------
// Word expansion of the binary kernel in p+, p-, p+h.

// c_{y,z} = (y! z! / ((y/2)! (z/2)! ((y+z)/2)! 2^{y+z}))^2 for y, z even.
inline Rational pplus_coefficient(int y, int z) {
  if (y % 2 || z % 2 || y < 0 || z < 0) return 0;
  BigInt den = factorial(y / 2) * factorial(z / 2) * factorial((y + z) / 2);
  den <<= static_cast<mp_bitcnt_t>(y + z);
  const Rational c = make_rational(factorial(y) * factorial(z), den);
  return c * c;
}

// p+ = [[1/2,1/2],[1/2,1/2]], p- = [[1/2,-1/2],[-1/2,1/2]], p+h = [[1/2,-1/2],[1/2,-1/2]];
// each word is the ordered tensor product, letter t acting on coordinate t.
inline RationalMatrix pplus_expansion(int n) {
  const std::size_t N = std::size_t{1} << n;
  std::map<std::pair<int, int>, std::vector<std::int64_t>> acc;
  for (std::uint64_t minus = 0; minus < N; ++minus) {
    if (std::popcount(minus) % 2) continue;
    const std::uint64_t rest = (N - 1) & ~minus;
    for (std::uint64_t h = rest;; h = (h - 1) & rest) {
      if (std::popcount(h) % 2 == 0) {
        auto& A = acc[{std::popcount(minus), std::popcount(h)}];
        if (A.empty()) A.assign(N * N, 0);
        for (std::uint64_t a = 0; a < N; ++a)
          for (std::uint64_t b = 0; b < N; ++b)
            A[a * N + b] += (std::popcount(((a ^ b) & minus) | (b & h)) % 2) ? -1 : 1;
      }
      if (h == 0) break;
    }
  }
  RationalMatrix M(N, N);
  for (const auto& [yz, A] : acc) {
    Rational c = pplus_coefficient(yz.first, yz.second);
    c /= Rational(BigInt(1) << static_cast<mp_bitcnt_t>(n));
    for (std::size_t i = 0; i < N * N; ++i)
      if (A[i] != 0) M(i / N, i % N) += c * A[i];
  }
  return M;
}

inline CheckResult verify_pplus_conjecture(int n, const CapConfig& caps = CapConfig::from_env()) {
  CheckResult r{"pplus_expansion", {{"n", n_param(n)}}, true, {}, false};
  if (n < 1 || n > 12) throw std::out_of_range("verify_pplus_conjecture: n must be in 1..12");
  const Kernel K = build_kernel(n, 2, caps);
  const RationalMatrix E = pplus_expansion(n);
  for (std::size_t i = 0; i < K.size() && r.pass; ++i)
    for (std::size_t j = 0; j < K.size(); ++j)
      if (E(i, j) != K(i, j)) {
        r.fail("entry (" + std::to_string(i) + "," + std::to_string(j) + "): expansion " + to_string(E(i, j)) +
               ", kernel " + to_string(K(i, j)));
        break;
      }
  r.summary("expansion equals K_" + std::to_string(n) + " exactly");
  return r;
}

// ---------------------------------------------------------------------------
// Eigenvalue multiplicities for general k.

struct CkMultiplicity {
  BigInt full;
  std::size_t lumped = 0;  // in the orbit chain
  std::string method;
};

inline CkMultiplicity ck_multiplicity(int k, int n, const Rational& lambda, const CapConfig& caps = CapConfig::from_env()) {
  caps.check(n, k);
  CkMultiplicity out;
  const std::uint64_t N = state_count(n, k);
  if (N <= 256) {
    const Kernel K = build_kernel(n, k, caps);
    out.full = BigInt(static_cast<unsigned long>(N - rational_rank(shift(K.matrix, lambda))));
    out.method = "full kernel rank";
  } else {
    // Nonzero eigenvalues lift from the value quotient with multiplicity; the
    // rank of K equals the rank of the quotient.
    const ValueQuotient Q = value_quotient(n, k);
    const std::size_t C = Q.matrix.rows();
    if (sgn(lambda) == 0) out.full = BigInt(static_cast<unsigned long>(N - rational_rank(Q.matrix)));
    else out.full = BigInt(static_cast<unsigned long>(C - rational_rank(shift(Q.matrix, lambda))));
    out.method = "value quotient rank";
  }
  const OrbitKernel L = orbit_kernel_direct(n, k);
  out.lumped = L.matrix.rows() - rational_rank(shift(L.matrix, lambda));
  return out;
}

inline CheckResult verify_ck_multiplicities(int k, int n, const Rational& lambda, std::optional<BigInt> expected = std::nullopt,
                                            const CapConfig& caps = CapConfig::from_env()) {
  CheckResult r{"ck_multiplicity",
                {{"k", std::to_string(k)}, {"lambda", to_string(lambda)}, {"n", n_param(n)}}, true, {}, false};
  const CkMultiplicity m = ck_multiplicity(k, n, lambda, caps);
  if (expected && m.full != *expected) r.fail("multiplicity " + m.full.get_str() + ", expected " + expected->get_str());
  r.summary("full " + m.full.get_str() + ", orbit chain " + std::to_string(m.lumped) + " (" + m.method + ")");
  return r;
}

// Best rational approximation with denominator <= max_den via continued fractions.
inline std::optional<Rational> reconstruct_rational(double v, long max_den, double tol) {
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double x = v;
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(x);
    const long p2 = static_cast<long>(a) * p1 + p0, q2 = static_cast<long>(a) * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
    if (std::fabs(v - static_cast<double>(p1) / static_cast<double>(q1)) < tol) return frac(p1, q1);
    if (x - a < 1e-15) break;
    x = 1 / (x - a);
  }
  return std::nullopt;
}

struct SurveyCluster {
  double value = 0;
  std::size_t multiplicity = 0;
  std::optional<Rational> rational;
  std::optional<BigInt> exact_multiplicity;  // by rank, when rational
  bool ambiguous = false;
};

// Double-precision spectrum of the value quotient symmetrized by the weights
// |A| pi(x_A); the zero cluster absorbs the k^n - C directions that the
// quotient does not see.
inline std::vector<SurveyCluster> spectrum_survey(int k, int n, double tol = 1e-9, bool confirm = true,
                                                  const CapConfig& caps = CapConfig::from_env()) {
  caps.check(n, k);
  const ValueQuotient Q = value_quotient(n, k);
  const std::size_t C = Q.matrix.rows();
  std::vector<double> w(C);
  for (std::size_t a = 0; a < C; ++a) w[a] = std::sqrt(Rational(stationary_prob(Q.representatives[a]) * Q.class_sizes[a]).get_d());
  Eigen::MatrixXd S(C, C);
  for (std::size_t a = 0; a < C; ++a)
    for (std::size_t b = 0; b < C; ++b) S(a, b) = w[a] * Q.matrix(a, b).get_d() / w[b];
  S = (S + S.transpose()) / 2;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S, Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + C);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  std::vector<SurveyCluster> out;
  for (double v : ev) {
    if (!out.empty() && std::fabs(out.back().value - v) <= tol) ++out.back().multiplicity;
    else out.push_back({v, 1, std::nullopt, std::nullopt, false});
  }
  const std::uint64_t N = state_count(n, k);
  bool has_zero = false;
  for (auto& c : out)
    if (std::fabs(c.value) <= tol) {
      c.multiplicity += N - C;
      has_zero = true;
    }
  if (!has_zero && N > C) out.push_back({0.0, N - C, Rational(0), std::nullopt, false});
  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    if (std::fabs(out[i].value - out[i + 1].value) <= 10 * tol) out[i].ambiguous = out[i + 1].ambiguous = true;
  for (auto& c : out) {
    if (!c.rational) c.rational = reconstruct_rational(c.value, 1000000, tol);
    if (confirm && c.rational) {
      if (sgn(*c.rational) == 0) c.exact_multiplicity = BigInt(static_cast<unsigned long>(N - rational_rank(Q.matrix)));
      else c.exact_multiplicity = BigInt(static_cast<unsigned long>(C - rational_rank(shift(Q.matrix, *c.rational))));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pointwise product identities and alternation moments.

inline CheckResult verify_statistics_identities(int n) {
  CheckResult r{"statistics_identities", {{"n", n_param(n)}}, true, {}, false};
  if (n < 4) throw std::out_of_range("verify_statistics_identities: n must be at least 4");
  const std::uint64_t N = std::uint64_t{1} << n;
  auto f = [](std::initializer_list<int> coords, std::uint64_t x) {
    Subset S = 0;
    for (int c : coords) S |= Subset{1} << (c - 1);
    return f_subset_eval(S, x);
  };
  std::size_t checks = 0;
  for (std::uint64_t x = 0; x < N; ++x) {
    const State s = State::from_index(x, n, 2);
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        if (a == b) continue;
        const Rational fab = f({a, b}, x);
        ++checks;
        if (fab * fab != -fab + 2) r.fail("square identity at x=" + s.str());
        const Rational xa = s[a - 1] - frac(1, 2), xb = s[b - 1] - frac(1, 2);
        if (xa * xb != frac(1, 6) * (fab + frac(1, 2))) r.fail("centered product identity at x=" + s.str());
        for (int c = 1; c <= n; ++c) {
          if (c == a || c == b) continue;
          const Rational fac = f({a, c}, x), fbc = f({b, c}, x);
          if (fab * fac != frac(3, 2) * fbc - frac(1, 2) * (fab + fac) + frac(1, 2)) r.fail("three-index identity at x=" + s.str());
          for (int d = 1; d <= n; ++d) {
            if (d == a || d == b || d == c) continue;
            const Rational lhs = fab * f({c, d}, x);
            const Rational rhs = frac(18, 35) * f({a, b, c, d}, x) - frac(2, 7) * (fab + f({c, d}, x)) +
                                 frac(3, 14) * (fac + f({a, d}, x) + fbc + f({b, d}, x)) + frac(1, 5);
            if (lhs != rhs) r.fail("four-index identity at x=" + s.str());
          }
        }
      }
    Rational t = frac(n - 1, 3);
    for (int i = 1; i < n; ++i) t -= f({i, i + 1}, x) / 3;
    if (t != alternations(s)) r.fail("alternation expansion at x=" + s.str());
  }
  r.summary(std::to_string(N) + " states, " + std::to_string(checks) + " ordered pairs");
  return r;
}

inline CheckResult verify_alternation_moments(int n) {
  CheckResult r{"alternation_moments", {{"n", n_param(n)}}, true, {}, false};
  const Vec pi = binary_stationary(n);
  Rational mean = 0, second = 0;
  for (std::uint64_t x = 0; x < pi.size(); ++x) {
    const long t = alternations(State::from_index(x, n, 2));
    mean += pi[x] * t;
    second += pi[x] * t * t;
  }
  const Rational var = second - mean * mean;
  if (mean != stationary_alternation_mean(n)) r.fail("mean " + to_string(mean));
  if (n >= 2 && var != stationary_alternation_variance(n)) r.fail("variance " + to_string(var));
  const std::vector<Rational> law = alternation_law(n);
  for (std::size_t t = 0; t < law.size(); ++t) {
    Rational direct = 0;
    for (std::uint64_t x = 0; x < pi.size(); ++x)
      if (alternations(State::from_index(x, n, 2)) == static_cast<int>(t)) direct += pi[x];
    if (direct != law[t]) r.fail("law of T differs at t=" + std::to_string(t));
  }
  r.summary("mean " + to_string(mean) + ", variance " + to_string(var));
  return r;
}

// ---------------------------------------------------------------------------

struct SuiteOptions {
  int max_n = 6;
  AppendixGrid grid;
  LumpingOptions lumping;
};

// Every check family at sizes up to max_n; results sorted by (name, params).
inline std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opt,
                                          const CapConfig& caps = CapConfig::from_env()) {
  const bool all = suite == "all";
  auto want = [&](const char* s) { return all || suite == s; };
  if (!all && suite != "eigen" && suite != "orthobasis" && suite != "lumpings" && suite != "identities" &&
      suite != "johnson" && suite != "pplus" && suite != "ck" && suite != "statistics")
    throw std::invalid_argument("unknown suite: " + suite);
  std::vector<CheckResult> out;
  auto add = [&](std::vector<CheckResult> v) { out.insert(out.end(), v.begin(), v.end()); };
  for (int n = 1; n <= opt.max_n; ++n) {
    if (want("eigen")) out.push_back(verify_eigenstructure(n, caps));
    if (want("orthobasis") && n <= 7) out.push_back(verify_orthobasis(n, caps));
    if (want("lumpings")) add(verify_lumpings(n, caps, opt.lumping));
    if (want("pplus")) out.push_back(verify_pplus_conjecture(n, caps));
    if (want("statistics") && n >= 4) out.push_back(verify_statistics_identities(n));
    if (want("statistics") && n >= 2) out.push_back(verify_alternation_moments(n));
    if (want("johnson"))
      for (int m = 2; 2 * m <= n; m += 2) out.push_back(verify_johnson_gram(n, m));
  }
  if (want("identities")) add(verify_identities_appendixA(opt.grid));
  if (want("ck")) {
    const std::vector<long> data{2, 10, 30, 70};
    for (int n = 4; n <= std::min(opt.max_n, 7); ++n)
      out.push_back(verify_ck_multiplicities(3, n, frac(1, 18), BigInt(data[static_cast<std::size_t>(n - 4)]), caps));
  }
  sort_results(out);
  return out;
}

}  // namespace burnside
