#pragma once

#include "burnside/polynomials.hpp"
#include "burnside/spectral.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace burnside {

// Standard tableau of shape (n-m, m), stored by its second row a_1 < ... < a_m
// with a_r >= 2r. Entries are 1-based.
struct Tableau {
  int n = 0;
  std::vector<int> second_row;

  int m() const { return static_cast<int>(second_row.size()); }

  static Tableau column_reading(int n, int m) {
    Tableau t{n, {}};
    for (int r = 1; r <= m; ++r) t.second_row.push_back(2 * r);
    return t;
  }

  bool is_standard() const {
    if (2 * m() > n) return false;
    for (int r = 1; r <= m(); ++r) {
      int a = second_row[static_cast<std::size_t>(r - 1)];
      if (a < 2 * r || a > n) return false;
      if (r > 1 && a <= second_row[static_cast<std::size_t>(r - 2)]) return false;
    }
    return true;
  }

  // column minus row, rows and columns counted from 1
  int content(int entry) const {
    int below = 0;  // second-row entries smaller than `entry`
    for (int a : second_row) {
      if (a == entry) return (below + 1) - 2;
      if (a < entry) ++below;
    }
    return (entry - below) - 1;
  }

  void swap_entries(int j) {  // apply s_j to the filling
    for (int& a : second_row) {
      if (a == j) a = j + 1;
      else if (a == j + 1) a = j;
    }
    std::sort(second_row.begin(), second_row.end());
  }

  std::string str() const {
    std::string s = "{";
    for (int e = 1, first = 1; e <= n; ++e)
      if (std::find(second_row.begin(), second_row.end(), e) == second_row.end()) {
        s += (first ? "" : ",") + std::to_string(e);
        first = 0;
      }
    s += ";";
    for (std::size_t i = 0; i < second_row.size(); ++i) s += (i ? "," : "") + std::to_string(second_row[i]);
    return s + "}";
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

// All standard tableaux of shape (n-m, m) in lexicographic order of the second
// row; the column reading tableau is first.
inline std::vector<Tableau> enumerate_tableaux(int n, int m) {
  if (m < 0 || 2 * m > n) throw std::out_of_range("enumerate_tableaux: m out of range");
  std::vector<Tableau> out;
  std::vector<int> row(static_cast<std::size_t>(m));
  auto rec = [&](auto&& self, int r, int lo) -> void {
    if (r > m) {
      out.push_back({n, row});
      return;
    }
    for (int a = std::max(lo, 2 * r); a <= n; ++a) {
      row[static_cast<std::size_t>(r - 1)] = a;
      self(self, r + 1, a + 1);
    }
  };
  rec(rec, 1, 1);
  return out;
}

inline std::uint64_t swap_bits(std::uint64_t x, int a, int b) {
  const std::uint64_t ba = (x >> a) & 1U, bb = (x >> b) & 1U;
  if (ba != bb) x ^= (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
  return x;
}

// Transposition of coordinates a and b (1-based) acting on functions:
// (s f)(x) = f(s x).
inline Vec transpose_apply(int a, int b, const Vec& v) {
  Vec out(v.size());
  for (std::uint64_t x = 0; x < v.size(); ++x) out[x] = v[swap_bits(x, a - 1, b - 1)];
  return out;
}

// Jucys-Murphy element M_r = sum_{t<r} s_{t r}.
inline Vec jm_apply(int r, const Vec& v) {
  if (r < 2) throw std::out_of_range("jm_apply: r must be at least 2");
  Vec out(v.size());
  for (int t = 1; t < r; ++t) {
    Vec w = transpose_apply(t, r, v);
    for (std::size_t x = 0; x < v.size(); ++x) out[x] += w[x];
  }
  return out;
}

// tau_j = s_j + 1/(M_j - M_{j+1}), applied to v in V_Q using the contents of Q.
inline Vec tau_apply(int j, const Vec& v, const Tableau& Q) {
  const int d = Q.content(j) - Q.content(j + 1);
  if (d == 0) throw std::domain_error("tau_apply: equal contents, tau_j is singular");
  Vec out = transpose_apply(j, j + 1, v);
  const Rational inv = frac(1, d);
  for (std::size_t x = 0; x < v.size(); ++x) out[x] += v[x] * inv;
  return out;
}

// tau_Q = tau_Q^{(1)} ... tau_Q^{(m)} with tau_Q^{(r)} = tau_{a_r - 1} ... tau_{2r};
// rightmost factor first. Returns the transported vector; the running tableau
// must land on Q.
inline Vec apply_tau_word(const Tableau& Q, Vec v) {
  Tableau cur = Tableau::column_reading(Q.n, Q.m());
  for (int r = Q.m(); r >= 1; --r)
    for (int j = 2 * r; j < Q.second_row[static_cast<std::size_t>(r - 1)]; ++j) {
      v = tau_apply(j, v, cur);
      cur.swap_entries(j);
    }
  if (!(cur == Q)) throw std::logic_error("apply_tau_word: tau word did not reach " + Q.str());
  return v;
}

// g_T^{m,i} = (v01 - v10)^{⊗m} ⊗ (sum of v_S over i-subsets S of the last n-2m
// coordinates); v01 means the second coordinate of the pair is set.
inline Vec g_column_reading(int n, int m, int i) {
  Vec g(std::size_t{1} << n);
  const std::uint64_t tail_mask = ((std::uint64_t{1} << n) - 1) & ~((std::uint64_t{1} << (2 * m)) - 1);
  for (std::uint64_t x = 0; x < g.size(); ++x) {
    if (std::popcount(x & tail_mask) != i) continue;
    int sgn_ = 1;
    for (int r = 0; r < m && sgn_ != 0; ++r) {
      const int lo = static_cast<int>((x >> (2 * r)) & 1U), hi = static_cast<int>((x >> (2 * r + 1)) & 1U);
      sgn_ = (lo == hi) ? 0 : (hi ? sgn_ : -sgn_);
    }
    g[x] = sgn_;
  }
  return g;
}

inline Vec g_vector(const Tableau& Q, int i) { return apply_tau_word(Q, g_column_reading(Q.n, Q.m(), i)); }

// gamma_Q = prod_r prod_{d=2}^{a_r - 2r + 1} (d^2 - 1)/d^2
inline Rational gamma_Q(const Tableau& Q) {
  Rational g = 1;
  for (int r = 1; r <= Q.m(); ++r)
    for (long d = 2; d <= Q.second_row[static_cast<std::size_t>(r - 1)] - 2 * r + 1; ++d) g *= frac(d * d - 1, d * d);
  return g;
}

inline Rational norm_f_Q(int n, int m, int l, const Tableau& Q) {
  if (Q.n != n || Q.m() != m || l < 0 || l > n - 2 * m) throw std::invalid_argument("norm_f_Q: inconsistent shape");
  Rational r = gamma_Q(Q) * make_rational(BigInt(1) << static_cast<mp_bitcnt_t>(m), n + 1);
  r *= make_rational(factorial(2 * m + l), (2 * m + 2 * l + 1) * factorial(m + l) * factorial(m + l) * factorial(l));
  r *= make_rational(factorial(n - 2 * m), factorial(n));
  r *= make_rational(factorial(n + l + 1), factorial(n - 2 * m - l));
  return r;
}

inline Eigenvalue basis_eigenvalue(int m, int l) {
  return (m + l) % 2 ? Eigenvalue::zero() : Eigenvalue::beta_k((m + l) / 2);
}

struct OrthoVector {
  int n = 0, m = 0, l = 0;
  Tableau tableau;
  Vec coords;
  Eigenvalue eigenvalue;
  Rational squared_norm;
};

inline OrthoVector build_f_Q(int n, int m, int l, const Tableau& Q) {
  if (Q.n != n || Q.m() != m || !Q.is_standard() || l < 0 || l > n - 2 * m)
    throw std::invalid_argument("build_f_Q: inconsistent shape");
  Vec f(std::size_t{1} << n);
  for (int i = 0; i <= n - 2 * m; ++i) {
    const Rational c = t_scalar(m, n, l, i);
    if (sgn(c) == 0) continue;
    Vec g = g_column_reading(n, m, i);
    for (std::size_t x = 0; x < f.size(); ++x)
      if (sgn(g[x]) != 0) f[x] += c * g[x];
  }
  return {n, m, l, Q, apply_tau_word(Q, std::move(f)), basis_eigenvalue(m, l), norm_f_Q(n, m, l, Q)};
}

// Ordered by (m, l, tableau lexicographic).
inline std::vector<OrthoVector> build_basis(int n) {
  std::vector<OrthoVector> out;
  for (int m = 0; 2 * m <= n; ++m)
    for (int l = 0; l <= n - 2 * m; ++l)
      for (const Tableau& Q : enumerate_tableaux(n, m)) out.push_back(build_f_Q(n, m, l, Q));
  return out;
}

}  // namespace burnside
