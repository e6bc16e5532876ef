#pragma once

#include "burnside/exact.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace burnside {

using Vec = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RationalMatrix identity(std::size_t d) {
    RationalMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  const std::vector<Rational>& data() const { return a_; }

  Vec row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

  friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

inline RationalMatrix operator*(const RationalMatrix& A, const RationalMatrix& B) {
  if (A.cols() != B.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  RationalMatrix C(A.rows(), B.cols());
  Rational t;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t k = 0; k < A.cols(); ++k) {
      const Rational& a = A(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < B.cols(); ++j) {
        const Rational& b = B(k, j);
        if (sgn(b) == 0) continue;
        t = a * b;
        C(i, j) += t;
      }
    }
  return C;
}

inline RationalMatrix operator-(const RationalMatrix& A, const RationalMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) throw std::invalid_argument("matrix difference: shape mismatch");
  RationalMatrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = A(i, j) - B(i, j);
  return C;
}

inline RationalMatrix mat_pow(RationalMatrix M, unsigned long l) {
  if (!M.square()) throw std::invalid_argument("mat_pow: matrix is not square");
  RationalMatrix R = RationalMatrix::identity(M.rows());
  while (l > 0) {
    if (l & 1UL) R = R * M;
    l >>= 1;
    if (l > 0) M = M * M;
  }
  return R;
}

// v^T M
inline Vec left_apply(const Vec& v, const RationalMatrix& M) {
  if (v.size() != M.rows()) throw std::invalid_argument("left_apply: shape mismatch");
  Vec out(M.cols());
  Rational t;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    if (sgn(v[i]) == 0) continue;
    for (std::size_t j = 0; j < M.cols(); ++j) {
      if (sgn(M(i, j)) == 0) continue;
      t = v[i] * M(i, j);
      out[j] += t;
    }
  }
  return out;
}

// M v
inline Vec apply(const RationalMatrix& M, const Vec& v) {
  if (v.size() != M.cols()) throw std::invalid_argument("apply: shape mismatch");
  Vec out(M.rows());
  Rational t;
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) {
      if (sgn(v[j]) == 0 || sgn(M(i, j)) == 0) continue;
      t = M(i, j) * v[j];
      out[i] += t;
    }
  return out;
}

// Index convention: row/col of the product is idxA + dimA * idxB, so A acts on
// the low-order (first) coordinates and B on the high-order (last) ones.
inline RationalMatrix kron(const RationalMatrix& A, const RationalMatrix& B) {
  RationalMatrix C(A.rows() * B.rows(), A.cols() * B.cols());
  for (std::size_t ib = 0; ib < B.rows(); ++ib)
    for (std::size_t jb = 0; jb < B.cols(); ++jb) {
      if (sgn(B(ib, jb)) == 0) continue;
      for (std::size_t ia = 0; ia < A.rows(); ++ia)
        for (std::size_t ja = 0; ja < A.cols(); ++ja)
          C(ia + A.rows() * ib, ja + A.cols() * jb) = A(ia, ja) * B(ib, jb);
    }
  return C;
}

inline RationalMatrix from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return {};
  RationalMatrix M(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != M.cols()) throw std::invalid_argument("from_rows: ragged input");
    for (std::size_t j = 0; j < M.cols(); ++j) M(i, j) = rows[i][j];
  }
  return M;
}

// Rank over Q by Bareiss fraction-free elimination. Each row is first scaled
// by the lcm of its denominators; every division below is exact.
inline std::size_t rational_rank(const RationalMatrix& M) {
  const std::size_t R = M.rows(), C = M.cols();
  std::vector<std::vector<BigInt>> a(R, std::vector<BigInt>(C));
  for (std::size_t i = 0; i < R; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), M(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < C; ++j) a[i][j] = M(i, j).get_num() * (l / M(i, j).get_den());
  }
  BigInt prev = 1, t;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < C && rank < R; ++col) {
    std::size_t piv = R;
    for (std::size_t i = rank; i < R; ++i)
      if (sgn(a[i][col]) != 0) {
        piv = i;
        break;
      }
    if (piv == R) continue;
    std::swap(a[piv], a[rank]);
    const BigInt& p = a[rank][col];
    for (std::size_t i = rank + 1; i < R; ++i) {
      for (std::size_t j = col + 1; j < C; ++j) {
        t = p * a[i][j];
        mpz_submul(t.get_mpz_t(), a[i][col].get_mpz_t(), a[rank][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace burnside
