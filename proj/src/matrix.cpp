#include "dunkl/matrix.hpp"

#include <utility>

namespace dunkl {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix dimension mismatch");
  RationalMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        if (sgn(other(k, j)) != 0) r(i, j) += a * other(k, j);
      }
    }
  }
  return r;
}

std::vector<Rational> RationalMatrix::operator*(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<Rational> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(v[j]) != 0 && sgn((*this)(i, j)) != 0) r[i] += (*this)(i, j) * v[j];
    }
  }
  return r;
}

namespace {

struct Elimination {
  std::vector<std::vector<Integer>> rows;  // augmented [D A | I] after reduction
  Integer pivot;                           // common diagonal value
  int swaps = 0;
};

// Fraction-free Gauss-Jordan. Every division by the previous pivot is exact,
// so all intermediates stay integral; on exit the left block is pivot * I.
Elimination eliminate(const RationalMatrix& a, bool augment, std::vector<Integer>& row_scale) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("matrix must be square");
  const std::size_t width = augment ? 2 * n : n;

  Elimination e;
  e.rows.assign(n, std::vector<Integer>(width));
  row_scale.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    row_scale[i] = l;
    for (std::size_t j = 0; j < n; ++j) e.rows[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
    if (augment) e.rows[i][n + i] = 1;
  }

  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && e.rows[p][k] == 0) ++p;
    if (p == n) throw SingularMatrixError("matrix is singular");
    if (p != k) {
      std::swap(e.rows[p], e.rows[k]);
      ++e.swaps;
    }
    const Integer& piv = e.rows[k][k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Integer factor = e.rows[i][k];
      for (std::size_t j = 0; j < width; ++j) {
        if (j == k) continue;
        Integer v = piv * e.rows[i][j] - factor * e.rows[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        e.rows[i][j] = std::move(v);
      }
      e.rows[i][k] = 0;
    }
    prev = piv;
  }
  e.pivot = prev;
  return e;
}

}  // namespace

RationalMatrix inverse(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Integer> scale;
  Elimination e = eliminate(a, true, scale);
  // Right block is pivot * (D A)^{-1}; A^{-1} = (D A)^{-1} D.
  std::vector<Integer> original_scale(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    original_scale[i] = l;
  }
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational v(e.rows[i][n + j] * original_scale[j], e.pivot);
      v.canonicalize();
      inv(i, j) = std::move(v);
    }
  }
  return inv;
}

Rational determinant(const RationalMatrix& a) {
  if (a.rows() == 0) return 1;
  std::vector<Integer> scale;
  Elimination e;
  try {
    e = eliminate(a, false, scale);
  } catch (const SingularMatrixError&) {
    return 0;
  }
  Integer denom = 1;
  for (const auto& s : scale) denom *= s;
  Rational d(e.swaps % 2 ? Integer(-e.pivot) : e.pivot, denom);
  d.canonicalize();
  return d;
}

}  // namespace dunkl
