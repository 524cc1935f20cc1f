#pragma once

#include "dunkl/rational.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace dunkl {

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  RationalMatrix operator*(const RationalMatrix& other) const;
  std::vector<Rational> operator*(std::span<const Rational> v) const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact inverse by fraction-free (Bareiss) Gauss-Jordan elimination on the
/// row-scaled integer matrix. Throws SingularMatrixError.
RationalMatrix inverse(const RationalMatrix& a);

/// Exact determinant via the same fraction-free elimination.
Rational determinant(const RationalMatrix& a);

}  // namespace dunkl
