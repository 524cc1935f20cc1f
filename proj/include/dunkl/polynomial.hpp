#pragma once

#include "dunkl/multi_index.hpp"
#include "dunkl/rational.hpp"

#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dunkl {

/// Raised by divide_exact_by_linear_form when the remainder is nonzero.
class NotDivisibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// N x N rational matrix acting on R^N; x -> M x.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(std::size_t rank) : rank_(rank), entries_(rank * rank) {}

  static LinearMap identity(std::size_t rank);
  /// Orthogonal reflection in the hyperplane perpendicular to alpha.
  static LinearMap reflection(std::span<const Rational> alpha);

  std::size_t rank() const { return rank_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * rank_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * rank_ + j]; }

  std::vector<Rational> apply(std::span<const Rational> x) const;
  LinearMap operator*(const LinearMap& other) const;

  /// True when every row has a single nonzero entry equal to +-1.
  bool is_signed_permutation() const;

  bool operator==(const LinearMap& other) const { return rank_ == other.rank_ && entries_ == other.entries_; }
  bool operator<(const LinearMap& other) const;

 private:
  std::size_t rank_ = 0;
  std::vector<Rational> entries_;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in descending graded-lex order and never store zeros.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, Rational, std::greater<>>;

  Polynomial() = default;
  explicit Polynomial(std::size_t rank) : rank_(rank) {}

  static Polynomial constant(std::size_t rank, const Rational& c);
  static Polynomial monomial(const MultiIndex& nu, const Rational& c = 1);
  static Polynomial variable(std::size_t rank, std::size_t axis);
  /// <alpha, x>
  static Polynomial linear_form(std::span<const Rational> alpha);

  std::size_t rank() const { return rank_; }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const MultiIndex& nu) const;

  /// Adds c * x^nu, dropping the term if it cancels.
  void add_term(const MultiIndex& nu, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  bool operator==(const Polynomial& other) const = default;

 private:
  void check_rank(const Polynomial& other) const;

  std::size_t rank_ = 0;
  TermMap terms_;
};

enum class ArithOp { add, sub, mul };
Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithOp op);

/// d/dx_axis, axis is 0-based.
Polynomial partial_derivative(const Polynomial& p, std::size_t axis);

/// x -> p(M x).
Polynomial substitute_linear(const Polynomial& p, const LinearMap& m);

/// q with q * <alpha, x> = p; throws NotDivisibleError on a nonzero remainder.
Polynomial divide_exact_by_linear_form(const Polynomial& p, std::span<const Rational> alpha);

Rational evaluate(const Polynomial& p, std::span<const Rational> point);
/// Floating-point evaluation by term summation; subject to rounding.
double evaluate(const Polynomial& p, std::span<const double> point);

Polynomial homogeneous_component(const Polynomial& p, unsigned n);

/// Canonical text form, e.g. "1/3*x1^2*x2 - 2*x2".
std::string to_string(const Polynomial& p);
std::string to_latex(const Polynomial& p);
/// Inverse of to_string; accepts arbitrary whitespace and term order.
Polynomial parse_polynomial(std::string_view text, std::size_t rank);

}  // namespace dunkl
