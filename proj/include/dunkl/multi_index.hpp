#pragma once

#include "dunkl/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace dunkl {

/// Exponent vector nu in Z_+^N. Ordered graded-lexicographically: total
/// degree first, then lexicographic on the exponents (x1 dominates).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t rank) : exps_(rank, 0) {}
  MultiIndex(std::initializer_list<unsigned> exps) : exps_(exps) {}
  explicit MultiIndex(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  static MultiIndex unit(std::size_t rank, std::size_t axis);

  std::size_t rank() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  unsigned degree() const;
  bool is_even() const;

  /// nu! = prod nu_i!
  Rational factorial() const;
  /// binom(nu, rho) = prod binom(nu_i, rho_i); zero unless rho <= nu.
  Rational binomial(const MultiIndex& rho) const;

  /// Componentwise partial order rho <= nu.
  bool divides(const MultiIndex& nu) const;

  MultiIndex operator+(const MultiIndex& other) const;
  /// Componentwise difference; requires other <= *this.
  MultiIndex operator-(const MultiIndex& other) const;

  bool operator==(const MultiIndex&) const = default;
  std::strong_ordering operator<=>(const MultiIndex& other) const;

  /// "(1,0,2)" form; a bare number in rank 1.
  std::string label() const;

 private:
  std::vector<unsigned> exps_;
};

/// All nu with |nu| = n in descending graded-lex order (x1^n first).
std::vector<MultiIndex> monomials_of_degree(std::size_t rank, unsigned n);

/// All nu with |nu| <= n, grouped by ascending degree, descending lex inside.
std::vector<MultiIndex> monomials_up_to_degree(std::size_t rank, unsigned n);

/// All rho <= nu.
std::vector<MultiIndex> sub_indices(const MultiIndex& nu);

/// dim P_n = binom(n + N - 1, N - 1).
std::size_t homogeneous_dimension(std::size_t rank, unsigned n);

}  // namespace dunkl
