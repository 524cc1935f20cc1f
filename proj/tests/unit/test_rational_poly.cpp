#include "dunkl/matrix.hpp"
#include "dunkl/polynomial.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace dunkl;

TEST_CASE("rational parsing is exact and strict") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("5") == 5);
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(Rational(7)) == "7");
  CHECK_THROWS(parse_rational("0.5"));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("1e3"));
  CHECK_THROWS(parse_rational(""));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("combinatorial helpers") {
  CHECK(factorial(6) == 720);
  CHECK(binomial(7u, 3u) == 35);
  CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(pochhammer(Rational(3, 2), 3) == Rational(105, 8));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("multi-index order and helpers") {
  auto deg2 = monomials_of_degree(3, 2);
  REQUIRE(deg2.size() == 6);
  CHECK(deg2.front() == MultiIndex({2, 0, 0}));
  CHECK(deg2.back() == MultiIndex({0, 0, 2}));
  CHECK(homogeneous_dimension(3, 4) == 15);
  CHECK(monomials_up_to_degree(2, 3).size() == 10);
  MultiIndex nu{2, 1};
  CHECK(nu.factorial() == 2);
  CHECK(nu.binomial(MultiIndex({1, 1})) == 2);
  CHECK(sub_indices(nu).size() == 6);
  CHECK(MultiIndex({3}).label() == "3");
  CHECK(nu.label() == "(2,1)");
}

TEST_CASE("canonical text form round-trips") {
  const Polynomial p = parse_polynomial("1/3*x1^2*x2 - 2*x2", 2);
  CHECK(to_string(p) == "1/3*x1^2*x2 - 2*x2");
  CHECK(to_string(parse_polynomial("-2*x2 + 1/3 * x2*x1^2", 2)) == "1/3*x1^2*x2 - 2*x2");
  CHECK(to_string(Polynomial(2)) == "0");
  CHECK(to_string(parse_polynomial("x1 - x1", 1)) == "0");
  CHECK(to_latex(p) == "\\frac{1}{3} x_{1}^{2} x_{2} - 2 x_{2}");
  CHECK_THROWS(parse_polynomial("x3", 2));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const Polynomial p = testing::random_polynomial(rng, n, 4, 5);
    const Polynomial q = testing::random_polynomial(rng, n, 4, 5);
    const Polynomial r = testing::random_polynomial(rng, n, 3, 4);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
    CHECK(poly_arith(p, q, ArithOp::mul) == p * q);
    CHECK(parse_polynomial(to_string(p), n) == p);
  }
}

TEST_CASE("exact division by linear forms") {
  std::mt19937 rng(7);
  const std::vector<std::vector<Rational>> forms = {
      {1, -1, 0}, {1, 1, 0}, {0, 0, 1}, {Rational(1, 2), 3, -2}, {0, 1, 1}};
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial p = testing::random_polynomial(rng, 3, 4, 6);
    for (const auto& a : forms) {
      const Polynomial l = Polynomial::linear_form(a);
      CHECK(divide_exact_by_linear_form(p * l, a) == p);
    }
  }
  const std::vector<Rational> a{1, -1};
  CHECK_THROWS_AS(divide_exact_by_linear_form(parse_polynomial("x1^2 + x2", 2), a), NotDivisibleError);
}

TEST_CASE("reflections substitute as expected") {
  const std::vector<Rational> alpha{1, -1};
  const LinearMap s = LinearMap::reflection(alpha);
  CHECK(s.is_signed_permutation());
  CHECK(s * s == LinearMap::identity(2));
  const Polynomial p = parse_polynomial("x1^2*x2 + 3*x2", 2);
  CHECK(substitute_linear(p, s) == parse_polynomial("x2^2*x1 + 3*x1", 2));
  const std::vector<Rational> beta{1, 2};
  const LinearMap t = LinearMap::reflection(beta);
  CHECK(!t.is_signed_permutation());
  CHECK(substitute_linear(substitute_linear(p, t), t) == p);
}

TEST_CASE("derivatives, evaluation and components") {
  const Polynomial p = parse_polynomial("x1^3*x2 - 2*x1*x2 + 5", 2);
  CHECK(partial_derivative(p, 0) == parse_polynomial("3*x1^2*x2 - 2*x2", 2));
  CHECK(partial_derivative(p, 1) == parse_polynomial("x1^3 - 2*x1", 2));
  const std::vector<Rational> pt{2, Rational(1, 2)};
  CHECK(evaluate(p, pt) == 7);
  const std::vector<double> ptd{2.0, 0.5};
  CHECK(evaluate(p, ptd) == doctest::Approx(7.0));
  CHECK(homogeneous_component(p, 2) == parse_polynomial("-2*x1*x2", 2));
  CHECK(p.degree() == 4);
  CHECK(Polynomial(2).degree() == -1);
}

TEST_CASE("fraction-free inverse against known Hilbert inverses") {
  auto hilbert = [](std::size_t n) {
    RationalMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) h(i, j) = Rational(1, static_cast<unsigned long>(i + j + 1));
    }
    return h;
  };
  const RationalMatrix inv = inverse(hilbert(4));
  const long expected[4][4] = {
      {16, -120, 240, -140}, {-120, 1200, -2700, 1680}, {240, -2700, 6480, -4200}, {-140, 1680, -4200, 2800}};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) CHECK(inv(i, j) == expected[i][j]);
  }
  CHECK(determinant(hilbert(3)) == Rational(1, 2160));
  for (std::size_t n = 1; n <= 7; ++n) CHECK(hilbert(n) * inverse(hilbert(n)) == RationalMatrix::identity(n));

  RationalMatrix singular(2, 2);
  singular(0, 0) = 1;
  singular(0, 1) = 2;
  singular(1, 0) = 2;
  singular(1, 1) = 4;
  CHECK_THROWS_AS(inverse(singular), SingularMatrixError);
  CHECK(determinant(singular) == 0);

  RationalMatrix needs_pivot(2, 2);
  needs_pivot(0, 1) = Rational(2, 3);
  needs_pivot(1, 0) = 5;
  CHECK(needs_pivot * inverse(needs_pivot) == RationalMatrix::identity(2));
  CHECK(determinant(needs_pivot) == Rational(-10, 3));
}
