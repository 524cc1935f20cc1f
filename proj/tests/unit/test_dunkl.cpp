#include "dunkl/dunkl.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace dunkl;
using testing::make_context;

TEST_CASE("rank-one Dunkl operator on monomials") {
  // T x^n = n x^{n-1} for even n, (n + 2k) x^{n-1} for odd n.
  for (const Rational k : {Rational(0), Rational(1, 2), Rational(7, 3)}) {
    const DunklContext ctx = make_context("Z2", {k});
    for (unsigned n = 1; n <= 9; ++n) {
      const Rational c = n % 2 == 0 ? Rational(n) : Rational(n + 2 * k);
      CHECK(dunkl_apply(ctx, 0, Polynomial::monomial(MultiIndex{n})) == Polynomial::monomial(MultiIndex{n - 1}, c));
    }
    CHECK(dunkl_apply(ctx, 0, Polynomial::constant(1, 5)).is_zero());
  }
}

TEST_CASE("k = 0 reduces to partial derivatives") {
  std::mt19937 rng(3);
  for (const char* label : {"A2", "B3", "D3"}) {
    const DunklContext ctx = make_context(label, {0});
    for (int trial = 0; trial < 5; ++trial) {
      const Polynomial p = testing::random_polynomial(rng, ctx.rank(), 5, 6);
      for (std::size_t i = 0; i < ctx.rank(); ++i) CHECK(dunkl_apply(ctx, i, p) == partial_derivative(p, i));
    }
  }
}

TEST_CASE("Dunkl operators commute on random polynomials") {
  std::mt19937 rng(11);
  for (const auto& ref : testing::reference_configs()) {
    CAPTURE(ref.label);
    const DunklContext ctx = make_context(ref.label, ref.k);
    for (int trial = 0; trial < 4; ++trial) {
      const Polynomial p = testing::random_polynomial(rng, ctx.rank(), 5, 5);
      for (std::size_t i = 0; i < ctx.rank(); ++i) {
        for (std::size_t j = i + 1; j < ctx.rank(); ++j) {
          CHECK(dunkl_apply(ctx, i, dunkl_apply(ctx, j, p)) == dunkl_apply(ctx, j, dunkl_apply(ctx, i, p)));
        }
      }
    }
  }
}

TEST_CASE("Dunkl Laplacian of |x|^2 is 2(N + 2 gamma)") {
  for (const auto& ref : testing::reference_configs()) {
    const DunklContext ctx = make_context(ref.label, ref.k);
    Polynomial r2(ctx.rank());
    for (std::size_t i = 0; i < ctx.rank(); ++i) r2.add_term(MultiIndex::unit(ctx.rank(), i) + MultiIndex::unit(ctx.rank(), i), 1);
    const Rational expected = 2 * (Rational(static_cast<long>(ctx.rank())) + 2 * gamma_k(ctx.root_system(), ctx.multiplicity()));
    CHECK(laplacian_apply(ctx, r2) == Polynomial::constant(ctx.rank(), expected));
  }
}

TEST_CASE("Dunkl operators are W-equivariant") {
  // g T_xi g^{-1} = T_{g xi}; for signed permutations: (T_i p)(g x) relates to T on p(g x).
  const DunklContext ctx = make_context("B2", {1, Rational(1, 2)});
  const Polynomial p = parse_polynomial("x1^3*x2 + 2*x1*x2^2 - x2^3 + x1", 2);
  const LinearMap swap = LinearMap::reflection(std::vector<Rational>{1, -1});
  // Swapping coordinates exchanges T_1 and T_2.
  CHECK(substitute_linear(dunkl_apply(ctx, 0, p), swap) == dunkl_apply(ctx, 1, substitute_linear(p, swap)));
}

TEST_CASE("heat semigroup is invertible on polynomials") {
  std::mt19937 rng(5);
  for (const auto& ref : testing::reference_configs()) {
    const DunklContext ctx = make_context(ref.label, ref.k);
    const Polynomial p = testing::random_polynomial(rng, ctx.rank(), 6, 6);
    for (const auto& t : testing::reference_ts()) {
      CHECK(heat_apply(ctx, -t, heat_apply(ctx, t, p)) == p);
      CHECK(heat_apply(ctx, t, heat_apply(ctx, t, p)) == heat_apply(ctx, 2 * t, p));
    }
    CHECK(heat_apply(ctx, 0, p) == p);
  }
}

TEST_CASE("T^nu, adjoint and Gaussian conjugation") {
  const DunklContext ctx = make_context("Z2^2", {Rational(1, 2), 2});
  const Polynomial p = parse_polynomial("x1^3*x2^2 - x1*x2 + 4", 2);
  CHECK(dunkl_power_apply(ctx, MultiIndex{1, 1}, p) == dunkl_apply(ctx, 0, dunkl_apply(ctx, 1, p)));
  CHECK(dunkl_power_apply(ctx, MultiIndex{0, 0}, p) == p);
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(adjoint_apply(ctx, j, p) == -gaussian_conjugate_apply(ctx, j, Rational(1, 2), p));
  }
  CHECK_THROWS(gaussian_conjugate_apply(ctx, 0, 0, p));
}
