#pragma once

#include "dunkl/dunkl_context.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace dunkl {

/// Variance parameter t and center x of a k-Gaussian P_t(x, .).
struct GaussianSpec {
  Rational t;
  std::vector<Rational> center;  // empty means the origin

  static GaussianSpec centered(const Rational& t) { return {t, {}}; }
};

/// a_lambda(t) = (2mu)!/mu! (-t)^{|mu|} if lambda = 2 mu, else 0.
Rational a_lambda(const MultiIndex& lambda, const Rational& t);

using ALambdaFn = std::function<Rational(const MultiIndex&, const Rational&)>;

/// R_nu(t, .) = sum_{rho <= nu} binom(nu, rho) a_{nu - rho}(t) m_rho.
Polynomial appell_character(const DunklContext& ctx, const MultiIndex& nu, const Rational& t);
/// Same sum with a caller-supplied coefficient function (used for fault
/// injection in the verification suites).
Polynomial appell_character(const DunklContext& ctx, const MultiIndex& nu, const Rational& t,
                            const ALambdaFn& coefficients);
/// R_nu(t, .) computed as exp(-t Delta_k) m_nu.
Polynomial appell_character_heat(const DunklContext& ctx, const MultiIndex& nu, const Rational& t);

/// S_nu(t, .) = (2t)^{-|nu|} exp(-t Delta_k) x^nu. Throws for t = 0.
Polynomial appell_cocharacter(const DunklContext& ctx, const MultiIndex& nu, const Rational& t);

/// (-1)^{|nu|} exp(|x|^2/4t) T^nu exp(-|x|^2/4t), built by iterating the
/// Gaussian-conjugated Dunkl operators on 1. Throws for t = 0.
Polynomial rodriguez_cocharacter(const DunklContext& ctx, const MultiIndex& nu, const Rational& t);

/// Exact modified moment of P_t(x, .): sum_{rho <= nu} binom(nu, rho) a_rho(-t) m_{nu - rho}(x).
Rational gaussian_moment(const DunklContext& ctx, const MultiIndex& nu, const GaussianSpec& spec);

/// Exact integral of p against P_t(x, .), computed in the moment-function basis.
Rational gaussian_integrate(const DunklContext& ctx, const Polynomial& p, const GaussianSpec& spec);

/// The integral of p against P_t(x, .) as a polynomial in the center x.
Polynomial gaussian_integrate_in_center(const DunklContext& ctx, const Polynomial& p, const Rational& t);

/// [p, q]_k = (p(T) q)(0).
Rational pairing(const DunklContext& ctx, const Polynomial& p, const Polynomial& q);

/// Both sides of the Macdonald formula for homogeneous p, q. For equal degree
/// n the right side is (2t)^{-n} times the integral of
/// exp(-t Delta) p * exp(-t Delta) q against P_t(0, .); for distinct degrees it is
/// the un-normalized integral and both sides must vanish. Throws for
/// non-homogeneous input or t <= 0.
std::pair<Rational, Rational> macdonald_identity_check(const DunklContext& ctx, const Polynomial& p,
                                                       const Polynomial& q, const Rational& t);

/// [., .]_k-orthogonal basis phi_nu of each P_n by Gram-Schmidt on the
/// monomials (graded-lex, unnormalized), for |nu| <= n_max.
std::vector<Polynomial> pairing_orthogonal_basis(const DunklContext& ctx, unsigned n_max);

/// Generalized Hermite polynomials H_nu = exp(-t Delta_k) phi_nu, orthogonal for P_t(0, .).
std::vector<Polynomial> hermite_basis(const DunklContext& ctx, unsigned n_max, const Rational& t);

struct RecursionSides {
  Polynomial character_lhs;    // T_j R_{nu+e_j}(t, .)
  Polynomial character_rhs;    // (nu_j + 1) R_nu(t, .)
  Polynomial cocharacter_lhs;  // S_{nu+e_j}(1/2, .)
  Polynomial cocharacter_rhs;  // T_j^* S_nu(1/2, .)
};
RecursionSides character_recursion_check(const DunklContext& ctx, const MultiIndex& nu, std::size_t axis,
                                         const Rational& t);

/// Rank-one comparison of R_m(t, .) with the Laguerre form
/// t^n L_n^{(k -+ 1/2)}(x^2/4t) (times x for odd m = 2n+1).
struct LaguerreComparison {
  unsigned index = 0;              // m
  Polynomial character;            // R_m(t, .)
  Polynomial laguerre_form;        // unscaled Laguerre expression
  Rational constant;               // leading-coefficient ratio
  Rational unit_weight_constant;   // value of the same constant when k = 0
  bool proportional = false;       // character == constant * laguerre_form
};
LaguerreComparison laguerre_structure(const DunklContext& ctx, unsigned m, const Rational& t);

/// Laguerre polynomial L_n^{(alpha)} in one variable.
Polynomial laguerre(unsigned n, const Rational& alpha);

struct AppellTables {
  unsigned max_degree = 0;
  Rational t;
  std::vector<MultiIndex> indices;
  std::vector<Polynomial> characters;    // R_nu(t, .)
  std::vector<Polynomial> cocharacters;  // S_nu(t, .)
};
/// Eagerly builds R_nu and S_nu for all |nu| <= max_degree. t must be nonzero.
AppellTables build_appell_tables(const DunklContext& ctx, unsigned max_degree, const Rational& t);

}  // namespace dunkl
