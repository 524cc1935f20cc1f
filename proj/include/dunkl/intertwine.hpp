#pragma once

#include "dunkl/dunkl_context.hpp"

#include <map>

namespace dunkl {

/// V and V^{-1} restricted to the homogeneous polynomials of one degree, in
/// the descending graded-lex monomial basis. Column j of `forward` holds the
/// coefficients of V(x^basis[j]).
struct DegreeMatrix {
  unsigned degree = 0;
  std::vector<MultiIndex> basis;
  RationalMatrix forward;
  RationalMatrix inverse;
};

/// Entry (nu, rho) is (T^nu x^rho)(0) / nu!, read directly off the Dunkl
/// operators; no linear solve is involved.
DunklContext::MatrixPtr v_inverse_matrix(const DunklContext& ctx, unsigned degree);

/// Exact inverse of v_inverse_matrix. Throws InvalidMultiplicityError if the
/// inverse matrix turns out singular (impossible for k >= 0).
DunklContext::MatrixPtr v_matrix(const DunklContext& ctx, unsigned degree);

DegreeMatrix degree_matrix(const DunklContext& ctx, unsigned degree);

Polynomial apply_v(const DunklContext& ctx, const Polynomial& p);
Polynomial apply_v_inverse(const DunklContext& ctx, const Polynomial& p);

/// m_nu = V(x^nu).
Polynomial moment_function(const DunklContext& ctx, const MultiIndex& nu);

/// c_nu = (T^nu p)(0) / nu!, so that p = sum_nu c_nu m_nu. Zero
/// coefficients are omitted.
std::map<MultiIndex, Rational> taylor_coefficients(const DunklContext& ctx, const Polynomial& p);

}  // namespace dunkl
