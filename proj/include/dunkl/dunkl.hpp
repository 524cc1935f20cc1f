#pragma once

#include "dunkl/dunkl_context.hpp"

namespace dunkl {

/// T_i p = d_i p + sum_{alpha in R+} k(alpha) alpha_i (p - p o sigma_alpha) / <alpha, x>.
/// Axis is 0-based. The difference quotient is an exact polynomial division.
Polynomial dunkl_apply(const DunklContext& ctx, std::size_t axis, const Polynomial& p);

/// Delta_k = sum_j T_j^2.
Polynomial laplacian_apply(const DunklContext& ctx, const Polynomial& p);

/// exp(t Delta_k) p; the series terminates on polynomials, so any rational t
/// (including t <= 0) is allowed.
Polynomial heat_apply(const DunklContext& ctx, const Rational& t, const Polynomial& p);

/// T^nu p, applying T_1 nu_1 times first, then T_2, and so on.
Polynomial dunkl_power_apply(const DunklContext& ctx, const MultiIndex& nu, const Polynomial& p);

/// T_j^* p = x_j p - T_j p, the adjoint in L^2 of the centered k-Gaussian with t = 1/2.
Polynomial adjoint_apply(const DunklContext& ctx, std::size_t axis, const Polynomial& p);

/// exp(|x|^2/4t) T_j (exp(-|x|^2/4t) p) = T_j p - x_j p / (2t). Throws for t = 0.
Polynomial gaussian_conjugate_apply(const DunklContext& ctx, std::size_t axis, const Rational& t,
                                    const Polynomial& p);

}  // namespace dunkl
