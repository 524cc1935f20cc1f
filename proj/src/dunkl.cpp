#include "dunkl/dunkl.hpp"

#include <stdexcept>

namespace dunkl {

namespace {

void check_input(const DunklContext& ctx, const Polynomial& p) {
  if (p.rank() != ctx.rank()) throw std::invalid_argument("polynomial rank does not match the root system");
}

void check_axis(const DunklContext& ctx, std::size_t axis) {
  if (axis >= ctx.rank()) throw std::out_of_range("Dunkl operator axis out of range");
}

std::vector<Polynomial> images_of_monomial(const DunklContext& ctx, const MultiIndex& nu) {
  const std::size_t n = ctx.rank();
  const Polynomial mono = Polynomial::monomial(nu);
  std::vector<Polynomial> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(partial_derivative(mono, i));

  for (const auto& term : ctx.positive_terms()) {
    if (sgn(term.k) == 0) continue;
    Polynomial numerator = mono - substitute_linear(mono, term.reflection);
    if (numerator.is_zero()) continue;
    Polynomial quotient;
    try {
      quotient = divide_exact_by_linear_form(numerator, term.alpha);
    } catch (const NotDivisibleError& e) {
      throw std::logic_error(std::string("internal invariant violated in Dunkl difference quotient: ") + e.what());
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(term.alpha[i]) != 0) out[i] += quotient * Rational(term.k * term.alpha[i]);
    }
  }
  return out;
}

}  // namespace

Polynomial dunkl_apply(const DunklContext& ctx, std::size_t axis, const Polynomial& p) {
  check_input(ctx, p);
  check_axis(ctx, axis);
  Polynomial r(ctx.rank());
  for (const auto& [nu, c] : p.terms()) {
    if (nu.degree() == 0) continue;
    auto images = ctx.monomial_images(nu, [&] { return images_of_monomial(ctx, nu); });
    const Polynomial& img = (*images)[axis];
    for (const auto& [mu, d] : img.terms()) r.add_term(mu, c * d);
  }
  return r;
}

Polynomial laplacian_apply(const DunklContext& ctx, const Polynomial& p) {
  check_input(ctx, p);
  Polynomial r(ctx.rank());
  for (std::size_t j = 0; j < ctx.rank(); ++j) r += dunkl_apply(ctx, j, dunkl_apply(ctx, j, p));
  return r;
}

Polynomial heat_apply(const DunklContext& ctx, const Rational& t, const Polynomial& p) {
  check_input(ctx, p);
  Polynomial result = p;
  Polynomial power = p;  // Delta^j p
  Rational coef = 1;     // t^j / j!
  for (unsigned j = 1; !power.is_zero(); ++j) {
    power = laplacian_apply(ctx, power);
    coef *= t;
    coef /= j;
    if (power.is_zero() || sgn(coef) == 0) break;
    result += power * coef;
  }
  return result;
}

Polynomial dunkl_power_apply(const DunklContext& ctx, const MultiIndex& nu, const Polynomial& p) {
  check_input(ctx, p);
  if (nu.rank() != ctx.rank()) throw std::invalid_argument("multi-index rank does not match the root system");
  Polynomial r = p;
  for (std::size_t i = 0; i < nu.rank(); ++i) {
    for (unsigned e = 0; e < nu[i] && !r.is_zero(); ++e) r = dunkl_apply(ctx, i, r);
  }
  return r;
}

Polynomial adjoint_apply(const DunklContext& ctx, std::size_t axis, const Polynomial& p) {
  check_input(ctx, p);
  check_axis(ctx, axis);
  return Polynomial::variable(ctx.rank(), axis) * p - dunkl_apply(ctx, axis, p);
}

Polynomial gaussian_conjugate_apply(const DunklContext& ctx, std::size_t axis, const Rational& t,
                                    const Polynomial& p) {
  if (sgn(t) == 0) throw std::invalid_argument("Gaussian conjugation needs t != 0");
  check_input(ctx, p);
  check_axis(ctx, axis);
  const Rational scale = Rational(1) / (2 * t);
  return dunkl_apply(ctx, axis, p) - Polynomial::variable(ctx.rank(), axis) * p * scale;
}

}  // namespace dunkl
