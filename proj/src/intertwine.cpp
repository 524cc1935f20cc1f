#include "dunkl/intertwine.hpp"

#include "dunkl/dunkl.hpp"

namespace dunkl {

namespace {

std::map<MultiIndex, std::size_t> index_of(const std::vector<MultiIndex>& basis) {
  std::map<MultiIndex, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

std::size_t first_active_axis(const MultiIndex& nu) {
  std::size_t j = 0;
  while (nu[j] == 0) ++j;
  return j;
}

// F(nu, rho) = (T^nu x^rho)(0) for |nu| = |rho| = degree. Recurses one degree
// down through T^nu = T^{nu - e_j} T_j, with j the first axis of nu; the lower
// degree is recovered from the cached V^{-1} by undoing the 1/nu! scaling.
RationalMatrix dunkl_functionals(const DunklContext& ctx, unsigned degree) {
  const std::size_t n = ctx.rank();
  const auto basis = monomials_of_degree(n, degree);
  RationalMatrix f(basis.size(), basis.size());
  if (degree == 0) {
    f(0, 0) = 1;
    return f;
  }

  const auto lower_basis = monomials_of_degree(n, degree - 1);
  const auto lower_idx = index_of(lower_basis);
  const auto lower = v_inverse_matrix(ctx, degree - 1);
  std::vector<Rational> lower_fact;
  for (const auto& mu : lower_basis) lower_fact.push_back(mu.factorial());

  for (std::size_t col = 0; col < basis.size(); ++col) {
    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t j = 0; j < n; ++j) images.push_back(dunkl_apply(ctx, j, Polynomial::monomial(basis[col])));
    for (std::size_t row = 0; row < basis.size(); ++row) {
      const MultiIndex& nu = basis[row];
      const std::size_t j = first_active_axis(nu);
      const std::size_t prev_row = lower_idx.at(nu - MultiIndex::unit(n, j));
      Rational acc = 0;
      for (const auto& [lambda, c] : images[j].terms()) {
        const Rational& entry = (*lower)(prev_row, lower_idx.at(lambda));
        if (sgn(entry) != 0) acc += c * entry;
      }
      f(row, col) = acc * lower_fact[prev_row];
    }
  }
  return f;
}

std::vector<Rational> coefficient_vector(const Polynomial& component, const std::vector<MultiIndex>& basis) {
  std::vector<Rational> v(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) v[i] = component.coefficient(basis[i]);
  return v;
}

Polynomial apply_degreewise(const DunklContext& ctx, const Polynomial& p, bool forward) {
  if (p.rank() != ctx.rank()) throw std::invalid_argument("polynomial rank does not match the root system");
  Polynomial r(ctx.rank());
  const int top = p.degree();
  for (int d = 0; d <= top; ++d) {
    const auto deg = static_cast<unsigned>(d);
    const Polynomial comp = homogeneous_component(p, deg);
    if (comp.is_zero()) continue;
    const auto basis = monomials_of_degree(ctx.rank(), deg);
    const auto m = forward ? v_matrix(ctx, deg) : v_inverse_matrix(ctx, deg);
    const auto image = *m * std::span<const Rational>(coefficient_vector(comp, basis));
    for (std::size_t i = 0; i < basis.size(); ++i) r.add_term(basis[i], image[i]);
  }
  return r;
}

}  // namespace

DunklContext::MatrixPtr v_inverse_matrix(const DunklContext& ctx, unsigned degree) {
  return ctx.degree_matrix(DunklContext::MatrixKind::intertwiner_inverse, degree, [&] {
    RationalMatrix f = dunkl_functionals(ctx, degree);
    const auto basis = monomials_of_degree(ctx.rank(), degree);
    for (std::size_t row = 0; row < basis.size(); ++row) {
      const Rational inv_fact = 1 / basis[row].factorial();
      for (std::size_t col = 0; col < basis.size(); ++col) f(row, col) *= inv_fact;
    }
    return f;
  });
}

DunklContext::MatrixPtr v_matrix(const DunklContext& ctx, unsigned degree) {
  return ctx.degree_matrix(DunklContext::MatrixKind::intertwiner_forward, degree, [&] {
    try {
      return inverse(*v_inverse_matrix(ctx, degree));
    } catch (const SingularMatrixError&) {
      throw InvalidMultiplicityError("invalid multiplicity: intertwining operator is singular in degree " +
                                     std::to_string(degree));
    }
  });
}

DegreeMatrix degree_matrix(const DunklContext& ctx, unsigned degree) {
  return {degree, monomials_of_degree(ctx.rank(), degree), *v_matrix(ctx, degree), *v_inverse_matrix(ctx, degree)};
}

Polynomial apply_v(const DunklContext& ctx, const Polynomial& p) { return apply_degreewise(ctx, p, true); }

Polynomial apply_v_inverse(const DunklContext& ctx, const Polynomial& p) { return apply_degreewise(ctx, p, false); }

Polynomial moment_function(const DunklContext& ctx, const MultiIndex& nu) {
  if (nu.rank() != ctx.rank()) throw std::invalid_argument("multi-index rank does not match the root system");
  return apply_v(ctx, Polynomial::monomial(nu));
}

std::map<MultiIndex, Rational> taylor_coefficients(const DunklContext& ctx, const Polynomial& p) {
  const Polynomial coeffs = apply_v_inverse(ctx, p);
  std::map<MultiIndex, Rational> out;
  for (const auto& [nu, c] : coeffs.terms()) out.emplace(nu, c);
  return out;
}

}  // namespace dunkl
