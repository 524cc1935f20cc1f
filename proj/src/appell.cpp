#include "dunkl/appell.hpp"

#include "dunkl/dunkl.hpp"
#include "dunkl/intertwine.hpp"

#include <map>
#include <stdexcept>

namespace dunkl {

namespace {

void require_nonzero(const Rational& t) {
  if (sgn(t) == 0) throw std::invalid_argument("t must be nonzero");
}

void require_positive(const Rational& t) {
  if (sgn(t) <= 0) throw std::invalid_argument("integration against a k-Gaussian needs t > 0");
}

// m_rho for every rho <= nu, computed once per call.
class MomentTable {
 public:
  explicit MomentTable(const DunklContext& ctx) : ctx_(ctx) {}
  const Polynomial& operator()(const MultiIndex& rho) {
    auto it = table_.find(rho);
    if (it == table_.end()) it = table_.emplace(rho, moment_function(ctx_, rho)).first;
    return it->second;
  }

 private:
  const DunklContext& ctx_;
  std::map<MultiIndex, Polynomial> table_;
};

Polynomial character_from_moments(const MultiIndex& nu, const Rational& t, const ALambdaFn& coefficients,
                                  MomentTable& moments) {
  Polynomial r(nu.rank());
  for (const auto& rho : sub_indices(nu)) {
    const Rational a = coefficients(nu - rho, t);
    if (sgn(a) == 0) continue;
    r += moments(rho) * Rational(nu.binomial(rho) * a);
  }
  return r;
}

}  // namespace

Rational a_lambda(const MultiIndex& lambda, const Rational& t) {
  if (!lambda.is_even()) return 0;
  Rational v = 1;
  unsigned half_degree = 0;
  for (std::size_t i = 0; i < lambda.rank(); ++i) {
    const unsigned mu = lambda[i] / 2;
    v *= factorial(lambda[i]) / factorial(mu);
    half_degree += mu;
  }
  return v * pow(Rational(-t), static_cast<int>(half_degree));
}

Polynomial appell_character(const DunklContext& ctx, const MultiIndex& nu, const Rational& t) {
  return appell_character(ctx, nu, t, a_lambda);
}

Polynomial appell_character(const DunklContext& ctx, const MultiIndex& nu, const Rational& t,
                            const ALambdaFn& coefficients) {
  if (nu.rank() != ctx.rank()) throw std::invalid_argument("multi-index rank does not match the root system");
  MomentTable moments(ctx);
  return character_from_moments(nu, t, coefficients, moments);
}

Polynomial appell_character_heat(const DunklContext& ctx, const MultiIndex& nu, const Rational& t) {
  return heat_apply(ctx, -t, moment_function(ctx, nu));
}

Polynomial appell_cocharacter(const DunklContext& ctx, const MultiIndex& nu, const Rational& t) {
  require_nonzero(t);
  const Rational scale = pow(Rational(1) / (2 * t), static_cast<int>(nu.degree()));
  return heat_apply(ctx, -t, Polynomial::monomial(nu)) * scale;
}

Polynomial rodriguez_cocharacter(const DunklContext& ctx, const MultiIndex& nu, const Rational& t) {
  require_nonzero(t);
  if (nu.rank() != ctx.rank()) throw std::invalid_argument("multi-index rank does not match the root system");
  Polynomial p = Polynomial::constant(ctx.rank(), 1);
  for (std::size_t i = 0; i < nu.rank(); ++i) {
    for (unsigned e = 0; e < nu[i]; ++e) p = gaussian_conjugate_apply(ctx, i, t, p);
  }
  if (nu.degree() % 2 == 1) p = -p;
  return p;
}

Rational gaussian_moment(const DunklContext& ctx, const MultiIndex& nu, const GaussianSpec& spec) {
  require_positive(spec.t);
  if (spec.center.empty()) return a_lambda(nu, -spec.t);
  if (spec.center.size() != ctx.rank()) throw std::invalid_argument("center has wrong dimension");
  Rational sum = 0;
  for (const auto& rho : sub_indices(nu)) {
    const Rational a = a_lambda(rho, -spec.t);
    if (sgn(a) == 0) continue;
    sum += nu.binomial(rho) * a * evaluate(moment_function(ctx, nu - rho), spec.center);
  }
  return sum;
}

Rational gaussian_integrate(const DunklContext& ctx, const Polynomial& p, const GaussianSpec& spec) {
  require_positive(spec.t);
  Rational sum = 0;
  if (spec.center.empty()) {
    for (const auto& [nu, c] : taylor_coefficients(ctx, p)) {
      if (nu.is_even()) sum += c * a_lambda(nu, -spec.t);
    }
    return sum;
  }
  return evaluate(gaussian_integrate_in_center(ctx, p, spec.t), spec.center);
}

Polynomial gaussian_integrate_in_center(const DunklContext& ctx, const Polynomial& p, const Rational& t) {
  require_positive(t);
  MomentTable moments(ctx);
  Polynomial r(ctx.rank());
  for (const auto& [nu, c] : taylor_coefficients(ctx, p)) {
    for (const auto& rho : sub_indices(nu)) {
      const Rational a = a_lambda(rho, -t);
      if (sgn(a) == 0) continue;
      r += moments(nu - rho) * Rational(c * nu.binomial(rho) * a);
    }
  }
  return r;
}

Rational pairing(const DunklContext& ctx, const Polynomial& p, const Polynomial& q) {
  if (p.rank() != q.rank() || p.rank() != ctx.rank()) throw std::invalid_argument("pairing rank mismatch");
  Rational sum = 0;
  std::map<unsigned, Polynomial> components;
  for (const auto& [mu, c] : p.terms()) {
    const unsigned d = mu.degree();
    auto it = components.find(d);
    if (it == components.end()) it = components.emplace(d, homogeneous_component(q, d)).first;
    if (it->second.is_zero()) continue;
    sum += c * dunkl_power_apply(ctx, mu, it->second).coefficient(MultiIndex(ctx.rank()));
  }
  return sum;
}

std::pair<Rational, Rational> macdonald_identity_check(const DunklContext& ctx, const Polynomial& p,
                                                       const Polynomial& q, const Rational& t) {
  require_positive(t);
  if (!p.is_homogeneous() || !q.is_homogeneous()) {
    throw std::invalid_argument("Macdonald check is defined for homogeneous polynomials only");
  }
  const Rational lhs = pairing(ctx, p, q);
  const Polynomial integrand = heat_apply(ctx, -t, p) * heat_apply(ctx, -t, q);
  const Rational integral = gaussian_integrate(ctx, integrand, GaussianSpec::centered(t));
  if (p.degree() != q.degree() && !p.is_zero() && !q.is_zero()) return {lhs, integral};
  const int n = std::max(p.degree(), 0);
  return {lhs, integral / pow(Rational(2 * t), n)};
}

std::vector<Polynomial> pairing_orthogonal_basis(const DunklContext& ctx, unsigned n_max) {
  std::vector<Polynomial> out;
  for (unsigned d = 0; d <= n_max; ++d) {
    std::vector<Polynomial> block;
    std::vector<Rational> norms;
    for (const auto& mu : monomials_of_degree(ctx.rank(), d)) {
      const Polynomial v = Polynomial::monomial(mu);
      Polynomial phi = v;
      for (std::size_t j = 0; j < block.size(); ++j) {
        const Rational proj = pairing(ctx, v, block[j]) / norms[j];
        if (sgn(proj) != 0) phi -= block[j] * proj;
      }
      norms.push_back(pairing(ctx, phi, phi));
      block.push_back(std::move(phi));
    }
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::vector<Polynomial> hermite_basis(const DunklContext& ctx, unsigned n_max, const Rational& t) {
  require_positive(t);
  std::vector<Polynomial> out;
  for (const auto& phi : pairing_orthogonal_basis(ctx, n_max)) out.push_back(heat_apply(ctx, -t, phi));
  return out;
}

RecursionSides character_recursion_check(const DunklContext& ctx, const MultiIndex& nu, std::size_t axis,
                                         const Rational& t) {
  const MultiIndex up = nu + MultiIndex::unit(ctx.rank(), axis);
  const Rational half(1, 2);
  RecursionSides s;
  s.character_lhs = dunkl_apply(ctx, axis, appell_character(ctx, up, t));
  s.character_rhs = appell_character(ctx, nu, t) * Rational(nu[axis] + 1);
  s.cocharacter_lhs = appell_cocharacter(ctx, up, half);
  s.cocharacter_rhs = adjoint_apply(ctx, axis, appell_cocharacter(ctx, nu, half));
  return s;
}

Polynomial laguerre(unsigned n, const Rational& alpha) {
  Polynomial l(1);
  for (unsigned j = 0; j <= n; ++j) {
    Rational c = binomial(Rational(n + alpha), n - j) / factorial(j);
    if (j % 2 == 1) c = -c;
    l.add_term(MultiIndex{j}, c);
  }
  return l;
}

LaguerreComparison laguerre_structure(const DunklContext& ctx, unsigned m, const Rational& t) {
  if (ctx.rank() != 1) throw std::invalid_argument("Laguerre structure applies to rank-one groups only");
  require_nonzero(t);
  const Rational k = ctx.multiplicity().values().front();
  const unsigned n = m / 2;
  const bool odd = m % 2 == 1;
  const Polynomial lag = laguerre(n, odd ? Rational(k + Rational(1, 2)) : Rational(k - Rational(1, 2)));

  LaguerreComparison c;
  c.index = m;
  c.character = appell_character(ctx, MultiIndex{m}, t);
  c.laguerre_form = Polynomial(1);
  // t^n L(x^2/4t) [* x]: the y^j coefficient lands on x^{2j (+1)} with t^{n-j}/4^j.
  for (const auto& [nu, coef] : lag.terms()) {
    const unsigned j = nu[0];
    const Rational scale = pow(t, static_cast<int>(n) - static_cast<int>(j)) / pow(Rational(4), static_cast<int>(j));
    c.laguerre_form.add_term(MultiIndex{2 * j + (odd ? 1u : 0u)}, coef * scale);
  }
  const Rational lead_char = c.character.coefficient(MultiIndex{m});
  const Rational lead_form = c.laguerre_form.coefficient(MultiIndex{m});
  c.constant = lead_char / lead_form;
  c.unit_weight_constant = pow(Rational(-4), static_cast<int>(n)) * factorial(n);
  c.proportional = c.character == c.laguerre_form * c.constant;
  return c;
}

AppellTables build_appell_tables(const DunklContext& ctx, unsigned max_degree, const Rational& t) {
  require_nonzero(t);
  AppellTables tables;
  tables.max_degree = max_degree;
  tables.t = t;
  tables.indices = monomials_up_to_degree(ctx.rank(), max_degree);
  MomentTable moments(ctx);
  const ALambdaFn coefficients = a_lambda;
  for (const auto& nu : tables.indices) {
    tables.characters.push_back(character_from_moments(nu, t, coefficients, moments));
    tables.cocharacters.push_back(appell_cocharacter(ctx, nu, t));
  }
  return tables;
}

}  // namespace dunkl
