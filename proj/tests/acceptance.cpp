// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include "dunkl/appell.hpp"
#include "dunkl/kernel.hpp"
#include "dunkl/verify.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace dunkl;

namespace {

struct Config {
  std::string label;
  std::vector<Rational> k;
};

const std::vector<Config> kConfigs = {
    {"Z2^2", {Rational(1, 2), Rational(2)}},
    {"A2", {Rational(3, 4)}},
    {"B2", {Rational(1), Rational(1, 2)}},
    {"D3", {Rational(2)}},
};
const std::vector<Rational> kTs = {Rational(1, 4), Rational(1, 2), Rational(2)};

DunklContext context(const std::string& label, std::vector<Rational> k) {
  RootSystem rs = parse_group_label(label);
  if (k.size() == 1) k.assign(root_orbits(rs).size(), k.front());
  Multiplicity m(rs, k);
  return DunklContext(std::move(rs), std::move(m));
}

struct Outcome {
  bool passed = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.passed) ++failures;
  std::printf("%s  %2d  %s  [%s; %.1fs]\n", o.passed ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
}

// Runs the named suites over every reference configuration.
Outcome suites_everywhere(const std::vector<std::string>& names, unsigned degree) {
  VerifyConfig cfg;
  cfg.max_degree = degree;
  cfg.ts = kTs;
  std::size_t checks = 0;
  Outcome out;
  for (const auto& c : kConfigs) {
    const DunklContext ctx = context(c.label, c.k);
    for (const auto& r : run_suites(ctx, names, cfg)) {
      checks += r.checks;
      if (!r.passed && out.passed) {
        out.passed = false;
        out.detail = c.label + " " + r.suite + ": " + r.counterexamples.front() + "; ";
      }
    }
  }
  out.detail += std::to_string(checks) + " exact checks";
  return out;
}

Polynomial classical_character(std::size_t rank, const MultiIndex& nu, const Rational& t) {
  Polynomial out = Polynomial::constant(rank, 1);
  for (std::size_t i = 0; i < rank; ++i) {
    const unsigned n = nu[i];
    Polynomial f(rank);
    for (unsigned j = 0; 2 * j <= n; ++j) {
      std::vector<unsigned> e(rank, 0);
      e[i] = n - 2 * j;
      const Rational c = (j % 2 ? -1 : 1) * factorial(n) / (factorial(j) * factorial(n - 2 * j)) *
                         pow(t, static_cast<int>(j));
      f.add_term(MultiIndex(e), c);
    }
    out = out * f;
  }
  return out;
}

}  // namespace

int main() {
  criterion(1, "biorthogonality of Appell characters and cocharacters, |nu|,|rho| <= 5",
            [] { return suites_everywhere({"biorthogonality"}, 5); });

  criterion(2, "Macdonald formula for the pairing, degrees <= 5, cross-degree vanishing",
            [] { return suites_everywhere({"macdonald"}, 5); });

  criterion(3, "pairing table [x^nu, m_rho]_k = nu! delta, |nu|,|rho| <= 4",
            [] { return suites_everywhere({"pairing"}, 4); });

  criterion(4, "Rodriguez formula and equality of the two character routes, |nu| <= 4",
            [] { return suites_everywhere({"rodriguez"}, 4); });

  criterion(5, "character and cocharacter recursions, |nu| <= 4",
            [] { return suites_everywhere({"recursions"}, 5); });

  criterion(6, "k = 0 characters are classical Hermite polynomials, |nu| <= 6, N <= 3", [] {
    Outcome out;
    std::size_t checks = 0;
    for (const char* label : {"Z2", "Z2^2", "Z2^3", "A1", "A2", "B2", "B3", "D3"}) {
      const DunklContext ctx = context(label, {Rational(0)});
      for (const auto& t : kTs) {
        for (const auto& nu : monomials_up_to_degree(ctx.rank(), 6)) {
          ++checks;
          if (appell_character(ctx, nu, t) != classical_character(ctx.rank(), nu, t) && out.passed) {
            out = {false, std::string(label) + " nu=" + nu.label() + " t=" + to_string(t) + "; "};
          }
        }
      }
    }
    out.detail += std::to_string(checks) + " exact checks";
    return out;
  });

  criterion(7, "rank-one Appell characters are Laguerre polynomials, n <= 4", [] {
    Outcome out;
    std::size_t checks = 0;
    std::string constants;
    for (const Rational k : {Rational(0), Rational(1, 2), Rational(1), Rational(5, 2)}) {
      const DunklContext ctx = context("Z2", {k});
      for (const auto& t : kTs) {
        for (unsigned m = 0; m <= 9; ++m) {
          const LaguerreComparison c = laguerre_structure(ctx, m, t);
          ++checks;
          if (!c.proportional && out.passed) out = {false, "k=" + to_string(k) + " m=" + std::to_string(m) + "; "};
          if (sgn(k) == 0 && c.constant != c.unit_weight_constant && out.passed) {
            out = {false, "k=0 constant differs from (-4)^n n! at m=" + std::to_string(m) + "; "};
          }
        }
      }
      if (k == 1) {
        for (unsigned m = 2; m <= 3; ++m) {
          const LaguerreComparison c = laguerre_structure(ctx, m, Rational(1, 2));
          if (!constants.empty()) constants += ";";
          constants += " C(m=" + std::to_string(m) + ",k=1)=" + to_string(c.constant) +
                       " vs k=0 value " + to_string(c.unit_weight_constant);
        }
      }
    }
    out.detail += std::to_string(checks) + " exact checks; constants depend on k:" + constants;
    return out;
  });

  criterion(8, "intertwining T_i V = V d_i, V V^-1 = id, T_i T_j = T_j T_i, degree <= 6",
            [] { return suites_everywhere({"intertwining", "commutativity"}, 6); });

  criterion(9, "Z2^N Gaussian moments equal prod (4t)^mu_i (k_i + 1/2)_mu_i, |mu| <= 4", [] {
    Outcome out;
    std::size_t checks = 0;
    const std::vector<Config> z2 = {{"Z2^2", {Rational(1, 2), Rational(2)}},
                                    {"Z2^3", {Rational(0), Rational(3, 4), Rational(5, 2)}},
                                    {"Z2", {Rational(1, 3)}}};
    for (const auto& c : z2) {
      const DunklContext ctx = context(c.label, c.k);
      for (const auto& t : kTs) {
        for (const auto& mu : monomials_up_to_degree(ctx.rank(), 4)) {
          std::vector<unsigned> doubled;
          Rational want = 1;
          for (std::size_t i = 0; i < ctx.rank(); ++i) {
            doubled.push_back(2 * mu[i]);
            want *= pow(4 * t, static_cast<int>(mu[i])) * pochhammer(c.k[i] + Rational(1, 2), mu[i]);
          }
          ++checks;
          const Rational got =
              gaussian_integrate(ctx, Polynomial::monomial(MultiIndex(doubled)), GaussianSpec::centered(t));
          if (got != want && out.passed) {
            out = {false, c.label + " mu=" + mu.label() + ": " + to_string(got) + " vs " + to_string(want) + "; "};
          }
        }
      }
    }
    out.detail += std::to_string(checks) + " exact checks";
    return out;
  });

  criterion(10, "mean of R_nu(t,.) under P_t(x,.) is m_nu(x); integral against P_t(x,.) is exp(t Delta_k)",
            [] { return suites_everywhere({"heat"}, 4); });

  criterion(11, "numeric kernel vs rank-one closed form on a 9x9 grid, |K(ix,y)| <= 1, bound dominates error", [] {
    Outcome out;
    double worst_rel = 0.0, worst_modulus = 0.0, worst_ratio = 0.0;
    NumericEvalConfig abs_cfg;
    abs_cfg.relative = false;
    abs_cfg.tolerance = 1e-13;
    for (const Rational k : {Rational(0), Rational(1, 2), Rational(1), Rational(5, 2)}) {
      const DunklContext ctx = context("Z2", {k});
      for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < 9; ++j) {
          const double x[1] = {-4.0 + i}, y[1] = {-4.0 + j};
          const KernelValue v = kernel_eval(ctx, x, y);
          const double closed = kernel_z2_closed(k.get_d(), x[0], y[0]);
          const double err = std::abs(v.value - closed);
          const double rel = err / std::abs(closed);
          worst_rel = std::max(worst_rel, rel);
          const double allowed = v.error_bound + std::numeric_limits<double>::epsilon() * std::abs(closed);
          worst_ratio = std::max(worst_ratio, err / allowed);
          const KernelValue w = kernel_eval_imaginary(ctx, x, y, abs_cfg);
          const double modulus = std::hypot(w.value, w.imag);
          worst_modulus = std::max(worst_modulus, modulus);
          if ((rel > 1e-10 || err > allowed || modulus > 1.0 + 1e-12) && out.passed) {
            std::ostringstream s;
            s << "k=" << to_string(k) << " x=" << x[0] << " y=" << y[0] << " rel=" << rel << " |K(ix,y)|=" << modulus
              << "; ";
            out = {false, s.str()};
          }
        }
      }
    }
    std::ostringstream s;
    s << "324 points, max rel error " << worst_rel << ", max |K(ix,y)| " << worst_modulus
      << ", max error/bound " << worst_ratio;
    out.detail += s.str();
    return out;
  });

  criterion(12, "heat kernel: k = 0 classical form to 1e-10; Z2 normalization to 1e-6", [] {
    Outcome out;
    double worst_classical = 0.0, worst_norm = 0.0;
    for (const char* label : {"Z2", "Z2^2", "Z2^3", "A2", "B2"}) {
      const DunklContext ctx = context(label, {Rational(0)});
      const std::size_t n = ctx.rank();
      for (double t : {0.25, 0.5, 2.0}) {
        std::vector<double> x, y;
        for (std::size_t i = 0; i < n; ++i) {
          x.push_back(0.7 - 0.45 * i);
          y.push_back(-0.4 + 0.8 * i);
        }
        double d2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) d2 += (x[i] - y[i]) * (x[i] - y[i]);
        const double want = std::pow(4 * std::numbers::pi * t, -0.5 * n) * std::exp(-d2 / (4 * t));
        const double got = heat_kernel_eval(ctx, x, y, t).value;
        worst_classical = std::max(worst_classical, std::abs(got - want) / want);
      }
    }
    if (worst_classical > 1e-10) out = {false, "k=0 heat kernel off; "};

    NumericEvalConfig quad;
    quad.c_k_mode = CkMode::quadrature;
    const std::vector<Config> z2 = {{"Z2", {Rational(1)}},
                                    {"Z2^2", {Rational(1, 2), Rational(2)}},
                                    {"Z2^3", {Rational(1, 3), Rational(1), Rational(5, 2)}}};
    for (const auto& c : z2) {
      const DunklContext ctx = context(c.label, c.k);
      const double closed = c_k_constant(ctx);
      worst_norm = std::max(worst_norm, std::abs(c_k_constant(ctx, quad) - closed) / closed);
    }
    // Mass of Gamma_k(x, ., t) w_k in rank one.
    const DunklContext one = context("Z2", {Rational(3, 2)});
    for (double xv : {0.0, 0.8, -1.5}) {
      auto density = [&](double y) {
        const double xs[1] = {xv}, ys[1] = {y};
        return heat_kernel_eval(one, xs, ys, 0.5).value * std::pow(std::abs(y), 3.0);
      };
      const double mass =
          boost::math::quadrature::gauss_kronrod<double, 61>::integrate(density, -14.0, 14.0, 10, 1e-12);
      worst_norm = std::max(worst_norm, std::abs(mass - 1.0));
    }
    if (worst_norm > 1e-6 && out.passed) out = {false, "normalization off; "};
    std::ostringstream s;
    s << "max rel error vs classical " << worst_classical << ", max normalization defect " << worst_norm;
    out.detail += s.str();
    return out;
  });

  std::printf("%s: %d of 12 criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
