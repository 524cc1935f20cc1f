#include "dunkl/kernel.hpp"
#include "support.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace dunkl;
using testing::make_context;

namespace {

// Mehta's integral: int exp(-|x|^2) prod_{i<j} |x_i - x_j|^{2k} dx over R^N
// = pi^{N/2} 2^{-k N(N-1)/2} prod_{j=1}^N Gamma(1 + j k) / Gamma(1 + k).
double mehta(std::size_t n, double k) {
  double v = std::pow(std::numbers::pi, n / 2.0) * std::pow(2.0, -k * n * (n - 1) / 2.0);
  for (std::size_t j = 1; j <= n; ++j) v *= std::tgamma(1 + j * k) / std::tgamma(1 + k);
  return v;
}

}  // namespace

TEST_CASE("k = 0 kernel is the exponential") {
  const DunklContext one = make_context("Z2", {0});
  for (double x : {-3.0, -0.5, 0.0, 1.0, 2.5}) {
    const double xs[1] = {x}, ys[1] = {1.3};
    const KernelValue v = kernel_eval(one, xs, ys);
    CHECK(std::abs(v.value - std::exp(1.3 * x)) <= v.error_bound + 1e-15 * std::exp(1.3 * x));
  }
  const DunklContext a2 = make_context("A2", {0});
  const double x[3] = {0.4, -1.0, 0.9}, y[3] = {1.1, 0.3, -0.7};
  const double want = std::exp(0.44 - 0.3 - 0.63);
  CHECK(kernel_eval(a2, x, y).value == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("series kernel matches the rank-one closed form") {
  for (double k : {0.0, 0.5, 1.0, 2.5, 1.0 / 3.0}) {
    Rational kq;
    kq = k;
    const DunklContext ctx = make_context("Z2", {kq});
    for (double x : {-4.0, -1.5, 0.25, 3.0}) {
      for (double y : {-4.0, -0.5, 2.0, 4.0}) {
        const double xs[1] = {x}, ys[1] = {y};
        const KernelValue v = kernel_eval(ctx, xs, ys);
        const double closed = kernel_z2_closed(k, x, y);
        CHECK(std::abs(v.value - closed) <= v.error_bound + 2e-16 * std::abs(closed));
        CHECK(std::abs(v.value - closed) <= 1e-11 * std::abs(closed));
      }
    }
  }
  CHECK(kernel_z2_closed(0, 1, 1) == doctest::Approx(std::numbers::e).epsilon(1e-15));
}

TEST_CASE("Z2^N kernel factors over the axes") {
  const DunklContext ctx = make_context("Z2^2", {Rational(1, 2), 2});
  const double x[2] = {1.2, -2.0}, y[2] = {-0.7, 1.5};
  const double want = kernel_z2_closed(0.5, 1.2, -0.7) * kernel_z2_closed(2.0, -2.0, 1.5);
  CHECK(kernel_eval(ctx, x, y).value == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("imaginary argument stays in the unit disc") {
  const DunklContext ctx = make_context("B2", {1, Rational(1, 2)});
  NumericEvalConfig cfg;
  cfg.relative = false;
  cfg.tolerance = 1e-13;
  const double x[2] = {1.5, -2.0}, y[2] = {2.0, 1.0};
  const KernelValue v = kernel_eval_imaginary(ctx, x, y, cfg);
  CHECK(std::hypot(v.value, v.imag) <= 1.0);
  // k = 0 in rank one: K(ix, y) = exp(ixy).
  const DunklContext one = make_context("Z2", {0});
  const double a[1] = {1.7}, b[1] = {-2.2};
  const KernelValue w = kernel_eval_imaginary(one, a, b, cfg);
  CHECK(w.value == doctest::Approx(std::cos(1.7 * -2.2)).epsilon(1e-12));
  CHECK(w.imag == doctest::Approx(std::sin(1.7 * -2.2)).epsilon(1e-12));
}

TEST_CASE("normalization constant against closed forms") {
  for (double k : {0.0, 0.5, 0.75, 1.0, 1.5}) {
    Rational kq;
    kq = k;
    for (std::size_t n : {2u, 3u}) {
      CAPTURE(k);
      CAPTURE(n);
      const DunklContext ctx = make_context(n == 2 ? "A1" : "A2", {kq});
      CHECK(c_k_constant(ctx) * mehta(n, k) == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
  // B2 with k = (1, 1/2): Gamma(4)/2 * 2/3 = 2 by direct polar integration.
  CHECK(c_k_constant(make_context("B2", {1, Rational(1, 2)})) == doctest::Approx(0.5).epsilon(1e-10));

  NumericEvalConfig quad;
  quad.c_k_mode = CkMode::quadrature;
  const DunklContext z = make_context("Z2^3", {Rational(1, 2), 2, Rational(1, 3)});
  CHECK(c_k_constant(z, quad) == doctest::Approx(c_k_constant(z)).epsilon(1e-9));
  NumericEvalConfig closed;
  closed.c_k_mode = CkMode::closed_form;
  CHECK_THROWS(c_k_constant(make_context("A2", {1}), closed));
}

TEST_CASE("k = 0 heat kernel is the Gaussian") {
  const DunklContext ctx = make_context("Z2^2", {0});
  const double x[2] = {0.3, -1.2}, y[2] = {1.0, 0.5};
  const double t = 0.7;
  const double d2 = std::pow(0.3 - 1.0, 2) + std::pow(-1.2 - 0.5, 2);
  const double want = std::exp(-d2 / (4 * t)) / (4 * std::numbers::pi * t);
  CHECK(heat_kernel_eval(ctx, x, y, t).value == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("rank-one heat kernel is a probability density with the right variance") {
  // int Gamma_k(x, y, t) w_k(y) dy = 1 and int y^2 Gamma_k(x, y, t) w_k(y) dy = x^2 + 2t(1 + 2k).
  const double k = 1.0, t = 0.5, x = 0.7;
  const DunklContext ctx = make_context("Z2", {1});
  auto density = [&](double y) {
    const double xs[1] = {x}, ys[1] = {y};
    return heat_kernel_eval(ctx, xs, ys, t).value * std::pow(std::abs(y), 2 * k);
  };
  using boost::math::quadrature::gauss_kronrod;
  const double mass = gauss_kronrod<double, 61>::integrate(density, -12.0, 12.0, 12, 1e-12);
  const double second =
      gauss_kronrod<double, 61>::integrate([&](double y) { return y * y * density(y); }, -12.0, 12.0, 12, 1e-12);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(second == doctest::Approx(x * x + 2 * t * (1 + 2 * k)).epsilon(1e-9));
}

TEST_CASE("density theta") {
  const DunklContext ctx = make_context("B2", {1, Rational(1, 2)});
  const double zero[2] = {0, 0}, y[2] = {1.5, -0.3};
  CHECK(density_theta(ctx, 0.5, zero, y).value == doctest::Approx(1.0).epsilon(1e-15));
  const DunklContext one = make_context("Z2", {0});
  const double a[1] = {0.8}, b[1] = {-1.1};
  // k = 0: exp(-x^2/4t + x y / 2t).
  CHECK(density_theta(one, 0.25, a, b).value == doctest::Approx(std::exp(-0.64 - 0.8 * 1.1 * 2)).epsilon(1e-12));
}

TEST_CASE("bound checks hold on the reference configurations") {
  for (const auto& ref : testing::reference_configs()) {
    CAPTURE(ref.label);
    const DunklContext ctx = make_context(ref.label, ref.k);
    std::vector<KernelSample> samples;
    const std::size_t n = ctx.rank();
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    for (int i = 0; i < 2; ++i) {
      KernelSample s;
      for (std::size_t j = 0; j < n; ++j) {
        s.x.push_back(coord(rng));
        s.y.push_back(coord(rng));
      }
      samples.push_back(s);
    }
    const BoundCheckReport r = kernel_bound_checks(ctx, samples);
    CHECK(r.ok());
    CHECK(r.checks > 0);
    CHECK(r.max_imaginary_modulus <= 1.0 + 1e-12);
  }
}

TEST_CASE("numeric configuration errors") {
  const DunklContext ctx = make_context("Z2", {1});
  const double x[1] = {20}, y[1] = {20};
  NumericEvalConfig small;
  small.max_degree = 10;
  CHECK_THROWS_AS(kernel_eval(ctx, x, y, small), CapExceededError);
  NumericEvalConfig bad;
  bad.tolerance = 0;
  CHECK_THROWS(kernel_eval(ctx, x, y, bad));
  const double two[2] = {1, 2};
  CHECK_THROWS(kernel_eval(ctx, two, y));
  CHECK_THROWS(heat_kernel_eval(ctx, x, y, 0.0));
}

TEST_CASE("orbit recursion blocks agree with exact moment blocks") {
  for (const auto& ref : testing::reference_configs()) {
    CAPTURE(ref.label);
    const DunklContext ctx = make_context(ref.label, ref.k);
    std::vector<double> x, y;
    for (std::size_t i = 0; i < ctx.rank(); ++i) {
      x.push_back(0.9 - 0.7 * i);
      y.push_back(-1.3 + 0.6 * i);
    }
    const auto fast = kernel_blocks(ctx, x, y, 7);
    const auto exact = kernel_blocks_exact(ctx, x, y, 7);
    for (std::size_t d = 0; d < fast.size(); ++d) {
      CAPTURE(d);
      CHECK(fast[d] == doctest::Approx(exact[d]).epsilon(1e-13).scale(1e-300));
    }
  }
}

TEST_CASE("rank-one heat kernel against its Dunkl-transform integral") {
  // Gamma_k(x, y, t) = c_k^2 / 4^{gamma + 1/2} int exp(-t xi^2) K(ix, xi) K(-iy, xi) |xi|^{2k} dxi.
  const double k = 1.5, t = 0.5;
  const DunklContext ctx = make_context("Z2", {Rational(3, 2)});
  NumericEvalConfig abs_cfg;
  abs_cfg.relative = false;
  abs_cfg.tolerance = 1e-13;
  const double ck = c_k_constant(ctx);
  using boost::math::quadrature::gauss_kronrod;
  for (auto [x, y] : {std::pair{0.3, -0.8}, std::pair{1.0, 1.0}, std::pair{-1.7, 0.4}}) {
    CAPTURE(x);
    CAPTURE(y);
    auto integrand = [&](double xi) {
      const double a[1] = {x}, b[1] = {-y}, c[1] = {xi};
      const KernelValue kx = kernel_eval_imaginary(ctx, a, c, abs_cfg);
      const KernelValue ky = kernel_eval_imaginary(ctx, b, c, abs_cfg);
      const double re = kx.value * ky.value - kx.imag * ky.imag;
      return std::exp(-t * xi * xi) * re * std::pow(std::abs(xi), 2 * k);
    };
    const double integral = gauss_kronrod<double, 61>::integrate(integrand, -12.0, 12.0, 10, 1e-12);
    const double transform = ck * ck / std::pow(4.0, k + 0.5) * integral;
    const double xs[1] = {x}, ys[1] = {y};
    CHECK(heat_kernel_eval(ctx, xs, ys, t).value == doctest::Approx(transform).epsilon(1e-6));
  }
}
