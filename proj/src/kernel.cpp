#include "dunkl/kernel.hpp"

#include "dunkl/intertwine.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace dunkl {

namespace {

constexpr mp_bitcnt_t kPrecision = 256;
// Relative rounding per term in the 256-bit sums, with generous room for the
// number of operations per term.
const double kSeriesRounding = std::ldexp(1.0, -200);
constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double e : v) s += e * e;
  return std::sqrt(s);
}

std::vector<mpf_class> to_mpf(std::span<const double> v) {
  std::vector<mpf_class> out;
  out.reserve(v.size());
  for (double e : v) out.emplace_back(e, kPrecision);
  return out;
}

mpf_class power(const mpf_class& base, unsigned e) {
  mpf_class r(1, kPrecision);
  mpf_pow_ui(r.get_mpf_t(), base.get_mpf_t(), e);
  return r;
}

mpf_class degree_block(const DunklContext& ctx, const std::vector<mpf_class>& x, const std::vector<mpf_class>& y,
                   unsigned degree) {
  const std::size_t n = ctx.rank();
  const auto basis = monomials_of_degree(n, degree);
  const auto forward = v_matrix(ctx, degree);

  std::vector<mpf_class> xpow, ypow;
  xpow.reserve(basis.size());
  ypow.reserve(basis.size());
  for (const auto& mu : basis) {
    mpf_class xp(1, kPrecision), yp(1, kPrecision);
    for (std::size_t i = 0; i < n; ++i) {
      if (mu[i] == 0) continue;
      xp *= power(x[i], mu[i]);
      yp *= power(y[i], mu[i]);
    }
    mpf_class fact(mu.factorial(), kPrecision);
    xpow.push_back(std::move(xp));
    ypow.push_back(yp / fact);
  }

  mpf_class block(0, kPrecision);
  mpf_class entry(0, kPrecision), moment(0, kPrecision);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    if (sgn(ypow[col]) == 0) continue;
    moment = 0;
    for (std::size_t row = 0; row < basis.size(); ++row) {
      const Rational& c = (*forward)(row, col);
      if (sgn(c) == 0 || sgn(xpow[row]) == 0) continue;
      mpf_set_q(entry.get_mpf_t(), c.get_mpq_t());
      moment += entry * xpow[row];
    }
    block += moment * ypow[col];
  }
  return block;
}

void check_point(const DunklContext& ctx, std::span<const double> x, std::span<const double> y) {
  if (x.size() != ctx.rank() || y.size() != ctx.rank()) {
    throw std::invalid_argument("kernel arguments must have the ambient dimension");
  }
  for (double v : x) {
    if (!std::isfinite(v)) throw std::invalid_argument("kernel argument is not finite");
  }
  for (double v : y) {
    if (!std::isfinite(v)) throw std::invalid_argument("kernel argument is not finite");
  }
}

// Group elements with the left action of each reflection tabulated:
// reflect[a][g] is the index of sigma_a * g. Identity is element 0.
struct GroupTable {
  std::vector<LinearMap> elements;
  std::vector<std::vector<std::size_t>> reflect;
};

const GroupTable& group_table(const RootSystem& rs) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const GroupTable>> memo;
  std::lock_guard lock(mutex);
  auto& slot = memo[rs.label];
  if (!slot) {
    auto table = std::make_shared<GroupTable>();
    table->elements = generate_group(rs).matrices;
    std::map<LinearMap, std::size_t> index;
    for (std::size_t i = 0; i < table->elements.size(); ++i) index.emplace(table->elements[i], i);
    for (const auto& s : rs.reflections) {
      std::vector<std::size_t> row;
      for (const auto& g : table->elements) row.push_back(index.at(s * g));
      table->reflect.push_back(std::move(row));
    }
    slot = std::move(table);
  }
  return *slot;
}

// Degree-n blocks u_n(x) = V(<., y>^n / n!)(x) from the Euler-operator identity
//   sum_i x_i T_i q = n q + sum_{alpha in R+} k(alpha) (q - q o sigma_alpha)
// for homogeneous q of degree n, which gives u_n = A_n^{-1}(<., y> u_{n-1}) with
// A_n = n + sum k(alpha)(1 - sigma_alpha). Tracking u_n on the orbit W x turns
// A_n into a |W| x |W| system, strictly diagonally dominant for n >= 1.
class OrbitSeries {
 public:
  OrbitSeries(const DunklContext& ctx, std::span<const double> x, std::span<const double> y)
      : table_(group_table(ctx.root_system())) {
    const std::size_t n = ctx.rank();
    const std::size_t order = table_.elements.size();
    const auto ym = to_mpf(y);
    for (const auto& term : ctx.positive_terms()) k_.emplace_back(term.k, kPrecision);
    k_sum_ = mpf_class(0, kPrecision);
    for (const auto& k : k_) k_sum_ += k;
    mpf_class coef(0, kPrecision);
    for (const auto& g : table_.elements) {
      mpf_class d(0, kPrecision);
      for (std::size_t i = 0; i < n; ++i) {
        mpf_class gx(0, kPrecision);
        for (std::size_t j = 0; j < n; ++j) {
          if (sgn(g(i, j)) == 0) continue;
          mpf_set_q(coef.get_mpf_t(), g(i, j).get_mpq_t());
          gx += coef * x[j];
        }
        d += gx * ym[i];
      }
      pairing_.push_back(d);
    }
    u_.assign(order, mpf_class(1, kPrecision));
  }

  // Value of the next block; the first call returns the degree-0 block 1.
  const mpf_class& next() {
    if (degree_++ == 0) return u_[0];
    const std::size_t order = u_.size();
    const mpf_class diag = k_sum_ + static_cast<unsigned long>(degree_ - 1);
    std::vector<std::vector<mpf_class>> m(order, std::vector<mpf_class>(order, mpf_class(0, kPrecision)));
    std::vector<mpf_class> rhs(order, mpf_class(0, kPrecision));
    for (std::size_t g = 0; g < order; ++g) {
      m[g][g] = diag;
      for (std::size_t a = 0; a < k_.size(); ++a) m[g][table_.reflect[a][g]] -= k_[a];
      rhs[g] = pairing_[g] * u_[g];
    }
    // Diagonal dominance makes pivoting unnecessary.
    mpf_class f(0, kPrecision);
    for (std::size_t c = 0; c < order; ++c) {
      for (std::size_t r = c + 1; r < order; ++r) {
        if (sgn(m[r][c]) == 0) continue;
        f = m[r][c] / m[c][c];
        for (std::size_t j = c; j < order; ++j) {
          if (sgn(m[c][j]) != 0) m[r][j] -= f * m[c][j];
        }
        rhs[r] -= f * rhs[c];
      }
    }
    for (std::size_t r = order; r-- > 0;) {
      for (std::size_t j = r + 1; j < order; ++j) {
        if (sgn(m[r][j]) != 0) rhs[r] -= m[r][j] * u_[j];
      }
      u_[r] = rhs[r] / m[r][r];
    }
    return u_[0];
  }

  std::size_t group_order() const { return u_.size(); }

 private:
  const GroupTable& table_;
  std::vector<mpf_class> k_;
  mpf_class k_sum_;
  std::vector<mpf_class> pairing_;  // <g x, y>
  std::vector<mpf_class> u_;        // u_n(g x)
  unsigned degree_ = 0;
};

KernelValue sum_series(const DunklContext& ctx, std::span<const double> x, std::span<const double> y,
                       const NumericEvalConfig& cfg, bool imaginary) {
  cfg.validate();
  check_point(ctx, x, y);
  // Slight upward rounding keeps the tail bound an upper bound.
  const double s = norm(x) * norm(y) * (1.0 + 8 * kUnitRoundoff);
  OrbitSeries series(ctx, x, y);
  // Every u_n(g x) is bounded by s^n/n!, and each solve is well conditioned, so
  // the accumulated 256-bit rounding stays far below e^s |W|^2 2^-200.
  const double order = static_cast<double>(series.group_order());
  const double rounding_floor = std::exp(s) * order * order * kSeriesRounding;

  mpf_class re(0, kPrecision), im(0, kPrecision);
  double term = 1.0;  // s^d / d!
  for (unsigned d = 0; d <= cfg.max_degree; ++d) {
    const mpf_class& b = series.next();
    if (!imaginary) {
      re += b;
    } else {
      switch (d % 4) {
        case 0: re += b; break;
        case 1: im += b; break;
        case 2: re -= b; break;
        default: im -= b; break;
      }
    }

    const double next = term * s / (d + 1);
    const double ratio = s / (d + 2);
    term = next;
    if (ratio >= 1.0) continue;
    const double tail = next / (1.0 - ratio);
    const double re_d = re.get_d();
    const double im_d = im.get_d();
    const double rounding = rounding_floor + (std::abs(re_d) + std::abs(im_d)) * kUnitRoundoff;
    const double bound = tail + rounding;
    const double target = cfg.relative ? cfg.tolerance * std::hypot(re_d, im_d) : cfg.tolerance;
    if (bound <= target) return {re_d, im_d, bound, d};
  }
  std::ostringstream msg;
  msg << "kernel series did not reach tolerance " << cfg.tolerance << " within degree " << cfg.max_degree
      << " (|x||y| = " << s << ")";
  throw CapExceededError(msg.str());
}

// ---- quadrature on the unit sphere, split at the reflecting hyperplanes

using boost::math::quadrature::tanh_sinh;

double integrate_piece(const std::function<double(double)>& f, double a, double b, double& error) {
  if (b - a < 1e-15) return 0.0;
  thread_local tanh_sinh<double> integrator(15);
  double err = 0.0, l1 = 0.0;
  const double v = integrator.integrate(f, a, b, 1e-13, &err, &l1);
  error += err;
  return v;
}

std::vector<double> split_points(std::vector<double> cuts, double lo, double hi) {
  cuts.push_back(lo);
  cuts.push_back(hi);
  std::vector<double> out;
  for (double c : cuts) {
    if (c >= lo - 1e-14 && c <= hi + 1e-14) out.push_back(std::clamp(c, lo, hi));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(), [](double a, double b) { return std::abs(a - b) < 1e-14; }), out.end());
  return out;
}

double wrap_angle(double phi) {
  const double two_pi = 2 * std::numbers::pi;
  phi = std::fmod(phi, two_pi);
  return phi < 0 ? phi + two_pi : phi;
}

double sphere_integral(const DunklContext& ctx, double& error) {
  const RootSystem& rs = ctx.root_system();
  const Multiplicity& k = ctx.multiplicity();
  const std::size_t n = ctx.rank();
  std::vector<std::array<double, 3>> alphas;
  for (const auto& a : rs.positive_roots) {
    std::array<double, 3> v{0, 0, 0};
    for (std::size_t i = 0; i < n; ++i) v[i] = a[i].get_d();
    alphas.push_back(v);
  }
  auto w = [&](std::span<const double> u) { return weight_function(rs, k, u); };
  const double two_pi = 2 * std::numbers::pi;

  if (n == 1) {
    const double p = 1.0, m = -1.0;
    return w(std::span(&p, 1)) + w(std::span(&m, 1));
  }

  if (n == 2) {
    std::vector<double> cuts;
    for (const auto& a : alphas) {
      const double theta = wrap_angle(std::atan2(-a[0], a[1]));
      cuts.push_back(theta);
      cuts.push_back(wrap_angle(theta + std::numbers::pi));
    }
    const auto pts = split_points(cuts, 0.0, two_pi);
    auto f = [&](double theta) {
      const double u[2] = {std::cos(theta), std::sin(theta)};
      return w(u);
    };
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) total += integrate_piece(f, pts[i], pts[i + 1], error);
    return total;
  }

  if (n == 3) {
    auto inner = [&](double theta) {
      const double st = std::sin(theta), ct = std::cos(theta);
      std::vector<double> cuts;
      for (const auto& a : alphas) {
        const double A = a[0] * st, B = a[1] * st, C = -a[2] * ct;
        const double r = std::hypot(A, B);
        if (r == 0.0 || std::abs(C) > r) continue;
        const double base = std::atan2(B, A);
        const double delta = std::acos(std::clamp(C / r, -1.0, 1.0));
        cuts.push_back(wrap_angle(base + delta));
        cuts.push_back(wrap_angle(base - delta));
      }
      const auto pts = split_points(cuts, 0.0, two_pi);
      auto f = [&](double phi) {
        const double u[3] = {st * std::cos(phi), st * std::sin(phi), ct};
        return w(u);
      };
      double inner_err = 0.0, total = 0.0;
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) total += integrate_piece(f, pts[i], pts[i + 1], inner_err);
      return total * st;
    };
    std::vector<double> cuts;
    for (const auto& a : alphas) {
      const double r = std::hypot(a[0], a[1]);
      if (r == 0.0) {
        cuts.push_back(std::numbers::pi / 2);
      } else if (a[2] != 0.0) {
        const double th = std::atan(std::abs(a[2]) / r);
        cuts.push_back(th);
        cuts.push_back(std::numbers::pi - th);
      }
    }
    const auto pts = split_points(cuts, 0.0, std::numbers::pi);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) total += integrate_piece(inner, pts[i], pts[i + 1], error);
    return total;
  }

  throw QuadratureError("c_k quadrature supports ambient dimension <= 3");
}

}  // namespace

void NumericEvalConfig::validate() const {
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (max_degree < 1) throw std::invalid_argument("max_degree must be at least 1");
}

KernelValue kernel_eval(const DunklContext& ctx, std::span<const double> x, std::span<const double> y,
                        const NumericEvalConfig& cfg) {
  return sum_series(ctx, x, y, cfg, false);
}

KernelValue kernel_eval_imaginary(const DunklContext& ctx, std::span<const double> x, std::span<const double> y,
                                  const NumericEvalConfig& cfg) {
  return sum_series(ctx, x, y, cfg, true);
}

std::vector<double> kernel_blocks(const DunklContext& ctx, std::span<const double> x, std::span<const double> y,
                                  unsigned max_degree) {
  check_point(ctx, x, y);
  OrbitSeries series(ctx, x, y);
  std::vector<double> out;
  for (unsigned d = 0; d <= max_degree; ++d) out.push_back(series.next().get_d());
  return out;
}

std::vector<double> kernel_blocks_exact(const DunklContext& ctx, std::span<const double> x, std::span<const double> y,
                                        unsigned max_degree) {
  check_point(ctx, x, y);
  const auto xm = to_mpf(x);
  const auto ym = to_mpf(y);
  std::vector<double> out;
  for (unsigned d = 0; d <= max_degree; ++d) out.push_back(degree_block(ctx, xm, ym, d).get_d());
  return out;
}

double kernel_z2_closed(double k, double z, double w) {
  if (!(k >= 0.0)) throw std::invalid_argument("closed-form kernel needs k >= 0");
  const mpf_class u = mpf_class(z, kPrecision) * mpf_class(w, kPrecision);
  const mpf_class q = u * u / 4;  // (u/2)^2

  // j_alpha(i u) = sum_n (u/2)^{2n} / (n! (alpha+1)_n), all terms non-negative.
  auto bessel = [&](double alpha) {
    const mpf_class a1(alpha + 1.0, kPrecision);
    mpf_class sum(1, kPrecision), term(1, kPrecision);
    for (unsigned n = 0;; ++n) {
      mpf_class denom = mpf_class(n + 1, kPrecision) * (a1 + n);
      const mpf_class ratio = q / denom;
      term *= ratio;
      sum += term;
      // Ratios decrease in n; once below 1/2 the tail is at most term * r / (1 - r) <= term.
      if (ratio < 0.5 && term < sum * std::ldexp(1.0, -200)) break;
      if (n > 100000) throw std::runtime_error("Bessel series failed to converge");
    }
    return sum;
  };

  const mpf_class value = bessel(k - 0.5) + u / mpf_class(2 * k + 1, kPrecision) * bessel(k + 0.5);
  return value.get_d();
}

double c_k_constant(const DunklContext& ctx, const NumericEvalConfig& cfg) {
  const RootSystem& rs = ctx.root_system();
  const bool closed_available = rs.family == Family::Z2;
  CkMode mode = cfg.c_k_mode;
  if (mode == CkMode::automatic) mode = closed_available ? CkMode::closed_form : CkMode::quadrature;

  if (mode == CkMode::closed_form) {
    if (!closed_available) throw std::invalid_argument("closed-form c_k is only available for Z2^N");
    double inv = 1.0;
    for (const auto& k : ctx.multiplicity().values()) inv *= std::tgamma(k.get_d() + 0.5);
    return 1.0 / inv;
  }

  // Nested quadrature takes seconds in dimension 3, so results are kept per (W, k).
  static std::mutex memo_mutex;
  static std::map<std::string, double> memo;
  std::string key = rs.label;
  for (const auto& k : ctx.multiplicity().values()) key += "|" + to_string(k);
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }

  // integral of exp(-|x|^2) w_k = Gamma(gamma + N/2)/2 * integral of w_k over the sphere.
  const double gamma = gamma_k(rs, ctx.multiplicity()).get_d();
  double error = 0.0;
  const double sphere = sphere_integral(ctx, error);
  if (!(sphere > 0.0) || error > 1e-9 * sphere) {
    throw QuadratureError("c_k quadrature did not converge (estimated error " + std::to_string(error) + ")");
  }
  const double radial = std::tgamma(gamma + static_cast<double>(ctx.rank()) / 2.0) / 2.0;
  const double value = 1.0 / (radial * sphere);
  std::lock_guard lock(memo_mutex);
  memo.emplace(key, value);
  return value;
}

KernelValue heat_kernel_eval(const DunklContext& ctx, std::span<const double> x, std::span<const double> y, double t,
                             const NumericEvalConfig& cfg) {
  if (!(t > 0.0)) throw std::invalid_argument("heat kernel needs t > 0");
  check_point(ctx, x, y);
  const double scale = 1.0 / std::sqrt(2.0 * t);
  std::vector<double> xs(x.begin(), x.end()), ys(y.begin(), y.end());
  for (auto& v : xs) v *= scale;
  for (auto& v : ys) v *= scale;
  const KernelValue kv = kernel_eval(ctx, xs, ys, cfg);

  const double gamma = gamma_k(ctx.root_system(), ctx.multiplicity()).get_d();
  const double nx = norm(x), ny = norm(y);
  const double prefactor = c_k_constant(ctx, cfg) * std::pow(4.0 * t, -gamma - ctx.rank() / 2.0) *
                           std::exp(-(nx * nx + ny * ny) / (4.0 * t));
  KernelValue out;
  out.value = prefactor * kv.value;
  out.degree = kv.degree;
  out.error_bound = prefactor * kv.error_bound + 16 * kUnitRoundoff * std::abs(out.value);
  return out;
}

KernelValue density_theta(const DunklContext& ctx, double t, std::span<const double> x, std::span<const double> y,
                          const NumericEvalConfig& cfg) {
  if (!(t > 0.0)) throw std::invalid_argument("density needs t > 0");
  check_point(ctx, x, y);
  std::vector<double> ys(y.begin(), y.end());
  for (auto& v : ys) v /= 2.0 * t;
  const KernelValue kv = kernel_eval(ctx, x, ys, cfg);
  const double nx = norm(x);
  const double prefactor = std::exp(-nx * nx / (4.0 * t));
  KernelValue out;
  out.value = prefactor * kv.value;
  out.degree = kv.degree;
  out.error_bound = prefactor * kv.error_bound + 8 * kUnitRoundoff * std::abs(out.value);
  return out;
}

BoundCheckReport kernel_bound_checks(const DunklContext& ctx, std::span<const KernelSample> samples,
                                     const NumericEvalConfig& cfg) {
  BoundCheckReport report;
  const auto group = generate_group(ctx.root_system());
  NumericEvalConfig abs_cfg = cfg;
  abs_cfg.relative = false;
  abs_cfg.tolerance = std::min(cfg.tolerance, 1e-13);

  auto where = [](const KernelSample& s) {
    std::ostringstream o;
    o << "x=(";
    for (std::size_t i = 0; i < s.x.size(); ++i) o << (i ? "," : "") << s.x[i];
    o << ") y=(";
    for (std::size_t i = 0; i < s.y.size(); ++i) o << (i ? "," : "") << s.y[i];
    o << ")";
    return o.str();
  };
  auto agree = [](const KernelValue& a, const KernelValue& b) {
    return std::abs(a.value - b.value) <= a.error_bound + b.error_bound + 4 * kUnitRoundoff * std::abs(a.value);
  };
  auto apply = [](const LinearMap& g, const std::vector<double>& v) {
    std::vector<double> r(v.size(), 0.0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) r[i] += g(i, j).get_d() * v[j];
    }
    return r;
  };

  for (const auto& s : samples) {
    const KernelValue k = kernel_eval(ctx, s.x, s.y, cfg);
    ++report.checks;
    if (!(k.value > 0.0)) report.violations.push_back("K(x,y) not positive at " + where(s));

    const KernelValue ki = kernel_eval_imaginary(ctx, s.x, s.y, abs_cfg);
    ++report.checks;
    const double modulus = std::hypot(ki.value, ki.imag);
    report.max_imaginary_modulus = std::max(report.max_imaginary_modulus, modulus);
    if (modulus > 1.0 + 1e-12 + ki.error_bound) report.violations.push_back("|K(ix,y)| > 1 at " + where(s));

    const KernelValue ks = kernel_eval(ctx, s.y, s.x, cfg);
    ++report.checks;
    report.max_symmetry_defect = std::max(report.max_symmetry_defect, std::abs(k.value - ks.value) / k.value);
    if (!agree(k, ks)) report.violations.push_back("K(x,y) != K(y,x) at " + where(s));

    for (const auto& g : group.matrices) {
      const KernelValue kg = kernel_eval(ctx, apply(g, s.x), apply(g, s.y), cfg);
      ++report.checks;
      report.max_invariance_defect = std::max(report.max_invariance_defect, std::abs(kg.value - k.value) / k.value);
      if (!agree(k, kg)) report.violations.push_back("K(gx,gy) != K(x,y) at " + where(s));
    }

    for (double lambda : {-1.0, 0.5, 2.0}) {
      std::vector<double> lx = s.x, ly = s.y;
      for (auto& v : lx) v *= lambda;
      for (auto& v : ly) v *= lambda;
      const KernelValue a = kernel_eval(ctx, lx, s.y, cfg);
      const KernelValue b = kernel_eval(ctx, s.x, ly, cfg);
      ++report.checks;
      if (!agree(a, b)) report.violations.push_back("K(lx,y) != K(x,ly) at " + where(s));
    }

    const double nx = norm(s.x), ny = norm(s.y);
    const auto blocks = kernel_blocks(ctx, s.x, s.y, k.degree);
    double bound = 1.0;
    for (std::size_t d = 0; d < blocks.size(); ++d) {
      if (d > 0) bound *= nx * ny / static_cast<double>(d);
      ++report.checks;
      if (std::abs(blocks[d]) > bound * (1.0 + 1e-12) + 1e-300) {
        report.violations.push_back("degree-" + std::to_string(d) + " block exceeds |x|^n|y|^n/n! at " + where(s));
      }
    }
  }
  return report;
}

}  // namespace dunkl
