#include "dunkl/verify.hpp"

#include "dunkl/dunkl.hpp"
#include "dunkl/intertwine.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace dunkl {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

struct Failure {
  std::vector<unsigned> key;  // sort key; smaller means simpler
  std::string message;
};

struct TaskResult {
  std::size_t checks = 0;
  std::vector<Failure> failures;

  void check(bool ok, std::vector<unsigned> key, const std::function<std::string()>& message) {
    ++checks;
    if (!ok) failures.push_back({std::move(key), message()});
  }
};

// Runs tasks 0..count-1 on a small pool. The merged result does not depend on
// scheduling because failures are sorted afterwards.
TaskResult run_pool(std::size_t count, unsigned threads, const std::function<TaskResult(std::size_t)>& task) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));

  TaskResult merged;
  std::mutex mutex;
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        TaskResult r = task(i);
        std::lock_guard lock(mutex);
        merged.checks += r.checks;
        for (auto& f : r.failures) merged.failures.push_back(std::move(f));
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  std::sort(merged.failures.begin(), merged.failures.end(), [](const Failure& a, const Failure& b) {
    return std::tie(a.key, a.message) < std::tie(b.key, b.message);
  });
  return merged;
}

std::vector<unsigned> key_of(std::initializer_list<const MultiIndex*> indices, unsigned prefix) {
  unsigned total = 0;
  for (const auto* m : indices) total += m->degree();
  std::vector<unsigned> key{total, prefix};
  for (const auto* m : indices) key.insert(key.end(), m->exponents().begin(), m->exponents().end());
  return key;
}

std::string show(const Polynomial& p) { return to_string(p); }

Polynomial character(const DunklContext& ctx, const MultiIndex& nu, const Rational& t, const VerifyConfig& cfg) {
  return cfg.a_lambda_override ? appell_character(ctx, nu, t, cfg.a_lambda_override) : appell_character(ctx, nu, t);
}

using SuiteFn = std::function<TaskResult(const DunklContext&, const VerifyConfig&, SuiteReport&)>;

TaskResult suite_biorthogonality(const DunklContext& ctx, const VerifyConfig& cfg, SuiteReport&) {
  const auto indices = monomials_up_to_degree(ctx.rank(), cfg.max_degree);
  std::vector<std::vector<Polynomial>> chars(cfg.ts.size()), cochars(cfg.ts.size());
  for (std::size_t ti = 0; ti < cfg.ts.size(); ++ti) {
    for (const auto& nu : indices) {
      chars[ti].push_back(character(ctx, nu, cfg.ts[ti], cfg));
      cochars[ti].push_back(appell_cocharacter(ctx, nu, cfg.ts[ti]));
    }
  }
  return run_pool(cfg.ts.size() * indices.size(), cfg.threads, [&](std::size_t task) {
    const std::size_t ti = task / indices.size(), a = task % indices.size();
    const Rational& t = cfg.ts[ti];
    const MultiIndex& nu = indices[a];
    TaskResult r;
    for (std::size_t b = 0; b < indices.size(); ++b) {
      const MultiIndex& rho = indices[b];
      const Rational got = gaussian_integrate(ctx, chars[ti][a] * cochars[ti][b], GaussianSpec::centered(t));
      const Rational want = nu == rho ? Rational(nu.factorial()) : Rational(0);
      r.check(got == want, key_of({&nu, &rho}, static_cast<unsigned>(ti)), [&] {
        return "t=" + to_string(t) + " (nu, rho) = (" + nu.label() + ", " + rho.label() + "): integral " +
               to_string(got) + ", expected " + to_string(want);
      });
    }
    return r;
  });
}

TaskResult suite_macdonald(const DunklContext& ctx, const VerifyConfig& cfg, SuiteReport&) {
  const auto indices = monomials_up_to_degree(ctx.rank(), cfg.max_degree);
  return run_pool(cfg.ts.size() * indices.size(), cfg.threads, [&](std::size_t task) {
    const std::size_t ti = task / indices.size();
    const Rational& t = cfg.ts[ti];
    const MultiIndex& nu = indices[task % indices.size()];
    const Polynomial p = Polynomial::monomial(nu);
    TaskResult r;
    for (const auto& rho : indices) {
      const auto [lhs, rhs] = macdonald_identity_check(ctx, p, Polynomial::monomial(rho), t);
      const bool ok = nu.degree() == rho.degree() ? lhs == rhs : (sgn(lhs) == 0 && sgn(rhs) == 0);
      r.check(ok, key_of({&nu, &rho}, static_cast<unsigned>(ti)), [&] {
        return "t=" + to_string(t) + " (p, q) = (x^" + nu.label() + ", x^" + rho.label() + "): pairing " +
               to_string(lhs) + ", Gaussian side " + to_string(rhs);
      });
    }
    return r;
  });
}

TaskResult suite_pairing(const DunklContext& ctx, const VerifyConfig& cfg, SuiteReport&) {
  const auto indices = monomials_up_to_degree(ctx.rank(), cfg.max_degree);
  return run_pool(indices.size(), cfg.threads, [&](std::size_t a) {
    const MultiIndex& rho = indices[a];
    const Polynomial m = moment_function(ctx, rho);
    TaskResult r;
    for (const auto& nu : indices) {
      const Rational got = pairing(ctx, Polynomial::monomial(nu), m);
      const Rational want = nu == rho ? Rational(nu.factorial()) : Rational(0);
      r.check(got == want, key_of({&nu, &rho}, 0), [&] {
        return "(nu, rho) = (" + nu.label() + ", " + rho.label() + "): [x^nu, m_rho] = " + to_string(got) +
               ", expected " + to_string(want);
      });
    }
    return r;
  });
}

TaskResult suite_rodriguez(const DunklContext& ctx, const VerifyConfig& cfg, SuiteReport&) {
  const auto indices = monomials_up_to_degree(ctx.rank(), cfg.max_degree);
  return run_pool(cfg.ts.size() * indices.size(), cfg.threads, [&](std::size_t task) {
    const std::size_t ti = task / indices.size();
    const Rational& t = cfg.ts[ti];
    const MultiIndex& nu = indices[task % indices.size()];
    TaskResult r;
    const Polynomial rod = rodriguez_cocharacter(ctx, nu, t);
    const Polynomial s = appell_cocharacter(ctx, nu, t);
    r.check(rod == s, key_of({&nu}, static_cast<unsigned>(2 * ti)), [&] {
      return "t=" + to_string(t) + " nu=" + nu.label() + ": Rodriguez form " + show(rod) + " vs cocharacter " +
             show(s);
    });
    const Polynomial gen = character(ctx, nu, t, cfg);
    const Polynomial heat = appell_character_heat(ctx, nu, t);
    r.check(gen == heat, key_of({&nu}, static_cast<unsigned>(2 * ti + 1)), [&] {
      return "t=" + to_string(t) + " nu=" + nu.label() + ": moment-expansion route " + show(gen) + " vs heat route " +
             show(heat);
    });
    return r;
  });
}

TaskResult suite_recursions(const DunklContext& ctx, const VerifyConfig& cfg, SuiteReport&) {
  if (cfg.max_degree == 0) return {};
  const auto indices = monomials_up_to_degree(ctx.rank(), cfg.max_degree - 1);
  const std::size_t n = ctx.rank();
  return run_pool(cfg.ts.size() * indices.size(), cfg.threads, [&](std::size_t task) {
    const std::size_t ti = task / indices.size();
    const Rational& t = cfg.ts[ti];
    const MultiIndex& nu = indices[task % indices.size()];
    TaskResult r;
    for (std::size_t j = 0; j < n; ++j) {
      const RecursionSides s = character_recursion_check(ctx, nu, j, t);
      r.check(s.character_lhs == s.character_rhs, key_of({&nu}, static_cast<unsigned>(2 * (ti * n + j))), [&] {
        return "t=" + to_string(t) + " nu=" + nu.label() + " j=" + std::to_string(j + 1) +
               ": T_j R_{nu+e_j} = " + show(s.character_lhs) + ", (nu_j+1) R_nu = " + show(s.character_rhs);
      });
      // The cocharacter recursion lives at t = 1/2 only; check it once.
      if (ti == 0) {
        r.check(s.cocharacter_lhs == s.cocharacter_rhs, key_of({&nu}, static_cast<unsigned>(2 * j + 1)), [&] {
          return "nu=" + nu.label() + " j=" + std::to_string(j + 1) + ": S_{nu+e_j}(1/2) = " +
                 show(s.cocharacter_lhs) + ", T_j^* S_nu(1/2) = " + show(s.cocharacter_rhs);
        });
      }
    }
    return r;
  });
}

TaskResult suite_intertwining(const DunklContext& ctx, const VerifyConfig& cfg, SuiteReport&) {
  const auto indices = monomials_up_to_degree(ctx.rank(), cfg.max_degree);
  return run_pool(indices.size(), cfg.threads, [&](std::size_t a) {
    const MultiIndex& nu = indices[a];
    const Polynomial x = Polynomial::monomial(nu);
    const Polynomial vx = apply_v(ctx, x);
    TaskResult r;
    for (std::size_t i = 0; i < ctx.rank(); ++i) {
      const Polynomial lhs = dunkl_apply(ctx, i, vx);
      const Polynomial rhs = apply_v(ctx, partial_derivative(x, i));
      r.check(lhs == rhs, key_of({&nu}, static_cast<unsigned>(i + 1)), [&] {
        return "nu=" + nu.label() + " i=" + std::to_string(i + 1) + ": T_i V x^nu = " + show(lhs) +
               ", V d_i x^nu = " + show(rhs);
      });
    }
    const Polynomial back = apply_v(ctx, apply_v_inverse(ctx, x));
    r.check(back == x, key_of({&nu}, 0), [&] { return "nu=" + nu.label() + ": V V^-1 x^nu = " + show(back); });
    const Polynomial back2 = apply_v_inverse(ctx, vx);
    r.check(back2 == x, key_of({&nu}, 0), [&] { return "nu=" + nu.label() + ": V^-1 V x^nu = " + show(back2); });
    return r;
  });
}

TaskResult suite_commutativity(const DunklContext& ctx, const VerifyConfig& cfg, SuiteReport&) {
  const auto indices = monomials_up_to_degree(ctx.rank(), cfg.max_degree);
  const std::size_t n = ctx.rank();
  return run_pool(indices.size(), cfg.threads, [&](std::size_t a) {
    const MultiIndex& nu = indices[a];
    const Polynomial x = Polynomial::monomial(nu);
    std::vector<Polynomial> first;
    for (std::size_t i = 0; i < n; ++i) first.push_back(dunkl_apply(ctx, i, x));
    TaskResult r;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const Polynomial ij = dunkl_apply(ctx, i, first[j]);
        const Polynomial ji = dunkl_apply(ctx, j, first[i]);
        r.check(ij == ji, key_of({&nu}, static_cast<unsigned>(i * n + j)), [&] {
          return "nu=" + nu.label() + " (i, j) = (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                 "): T_i T_j x^nu = " + show(ij) + ", T_j T_i x^nu = " + show(ji);
        });
      }
    }
    return r;
  });
}

TaskResult suite_heat(const DunklContext& ctx, const VerifyConfig& cfg, SuiteReport&) {
  const auto indices = monomials_up_to_degree(ctx.rank(), cfg.max_degree);
  return run_pool(cfg.ts.size() * indices.size(), cfg.threads, [&](std::size_t task) {
    const std::size_t ti = task / indices.size();
    const Rational& t = cfg.ts[ti];
    const MultiIndex& nu = indices[task % indices.size()];
    TaskResult r;
    const Polynomial mean = gaussian_integrate_in_center(ctx, character(ctx, nu, t, cfg), t);
    const Polynomial m = moment_function(ctx, nu);
    r.check(mean == m, key_of({&nu}, static_cast<unsigned>(2 * ti)), [&] {
      return "t=" + to_string(t) + " nu=" + nu.label() + ": integral of R_nu(t,.) against P_t(x,.) = " + show(mean) +
             ", m_nu(x) = " + show(m);
    });
    const Polynomial x = Polynomial::monomial(nu);
    const Polynomial integral = gaussian_integrate_in_center(ctx, x, t);
    const Polynomial heat = heat_apply(ctx, t, x);
    r.check(integral == heat, key_of({&nu}, static_cast<unsigned>(2 * ti + 1)), [&] {
      return "t=" + to_string(t) + " nu=" + nu.label() + ": integral of x^nu against P_t(x,.) = " + show(integral) +
             ", exp(t Delta_k) x^nu = " + show(heat);
    });
    return r;
  });
}

TaskResult suite_laguerre(const DunklContext& ctx, const VerifyConfig& cfg, SuiteReport& report) {
  TaskResult r;
  const RootSystem& rs = ctx.root_system();
  if (rs.family != Family::Z2 || rs.rank != 1) {
    report.skipped = true;
    report.notes.push_back("applies to Z2 in rank one only");
    return r;
  }
  const unsigned top = 2 * cfg.max_degree + 1;
  for (std::size_t ti = 0; ti < cfg.ts.size(); ++ti) {
    for (unsigned m = 0; m <= top; ++m) {
      const LaguerreComparison c = laguerre_structure(ctx, m, cfg.ts[ti]);
      const MultiIndex idx{m};
      r.check(c.proportional, key_of({&idx}, static_cast<unsigned>(ti)), [&] {
        return "t=" + to_string(cfg.ts[ti]) + " m=" + std::to_string(m) + ": R_m = " + show(c.character) +
               " is not a multiple of " + show(c.laguerre_form);
      });
      if (ti == 0) {
        std::ostringstream note;
        note << "m=" << m << ": constant " << to_string(c.constant) << ", k=0 value (-4)^n n! = "
             << to_string(c.unit_weight_constant);
        if (c.constant != c.unit_weight_constant) note << " (differs for this k)";
        report.notes.push_back(note.str());
      }
    }
  }
  return r;
}

struct SuiteSpec {
  std::string name;
  std::string identity;
  SuiteFn run;
};

const std::vector<SuiteSpec>& registry() {
  static const std::vector<SuiteSpec> suites = {
      {"biorthogonality", "integral of R_nu(t,.) S_rho(t,.) against P_t(0,.) is nu! delta(nu,rho)",
       suite_biorthogonality},
      {"macdonald",
       "Macdonald formula [p,q]_k = (2t)^-n integral of exp(-t Delta_k)p exp(-t Delta_k)q against P_t(0,.)",
       suite_macdonald},
      {"rodriguez", "Rodriguez formula for S_nu; moment-expansion and heat routes to R_nu agree", suite_rodriguez},
      {"pairing", "[x^nu, m_rho]_k = nu! delta(nu,rho)", suite_pairing},
      {"recursions", "T_j R_{nu+e_j} = (nu_j+1) R_nu and S_{nu+e_j}(1/2,.) = T_j^* S_nu(1/2,.)",
       suite_recursions},
      {"intertwining", "T_i V = V d_i and V V^-1 = id", suite_intertwining},
      {"commutativity", "T_i T_j = T_j T_i", suite_commutativity},
      {"heat", "mean value of R_nu is m_nu; integral against P_t(x,.) equals exp(t Delta_k)", suite_heat},
      {"laguerre", "rank-one Appell characters are Laguerre polynomials", suite_laguerre},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : registry()) v.push_back(s.name);
    return v;
  }();
  return names;
}

SuiteReport run_suite(const DunklContext& ctx, const std::string& name, const VerifyConfig& cfg) {
  const auto& suites = registry();
  auto it = std::find_if(suites.begin(), suites.end(), [&](const SuiteSpec& s) { return s.name == name; });
  if (it == suites.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  for (const auto& t : cfg.ts) {
    if (sgn(t) <= 0) throw std::invalid_argument("suite parameter t must be positive");
  }

  SuiteReport report;
  report.suite = it->name;
  report.identity = it->identity;
  TaskResult r = it->run(ctx, cfg, report);
  report.checks = r.checks;
  report.failure_count = r.failures.size();
  report.passed = r.failures.empty();
  for (std::size_t i = 0; i < r.failures.size() && i < kMaxCounterexamples; ++i) {
    report.counterexamples.push_back(r.failures[i].message);
  }
  return report;
}

std::vector<SuiteReport> run_suites(const DunklContext& ctx, const std::vector<std::string>& names,
                                    const VerifyConfig& cfg) {
  std::vector<SuiteReport> out;
  for (const auto& n : names) out.push_back(run_suite(ctx, n, cfg));
  return out;
}

ALambdaFn perturbed_a_lambda() {
  return [](const MultiIndex& lambda, const Rational& t) {
    Rational v = a_lambda(lambda, t);
    if (lambda.degree() == 2 && lambda[0] == 2) v += 1;
    return v;
  };
}

}  // namespace dunkl
