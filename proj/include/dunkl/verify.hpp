#pragma once

#include "dunkl/appell.hpp"

#include <string>
#include <vector>

namespace dunkl {

struct VerifyConfig {
  unsigned max_degree = 4;
  std::vector<Rational> ts = {Rational(1, 4), Rational(1, 2), Rational(2)};
  /// Replaces a_lambda when building Appell characters; empty means the real one.
  ALambdaFn a_lambda_override;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct SuiteReport {
  std::string suite;
  std::string identity;  // human-readable name of the identity checked
  bool passed = true;
  bool skipped = false;  // suite does not apply to this root system
  std::size_t checks = 0;
  std::size_t failure_count = 0;
  /// Failures in ascending order of total degree, capped at a handful.
  std::vector<std::string> counterexamples;
  /// Informational lines (e.g. computed constants), not failures.
  std::vector<std::string> notes;
};

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs one suite; throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const DunklContext& ctx, const std::string& name, const VerifyConfig& cfg);

std::vector<SuiteReport> run_suites(const DunklContext& ctx, const std::vector<std::string>& names,
                                    const VerifyConfig& cfg);

/// a_lambda with a single wrong value at lambda = 2 e_1, for exercising the
/// failure path of the suites.
ALambdaFn perturbed_a_lambda();

}  // namespace dunkl
