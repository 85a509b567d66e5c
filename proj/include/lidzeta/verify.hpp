#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lidzeta/rational.hpp"

namespace lidzeta {

enum class Suite { Moments, Conditions, Kernel, Identity, Decay, Bernoulli, All };

std::string to_string(Suite suite);
/// Throws std::invalid_argument for unknown names.
Suite parse_suite(std::string_view name);

/// Bounds for the verification suites. Each suite reads only its own fields.
struct SuiteOptions {
  unsigned n_max = 10;          // moments, conditions
  unsigned k_max = 20;          // moments
  std::vector<unsigned> kernel_m{1, 5, 20, 100};
  unsigned samples = 1000;      // kernel
  double kernel_tol = 1e-12;
  unsigned identity_n_max = 3;
  std::vector<unsigned> identity_m{1, 10, 100};
  unsigned nodes = 4096;        // identity
  double identity_tol = 1e-8;
  unsigned decay_n = 1;
  std::vector<unsigned> decay_m{1, 10, 100};
  double decay_ratio = 0.1;     // last magnitude must fall below ratio * first
  unsigned bernoulli_n_max = 8;
  unsigned bernoulli_k_max = 16;
  unsigned digits = 30;
};

struct CheckResult {
  std::string suite;
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

std::vector<CheckResult> run_suite(Suite suite, const SuiteOptions& options);

/// Individual suites, also used by the acceptance tests.
std::vector<CheckResult> verify_moments(unsigned n_max, unsigned k_max);
std::vector<CheckResult> verify_conditions(unsigned n_max);
std::vector<CheckResult> verify_kernel(const std::vector<unsigned>& m_values, unsigned samples, double tol,
                                       unsigned digits);
std::vector<CheckResult> verify_identity(unsigned n_max, const std::vector<unsigned>& m_values, unsigned nodes,
                                         double tol, unsigned digits);
std::vector<CheckResult> verify_decay(unsigned n, const std::vector<unsigned>& m_values, double ratio,
                                      unsigned digits);
std::vector<CheckResult> verify_bernoulli(unsigned n_max, unsigned k_max);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace lidzeta
