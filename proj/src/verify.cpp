#include "lidzeta/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "lidzeta/lidstone.hpp"
#include "lidzeta/numerics.hpp"
#include "lidzeta/zeta_engine.hpp"

namespace lidzeta {

namespace {

std::string label(const std::string& what, std::initializer_list<std::pair<const char*, unsigned>> params) {
  std::ostringstream os;
  os << what;
  for (const auto& [key, value] : params) os << ' ' << key << '=' << value;
  return os.str();
}

CheckResult exact_check(const char* suite, std::string name, const PiNumber& expected, const PiNumber& actual) {
  return {suite, std::move(name), expected.str(), actual.str(), expected == actual};
}

std::string sci(const BigFloat& x) { return x.str(6, std::ios_base::scientific); }
std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

}  // namespace

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::Moments: return "moments";
    case Suite::Conditions: return "conditions";
    case Suite::Kernel: return "kernel";
    case Suite::Identity: return "identity";
    case Suite::Decay: return "decay";
    case Suite::Bernoulli: return "bernoulli";
    case Suite::All: return "all";
  }
  return "unknown";
}

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::Moments, Suite::Conditions, Suite::Kernel, Suite::Identity, Suite::Decay, Suite::Bernoulli,
                  Suite::All}) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown suite: '" + std::string(name) + "'");
}

std::vector<CheckResult> verify_moments(unsigned n_max, unsigned k_max) {
  std::vector<CheckResult> out;
  for (unsigned n = 1; n <= n_max; ++n) {
    const PiScaledPolynomial p = interpolant(n).poly;
    for (unsigned k = 1; k <= k_max; ++k) {
      const PiNumber expected(Rational(k).pow(2 * n).inverse());
      out.push_back(exact_check("moments", label("cos-moment", {{"n", n}, {"k", k}}), expected, cos_moment_exact(p, k)));
    }
  }
  return out;
}

std::vector<CheckResult> verify_conditions(unsigned n_max) {
  std::vector<CheckResult> out;
  for (unsigned n = 1; n <= n_max; ++n) {
    const Interpolant it = interpolant(n);
    const auto deg = it.poly.base().degree();
    out.push_back({"conditions", label("degree", {{"n", n}}), std::to_string(2 * n),
                   deg ? std::to_string(*deg) : "none", deg && *deg == 2 * n});
    out.push_back(exact_check("conditions", label("P(0)", {{"n", n}}), PiNumber(),
                              pi_derivative_at_endpoints(it.poly, 0).at_zero));
    for (unsigned j = 1; j <= n; ++j) {
      const auto [at_zero, at_pi] = pi_derivative_at_endpoints(it.poly, 2 * j - 1);
      const PiNumber expected_zero = j == n ? PiNumber(Rational(n % 2 == 0 ? 1 : -1)) : PiNumber();
      out.push_back(exact_check("conditions", label("odd-derivative at 0", {{"n", n}, {"order", 2 * j - 1}}),
                                expected_zero, at_zero));
      out.push_back(exact_check("conditions", label("odd-derivative at pi", {{"n", n}, {"order", 2 * j - 1}}),
                                PiNumber(), at_pi));
    }
    const bool q_ok = q_n_relation_check(n);
    out.push_back({"conditions", label("Q_n relation", {{"n", n}}), "true", q_ok ? "true" : "false", q_ok});
  }
  return out;
}

std::vector<CheckResult> verify_kernel(const std::vector<unsigned>& m_values, unsigned samples, double tol,
                                       unsigned digits) {
  std::vector<CheckResult> out;
  for (unsigned m : m_values) {
    const BigFloat worst = max_dirichlet_residual(m, samples, Rational(1, 100), digits);
    out.push_back({"kernel", label("max residual", {{"m", m}, {"samples", samples}}), "< " + sci(tol), sci(worst),
                   worst < tol});
  }
  return out;
}

std::vector<CheckResult> verify_identity(unsigned n_max, const std::vector<unsigned>& m_values, unsigned nodes,
                                         double tol, unsigned digits) {
  std::vector<CheckResult> out;
  for (unsigned n = 1; n <= n_max; ++n) {
    for (unsigned m : m_values) {
      const ConvergenceRow row = partial_sum_identity_check(n, m, nodes, digits);
      out.push_back({"identity", label("partial-sum residual", {{"n", n}, {"m", m}}), "< " + sci(tol),
                     sci(row.residual), row.residual < tol});
    }
  }
  return out;
}

std::vector<CheckResult> verify_decay(unsigned n, const std::vector<unsigned>& m_values, double ratio,
                                      unsigned digits) {
  std::vector<CheckResult> out;
  const std::vector<DecayPoint> points = riemann_lebesgue_decay(n, m_values, digits);
  for (std::size_t i = 1; i < points.size(); ++i) {
    const BigFloat prev = abs(points[i - 1].value);
    const BigFloat cur = abs(points[i].value);
    out.push_back({"decay", label("decreasing", {{"n", n}, {"m", points[i].m}}), "< " + sci(prev), sci(cur),
                   cur < prev});
  }
  const BigFloat first = abs(points.front().value);
  const BigFloat last = abs(points.back().value);
  out.push_back({"decay", label("final/first", {{"n", n}, {"m", points.back().m}}), "< " + sci(ratio),
                 sci(last / first), last < first * ratio});
  return out;
}

std::vector<CheckResult> verify_bernoulli(unsigned n_max, unsigned k_max) {
  std::vector<CheckResult> out;
  const BernoulliTable table = bernoulli_numbers(k_max);
  for (unsigned m = 1; m <= k_max; ++m) {
    Rational acc;
    for (unsigned j = 0; j <= m; ++j) acc += Rational(binomial(m + 1, j)) * table.values[j];
    out.push_back(exact_check("bernoulli", label("recursion", {{"m", m}}), PiNumber(), PiNumber(acc)));
  }
  for (unsigned n = 1; n <= n_max; ++n) {
    const PiScaledPolynomial p = bernoulli_interpolant(n);
    out.push_back(exact_check("bernoulli", label("P(0)", {{"n", n}}), PiNumber(), pi_derivative_at_endpoints(p, 0).at_zero));
    for (unsigned j = 1; j < n; ++j) {
      const auto [at_zero, at_pi] = pi_derivative_at_endpoints(p, 2 * j - 1);
      out.push_back(exact_check("bernoulli", label("odd-derivative at 0", {{"n", n}, {"order", 2 * j - 1}}),
                                PiNumber(), at_zero));
      out.push_back(exact_check("bernoulli", label("odd-derivative at pi", {{"n", n}, {"order", 2 * j - 1}}),
                                PiNumber(), at_pi));
    }
    out.push_back(exact_check("bernoulli", label("odd-derivative at pi", {{"n", n}, {"order", 2 * n - 1}}), PiNumber(),
                              pi_derivative_at_endpoints(p, 2 * n - 1).at_pi));
    out.push_back(exact_check("bernoulli", label("top derivative at 0", {{"n", n}, {"order", 2 * n}}),
                              PiNumber(Rational(factorial(2 * n))), pi_derivative_at_endpoints(p, 2 * n).at_zero));
  }
  return out;
}

std::vector<CheckResult> run_suite(Suite suite, const SuiteOptions& o) {
  switch (suite) {
    case Suite::Moments: return verify_moments(o.n_max, o.k_max);
    case Suite::Conditions: return verify_conditions(o.n_max);
    case Suite::Kernel: return verify_kernel(o.kernel_m, o.samples, o.kernel_tol, o.digits);
    case Suite::Identity: return verify_identity(o.identity_n_max, o.identity_m, o.nodes, o.identity_tol, o.digits);
    case Suite::Decay: return verify_decay(o.decay_n, o.decay_m, o.decay_ratio, o.digits);
    case Suite::Bernoulli: return verify_bernoulli(o.bernoulli_n_max, o.bernoulli_k_max);
    case Suite::All: {
      std::vector<CheckResult> all;
      for (Suite s : {Suite::Moments, Suite::Conditions, Suite::Kernel, Suite::Identity, Suite::Decay,
                      Suite::Bernoulli}) {
        auto part = run_suite(s, o);
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
      }
      return all;
    }
  }
  return {};
}

bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

}  // namespace lidzeta
