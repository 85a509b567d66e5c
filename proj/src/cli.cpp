#include "lidzeta/cli.hpp"

#include <exception>
#include <sstream>

#include "CLI11.hpp"
#include "lidzeta/lidstone.hpp"
#include "lidzeta/numerics.hpp"
#include "lidzeta/output.hpp"
#include "lidzeta/verify.hpp"
#include "lidzeta/zeta_engine.hpp"

namespace lidzeta {

namespace {

struct GlobalOptions {
  std::string format = "text";
  unsigned digits = 30;
};

std::string coefficient_map(const Polynomial& p) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  const auto c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    os << (first ? "" : ", ") << i << ": " << c[i];
    first = false;
  }
  os << '}';
  return os.str();
}

OutputRecord zeta_table(unsigned n_max, unsigned digits) {
  require_digits(digits);
  OutputRecord rec{RecordKind::Zeta, {}};
  for (unsigned n = 1; n <= n_max; ++n) {
    const ZetaEvenValue z = zeta_coefficient(n);
    rec.rows.push_back({{"n", std::to_string(n)},
                        {"lambda_prime_at_one", lambda_prime_at_one(n).str()},
                        {"coefficient", z.coefficient.str()},
                        {"pi_power", std::to_string(2 * n)},
                        {"zeta", to_decimal(zeta_value(n, digits), digits)}});
  }
  return rec;
}

OutputRecord lidstone_record(unsigned k) {
  const Polynomial p = lidstone_poly(k);
  OutputRecord rec{RecordKind::LidstonePoly, {}};
  rec.rows.push_back({{"k", std::to_string(k)},
                      {"polynomial", p.str()},
                      {"degree", std::to_string(p.degree().value_or(0))},
                      {"coefficients", coefficient_map(p)},
                      {"lambda_prime_at_one", lambda_prime_at_one(k).str()}});
  return rec;
}

OutputRecord lambda_table(unsigned k_max) {
  OutputRecord rec{RecordKind::Lambda, {}};
  for (unsigned k = 0; k <= k_max; ++k) {
    const Rational recursion = lambda_prime_at_one(k);
    const Rational via_poly = differentiate(lidstone_poly(k), 1)(Rational(1));
    rec.rows.push_back({{"k", std::to_string(k)},
                        {"lambda_prime_at_one", recursion.str()},
                        {"via_polynomial", via_poly.str()},
                        {"agree", recursion == via_poly ? "true" : "false"}});
  }
  return rec;
}

OutputRecord verification_record(const std::vector<CheckResult>& checks) {
  OutputRecord rec{RecordKind::Verification, {}};
  for (const auto& c : checks) {
    rec.rows.push_back({{"suite", c.suite},
                        {"check", c.name},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"pass", c.pass ? "true" : "false"}});
  }
  return rec;
}

OutputRecord decay_record(unsigned n, const std::vector<unsigned>& m_values, unsigned digits) {
  OutputRecord rec{RecordKind::Decay, {}};
  for (const auto& point : riemann_lebesgue_decay(n, m_values, digits)) {
    rec.rows.push_back({{"n", std::to_string(n)},
                        {"m", std::to_string(point.m)},
                        {"value", to_decimal(point.value, digits)},
                        {"magnitude", to_decimal(abs(point.value), digits)}});
  }
  return rec;
}

OutputRecord identity_record(const std::vector<unsigned>& n_values, const std::vector<unsigned>& m_values,
                             unsigned nodes, unsigned digits) {
  OutputRecord rec{RecordKind::Identity, {}};
  for (unsigned n : n_values) {
    for (unsigned m : m_values) {
      const ConvergenceRow row = partial_sum_identity_check(n, m, nodes, digits);
      rec.rows.push_back({{"n", std::to_string(n)},
                          {"m", std::to_string(m)},
                          {"partial_sum_exact", partial_zeta_sum(n, m).str()},
                          {"partial_sum", to_decimal(row.partial_sum, digits)},
                          {"rhs_constant_term", to_decimal(row.rhs_constant_term, digits)},
                          {"rhs_kernel_term", to_decimal(row.rhs_kernel_term, digits)},
                          {"residual", row.residual.str(6, std::ios_base::scientific)}});
    }
  }
  return rec;
}

std::vector<unsigned> doubling_sequence(unsigned last) {
  std::vector<unsigned> out;
  for (unsigned m = 1; m <= last; m *= 2) out.push_back(m);
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact zeta(2n) via Lidstone interpolation", "lidzeta"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--digits", global.digits, "Significant digits for numeric columns")->check(CLI::PositiveNumber);

  unsigned n_max = 5;
  auto* zeta = app.add_subcommand("zeta", "Table of Lambda_n'(1), zeta(2n)/pi^(2n) and zeta(2n)");
  zeta->add_option("--n-max", n_max, "Largest n")->check(CLI::PositiveNumber);

  unsigned k = 0;
  bool table = false;
  auto* lidstone = app.add_subcommand("lidstone", "Exact Lidstone polynomial Lambda_k");
  lidstone->add_option("--k", k, "Index k >= 0")->check(CLI::NonNegativeNumber);
  lidstone->add_flag("--table", table, "List Lambda_j'(1) for j <= k by both routes instead");

  std::string suite_name;
  SuiteOptions suite;
  std::vector<unsigned> v_n_max;
  std::vector<unsigned> v_m_list;
  std::vector<double> v_tol;
  auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 1 on any failure");
  verify->add_option("suite", suite_name, "moments|conditions|kernel|identity|decay|bernoulli|all")
      ->required()
      ->check(CLI::IsMember({"moments", "conditions", "kernel", "identity", "decay", "bernoulli", "all"}));
  verify->add_option("--n-max", v_n_max, "Largest n (moments, conditions, identity, bernoulli)")
      ->expected(1)
      ->check(CLI::PositiveNumber);
  verify->add_option("--k-max", suite.k_max, "Largest k (moments)")->check(CLI::PositiveNumber);
  verify->add_option("--m", suite.kernel_m, "Kernel orders (kernel)")->delimiter(',')->check(CLI::PositiveNumber);
  verify->add_option("--samples", suite.samples, "Grid points in [0.01, pi] (kernel)")->check(CLI::Range(2u, 1000000u));
  verify->add_option("--tol", v_tol, "Residual tolerance (kernel, identity)")->expected(1)->check(CLI::PositiveNumber);
  verify->add_option("--n", suite.decay_n, "Interpolant order (decay)")->check(CLI::PositiveNumber);
  verify->add_option("--m-list", v_m_list, "Increasing m values (decay, identity)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  verify->add_option("--nodes", suite.nodes, "Minimum quadrature nodes (identity)")->check(CLI::Range(8u, 1u << 24));
  verify->add_option("--ratio", suite.decay_ratio, "Required final/first magnitude ratio (decay)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--bernoulli-k-max", suite.bernoulli_k_max, "Bernoulli table size (bernoulli)");

  unsigned decay_n = 1;
  std::vector<unsigned> decay_m = doubling_sequence(256);
  auto* decay = app.add_subcommand("decay", "Kernel integral of P_2n for increasing m");
  decay->add_option("--n", decay_n, "Interpolant order")->check(CLI::PositiveNumber);
  decay->add_option("--m-list", decay_m, "Increasing m values")->delimiter(',')->check(CLI::PositiveNumber);

  std::vector<unsigned> id_n{1};
  std::vector<unsigned> id_m{1, 10, 100};
  unsigned id_nodes = 4096;
  auto* identity = app.add_subcommand("identity", "Partial-sum identity residuals");
  identity->add_option("--n", id_n, "Interpolant orders")->delimiter(',')->check(CLI::PositiveNumber);
  identity->add_option("--m-list", id_m, "Partial-sum lengths")->delimiter(',')->check(CLI::PositiveNumber);
  identity->add_option("--nodes", id_nodes, "Minimum quadrature nodes")->check(CLI::Range(8u, 1u << 24));

  std::vector<const char*> argv{"lidzeta"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    const OutputFormat format = parse_output_format(global.format);
    require_digits(global.digits);
    suite.digits = global.digits;

    if (*zeta) {
      emit(out, zeta_table(n_max, global.digits), format);
      return kExitOk;
    }
    if (*lidstone) {
      emit(out, table ? lambda_table(k) : lidstone_record(k), format);
      return kExitOk;
    }
    if (*decay) {
      emit(out, decay_record(decay_n, decay_m, global.digits), format);
      return kExitOk;
    }
    if (*identity) {
      emit(out, identity_record(id_n, id_m, id_nodes, global.digits), format);
      return kExitOk;
    }
    if (*verify) {
      if (!v_n_max.empty()) suite.n_max = suite.identity_n_max = suite.bernoulli_n_max = v_n_max.front();
      if (!v_m_list.empty()) suite.decay_m = suite.identity_m = v_m_list;
      if (!v_tol.empty()) suite.kernel_tol = suite.identity_tol = v_tol.front();
      const auto checks = run_suite(parse_suite(suite_name), suite);
      emit(out, verification_record(checks), format);
      std::size_t passed = 0;
      for (const auto& c : checks) passed += c.pass ? 1 : 0;
      err << suite_name << ": " << passed << "/" << checks.size() << " checks passed\n";
      return all_passed(checks) ? kExitOk : kExitVerificationFailed;
    }
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace lidzeta
