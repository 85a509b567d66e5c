#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lidzeta/cli.hpp"
#include "lidzeta/lidstone.hpp"
#include "lidzeta/verify.hpp"
#include "lidzeta/zeta_engine.hpp"

namespace py = pybind11;
using namespace lidzeta;

namespace {

// Exact values cross the boundary as "p/q" strings; the Python layer turns
// them into fractions.Fraction.
std::vector<std::string> strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Lidstone polynomials and zeta(2n) values";

  m.def("lambda_prime_at_one", [](unsigned n) { return lambda_prime_at_one(n).str(); }, py::arg("n"));
  m.def("lidstone_poly", [](unsigned k) {
    const Polynomial p = lidstone_poly(k);
    return strings(std::vector<Rational>(p.coeffs().begin(), p.coeffs().end()));
  }, py::arg("k"), "Coefficients of Lambda_k, lowest degree first.");
  m.def("zeta_coefficient", [](unsigned n) { return zeta_coefficient(n).coefficient.str(); }, py::arg("n"));
  m.def("zeta_value", [](unsigned n, unsigned digits) { return to_decimal(zeta_value(n, digits), digits); },
        py::arg("n"), py::arg("digits") = 30);
  m.def("cos_moment", [](unsigned n, unsigned k) { return cos_moment_exact(interpolant(n).poly, k).str(); },
        py::arg("n"), py::arg("k"), "Exact integral of P_2n(x) cos(kx) over [0, pi].");
  m.def("interpolant", [](unsigned n) { return interpolant(n).poly.str(); }, py::arg("n"));
  m.def("bernoulli_numbers", [](unsigned k_max) { return strings(bernoulli_numbers(k_max).values); },
        py::arg("k_max"));
  m.def("max_digits", &max_digits);

  m.def("verify", [](const std::string& suite) {
    std::vector<py::dict> rows;
    for (const CheckResult& c : run_suite(parse_suite(suite), SuiteOptions{})) {
      py::dict d;
      d["suite"] = c.suite;
      d["name"] = c.name;
      d["expected"] = c.expected;
      d["actual"] = c.actual;
      d["pass"] = c.pass;
      rows.push_back(std::move(d));
    }
    return rows;
  }, py::arg("suite"), "Run a verification suite with default bounds.");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run the command line tool in-process; returns (exit_code, stdout, stderr).");

  py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ValueError);
}
