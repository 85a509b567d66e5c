#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lidzeta/bigfloat.hpp"
#include "lidzeta/pi_algebra.hpp"
#include "lidzeta/rational.hpp"

namespace lidzeta {

// All functions here that take or return BigFloat without a `digits`
// argument work at the precision of the caller's WorkingPrecision scope.

enum class QuadratureMethod { CompositeSimpson, GaussLegendre };

std::string to_string(QuadratureMethod method);
/// Accepts "composite-simpson" and "gauss-legendre".
QuadratureMethod parse_quadrature_method(std::string_view name);

/// Raised for integrand names outside the catalog.
class UnknownIntegrand : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// f(x) = P(x) / (2 sin(x/2)) for a polynomial with P(0) = 0.
///
/// Near zero the quotient is evaluated as ((x/2)/sin(x/2)) * R(x) with
/// P(x) = x R(x) and a degree-10 Taylor polynomial for t/sin t; the
/// truncation error there is below 1e-16.
class KernelWeightedFunction {
 public:
  /// Throws std::invalid_argument when P(0) != 0.
  explicit KernelWeightedFunction(PiScaledPolynomial p);

  /// Below this x the series branch is used.
  static constexpr double kSeriesThreshold = 0.25;

  BigFloat operator()(const BigFloat& x) const;
  /// The series branch, exposed for continuity checks.
  BigFloat series_branch(const BigFloat& x) const;
  /// The direct quotient branch (x > 0).
  BigFloat direct_branch(const BigFloat& x) const;

  const PiScaledPolynomial& numerator() const { return p_; }
  /// R with P(x) = x R(x).
  const PiScaledPolynomial& reduced() const { return r_; }

 private:
  PiScaledPolynomial p_;
  PiScaledPolynomial r_;
};

/// P_2n(x) / (2 sin(x/2)) for the interpolant of order n.
KernelWeightedFunction kernel_weighted_integrand(unsigned n);

/// One entry of the integrand catalog over [0, pi]:
///   polynomial   p(x)
///   cosine       p(x) cos(kx)
///   dirichlet    p(x) (1/2 + sum_{j<=m} cos(jx))
///   kernel       p(x) sin((m+1/2)x) / (2 sin(x/2))     (needs p(0) = 0)
class Integrand {
 public:
  enum class Kind { Polynomial, Cosine, Dirichlet, Kernel };

  static Integrand polynomial(PiScaledPolynomial p);
  static Integrand cosine(PiScaledPolynomial p, unsigned k);
  static Integrand dirichlet(PiScaledPolynomial p, unsigned m);
  static Integrand kernel(PiScaledPolynomial p, unsigned m);

  /// Builds a catalog entry by name ("polynomial", "cosine", "dirichlet",
  /// "kernel"). Throws UnknownIntegrand for anything else.
  static Integrand from_name(std::string_view name, PiScaledPolynomial p, unsigned param);

  Kind kind() const { return kind_; }
  std::string name() const;
  unsigned parameter() const { return param_; }
  const PiScaledPolynomial& poly() const { return poly_; }

  BigFloat operator()(const BigFloat& x) const;

  /// Exact value of the integral over [0, pi], from the closed-form moments.
  PiNumber exact_integral_0_pi() const;

 private:
  Integrand(Kind kind, PiScaledPolynomial p, unsigned param);

  Kind kind_;
  PiScaledPolynomial poly_;
  unsigned param_;
  std::vector<KernelWeightedFunction> kernel_;  // one entry for Kind::Kernel
};

struct QuadratureReport {
  BigFloat value;
  unsigned nodes = 0;
  QuadratureMethod method = QuadratureMethod::GaussLegendre;
  /// |Q(nodes) - Q(2 nodes)|
  BigFloat estimated_error;
};

/// Points per Gauss-Legendre panel.
inline constexpr unsigned kGaussPanelPoints = 64;

/// Composite rule over [a, b]. Gauss-Legendre uses ceil(nodes / 64) panels
/// of 64 points; Simpson uses `nodes` subintervals (rounded up to even).
/// Throws std::invalid_argument when a >= b or nodes < 8.
QuadratureReport quadrature(const Integrand& f, const BigFloat& a, const BigFloat& b, unsigned nodes,
                            QuadratureMethod method = QuadratureMethod::GaussLegendre);

/// Gauss-Legendre panel count giving at least four panels per period of
/// sin((m+1/2)x) on [0, pi], and never fewer than `min_panels`.
unsigned oscillation_panels(unsigned m, unsigned min_panels = 16);

/// Nodes and weights of the `points`-point Gauss-Legendre rule on [-1, 1] at
/// the current working precision. Cached per (points, precision).
struct GaussRule {
  std::vector<BigFloat> nodes;
  std::vector<BigFloat> weights;
};
const GaussRule& gauss_legendre_rule(unsigned points);

/// |1/2 + sum_{k<=m} cos(kx) - sin((m+1/2)x) / (2 sin(x/2))|.
/// Throws std::domain_error unless 0 < x <= pi.
BigFloat dirichlet_kernel_residual(unsigned m, const BigFloat& x);

/// Largest Dirichlet residual over `samples` equally spaced points of
/// [lo, pi] (endpoints included), at `digits` precision.
BigFloat max_dirichlet_residual(unsigned m, unsigned samples, const Rational& lo, unsigned digits);

/// Exact  sum_{k=1}^{m} k^(-2n).
Rational partial_zeta_sum(unsigned n, unsigned m);

struct DecayPoint {
  unsigned m = 0;
  /// Signed value of int_0^pi P_2n(x) sin((m+1/2)x) / (2 sin(x/2)) dx.
  BigFloat value;
};

/// The kernel integral of the order-n interpolant for each m. m_values must
/// be nonempty and strictly increasing (std::invalid_argument otherwise).
std::vector<DecayPoint> riemann_lebesgue_decay(unsigned n, const std::vector<unsigned>& m_values,
                                               unsigned digits = 30);

struct ConvergenceRow {
  unsigned m = 0;
  BigFloat partial_sum;
  BigFloat rhs_constant_term;
  BigFloat rhs_kernel_term;
  BigFloat residual;
};

/// Compares sum_{k<=m} k^(-2n) (exact, rounded once) with
///   -1/2 int_0^pi P_2n + int_0^pi P_2n(x) sin((m+1/2)x)/(2 sin(x/2)) dx,
/// both integrals by Gauss-Legendre with at least `nodes` nodes; the kernel
/// integral additionally gets oscillation_panels(m) panels.
ConvergenceRow partial_sum_identity_check(unsigned n, unsigned m, unsigned nodes, unsigned digits = 30);

}  // namespace lidzeta
