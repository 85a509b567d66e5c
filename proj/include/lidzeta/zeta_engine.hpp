#pragma once

#include <vector>

#include "lidzeta/bigfloat.hpp"
#include "lidzeta/pi_algebra.hpp"
#include "lidzeta/rational.hpp"

namespace lidzeta {

/// zeta(2n) = coefficient * pi^(2n).
struct ZetaEvenValue {
  unsigned n = 0;
  Rational coefficient;
};

/// The degree-2n polynomial P_2n with P(0) = 0, whose odd derivatives vanish
/// at pi and at 0 except P^(2n-1)(0) = (-1)^n. Stored with scale 2n-1 and base
///   r(u) = (-1)^n (Lambda_n'(1) - Lambda_n'(1-u)).
struct Interpolant {
  unsigned n = 0;
  PiScaledPolynomial poly;
};

struct BernoulliTable {
  /// values[k] = B_k, with B_1 = -1/2.
  std::vector<Rational> values;
};

/// Throws std::invalid_argument for n == 0.
Interpolant interpolant(unsigned n);

/// P_2n'(pi x) == (-1)^n pi^(2n-2) Lambda_{n-1}(1-x), checked exactly.
bool q_n_relation_check(unsigned n);

/// Exact  int_0^pi p(x) cos(kx) dx  by repeated integration by parts:
///   sum_j (-1)^(j+1) [(-1)^k p^(2j-1)(pi) - p^(2j-1)(0)] / k^(2j).
/// Terms are kept as PiNumbers so any cancellation of pi powers is visible.
PiNumber cos_moment_exact(const PiScaledPolynomial& p, unsigned k);

/// Exact  int_0^pi p(x) dx.
PiNumber definite_integral_0_pi(const PiScaledPolynomial& p);

/// Exact  int_0^pi P_2n(x) dx, computed from the polynomial itself.
PiNumber integral_of_interpolant(unsigned n);

/// (-1)^(n+1) Lambda_n'(1) / 2 from the scalar recursion.
ZetaEvenValue zeta_coefficient(unsigned n);

/// zeta(2n) to `digits` significant digits. Throws PrecisionError when digits
/// exceeds max_digits().
BigFloat zeta_value(unsigned n, unsigned digits);

/// B_0..B_max_k from  sum_{j<=m} C(m+1, j) B_j = 0.
BernoulliTable bernoulli_numbers(unsigned max_k);

/// sum_{k=0}^{2n-1} C(2n,k) (2 pi)^k B_k x^(2n-k), stored with scale 2n.
PiScaledPolynomial bernoulli_interpolant(unsigned n);

}  // namespace lidzeta
