#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "lidzeta/bigfloat.hpp"
#include "lidzeta/polynomial.hpp"
#include "lidzeta/rational.hpp"

namespace lidzeta {

/// Exact finite sum  sum_e c_e * pi^e  with integer (possibly negative)
/// exponents. Zero coefficients are never stored.
class PiNumber {
 public:
  using Terms = std::map<int, Rational>;

  PiNumber() = default;
  PiNumber(const Rational& r);  // NOLINT(google-explicit-constructor)
  explicit PiNumber(Terms terms);

  /// c * pi^exponent.
  static PiNumber term(int exponent, const Rational& c);

  const Terms& terms() const { return terms_; }
  Rational coeff(int exponent) const;

  bool is_zero() const { return terms_.empty(); }
  /// True when only the pi^0 term may be nonzero.
  bool is_rational() const;
  /// The value as a Rational; throws std::domain_error unless is_rational().
  Rational as_rational() const;

  PiNumber times_pi_power(int exponent) const;

  PiNumber operator-() const;
  friend PiNumber operator+(const PiNumber& a, const PiNumber& b);
  friend PiNumber operator-(const PiNumber& a, const PiNumber& b) { return a + (-b); }
  friend PiNumber operator*(const PiNumber& a, const PiNumber& b);
  friend bool operator==(const PiNumber& a, const PiNumber& b) = default;

  /// e.g. "-1/3*pi^2 + 1".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const PiNumber& v) { return os << v.str(); }

 private:
  void trim();
  Terms terms_;
};

/// Numeric value of v with error at most 10^(1-digits) * max(1, |v|).
/// Throws PrecisionError when digits exceeds max_digits().
BigFloat pi_number_to_bigfloat(const PiNumber& v, unsigned digits);

/// Value of v at the current working precision.
BigFloat evaluate(const PiNumber& v);

/// P(x) = pi^scale * base(x / pi).
///
/// The x^j coefficient of P is base_j * pi^(scale - j), so polynomials whose
/// coefficients are rational multiples of graded powers of pi are exact here.
class PiScaledPolynomial {
 public:
  PiScaledPolynomial() = default;
  PiScaledPolynomial(int scale, Polynomial base) : scale_(scale), base_(std::move(base)) {}

  int scale() const { return scale_; }
  const Polynomial& base() const { return base_; }

  /// d-th derivative: scale drops by d, base is differentiated d times.
  PiScaledPolynomial derivative(unsigned order = 1) const;

  /// P(pi * u) = pi^scale * base(u).
  PiNumber at_pi_multiple(const Rational& u) const;

  /// x^j coefficient as an exact PiNumber.
  PiNumber coeff(std::size_t power) const;

  /// Numeric P(x) at the current working precision.
  BigFloat operator()(const BigFloat& x) const;

  /// Requires equal scales (a sum of mixed scales is not of this form).
  friend PiScaledPolynomial operator+(const PiScaledPolynomial& p, const PiScaledPolynomial& q);
  friend PiScaledPolynomial operator*(const Rational& c, const PiScaledPolynomial& p) {
    return {p.scale_, c * p.base_};
  }
  friend bool operator==(const PiScaledPolynomial& p, const PiScaledPolynomial& q) = default;

  std::string str() const;

 private:
  int scale_ = 0;
  Polynomial base_;
};

struct EndpointValues {
  PiNumber at_zero;
  PiNumber at_pi;
};

/// Exact P^(order)(0) and P^(order)(pi).
EndpointValues pi_derivative_at_endpoints(const PiScaledPolynomial& p, unsigned order);

}  // namespace lidzeta
