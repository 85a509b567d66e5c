#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "lidzeta/rational.hpp"

namespace lidzeta {

/// Dense univariate polynomial with exact rational coefficients.
///
/// coeffs()[i] is the coefficient of x^i. Trailing zeros are never stored, so
/// the zero polynomial has an empty coefficient list and no degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  /// Constant polynomial c (zero polynomial when c == 0).
  static Polynomial constant(const Rational& c);
  /// c * x^power.
  static Polynomial monomial(unsigned power, const Rational& c = Rational(1));
  /// The identity polynomial x.
  static Polynomial x() { return monomial(1); }

  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Coefficient of x^power, zero beyond the degree.
  Rational coeff(std::size_t power) const;

  /// std::nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Exact Horner evaluation.
  Rational operator()(const Rational& x) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

  friend bool operator==(const Polynomial& p, const Polynomial& q) = default;

  /// Human-readable form, highest power first, e.g. "1/6*x^3 - 1/6*x".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// order-th derivative; the zero polynomial once order exceeds the degree.
Polynomial differentiate(const Polynomial& p, unsigned order = 1);

/// Antiderivative with zero constant term.
Polynomial integrate_indefinite(const Polynomial& p);

/// Exact value of p at x.
inline Rational eval_rational(const Polynomial& p, const Rational& x) { return p(x); }

/// p(offset + slope * x), expanded exactly.
Polynomial compose_affine(const Polynomial& p, const Rational& offset, const Rational& slope);

/// p(1 - x).
inline Polynomial reflect_unit(const Polynomial& p) { return compose_affine(p, Rational(1), Rational(-1)); }

/// Divides out one factor of x. Requires p(0) == 0.
Polynomial divide_by_x(const Polynomial& p);

}  // namespace lidzeta
