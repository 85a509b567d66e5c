#include <cstdlib>

#include <gtest/gtest.h>

#include "lidzeta/bigfloat.hpp"
#include "lidzeta/pi_algebra.hpp"
#include "lidzeta/polynomial.hpp"
#include "lidzeta/rational.hpp"
#include "test_support.hpp"

using namespace lidzeta;
using lidzeta::testing::Gen;
using lidzeta::testing::poly;

namespace {

const Rational kSixth(1, 6);

// x^3/6 - x/6
Polynomial lambda1() { return poly({0, -kSixth, 0, kSixth}); }

// P_2(x) = x^2/(2 pi) - x, i.e. pi * (u^2/2 - u) with u = x/pi.
PiScaledPolynomial p2() { return {1, poly({0, -1, Rational(1, 2)})}; }

}  // namespace

TEST(Rational, CanonicalForm) {
  const Rational r(mpz_class(6), mpz_class(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(4).str(), "4");
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("-1/45"), Rational(-1, 45));
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/-2"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, DivisionByZero) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
}

TEST(Rational, Combinatorics) {
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(inverse_factorial(3), kSixth);
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(binomial(2, 3), 0);
}

TEST(Polynomial, ZeroHasNoDegree) {
  const Polynomial z = poly({0, 0, 0});
  EXPECT_TRUE(z.is_zero());
  EXPECT_FALSE(z.degree().has_value());
  EXPECT_EQ(Polynomial::constant(Rational(3)).degree(), 0u);
}

TEST(Polynomial, Arithmetic) {
  const Polynomial x = Polynomial::x();
  EXPECT_TRUE((x + (-x)).is_zero());
  EXPECT_EQ(x * x, Polynomial::monomial(2));
  EXPECT_EQ(lambda1() + poly({0, kSixth}), Polynomial::monomial(3, kSixth));
  EXPECT_EQ(Rational(2) * x, poly({0, 2}));
  EXPECT_TRUE((Rational(0) * x).is_zero());
}

TEST(Polynomial, Differentiate) {
  EXPECT_EQ(differentiate(lambda1(), 2), Polynomial::x());
  EXPECT_TRUE(differentiate(Polynomial::x(), 5).is_zero());
  EXPECT_EQ(differentiate(Polynomial::monomial(2), 1), poly({0, 2}));
  EXPECT_EQ(differentiate(lambda1(), 0), lambda1());
}

TEST(Polynomial, Integrate) {
  EXPECT_EQ(integrate_indefinite(Polynomial::x()), Polynomial::monomial(2, Rational(1, 2)));
  EXPECT_TRUE(integrate_indefinite(Polynomial()).is_zero());
  // Lambda_1' = x^2/2 - 1/6 integrates back to Lambda_1 (zero constant term).
  EXPECT_EQ(integrate_indefinite(differentiate(lambda1(), 1)), lambda1());
}

TEST(Polynomial, Evaluate) {
  EXPECT_EQ(eval_rational(lambda1(), Rational(1)), Rational(0));
  EXPECT_EQ(eval_rational(Polynomial::x(), Rational(0)), Rational(0));
  const Polynomial lambda2 = poly({0, Rational(7, 360), 0, Rational(-1, 36), 0, Rational(1, 120)});
  EXPECT_EQ(eval_rational(lambda2, Rational(1)), Rational(0));
}

TEST(Polynomial, ComposeAndReflect) {
  // (1-x)^3/3 - (1-x)/3 = -x^3/3 + x^2 - 2x/3
  const Polynomial p = Rational(2) * reflect_unit(lambda1());
  EXPECT_EQ(p, poly({0, Rational(-2, 3), 1, Rational(-1, 3)}));
  EXPECT_EQ(compose_affine(Polynomial::monomial(2), Rational(1), Rational(2)), poly({1, 4, 4}));
}

TEST(Polynomial, DivideByX) {
  EXPECT_EQ(divide_by_x(lambda1()), poly({-kSixth, 0, kSixth}));
  EXPECT_THROW(divide_by_x(poly({1, 1})), std::domain_error);
}

TEST(Polynomial, Str) {
  EXPECT_EQ(Polynomial::x().str(), "x");
  EXPECT_EQ(lambda1().str(), "1/6*x^3 - 1/6*x");
  EXPECT_EQ(Polynomial().str(), "0");
  EXPECT_EQ(poly({-1, 0, 1}).str(), "x^2 - 1");
}

TEST(PolynomialProperty, AddSubtractAndMultiplyEvaluate) {
  Gen gen(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = gen.polynomial(8);
    const Polynomial q = gen.polynomial(8);
    const Rational x = gen.rational();
    EXPECT_EQ((p + q) - q, p);
    EXPECT_EQ((p * q)(x), p(x) * q(x));
    if (!p.is_zero() && !q.is_zero()) EXPECT_EQ(*(p * q).degree(), *p.degree() + *q.degree());
  }
}

TEST(PolynomialProperty, DifferentiateUndoesIntegrate) {
  Gen gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = gen.polynomial(12);
    EXPECT_EQ(differentiate(integrate_indefinite(p), 1), p);
  }
}

TEST(PiNumber, CanonicalAndRational) {
  const PiNumber v(PiNumber::Terms{{2, Rational(0)}, {0, kSixth}});
  EXPECT_TRUE(v.is_rational());
  EXPECT_EQ(v.as_rational(), kSixth);
  EXPECT_EQ(v.terms().size(), 1u);
  EXPECT_EQ(PiNumber(Rational(0)), PiNumber());
  EXPECT_THROW(PiNumber::term(2, kSixth).as_rational(), std::domain_error);
}

TEST(PiNumber, ArithmeticAndStr) {
  const PiNumber a = PiNumber::term(2, Rational(-1, 3)) + PiNumber(Rational(1));
  EXPECT_EQ(a.str(), "-1/3*pi^2 + 1");
  EXPECT_EQ((a * PiNumber::term(-1, 3)).str(), "-pi + 3*pi^-1");
  EXPECT_EQ(a.times_pi_power(1).coeff(3), Rational(-1, 3));
}

TEST(PiNumberProperty, AddThenSubtract) {
  Gen gen(99);
  for (int trial = 0; trial < 200; ++trial) {
    const PiNumber a = gen.pi_number();
    const PiNumber b = gen.pi_number();
    EXPECT_EQ((a + b) - b, a);
  }
}

TEST(PiScaledPolynomial, EndpointDerivativesOfP2) {
  const auto first = pi_derivative_at_endpoints(p2(), 1);
  EXPECT_EQ(first.at_zero, PiNumber(Rational(-1)));
  EXPECT_EQ(first.at_pi, PiNumber());
  EXPECT_EQ(pi_derivative_at_endpoints(p2(), 0).at_zero, PiNumber());
  const auto beyond = pi_derivative_at_endpoints(p2(), 3);
  EXPECT_TRUE(beyond.at_zero.is_zero());
  EXPECT_TRUE(beyond.at_pi.is_zero());
}

TEST(PiScaledPolynomial, CoefficientsCarryPiPowers) {
  // x^2/(2 pi) - x
  EXPECT_EQ(p2().coeff(2), PiNumber::term(-1, Rational(1, 2)));
  EXPECT_EQ(p2().coeff(1), PiNumber(Rational(-1)));
  EXPECT_EQ(p2().derivative(2), PiScaledPolynomial(-1, Polynomial::constant(Rational(1))));
}

TEST(PiScaledPolynomial, MixedScaleSumRejected) {
  const PiScaledPolynomial a(1, Polynomial::x());
  const PiScaledPolynomial b(2, Polynomial::x());
  EXPECT_THROW(a + b, std::invalid_argument);
  EXPECT_EQ(a + a, PiScaledPolynomial(1, poly({0, 2})));
}

TEST(PiScaledPolynomialProperty, DerivativeMatchesFiniteDifference) {
  Gen gen(31337);
  const WorkingPrecision wp(40);
  const BigFloat pi = pi_constant();
  const BigFloat h = BigFloat("1e-15");
  for (int trial = 0; trial < 20; ++trial) {
    const PiScaledPolynomial p(gen.integer(-3, 6), gen.polynomial(9));
    const BigFloat u = BigFloat(gen.integer(1, 999)) / 1000;
    const BigFloat x = pi * u;
    const BigFloat exact = p.derivative(1)(x);
    const BigFloat fd = (p(x + h) - p(x - h)) / (2 * h);
    const BigFloat scale = std::max(BigFloat(1), abs(exact));
    EXPECT_LT(abs(exact - fd) / scale, BigFloat("1e-6")) << p.str();
    // Exact evaluation route: P(pi u) = pi^s r(u)
    const Rational ur(mpz_class(gen.integer(1, 999)), mpz_class(1000));
    EXPECT_LT(abs(evaluate(p.at_pi_multiple(ur)) - p(pi * to_bigfloat(ur))), BigFloat("1e-30") * std::max(BigFloat(1), abs(p(pi * to_bigfloat(ur)))));
  }
}

TEST(PiNumberToBigFloat, Examples) {
  EXPECT_EQ(to_decimal(pi_number_to_bigfloat(PiNumber(kSixth), 20), 20), "0.16666666666666666667");
  const BigFloat zeta2 = pi_number_to_bigfloat(PiNumber::term(2, kSixth), 30);
  EXPECT_EQ(to_decimal(zeta2, 13), "1.644934066848");
  EXPECT_EQ(pi_number_to_bigfloat(PiNumber(), 10), 0);
}

TEST(PiNumberToBigFloat, ErrorBound) {
  // pi^2/6 = 1.6449340668482264364724151666460251892189499012068 (50 digits)
  const BigFloat v = pi_number_to_bigfloat(PiNumber::term(2, kSixth), 45);
  const WorkingPrecision wp(60);
  const BigFloat ref("1.6449340668482264364724151666460251892189499012068");
  EXPECT_LE(abs(BigFloat(v) - ref), BigFloat("1e-44") * ref);
}

TEST(PiNumberToBigFloat, PrecisionLimit) {
  EXPECT_EQ(stored_pi_digits(), 330u);
  EXPECT_THROW(pi_number_to_bigfloat(PiNumber(kSixth), max_digits() + 1), PrecisionError);
  EXPECT_THROW(pi_number_to_bigfloat(PiNumber(kSixth), 0), PrecisionError);
  EXPECT_NO_THROW(pi_number_to_bigfloat(PiNumber::term(2, kSixth), max_digits()));
}

TEST(PiNumberToBigFloat, EnvironmentCap) {
  ::setenv("LIDZETA_PI_DIGITS", "40", 1);
  EXPECT_EQ(available_pi_digits(), 40u);
  EXPECT_EQ(max_digits(), 30u);
  EXPECT_THROW(pi_number_to_bigfloat(PiNumber::term(2, kSixth), 31), PrecisionError);
  EXPECT_NO_THROW(pi_number_to_bigfloat(PiNumber::term(2, kSixth), 30));
  ::setenv("LIDZETA_PI_DIGITS", "garbage", 1);
  EXPECT_EQ(available_pi_digits(), stored_pi_digits());
  ::unsetenv("LIDZETA_PI_DIGITS");
}
