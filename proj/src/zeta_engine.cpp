#include "lidzeta/zeta_engine.hpp"

#include <stdexcept>

#include "lidzeta/lidstone.hpp"

namespace lidzeta {

namespace {

Rational sign_power(unsigned e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

void require_positive(unsigned n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

}  // namespace

Interpolant interpolant(unsigned n) {
  require_positive(n, "interpolant");
  const Polynomial lambda_prime = differentiate(lidstone_poly(n), 1);
  const Polynomial r = sign_power(n) * (Polynomial::constant(lambda_prime(Rational(1))) - reflect_unit(lambda_prime));
  return {n, PiScaledPolynomial(static_cast<int>(2 * n - 1), r)};
}

bool q_n_relation_check(unsigned n) {
  require_positive(n, "q_n_relation_check");
  const PiScaledPolynomial dp = interpolant(n).poly.derivative(1);
  const PiScaledPolynomial expected(static_cast<int>(2 * n - 2), sign_power(n) * reflect_unit(lidstone_poly(n - 1)));
  return dp == expected;
}

PiNumber cos_moment_exact(const PiScaledPolynomial& p, unsigned k) {
  if (k == 0) throw std::invalid_argument("cos_moment_exact: k must be >= 1");
  PiNumber sum;
  const auto deg = p.base().degree();
  if (!deg) return sum;
  const Rational k_sign = sign_power(k);
  const Rational k_sq = Rational(k) * Rational(k);
  Rational k_pow = 1;
  for (unsigned j = 1; 2 * j - 1 <= *deg; ++j) {
    k_pow *= k_sq;
    const auto [at_zero, at_pi] = pi_derivative_at_endpoints(p, 2 * j - 1);
    const PiNumber bracket = PiNumber(k_sign) * at_pi - at_zero;
    sum = sum + PiNumber(sign_power(j + 1) / k_pow) * bracket;
  }
  return sum;
}

PiNumber definite_integral_0_pi(const PiScaledPolynomial& p) {
  // int_0^pi pi^s r(x/pi) dx = pi^(s+1) int_0^1 r(u) du
  return PiNumber::term(p.scale() + 1, integrate_indefinite(p.base())(Rational(1)));
}

PiNumber integral_of_interpolant(unsigned n) { return definite_integral_0_pi(interpolant(n).poly); }

ZetaEvenValue zeta_coefficient(unsigned n) {
  require_positive(n, "zeta_coefficient");
  return {n, sign_power(n + 1) * lambda_prime_at_one(n) / Rational(2)};
}

BigFloat zeta_value(unsigned n, unsigned digits) {
  require_positive(n, "zeta_value");
  require_digits(digits);
  const WorkingPrecision guard(digits);
  return evaluate(PiNumber::term(static_cast<int>(2 * n), zeta_coefficient(n).coefficient));
}

BernoulliTable bernoulli_numbers(unsigned max_k) {
  std::vector<Rational> b{Rational(1)};
  for (unsigned m = 1; m <= max_k; ++m) {
    Rational acc;
    for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * b[j];
    b.push_back(-acc / Rational(m + 1));
  }
  return {std::move(b)};
}

PiScaledPolynomial bernoulli_interpolant(unsigned n) {
  require_positive(n, "bernoulli_interpolant");
  const unsigned deg = 2 * n;
  const BernoulliTable table = bernoulli_numbers(deg);
  // pi^(2n) (x/pi)^(2n-k) = pi^k x^(2n-k), so the base coefficient of
  // u^(2n-k) is C(2n,k) 2^k B_k.
  std::vector<Rational> base(deg + 1);
  for (unsigned k = 0; k < deg; ++k) {
    base[deg - k] = Rational(binomial(deg, k)) * Rational(2).pow(k) * table.values[k];
  }
  return {static_cast<int>(deg), Polynomial(std::move(base))};
}

}  // namespace lidzeta
