#include "lidzeta/pi_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace lidzeta {

PiNumber::PiNumber(const Rational& r) {
  if (!r.is_zero()) terms_.emplace(0, r);
}

PiNumber::PiNumber(Terms terms) : terms_(std::move(terms)) { trim(); }

void PiNumber::trim() { std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); }); }

PiNumber PiNumber::term(int exponent, const Rational& c) { return PiNumber(Terms{{exponent, c}}); }

Rational PiNumber::coeff(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool PiNumber::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational PiNumber::as_rational() const {
  if (!is_rational()) throw std::domain_error("PiNumber has non-zero pi-power terms: " + str());
  return coeff(0);
}

PiNumber PiNumber::times_pi_power(int exponent) const {
  Terms out;
  for (const auto& [e, c] : terms_) out.emplace(e + exponent, c);
  return PiNumber(std::move(out));
}

PiNumber PiNumber::operator-() const {
  Terms out;
  for (const auto& [e, c] : terms_) out.emplace(e, -c);
  return PiNumber(std::move(out));
}

PiNumber operator+(const PiNumber& a, const PiNumber& b) {
  PiNumber::Terms out = a.terms_;
  for (const auto& [e, c] : b.terms_) out[e] += c;
  return PiNumber(std::move(out));
}

PiNumber operator*(const PiNumber& a, const PiNumber& b) {
  PiNumber::Terms out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out[ea + eb] += ca * cb;
  }
  return PiNumber(std::move(out));
}

std::string PiNumber::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const Rational mag = c.abs();
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << '*';
    os << "pi";
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

BigFloat evaluate(const PiNumber& v) {
  BigFloat sum = 0;
  if (v.is_zero()) return sum;
  const BigFloat pi = pi_constant();
  for (const auto& [e, c] : v.terms()) sum += to_bigfloat(c) * boost::multiprecision::pow(pi, e);
  return sum;
}

BigFloat pi_number_to_bigfloat(const PiNumber& v, unsigned digits) {
  require_digits(digits);
  const WorkingPrecision guard(digits);
  return evaluate(v);
}

PiScaledPolynomial PiScaledPolynomial::derivative(unsigned order) const {
  return {scale_ - static_cast<int>(order), differentiate(base_, order)};
}

PiNumber PiScaledPolynomial::at_pi_multiple(const Rational& u) const { return PiNumber::term(scale_, base_(u)); }

PiNumber PiScaledPolynomial::coeff(std::size_t power) const {
  return PiNumber::term(scale_ - static_cast<int>(power), base_.coeff(power));
}

BigFloat PiScaledPolynomial::operator()(const BigFloat& x) const {
  const BigFloat pi = pi_constant();
  const BigFloat u = x / pi;
  BigFloat acc = 0;
  const auto c = base_.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * u + to_bigfloat(c[i]);
  return boost::multiprecision::pow(pi, scale_) * acc;
}

PiScaledPolynomial operator+(const PiScaledPolynomial& p, const PiScaledPolynomial& q) {
  if (p.base_.is_zero()) return q;
  if (q.base_.is_zero()) return p;
  if (p.scale_ != q.scale_) throw std::invalid_argument("PiScaledPolynomial: adding different pi scales");
  return {p.scale_, p.base_ + q.base_};
}

std::string PiScaledPolynomial::str() const {
  std::ostringstream os;
  os << "pi^" << scale_ << " * (" << base_.str() << ")|x->x/pi";
  return os.str();
}

EndpointValues pi_derivative_at_endpoints(const PiScaledPolynomial& p, unsigned order) {
  const PiScaledPolynomial d = p.derivative(order);
  return {d.at_pi_multiple(Rational(0)), d.at_pi_multiple(Rational(1))};
}

}  // namespace lidzeta
