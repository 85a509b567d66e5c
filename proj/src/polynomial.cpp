#include "lidzeta/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lidzeta {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(unsigned power, const Rational& c) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Polynomial(std::move(v));
}

Rational Polynomial::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(-c);
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) v[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) v[i] += q.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Rational> v(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) v[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (c.is_zero()) return {};
  std::vector<Rational> v;
  v.reserve(p.coeffs_.size());
  for (const auto& a : p.coeffs_) v.push_back(c * a);
  return Polynomial(std::move(v));
}

std::string Polynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

Polynomial differentiate(const Polynomial& p, unsigned order) {
  const auto c = p.coeffs();
  if (order >= c.size()) return {};
  std::vector<Rational> v;
  v.reserve(c.size() - order);
  for (std::size_t i = order; i < c.size(); ++i) {
    // i * (i-1) * ... * (i-order+1)
    mpz_class falling = 1;
    for (std::size_t j = 0; j < order; ++j) falling *= static_cast<unsigned long>(i - j);
    v.push_back(Rational(falling) * c[i]);
  }
  return Polynomial(std::move(v));
}

Polynomial integrate_indefinite(const Polynomial& p) {
  const auto c = p.coeffs();
  if (c.empty()) return {};
  std::vector<Rational> v(c.size() + 1);
  for (std::size_t i = 0; i < c.size(); ++i) v[i + 1] = c[i] / Rational(i + 1);
  return Polynomial(std::move(v));
}

Polynomial compose_affine(const Polynomial& p, const Rational& offset, const Rational& slope) {
  const Polynomial inner(std::vector<Rational>{offset, slope});
  Polynomial acc;
  const auto c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * inner + Polynomial::constant(c[i]);
  return acc;
}

Polynomial divide_by_x(const Polynomial& p) {
  const auto c = p.coeffs();
  if (c.empty()) return {};
  if (!c[0].is_zero()) throw std::domain_error("divide_by_x: polynomial does not vanish at 0");
  return Polynomial(std::vector<Rational>(c.begin() + 1, c.end()));
}

}  // namespace lidzeta
