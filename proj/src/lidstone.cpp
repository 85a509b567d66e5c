#include "lidzeta/lidstone.hpp"

#include <stdexcept>

namespace lidzeta {

Polynomial LidstoneBasis::get(unsigned k) {
  const std::lock_guard lock(mutex_);
  if (polys_.empty()) polys_.push_back(Polynomial::x());
  while (polys_.size() <= k) {
    const auto next = static_cast<unsigned>(polys_.size());
    Polynomial lk = Polynomial::monomial(2 * next + 1, inverse_factorial(2 * next + 1));
    for (unsigned j = 0; j < next; ++j) lk = lk - inverse_factorial(2 * (next - j) + 1) * polys_[j];
    polys_.push_back(std::move(lk));
  }
  return polys_[k];
}

std::size_t LidstoneBasis::size() const {
  const std::lock_guard lock(mutex_);
  return polys_.size();
}

LidstoneBasis& LidstoneBasis::shared() {
  static LidstoneBasis basis;
  return basis;
}

Polynomial lidstone_poly(unsigned k) { return LidstoneBasis::shared().get(k); }

LidstoneData::LidstoneData(std::vector<Rational> a, std::vector<Rational> b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty() || a_.size() != b_.size()) {
    throw std::invalid_argument("LidstoneData: a and b must be nonempty and of equal length");
  }
}

Polynomial lidstone_interpolate(const LidstoneData& data) {
  Polynomial p;
  for (std::size_t j = 0; j < data.n(); ++j) {
    const Polynomial lj = lidstone_poly(static_cast<unsigned>(j));
    p = p + data.a()[j] * reflect_unit(lj) + data.b()[j] * lj;
  }
  return p;
}

LidstoneData lidstone_data_of(const Polynomial& p, std::size_t n) {
  std::vector<Rational> a;
  std::vector<Rational> b;
  Polynomial d = p;
  for (std::size_t j = 0; j < n; ++j) {
    a.push_back(d(Rational(0)));
    b.push_back(d(Rational(1)));
    d = differentiate(d, 2);
  }
  return {std::move(a), std::move(b)};
}

bool monomial_expansion_check(unsigned k) {
  const unsigned odd = 2 * k + 1;
  Polynomial sum;
  for (unsigned j = 0; j <= k; ++j) {
    sum = sum + Rational(factorial(odd), factorial(odd - 2 * j)) * lidstone_poly(j);
  }
  return sum == Polynomial::monomial(odd);
}

Rational lambda_prime_at_one(unsigned n) {
  static std::mutex mutex;
  static std::vector<Rational> memo{Rational(1)};
  const std::lock_guard lock(mutex);
  while (memo.size() <= n) {
    const auto m = static_cast<unsigned>(memo.size());
    Rational v = inverse_factorial(2 * m);
    for (unsigned j = 0; j < m; ++j) v -= memo[j] * inverse_factorial(2 * (m - j) + 1);
    memo.push_back(std::move(v));
  }
  return memo[n];
}

}  // namespace lidzeta
