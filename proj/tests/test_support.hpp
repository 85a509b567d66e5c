#pragma once

#include <random>
#include <vector>

#include "lidzeta/pi_algebra.hpp"
#include "lidzeta/polynomial.hpp"
#include "lidzeta/rational.hpp"

namespace lidzeta::testing {

/// Deterministic generators for the property tests.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// p/q with |p| <= bound, 1 <= q <= bound.
  Rational rational(int bound = 100) { return Rational(mpz_class(integer(-bound, bound)), mpz_class(integer(1, bound))); }

  Polynomial polynomial(int max_degree, int bound = 100) {
    std::vector<Rational> c(static_cast<std::size_t>(integer(0, max_degree)) + 1);
    for (auto& a : c) a = rational(bound);
    return Polynomial(std::move(c));
  }

  PiNumber pi_number(int max_terms = 4) {
    PiNumber::Terms terms;
    const int count = integer(0, max_terms);
    for (int i = 0; i < count; ++i) terms[integer(-6, 6)] += rational();
    return PiNumber(std::move(terms));
  }

 private:
  std::mt19937 rng_;
};

inline Polynomial poly(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }

}  // namespace lidzeta::testing
