#pragma once

#include <mutex>
#include <vector>

#include "lidzeta/polynomial.hpp"
#include "lidzeta/rational.hpp"

namespace lidzeta {

/// Grow-only cache of Lidstone polynomials.
///
/// Lambda_0(x) = x, Lambda_k'' = Lambda_{k-1}, Lambda_k(0) = Lambda_k(1) = 0.
/// Built from the odd-monomial expansion
///   Lambda_k(x) = x^(2k+1)/(2k+1)! - sum_{j<k} Lambda_j(x) / (2k+1-2j)!.
/// Safe to share between threads.
class LidstoneBasis {
 public:
  /// Lambda_k, extending the cache as needed.
  Polynomial get(unsigned k);
  /// Number of cached polynomials.
  std::size_t size() const;

  /// Process-wide instance used by the free functions below.
  static LidstoneBasis& shared();

 private:
  mutable std::mutex mutex_;
  std::vector<Polynomial> polys_;
};

/// Lambda_k from the shared basis.
Polynomial lidstone_poly(unsigned k);

/// Even-derivative data at 0 and 1: p^(2j)(0) = a[j], p^(2j)(1) = b[j].
class LidstoneData {
 public:
  /// Throws std::invalid_argument unless a and b are nonempty and equal length.
  LidstoneData(std::vector<Rational> a, std::vector<Rational> b);

  const std::vector<Rational>& a() const { return a_; }
  const std::vector<Rational>& b() const { return b_; }
  /// Number of conditions per endpoint.
  std::size_t n() const { return a_.size(); }

 private:
  std::vector<Rational> a_;
  std::vector<Rational> b_;
};

/// Unique polynomial of degree <= 2n-1 matching the data:
///   p(x) = sum_j a_j Lambda_j(1-x) + b_j Lambda_j(x).
Polynomial lidstone_interpolate(const LidstoneData& data);

/// Even derivatives of p at 0 and 1 up to order 2(n-1), as LidstoneData.
LidstoneData lidstone_data_of(const Polynomial& p, std::size_t n);

/// Exact check of  x^(2k+1) = sum_{j<=k} (2k+1)!/(2k+1-2j)! Lambda_j(x).
bool monomial_expansion_check(unsigned k);

/// Lambda_n'(1) by the scalar recursion
///   Lambda_0'(1) = 1,  Lambda_n'(1) = 1/(2n)! - sum_{j<n} Lambda_j'(1)/(2n+1-2j)!.
/// Never builds a polynomial. Memoized.
Rational lambda_prime_at_one(unsigned n);

}  // namespace lidzeta
