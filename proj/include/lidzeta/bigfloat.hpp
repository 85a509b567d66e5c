#pragma once

#include <mutex>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "lidzeta/rational.hpp"

namespace lidzeta {

/// Runtime-precision binary float (MPFR). Precision is taken from the
/// enclosing WorkingPrecision at construction time.
using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                               boost::multiprecision::et_off>;

/// Raised when a caller asks for more decimal digits than the stored pi
/// constant can support.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Extra decimal digits carried internally on top of every requested precision.
inline constexpr unsigned kGuardDigits = 10;

/// Number of decimal digits of pi compiled into the library.
unsigned stored_pi_digits();

/// Digits of pi actually usable: stored_pi_digits(), capped by the
/// LIDZETA_PI_DIGITS environment variable when it holds a positive integer.
unsigned available_pi_digits();

/// Largest precision (decimal digits) any numeric request may ask for.
unsigned max_digits();

/// Throws PrecisionError unless 1 <= digits <= max_digits().
void require_digits(unsigned digits);

/// RAII scope fixing the precision of newly created BigFloats to
/// digits + kGuardDigits. MPFR's default precision is process-global, so the
/// scope also holds a process-wide recursive lock; nested scopes on one
/// thread are fine, scopes on different threads serialize.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(unsigned digits);
  ~WorkingPrecision();
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

  unsigned digits() const { return digits_; }

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned digits_;
  unsigned saved_;
};

/// pi rounded from the compiled-in constant at the current working precision.
/// Throws PrecisionError when the working precision exceeds available_pi_digits().
BigFloat pi_constant();

/// Correctly rounded conversion at the current working precision.
BigFloat to_bigfloat(const Rational& r);

/// Decimal rendering with `digits` significant digits.
std::string to_decimal(const BigFloat& x, unsigned digits);

}  // namespace lidzeta
