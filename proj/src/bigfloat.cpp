#include "lidzeta/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <string_view>

namespace lidzeta {

namespace {

// 330 significant digits, truncated (not rounded).
constexpr std::string_view kPiDigits =
    "3.14159265358979323846264338327950288419716939937510582097494459230781"
    "6406286208998628034825342117067982148086513282306647093844609550582231"
    "7253594081284811174502841027019385211055596446229489549303819644288109"
    "7566593344612847564823378678316527120190914564856692346034861045432664"
    "821339360726024914127372458700660631558817488152092";

std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}

}  // namespace

unsigned stored_pi_digits() { return static_cast<unsigned>(kPiDigits.size() - 1); }

unsigned available_pi_digits() {
  const unsigned stored = stored_pi_digits();
  const char* env = std::getenv("LIDZETA_PI_DIGITS");
  if (env == nullptr) return stored;
  char* end = nullptr;
  const long cap = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || cap <= 0) return stored;
  return std::min<unsigned>(stored, static_cast<unsigned>(std::min<long>(cap, stored)));
}

unsigned max_digits() {
  const unsigned avail = available_pi_digits();
  return avail > kGuardDigits ? avail - kGuardDigits : 0;
}

void require_digits(unsigned digits) {
  if (digits == 0) throw PrecisionError("precision must be at least one digit");
  if (digits > max_digits()) {
    throw PrecisionError("requested " + std::to_string(digits) + " digits; at most " +
                         std::to_string(max_digits()) + " available from the pi constant");
  }
}

WorkingPrecision::WorkingPrecision(unsigned digits)
    : lock_(precision_mutex()), digits_(digits), saved_(BigFloat::default_precision()) {
  BigFloat::default_precision(digits + kGuardDigits);
}

WorkingPrecision::~WorkingPrecision() { BigFloat::default_precision(saved_); }

BigFloat pi_constant() {
  const unsigned working = BigFloat::default_precision();
  if (working > available_pi_digits()) {
    throw PrecisionError("working precision of " + std::to_string(working) +
                         " digits exceeds the available pi constant (" +
                         std::to_string(available_pi_digits()) + " digits)");
  }
  // Truncate the literal to the available digits so the env cap is honoured.
  return BigFloat(std::string(kPiDigits.substr(0, available_pi_digits() + 1)));
}

BigFloat to_bigfloat(const Rational& r) {
  BigFloat out;
  mpfr_set_q(out.backend().data(), r.raw().get_mpq_t(), MPFR_RNDN);
  return out;
}

std::string to_decimal(const BigFloat& x, unsigned digits) { return x.str(static_cast<std::streamsize>(digits)); }

}  // namespace lidzeta
