#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace asymvar {

/// Arbitrary-precision rational. gmpxx keeps every value canonical
/// (reduced, positive denominator, zero as 0/1) after each operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Accepts "a" or "a/b" with optional sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline Rational rational_pow(const Rational& base, unsigned exp) {
  Rational result = 1;
  Rational b = base;
  while (exp) {
    if (exp & 1u) result *= b;
    b *= b;
    exp >>= 1u;
  }
  return result;
}

}  // namespace asymvar
