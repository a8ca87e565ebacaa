#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace affinelab {

// Arbitrary-precision rational in lowest terms with positive denominator.
// Rational(p, q) does not reduce; write Rational(p) / q for computed p, q.
// Module, Quotient, TildeModule and the Takiff routines normalize their inputs.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional sign, surrounding blanks ignored).
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q"; integers are written as "p/1".
std::string to_fraction_string(const Rational& value);

/// Short human form: "p" for integers, "p/q" otherwise.
std::string to_display_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

inline Rational canonical(Rational value) {
  value.canonicalize();
  return value;
}

}  // namespace affinelab
