#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qduality {

// Arbitrary-precision rational, kept in lowest terms with positive
// denominator by GMP's canonical representation.
using Rational = mpq_class;

// num/den, canonicalized. den must be nonzero.
Rational make_rational(long num, long den);

// Accepts "3", "-7/5" and decimal literals like "0.25".
Rational rational_from_string(std::string_view text);

// base^exp with integer exp of either sign; 0^negative -> domain error.
Rational pow_int(const Rational& base, long exp);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline Rational scalar_one(const Rational&) { return Rational(1); }

std::string to_string(const Rational& r);

}  // namespace qduality
