//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef COMMONCERT_RATIONAL_H_
#define COMMONCERT_RATIONAL_H_

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace commoncert {

// Every density, threshold and deficit in the library is an exact rational.
using Rational = mpq_class;

// Parses "p/q" or "p" (optional leading '-'). Decimal and exponent notation
// is rejected so that no value is ever approximated. Throws
// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational &value);

Rational pow(const Rational &base, unsigned exponent);

// 2^exponent for a possibly negative exponent.
Rational pow2(int exponent);

inline int sign(const Rational &value) { return sgn(value); }

} // namespace commoncert

#endif // COMMONCERT_RATIONAL_H_
