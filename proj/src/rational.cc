//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "commoncert/rational.h"

#include <cctype>
#include <stdexcept>

namespace commoncert {
namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false))
    throw std::invalid_argument("not an exact rational (expected p/q): '" +
                                std::string(text) + "'");

  std::string num_str(num);
  if (num_str.front() == '+')
    num_str.erase(0, 1);
  mpz_class n(num_str, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational &value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

Rational pow(const Rational &base, unsigned exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  // gcd(n^k, d^k) = 1 whenever gcd(n, d) = 1, so no canonicalize needed.
  return result;
}

Rational pow2(int exponent) {
  Rational result(1);
  if (exponent >= 0)
    mpz_mul_2exp(result.get_num_mpz_t(), result.get_num_mpz_t(), exponent);
  else
    mpz_mul_2exp(result.get_den_mpz_t(), result.get_den_mpz_t(), -exponent);
  return result;
}

} // namespace commoncert
