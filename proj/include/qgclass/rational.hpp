#pragma once

#include <gmpxx.h>

#include <string>

namespace qgclass {

// Exact arbitrary-precision rationals. GMP keeps values canonical
// (reduced, positive denominator) as long as construction goes through
// the helpers below.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// Parses "num/den" or "num". Throws std::invalid_argument on garbage.
Rational rational_from_string(const std::string& text);

// Always emits an explicit denominator, e.g. "-3/2", "5/1".
std::string rational_to_string(const Rational& q);

}  // namespace qgclass
