#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kz {

using Integer = mpz_class;
using Rational = mpq_class;

// Parse "p", "-p" or "p/q" into an exact rational. Decimals are rejected on
// purpose: every quantity downstream is exact.
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& x);

// Remainder in [0, m).
long mod_floor(long a, long m);
Integer mod_floor(const Integer& a, const Integer& m);

// k == a (mod m) in the rational sense: (k - a)/m is an integer.
bool congruent_mod(const Rational& k, const Rational& a, long m);

// Narrowing conversion that throws instead of truncating.
long checked_long(const Integer& z, const char* what);

std::string rational_str(const Rational& x);

} // namespace kz
