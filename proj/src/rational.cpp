#include "kzmono/rational.hpp"

namespace kz {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  for (char ch : text) {
    if (ch == '.' || ch == 'e' || ch == 'E')
      throw std::invalid_argument("rational literal must be exact, got \"" + text + "\"");
  }
  Rational x;
  if (x.set_str(text, 10) != 0)
    throw std::invalid_argument("cannot parse rational \"" + text + "\"");
  if (x.get_den() == 0) throw std::invalid_argument("zero denominator in \"" + text + "\"");
  x.canonicalize();
  return x;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

long mod_floor(long a, long m) {
  if (m <= 0) throw std::invalid_argument("mod_floor: modulus must be positive");
  long r = a % m;
  return r < 0 ? r + m : r;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  if (m <= 0) throw std::invalid_argument("mod_floor: modulus must be positive");
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool congruent_mod(const Rational& k, const Rational& a, long m) {
  Rational d = (k - a) / m;
  d.canonicalize();
  return is_integer(d);
}

long checked_long(const Integer& z, const char* what) {
  if (!z.fits_slong_p()) throw std::overflow_error(std::string(what) + ": value out of range");
  return z.get_si();
}

std::string rational_str(const Rational& x) { return x.get_str(); }

} // namespace kz
