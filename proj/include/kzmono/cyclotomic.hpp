#pragma once

#include "kzmono/rational.hpp"

#include <complex>
#include <memory>
#include <utility>
#include <vector>

namespace kz {

class FieldContext;
using FieldPtr = std::shared_ptr<const FieldContext>;

// Cyclotomic polynomial Phi_n as an integer coefficient vector, constant term
// first, computed by iterated exact division of x^n - 1 by Phi_d over the
// proper divisors d | n.
std::vector<Integer> cyclotomic_poly(long n);

// Arithmetic context for the cyclotomic field Q(zeta_n), zeta_n = e^{2 pi i/n}.
// Elements live on the power basis 1, zeta, ..., zeta^{phi(n)-1} modulo Phi_n.
// Contexts are immutable and cached per conductor, so they can be shared
// freely across threads.
class FieldContext {
public:
  // n must be a positive multiple of 4 so that i = zeta^{n/4} lies in the
  // field. Conductors above 720 are rejected (the eager power table would get
  // large, and nothing in this library needs them).
  static FieldPtr make(long n);

  long conductor() const { return n_; }
  long degree() const { return degree_; } // phi(n)
  const std::vector<Integer>& minimal_poly() const { return phi_; }

  // zeta^j reduced modulo Phi_n, as integer coordinates of length degree(),
  // for 0 <= j < n.
  const std::vector<Integer>& power(long j) const { return powers_[j]; }

private:
  explicit FieldContext(long n);

  long n_;
  long degree_;
  std::vector<Integer> phi_;                  // monic, degree_+1 coefficients
  std::vector<std::vector<Integer>> powers_;  // x^j mod Phi_n, j in [0, n)
};

// An element of Q(zeta_n): rational coordinates of length phi(n) on the power
// basis. All arithmetic is exact; equality and zero tests are decidable.
class CycNum {
public:
  CycNum() = default; // unset; using it in arithmetic throws

  static CycNum zero(const FieldPtr& f);
  static CycNum one(const FieldPtr& f);
  static CycNum from_rational(const FieldPtr& f, const Rational& x);
  // zeta_n^e for any integer exponent (reduced mod n).
  static CycNum root(const FieldPtr& f, long e);
  // sum of c * zeta^e terms; exponents arbitrary integers.
  static CycNum from_terms(const FieldPtr& f,
                           const std::vector<std::pair<long, Rational>>& terms);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational to_rational() const; // throws unless is_rational()

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(const CycNum& a, const CycNum& b);

  CycNum operator+(const Rational& x) const;
  CycNum operator-(const Rational& x) const;
  CycNum operator*(const Rational& x) const;
  friend CycNum operator*(const Rational& x, const CycNum& a) { return a * x; }

  CycNum inverse() const; // throws std::domain_error on zero

  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  // Numeric embedding zeta_n -> e^{2 pi i/n}.
  std::complex<double> to_complex() const;

  // Human-readable polynomial in z = zeta_n.
  std::string str() const;

private:
  CycNum(FieldPtr f, std::vector<Rational> c)
      : field_(std::move(f)), c_(std::move(c)) {}
  void require_set() const;
  static void require_same(const CycNum& a, const CycNum& b);

  FieldPtr field_;
  std::vector<Rational> c_;
};

} // namespace kz
