#pragma once

#include "kzmono/cyclotomic.hpp"

#include <map>

namespace kz {

// A rational weight k = p/q in lowest terms, q >= 1.
struct Weight {
  long p = 0;
  long q = 1;

  static Weight of(const Rational& k);
  static Weight parse(const std::string& text);

  Rational value() const { return Rational(p, q); }
  std::string str() const;

  bool operator==(const Weight& o) const { return p == o.p && q == o.q; }
};

// Integer weights k == 5 (mod 6) make the exponent difference (k+1)/6 a
// positive integer (or zero at k = -1), so the two Frobenius branches
// degenerate and logarithms appear. Everything downstream refuses these.
bool is_degenerate(const Weight& k);

// Integer weights k == 0, 4, 5, 11 (mod 12) fall outside the range where the
// hypergeometric data below is regular; fractional weights are always fine.
bool stiller_valid(const Weight& k);

// Exact spectral data of a weight: every constant lives in Q(zeta_{12q}) and
// is represented exactly. With theta = (1+k) pi/6:
//   Z_l = e^{2 i l theta},  C = 1/sin(theta),  W_l = (Z_l - 1) C,
//   K_t = W_t^2 + 4 Z_t,    K_{r,s} = W_r W_s + 4 (Z_r + Z_s).
class SpectralContext {
public:
  explicit SpectralContext(const Weight& k);

  const Weight& weight() const { return k_; }
  const FieldPtr& field() const { return field_; }
  long conductor() const { return field_->conductor(); } // 12 q

  CycNum zeta(long e) const; // zeta_{12q}^e
  CycNum imag_unit() const;  // i = zeta^{3q}

  CycNum exp_i_theta() const; // zeta^{p+q}
  CycNum sin_theta() const;
  CycNum cos_theta() const;
  const CycNum& cap_c() const { return cap_c_; } // C

  // z/w/k values repeat with the Z period, so they are memoized per residue
  // class; the commute classifiers and oracle sweeps hit them in tight loops.
  const CycNum& z(long l) const;
  const CycNum& w(long l) const;
  const CycNum& k_t(long t) const;
  const CycNum& k_rs(long r, long s) const;

  // G12 * G21 where G12, G21 are the transcendental grading constants of the
  // connection matrices; their product is algebraic: (C/2 + 1)/16.
  const CycNum& closure() const { return closure_; }

  // Exact period of l -> Z_l, namely 6q / gcd(p+q, 6). Z_a == Z_b iff
  // a == b (mod this), which gives integer shortcuts for equality tests.
  long z_period() const { return z_period_; }
  bool z_equal(long a, long b) const;

private:
  Weight k_;
  FieldPtr field_;
  long z_period_;
  CycNum cap_c_;
  CycNum closure_;
  mutable std::map<long, CycNum> z_cache_;
  mutable std::map<long, CycNum> w_cache_;
  mutable std::map<long, CycNum> kt_cache_;
  mutable std::map<std::pair<long, long>, CycNum> krs_cache_;
};

} // namespace kz
