#pragma once

#include "kzmono/spectral.hpp"

#include <array>
#include <vector>

namespace kz {

// A truncated Puiseux-style series q^rho * sum_n coeffs[n] q^n with exact
// rational coefficients. The window is explicit: the series is known through
// the absolute exponent rho + order() - 1 and operations propagate the
// pessimistic common window.
class QSeries {
 public:
  QSeries(Rational rho, std::vector<Rational> coeffs);
  static QSeries constant(const Rational& value, long order);

  const Rational& rho() const { return rho_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  long order() const { return static_cast<long>(coeffs_.size()); }
  Rational known_through() const; // largest absolute exponent covered

  bool is_zero() const;
  // Coefficient of q^exp; exp must lie inside the window.
  Rational coeff_at(const Rational& exp) const;

  QSeries derive() const; // D = q d/dq
  // Raise a series with constant coefficient exactly 1 to a rational power.
  QSeries pow_unit(const Rational& alpha) const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator/(const QSeries& a, const QSeries& b);
  QSeries operator-() const;
  friend QSeries operator*(const QSeries& a, const Rational& c);
  friend QSeries operator*(const Rational& c, const QSeries& a) {
    return a * c;
  }

  // outer(inner) for outer with rho = 0 and inner with integer rho and
  // valuation >= 1, by Horner evaluation.
  static QSeries compose(const QSeries& outer, const QSeries& inner);

 private:
  Rational rho_;
  std::vector<Rational> coeffs_;
};

// Eisenstein series E_2 = 1 - 24 sum sigma_1(n) q^n, E_4, E_6.
QSeries e2_series(long order);
QSeries e4_series(long order);
QSeries e6_series(long order);

// eta^e = q^{e/24} prod_{n>=1} (1 - q^n)^e for rational e.
QSeries eta_power_series(const Rational& exponent, long order);

// Delta = eta^24; equals (E_4^3 - E_6^2)/1728 (a tested invariant).
QSeries delta_series(long order);

// x(q) = 1728 Delta / E_4^3 = 1728 q - 1285632 q^2 + ...
QSeries x_of_q_series(long order);

// Gauss hypergeometric series 2F1(a, b; c; x) as a series in x.
// c must not be zero or a negative integer.
QSeries hypergeometric_2f1_series(const Rational& a, const Rational& b,
                                  const Rational& c, long order);

// Frobenius solution of D^2 f - ((k+1)/6) E_2 Df + (k(k+1)/12) (D E_2) f = 0
// with exponent rho = 0 (branch 0) or rho = (k+1)/6 (branch 1), a_0 = 1.
// Requires a non-resonant weight (k not an integer == 5 mod 6).
QSeries kz_series_solution(const Weight& k, int branch, long order);

// The left-hand side of the equation applied to an arbitrary series.
QSeries kz_residual(const Weight& k, const QSeries& f);

// Schwarzian test: with F the branch ratio and g = D log DF, returns
// D g - g^2/2 + ((k+1)^2/72) E_4, which must vanish identically.
QSeries schwarzian_check(const Weight& k, long order);

// Normal form tests: u = f / eta^{2(k+1)} satisfies the Lame-type form
// D^2 u = ((k+1)^2/144) E_4 u, and h = -2 Du/u satisfies the Riccati form
// D h - h^2/2 + ((k+1)^2/72) E_4 = 0. Residuals for both branches.
struct NormalFormResiduals {
  std::array<QSeries, 2> linear;
  std::array<QSeries, 2> riccati;
};
NormalFormResiduals normal_form_check(const Weight& k, long order);

// Hypergeometric pullback test: f = E_4^{k/4} 2F1(-k/12, -(k-4)/12;
// (5-k)/6; x(q)) must solve the equation and equal the branch-0 Frobenius
// solution. Requires (5-k)/6 not to be zero or a negative integer and a
// non-resonant weight.
struct PullbackResiduals {
  QSeries residual;
  QSeries branch_difference;
};
PullbackResiduals pullback_check(const Weight& k, long order);

// Ramanujan self-test: D E_2 - (E_2^2 - E_4)/12, which must vanish.
QSeries ramanujan_check(long order);

} // namespace kz
