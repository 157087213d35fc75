#include "kzmono/connection.hpp"

namespace kz {

ConnectionContext::ConnectionContext(const Weight& k, Gate gate) : sc_(k) {
  if (gate == Gate::enforce && !stiller_valid(k))
    throw std::invalid_argument(
        "ConnectionContext: integer weight " + k.str() +
        " is congruent to 0, 4, 5 or 11 mod 12, outside the validity gate "
        "of the hypergeometric solution basis");
  ring_ = GradeRing::make(sc_);
}

GradedMatrix ConnectionContext::rho_t_pow(long t) const {
  const auto& f = sc_.field();
  CycNum zt = sc_.z(t);
  CycNum u12 = sc_.imag_unit() * (CycNum::one(f) - zt) * Rational(4);
  return GradedMatrix(ring_, CycNum::one(f), u12, CycNum::zero(f), zt);
}

GradedMatrix ConnectionContext::rho_s() const {
  const auto& f = sc_.field();
  return GradedMatrix(ring_, -CycNum::one(f), CycNum::zero(f),
                      sc_.imag_unit() * Rational(-4), CycNum::one(f));
}

GradedMatrix ConnectionContext::a_matrix(long t) const {
  return rho_t_pow(t) * rho_s();
}

GradedMatrix ConnectionContext::m_matrix(long t) const {
  if (t == 0) throw std::invalid_argument("m_matrix: t must be nonzero");
  CycNum zt = sc_.z(t);
  CycNum wt = sc_.w(t);
  CycNum kt = sc_.k_t(t);
  CycNum i = sc_.imag_unit();
  GradedMatrix tilde(ring_, (zt * Rational(2) + wt) * Rational(-1, 8),
                     -(i * (zt - Rational(1))), -(i * zt), zt * Rational(1, 4));
  return GradedMatrix::scalar(ring_, zt * wt * Rational(-1, 2)) + tilde * kt;
}

GradedMatrix ConnectionContext::b_matrix(long r, long s) const {
  CycNum zr = sc_.z(r), zs = sc_.z(s), wr = sc_.w(r), ws = sc_.w(s);
  CycNum i = sc_.imag_unit();
  CycNum two = CycNum::from_rational(sc_.field(), 2);
  CycNum d11 = zs + zr * ws * Rational(1, 2) + wr * ws * Rational(1, 4);
  CycNum u12 = i * ((zs - zr) * two + wr * (zs - Rational(1))) * Rational(2);
  CycNum l21 = i * zr * ws * Rational(2);
  CycNum d22 = zr - zr * ws * Rational(1, 2);
  return GradedMatrix(ring_, d11, u12, l21, d22);
}

GradedMatrix ConnectionContext::n_matrix(long r, long s) const {
  if (r == 1 || s == 1)
    throw std::invalid_argument("n_matrix: r and s must differ from 1");
  CycNum zr = sc_.z(r), zs = sc_.z(s), wr = sc_.w(r), ws = sc_.w(s);
  CycNum krs = sc_.k_rs(r, s);
  CycNum i = sc_.imag_unit();
  CycNum half = CycNum::from_rational(sc_.field(), Rational(1, 2));
  CycNum d11 =
      half + ((zs - Rational(1)) * Rational(2) + ws) * (wr + Rational(2)) * Rational(1, 8);
  CycNum u12 = i * ((zs - zr) * Rational(2) + (zr - Rational(1)) * ws);
  CycNum l21 = i * zr * ws;
  CycNum d22 = zr * (-(ws - Rational(2))) * Rational(1, 4);
  GradedMatrix tilde(ring_, d11, u12, l21, d22);
  return GradedMatrix::scalar(ring_, -(zr * zs)) + tilde * (krs * Rational(1, 2));
}

CycNum ConnectionContext::ts_cubed_scalar() const {
  // -i e^{3 i theta} = -zeta^{3q} zeta^{3(p+q)}
  const Weight& k = sc_.weight();
  return -sc_.zeta(3 * k.q + 3 * (k.p + k.q));
}

GradedMatrix ConnectionContext::word_representation(const Word& w) const {
  GradedMatrix m = identity();
  for (const auto& l : w) {
    if (l.gen == 'T')
      m = m * rho_t_pow(l.exp);
    else if (l.gen == 'S')
      m = m * rho_s().pow(l.exp);
    else
      throw std::invalid_argument("word_representation: unknown generator");
  }
  return m;
}

} // namespace kz
