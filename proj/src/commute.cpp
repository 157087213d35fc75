#include "kzmono/commute.hpp"

namespace kz {

namespace {

void require_gate(const Weight& k) {
  if (!stiller_valid(k))
    throw std::invalid_argument(
        "weight " + k.str() +
        " is congruent to 0, 4, 5 or 11 mod 12, outside the validity gate of "
        "the hypergeometric solution basis");
}

void require_ns_params(long r, long s) {
  if (r == 1 || s == 1)
    throw std::invalid_argument("N(r,s) parameters must differ from 1");
}

// 16 (Ntilde_11 - Ntilde_22) / K_{r,s}. When this vanishes together with
// K_{r,s} != 0, N(r,s) has equal diagonal entries.
CycNum n_diag_core(const SpectralContext& sc, long r, long s) {
  CycNum zr = sc.z(r), zs = sc.z(s);
  return (zs - zr) * Rational(4) + zr * sc.w(s) * Rational(4) +
         sc.w(r) * sc.w(s);
}

// 8 (Mtilde_22 - Mtilde_11) / K_t, i.e. 4 Z_t + W_t.
CycNum m_diag_core(const SpectralContext& sc, long t) {
  return sc.z(t) * Rational(4) + sc.w(t);
}

// N(r,s) is scalar iff K_{r,s} = 0 or Z_r = Z_s = 1; in the latter case
// K_{r,s} = 8 yet the non-scalar part degenerates to E/2 (e.g. N(0,0) = E).
bool n_scalar(const SpectralContext& sc, long r, long s) {
  return sc.k_rs(r, s).is_zero() || (sc.z_equal(r, 0) && sc.z_equal(s, 0));
}

} // namespace

std::string condition_label(const CommuteVerdict& v) {
  if (v.condition == 0) return "none";
  return "condition " + std::to_string(v.condition);
}

bool commute_oracle(const GradedMatrix& a, const GradedMatrix& b) {
  // Commutator entries:
  //   (1,1) = (u12_a l21_b - u12_b l21_a) g      (2,2) = -(1,1)
  //   (1,2) = u12_b (d11_a - d22_a) - u12_a (d11_b - d22_b)
  //   (2,1) = l21_a (d11_b - d22_b) - l21_b (d11_a - d22_a)
  const CycNum& g = a.ring()->g;
  if (!g.is_zero() && a.u12() * b.l21() != b.u12() * a.l21()) return false;
  CycNum da = a.d11() - a.d22();
  CycNum db = b.d11() - b.d22();
  if (b.u12() * da != a.u12() * db) return false;
  return a.l21() * db == b.l21() * da;
}

bool pair_criterion(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.l21().is_zero() || b.l21().is_zero())
    throw std::domain_error(
        "pair criterion inapplicable: a (2,1) coefficient vanishes");
  return a.u12() * b.l21() == b.u12() * a.l21() &&
         (a.d11() - a.d22()) * b.l21() == (b.d11() - b.d22()) * a.l21();
}

CommuteVerdict nn_classify(const SpectralContext& sc, long r, long s, long u,
                           long v) {
  require_ns_params(r, s);
  require_ns_params(u, v);
  if (n_scalar(sc, r, s) || n_scalar(sc, u, v)) return {true, 1};
  if (sc.z_equal(s, v) && sc.z_equal(r, u)) return {true, 2};
  if (sc.z_equal(s, 0) && sc.z_equal(v, 0)) return {true, 3};
  if (sc.z_equal(r, 0) && sc.z_equal(u, 0)) return {true, 4};
  if (sc.cap_c() == CycNum::from_rational(sc.field(), 2)) {
    // The off-diagonal system collapses to one line in X = 1/Z_r, Y = 1/Z_u;
    // cleared of denominators: Z_u (Z_v - 1) - Z_r (Z_s - 1) = Z_r Z_u (Z_v - Z_s).
    CycNum zr = sc.z(r), zs = sc.z(s), zu = sc.z(u), zv = sc.z(v);
    CycNum lhs = zu * (zv - Rational(1)) - zr * (zs - Rational(1));
    if (lhs == zr * zu * (zv - zs)) return {true, 5};
  }
  if (sc.closure().is_zero() && n_diag_core(sc, r, s).is_zero() &&
      n_diag_core(sc, u, v).is_zero())
    return {true, 6};
  return {false, 0};
}

CommuteVerdict thnnc_classify(const Weight& k, long r, long s, long u, long v) {
  require_gate(k);
  SpectralContext sc(k);
  return nn_classify(sc, r, s, u, v);
}

CommuteVerdict mn_classify(const SpectralContext& sc, long t, long r, long s) {
  if (t == 0) throw std::invalid_argument("M(t) parameter must be nonzero");
  require_ns_params(r, s);
  if (sc.k_t(t).is_zero() || sc.k_rs(r, s).is_zero()) return {true, 1};
  if (sc.z_equal(r, 0) && sc.z_equal(s, 0)) return {true, 2};
  if (sc.z_equal(t, r) && sc.z_equal(r, s)) return {true, 3};
  if (sc.closure().is_zero() && m_diag_core(sc, t).is_zero() &&
      n_diag_core(sc, r, s).is_zero())
    return {true, 4};
  if (sc.cap_c() == CycNum::from_rational(sc.field(), 2)) {
    // At C = 2 all three commutator entries are proportional to
    // Z_t (Z_r - 1) - Z_r (Z_s - 1), so that single line decides.
    CycNum zt = sc.z(t), zr = sc.z(r);
    if (zt * (zr - Rational(1)) == zr * (sc.z(s) - Rational(1)))
      return {true, 5};
  }
  return {false, 0};
}

CommuteVerdict thmnc_classify(const Weight& k, long t, long r, long s) {
  require_gate(k);
  SpectralContext sc(k);
  return mn_classify(sc, t, r, s);
}

namespace {

// The four system constants at one index l, given C and W_l != 0.
struct SystemRow {
  GradedScalar a1, a2, b1, b2;
};

SystemRow system_row(const SpectralContext& sc, const CycNum& c, long l) {
  CycNum zl = sc.z(l);
  CycNum wl = sc.w(l);
  if (wl.is_zero())
    throw std::domain_error(
        "off-diagonal system undefined: W vanishes (triangular case applies)");
  CycNum winv = wl.inverse();
  CycNum two = CycNum::from_rational(sc.field(), 2);
  CycNum four = CycNum::from_rational(sc.field(), 4);
  CycNum mi8 = sc.imag_unit() * Rational(-1, 8);
  SystemRow row;
  row.a1 = {((two - c) * zl + c) * winv, 1, -1};
  row.a2 = {mi8 * ((four - c * c) * zl + c * c) * winv, 0, -1};
  row.b1 = {(wl - Rational(2)) * winv, 1, -1};
  row.b2 = {mi8 * ((c + Rational(4)) * wl - Rational(4)) * winv, 0, -1};
  return row;
}

} // namespace

OffDiagonalSystem mneqnm_data(const SpectralContext& sc, long s, long v) {
  CycNum c = sc.cap_c();
  SystemRow rs = system_row(sc, c, s);
  SystemRow rv = system_row(sc, c, v);
  OffDiagonalSystem sys;
  sys.a1_s = rs.a1;
  sys.a2_s = rs.a2;
  sys.b1_s = rs.b1;
  sys.b2_s = rs.b2;
  sys.a1_v = rv.a1;
  sys.a2_v = rv.a2;
  sys.b1_v = rv.b1;
  sys.b2_v = rv.b2;
  sys.det = rv.a1 * rs.a2 - rs.a1 * rv.a2;
  if (c == CycNum::from_rational(sc.field(), 2))
    sys.solution_case = 3;
  else if (sc.z_equal(s, v))
    sys.solution_case = 2;
  else
    sys.solution_case = 1;
  return sys;
}

bool triangular_case(const SpectralContext& sc, long r, long s, long u,
                     long v) {
  require_ns_params(r, s);
  require_ns_params(u, v);
  if (sc.k_rs(r, s).is_zero() || sc.k_rs(u, v).is_zero())
    throw std::domain_error("triangular case inapplicable: a K factor vanishes");
  if (!sc.z_equal(s, 0))
    throw std::domain_error("triangular case inapplicable: Z_s != 1");
  return sc.z_equal(v, 0);
}

TildeCommutatorEntries cmcnc_entries(const SpectralContext& sc, long t, long r,
                                     long s) {
  if (sc.k_t(t).is_zero() || sc.k_rs(r, s).is_zero())
    throw std::domain_error("tilde matrices undefined: a K factor vanishes");
  CycNum zt = sc.z(t), zr = sc.z(r), zs = sc.z(s);
  CycNum wt = sc.w(t), wr = sc.w(r), ws = sc.w(s);
  CycNum i = sc.imag_unit();
  CycNum one = CycNum::one(sc.field());

  CycNum c11 = sc.closure() *
               (zt * (zr - zs) * Rational(2) + ws * (zt - zr)) * Rational(1, 2);
  CycNum c12 = i *
               ((one + zt) * (zr - zs) * Rational(4) -
                ws * (zr - zt) * Rational(4) + wt * (zr - zs) * Rational(2) +
                ws * wt * (one - zr) - wr * ws * (one - zt)) *
               Rational(1, 16);
  CycNum c21 = i *
               (zt * (zr - zs) * Rational(4) - zt * wr * ws + zr * ws * wt) *
               Rational(1, 16);
  return {{c11, 0, 0}, {c12, 1, 0}, {c21, 0, 1}};
}

GradedMatrix m_tilde(const ConnectionContext& cc, long t) {
  if (cc.spectral().k_t(t).is_zero())
    throw std::domain_error("tilde matrix undefined: K_t vanishes");
  return cc.a_matrix(t) * Rational(1, 4);
}

GradedMatrix n_tilde(const ConnectionContext& cc, long r, long s) {
  if (cc.spectral().k_rs(r, s).is_zero())
    throw std::domain_error("tilde matrix undefined: K_{r,s} vanishes");
  return cc.b_matrix(r, s) * Rational(1, 4);
}

} // namespace kz
