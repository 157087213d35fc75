#pragma once

#include "kzmono/connection.hpp"

namespace kz {

// Outcome of a commutativity classification: which enumerated condition (if
// any) holds. Conditions follow the case lists documented at nn_classify and
// mn_classify below and are evaluated in order, first match wins.
struct CommuteVerdict {
  bool commutes = false;
  int condition = 0; // 1-based index of the matching condition; 0 = none

  bool operator==(const CommuteVerdict& o) const = default;
};

std::string condition_label(const CommuteVerdict& v);

// Early-exit test for AB = BA, equivalent to commutator(a, b).is_zero() but
// cheaper: the (1,1) difference needs only two coefficient products and
// already separates almost every non-commuting pair.
bool commute_oracle(const GradedMatrix& a, const GradedMatrix& b);

// The 2x2 criterion: when both (2,1) coefficients are nonzero, AB = BA iff
// a12/a21 = b12/b21 and (a11-a22)/a21 = (b11-b22)/b21. The G12/G21 markers
// are common to both sides of each ratio, so the test reduces to
// cross-multiplied CycNum identities. Throws std::domain_error when a (2,1)
// coefficient vanishes (criterion inapplicable).
bool pair_criterion(const GradedMatrix& a, const GradedMatrix& b);

// N(r,s) vs N(u,v): conditions
//   1. N(r,s) or N(u,v) is scalar: a K factor vanishes, or the matrix is
//      N(0,0)-like with Z_r = Z_s = 1 (then K = 8 but the non-scalar part
//      still degenerates, e.g. N(0,0) = E)
//   2. Z_s = Z_v and Z_r = Z_u
//   3. Z_s = Z_v = 1
//   4. Z_r = Z_u = 1
//   5. C = 2 and Z_u(Z_v-1) - Z_r(Z_s-1) = Z_r Z_u (Z_v - Z_s)
//   6. G12 G21 = 0 (C = -2, weight 6 or 10 mod 12) and both diagonal
//      differences vanish; the diagonal of the commutator carries the factor
//      G12 G21, so these pairs commute although the generic analysis, which
//      divides by that factor, does not list them
// The SpectralContext overload is the ungated core (condition 5 is only
// reachable there, since C = 2 forces an integer weight k == 0, 4 mod 12,
// which the gated entry point rejects).
CommuteVerdict nn_classify(const SpectralContext& sc, long r, long s, long u,
                           long v);
CommuteVerdict thnnc_classify(const Weight& k, long r, long s, long u, long v);

// M(t) vs N(r,s): conditions
//   1. K_t K_{r,s} = 0
//   2. Z_r = Z_s = 1
//   3. Z_t = Z_r = Z_s
//   4. G12 G21 = 0 and both diagonal differences vanish (4 Z_t + W_t = 0 and
//      the N analogue), the same degeneration as N-N condition 6
//   5. C = 2 and Z_t(Z_r-1) = Z_r(Z_s-1); like N-N condition 5 this is only
//      reachable through the ungated core
CommuteVerdict mn_classify(const SpectralContext& sc, long t, long r, long s);
CommuteVerdict thmnc_classify(const Weight& k, long t, long r, long s);

// The linear system behind the N-N analysis. Setting X = 1/Z_r, Y = 1/Z_u,
// commutativity of N(r,s) and N(u,v) (with K-products and W_s W_v nonzero)
// is equivalent to
//   [ A1(s)  -A1(v) ] [X]   [ B1(s) - B1(v) ]  ... stacked with the A2/B2 row,
//   [ A2(s)  -A2(v) ] [Y] =  ...
// where
//   A1(l) = (G12/G21) ((2-C) Z_l + C)/W_l,
//   A2(l) = (-i/8)(1/G21) ((4-C^2) Z_l + C^2)/W_l,
//   B1(l) = (G12/G21) (W_l - 2)/W_l,
//   B2(l) = (-i/8)(1/G21) ((4+C) W_l - 4)/W_l.
// All eight constants and the determinant carry their grade markers.
struct OffDiagonalSystem {
  GradedScalar a1_s, a2_s, b1_s, b2_s;
  GradedScalar a1_v, a2_v, b1_v, b2_v;
  GradedScalar det;  // of [[A1(s), -A1(v)], [A2(s), -A2(v)]]
  int solution_case; // 1: unique solution X = Y = 1
                     // 2: Z_s = Z_v, solution line X = Y
                     // 3: C = 2, degenerate line
};
// Throws std::domain_error when W_s or W_v vanishes (the triangular case
// takes over there).
OffDiagonalSystem mneqnm_data(const SpectralContext& sc, long s, long v);

// Triangular special case: when Z_s = 1 (and the K-products are nonzero, so
// neither matrix is scalar), N(r,s) is upper triangular and commutativity
// with N(u,v) holds iff Z_v = 1. Preconditions are checked.
bool triangular_case(const SpectralContext& sc, long r, long s, long u, long v);

// Closed-form entries of the tilde commutator [Mtilde_t, Ntilde_{r,s}],
// where M(t) = -(1/2) Z_t W_t E + K_t Mtilde_t and
// N(r,s) = -Z_r Z_s E + K_{r,s} Ntilde_{r,s}. c22 = -c11 is implicit.
// Throws std::domain_error when K_t or K_{r,s} vanishes (tilde undefined).
struct TildeCommutatorEntries {
  GradedScalar c11; // marker-free (G12 G21 folded into the coefficient)
  GradedScalar c12; // carries G12
  GradedScalar c21; // carries G21
};
TildeCommutatorEntries cmcnc_entries(const SpectralContext& sc, long t, long r,
                                     long s);

// The tilde matrices themselves (Mtilde_t = A(t)/4, Ntilde_{r,s} = B(r,s)/4),
// with the same K != 0 preconditions as the decomposition.
GradedMatrix m_tilde(const ConnectionContext& cc, long t);
GradedMatrix n_tilde(const ConnectionContext& cc, long r, long s);

} // namespace kz
