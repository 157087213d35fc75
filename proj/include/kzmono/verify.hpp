#pragma once

#include "kzmono/numerics.hpp"
#include "kzmono/search.hpp"

namespace kz {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

bool all_passed(const std::vector<CheckResult>& checks);

// Congruence sweeps: (T^t S)^3 == +-E mod (t+1) for 1 <= t <= t_max, and
// (T^r S T^s S)^2 == +-E mod |rs-2| for r, s in [-rs_bound, rs_bound]
// excluding 1 with |rs-2| >= 2; plus the discrepancy report of the literal
// closed forms against direct evaluation (a global sign for the first
// family, the (2,1) entry sign for the second).
std::vector<CheckResult> verify_lemmas(long t_max, long rs_bound);

// Exact group relations, closed forms, trace/det identities, and the
// floating-point cross-channel for one weight. Exponent parameters range
// over [-range, range].
std::vector<CheckResult> verify_relations(const Weight& k, long range);

// Exhaustive residue-class check: for all reduced p/q with q in
// [q_lo, q_hi] (p over one full period of 12q), the classes solving both
// rs == 2 (mod Q) and the cosine identity are exactly +-(1,2), +-(2,1).
std::vector<CheckResult> verify_rseqpm12(long q_lo, long q_hi);

// The acceptance weight grid {a/b : 1 <= b <= max_den, |a| <= max_num,
// reduced, non-degenerate, gate-valid}.
std::vector<Weight> oracle_weight_grid(long max_den, long max_num);

// Floating-point screen for the exact commutator test. The embedding stores
// the three commutator-relevant coefficients of a graded matrix together
// with rigorous absolute error bounds; commutator_certainly_nonzero returns
// true only when some commutator entry is bounded away from zero by a wide
// safety margin, so a true verdict is a proof of non-commutation and the
// exact test is only needed for the (rare) remaining pairs.
struct EmbeddedMatrix {
  std::complex<double> u, l, d; // u12, l21, d11 - d22
  double eu = 0, el = 0, ed = 0;
};
EmbeddedMatrix embed_for_filter(const GradedMatrix& m);
bool commutator_certainly_nonzero(const EmbeddedMatrix& a,
                                  const EmbeddedMatrix& b, bool closure_zero);

// Classifier-versus-commutator grids for a single weight: every verdict is
// compared with the exact commutator of the corresponding matrices, over
// r, s, u, v in [-bound, bound] \ {1} and t in [-bound, bound] \ {0}.
// Pairs screened as certainly non-commuting skip the exact commutator.
CheckResult verify_oracle_nn(const Weight& k, long bound);
CheckResult verify_oracle_mn(const Weight& k, long bound);

// Both oracle grids over the full weight grid; one result per weight and
// family.
std::vector<CheckResult> verify_oracle(long max_den, long max_num, long bound);

} // namespace kz
