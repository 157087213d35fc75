#pragma once

#include "kzmono/commute.hpp"

#include <optional>

namespace kz {

// Q = 6q / gcd(p+q, 6): the exact period of l -> Z_l, and the modulus in
// which all residue searches below take place.
long modulus_q(long p, long q);

// Solutions of K_t = 0 in the weight: k = 6c/(t+1) - 1 or k = 6c/(t-1) - 1.
struct KtZeroWeight {
  Rational k;
  long c;
  int branch; // +1 for the t+1 denominator, -1 for t-1
  bool degenerate;

  bool operator==(const KtZeroWeight& o) const = default;
};
// All weights of that form with c in [c_lo, c_hi], deduplicated by value,
// degenerate ones flagged. t = 1 and t = 0 are rejected with an explanation
// (K_1 vanishes identically; K_0 = 4 never vanishes).
std::vector<KtZeroWeight> k_t_zero_weights(long t, long c_lo, long c_hi);

// The cosine identity cos(r theta) cos(s theta) = cos((r-s) theta) cos(2 theta),
// evaluated exactly as four-term root-of-unity sums. Equivalent to
// K_{r,s} = 0 (a tested invariant, not assumed here).
bool k_rs_identity(const Weight& k, long r, long s);

// True iff k = 6c/N - 1 for some integer c, i.e. N(k+1)/6 is an integer.
bool ke6cdnm1_check(const Weight& k, long n);

// All residue classes (r, s) mod Q with rs == 2 (mod Q) whose lifts satisfy
// the cosine identity. For every reduced p/q with 3 <= q <= 21 the result is
// exactly {(1,2), (2,1), (Q-1,Q-2), (Q-2,Q-1)}.
std::vector<std::pair<long, long>> rseqpm12_enumerate(long p, long q);

// Two distinct residue pairs mod Q with product 2, avoiding +-(1,2) and
// +-(2,1), exactly one member odd, and K_{r,s} verified nonzero exactly.
// Representatives for odd Q are parity-adjusted by adding Q to the second
// member. Selection is lexicographic and deterministic, except Q = 30 with
// q = 5, where the pairs (7,26), (13,14) are pinned (they are the standard
// choice for the fifth-integer weights and all conditions are re-verified).
// For q >= 6 existence is guaranteed; smaller q succeeds whenever the
// enumeration finds two pairs, which covers every weight the classifier
// sends here.
std::array<std::pair<long, long>, 2> find_admissible_pairs(long p, long q);

// Lift a residue pair to integers (x, y) with x == r, y == s (mod Q),
// gcd(odd member lift, n_target) = 1, and M = x y - 2 a multiple of n_target
// with M > n_target. n_target must be a positive multiple of Q. The lift is
// built from the odd member (whose coprimality to Q is automatic) with
// minimal shifts, so witnesses stay small and reproducible.
std::pair<long, long> lift_pair(long p, long q, std::pair<long, long> pair,
                                long n_target);

enum class Verdict { Allowed, Excluded, Degenerate };
std::string verdict_str(Verdict v);

// A verified non-commutativity certificate: two words in Gamma(6qN) whose
// connection matrices fail to commute.
struct Witness {
  Weight k;
  long level = 1;    // N
  long n_target = 0; // 6 q N
  long modulus = 0;  // Q
  std::array<std::pair<long, long>, 2> pairs; // residue pairs mod Q
  std::array<std::pair<long, long>, 2> lifts; // integer lifts (x, y)
  std::array<Word, 2> words;                  // (T^x S T^y S)^2
  std::array<Membership, 2> membership;       // mod 6qN
  bool commutator_nonzero = false;
};

struct ClassificationResult {
  Verdict verdict = Verdict::Excluded;
  std::string reason;
  std::optional<Witness> witness;
};

// The weight classifier. Allowed weights carry the prior-work family tag;
// degenerate weights carry an informational note; every other weight is
// Excluded. Exclusions with q >= 2 carry a Witness whose invariants are
// re-verified before returning (hard error on any internal failure).
// Integer weights k == 0, 4 (mod 6) are excluded by citation: their
// fundamental system pairs a modular form with a mixed mock modular partner,
// and no witness exists at modulus 6 (the residue search is provably empty).
ClassificationResult classify_weight(const Weight& k, long level);

} // namespace kz
