#include "doctest.h"

#include "kzmono/search.hpp"

#include <numeric>
#include <set>

using namespace kz;

TEST_CASE("Z period modulus") {
  CHECK(modulus_q(2, 5) == 30);
  CHECK(modulus_q(13, 6) == 36);
  CHECK(modulus_q(1, 7) == 21);
  CHECK(modulus_q(7, 5) == 5);
  CHECK(modulus_q(1, 1) == 3);
  CHECK(modulus_q(2, 1) == 2);
  for (const Weight& k : {Weight{13, 6}, Weight{2, 5}, Weight{9, 7}}) {
    CHECK(modulus_q(k.p, k.q) == SpectralContext{k}.z_period());
  }
}

TEST_CASE("weights with K_t = 0 come from the two branch families") {
  const auto ws = k_t_zero_weights(2, 1, 2);
  // t = 2: k = 6c/3 - 1 = 2c - 1 and k = 6c/1 - 1 = 6c - 1.
  std::set<Rational> values;
  for (const auto& w : ws) values.insert(w.k);
  CHECK(values ==
        std::set<Rational>{Rational(1), Rational(3), Rational(5), Rational(11)});
  for (const auto& w : ws) {
    CHECK(w.degenerate == is_degenerate(Weight::of(w.k)));
    if (!w.degenerate) {
      const SpectralContext sc{Weight::of(w.k)};
      CHECK(sc.k_t(2).is_zero());
    }
  }
  // Fractional zeros appear for t = 3: k = 6c/4 - 1 = 3c/2 - 1.
  const auto w3 = k_t_zero_weights(3, 1, 1);
  bool found_half = false;
  for (const auto& w : w3) {
    if (w.k == Rational(1, 2)) {
      found_half = true;
      CHECK(w.branch == 1);
      CHECK(w.c == 1);
      CHECK(SpectralContext{Weight::of(w.k)}.k_t(3).is_zero());
    }
  }
  CHECK(found_half);
  CHECK_THROWS_AS(k_t_zero_weights(1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(k_t_zero_weights(0, 1, 2), std::invalid_argument);
}

TEST_CASE("membership in the k = 6c/N - 1 family") {
  CHECK(ke6cdnm1_check(Weight{1, 2}, 4));  // c = 1
  CHECK(ke6cdnm1_check(Weight{2, 1}, 2));  // c = 1
  CHECK(ke6cdnm1_check(Weight{2, 1}, 4));  // c = 2
  CHECK(ke6cdnm1_check(Weight{13, 6}, 36)); // (k+1) 36/6 = 19
  CHECK_FALSE(ke6cdnm1_check(Weight{1, 3}, 4));
  CHECK_FALSE(ke6cdnm1_check(Weight{13, 6}, 5));
  CHECK_FALSE(ke6cdnm1_check(Weight{2, 7}, 4));
}

TEST_CASE("cosine identity is equivalent to K_{r,s} = 0") {
  for (const Weight& k : {Weight{13, 6}, Weight{1, 2}, Weight{3, 1}}) {
    const SpectralContext sc{k};
    for (long r = -4; r <= 4; ++r) {
      for (long s = -4; s <= 4; ++s) {
        CHECK(k_rs_identity(k, r, s) == sc.k_rs(r, s).is_zero());
      }
    }
    CHECK(k_rs_identity(k, 2, 1));
  }
}

TEST_CASE("residue classes solving rs == 2 and the cosine identity") {
  auto expected = [](long q_mod) {
    return std::vector<std::pair<long, long>>{
        {1, 2}, {2, 1}, {q_mod - 2, q_mod - 1}, {q_mod - 1, q_mod - 2}};
  };
  auto sorted = [](std::vector<std::pair<long, long>> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(rseqpm12_enumerate(2, 5)) == sorted(expected(30)));
  CHECK(sorted(rseqpm12_enumerate(13, 6)) == sorted(expected(36)));
  CHECK(sorted(rseqpm12_enumerate(1, 7)) == sorted(expected(21)));
  CHECK(sorted(rseqpm12_enumerate(9, 7)) == sorted(expected(21)));
}

TEST_CASE("admissible pairs satisfy every side condition") {
  for (const Weight& k : {Weight{13, 6}, Weight{2, 5}, Weight{3, 5},
                          Weight{1, 4}, Weight{1, 3}, Weight{9, 7},
                          Weight{11, 8}}) {
    const long q_mod = modulus_q(k.p, k.q);
    const auto pairs = find_admissible_pairs(k.p, k.q);
    const SpectralContext sc{k};
    CHECK(pairs[0] != pairs[1]);
    for (const auto& [r, s] : pairs) {
      CHECK(mod_floor(r * s - 2, q_mod) == 0);
      CHECK((r + s) % 2 == 1); // exactly one member odd
      CHECK_FALSE(sc.k_rs(r, s).is_zero());
      const auto rm = mod_floor(r, q_mod), sm = mod_floor(s, q_mod);
      const bool banned =
          (rm == 1 && sm == 2) || (rm == 2 && sm == 1) ||
          (rm == q_mod - 1 && sm == q_mod - 2) ||
          (rm == q_mod - 2 && sm == q_mod - 1);
      CHECK_FALSE(banned);
    }
  }
  // The fifth-integer weights use the pinned pairs.
  const auto pinned = find_admissible_pairs(2, 5);
  CHECK(pinned[0] == std::pair<long, long>{7, 26});
  CHECK(pinned[1] == std::pair<long, long>{13, 14});
}

TEST_CASE("lifting residue pairs to coprime integer products") {
  for (const Weight& k : {Weight{13, 6}, Weight{2, 5}, Weight{9, 7}}) {
    const long q_mod = modulus_q(k.p, k.q);
    for (long level : {1L, 2L, 3L}) {
      const long n_target = 6 * k.q * level;
      for (const auto& pr : find_admissible_pairs(k.p, k.q)) {
        const auto [x, y] = lift_pair(k.p, k.q, pr, n_target);
        CHECK(mod_floor(x - pr.first, q_mod) == 0);
        CHECK(mod_floor(y - pr.second, q_mod) == 0);
        CHECK(mod_floor(x * y - 2, n_target) == 0);
        CHECK(x * y - 2 > n_target);
        const long odd = (x % 2 != 0) ? x : y;
        CHECK(std::gcd(odd, n_target) == 1);
      }
    }
  }
  CHECK_THROWS_AS(lift_pair(13, 6, {5, 22}, 35), std::invalid_argument);
}

TEST_CASE("verdict labels") {
  CHECK(verdict_str(Verdict::Allowed) == "Allowed");
  CHECK(verdict_str(Verdict::Excluded) == "Excluded");
  CHECK(verdict_str(Verdict::Degenerate) == "Degenerate");
}

TEST_CASE("classification of the prior-work families") {
  CHECK(classify_weight(Weight{1, 1}, 1).verdict == Verdict::Allowed);
  CHECK(classify_weight(Weight{2, 1}, 1).verdict == Verdict::Allowed);
  CHECK(classify_weight(Weight{9, 1}, 1).verdict == Verdict::Allowed);
  CHECK(classify_weight(Weight{7, 2}, 1).verdict == Verdict::Allowed);
  CHECK(classify_weight(Weight{13, 5}, 1).verdict == Verdict::Allowed);
  CHECK(classify_weight(Weight{-1, 1}, 1).verdict == Verdict::Degenerate);
  CHECK(classify_weight(Weight{11, 1}, 1).verdict == Verdict::Degenerate);
  const ClassificationResult citation = classify_weight(Weight{0, 1}, 1);
  CHECK(citation.verdict == Verdict::Excluded);
  CHECK_FALSE(citation.witness.has_value());
  CHECK(classify_weight(Weight{4, 1}, 1).verdict == Verdict::Excluded);
  CHECK_FALSE(classify_weight(Weight{16, 1}, 1).witness.has_value());
}

TEST_CASE("generic exclusions carry a verified witness") {
  for (long level : {1L, 2L}) {
    const ClassificationResult res = classify_weight(Weight{13, 6}, level);
    CHECK(res.verdict == Verdict::Excluded);
    REQUIRE(res.witness.has_value());
    const Witness& w = *res.witness;
    CHECK(w.level == level);
    CHECK(w.modulus == 36);
    CHECK(w.n_target == 36 * level);
    CHECK(w.commutator_nonzero);
    for (int i = 0; i < 2; ++i) {
      CHECK(w.membership[i] != Membership::Neither);
      CHECK(eval_word(w.words[i]) ==
            eval_word(word_trsts2(w.lifts[i].first, w.lifts[i].second)));
    }
  }
  CHECK_THROWS_AS(classify_weight(Weight{13, 6}, 0), std::invalid_argument);
  CHECK_THROWS_AS(classify_weight(Weight{13, 6}, 2000000),
                  std::invalid_argument);
}
