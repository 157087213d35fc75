#include "doctest.h"

#include "kzmono/commute.hpp"
#include "kzmono/verify.hpp"

using namespace kz;

namespace {

std::vector<long> ns_span(long bound) {
  std::vector<long> v;
  for (long x = -bound; x <= bound; ++x) {
    if (x != 1) v.push_back(x);
  }
  return v;
}

// Exact classifier-versus-commutator sweep with no floating-point screen.
void exact_sweep(const Weight& k, ConnectionContext::Gate gate, long bound,
                 std::map<int, long>& nn_hits, std::map<int, long>& mn_hits) {
  const ConnectionContext cc{k, gate};
  const SpectralContext& sc = cc.spectral();
  const auto span = ns_span(bound);
  std::map<std::pair<long, long>, GradedMatrix> n_cache;
  for (long r : span) {
    for (long s : span) {
      n_cache.emplace(std::make_pair(r, s), cc.n_matrix(r, s));
    }
  }
  for (long r : span) {
    for (long s : span) {
      const GradedMatrix& nrs = n_cache.at({r, s});
      for (long u : span) {
        for (long v : span) {
          const CommuteVerdict verdict = nn_classify(sc, r, s, u, v);
          const bool oracle = commute_oracle(nrs, n_cache.at({u, v}));
          REQUIRE(verdict.commutes == oracle);
          if (verdict.commutes) ++nn_hits[verdict.condition];
        }
      }
    }
  }
  for (long t = -bound; t <= bound; ++t) {
    if (t == 0) continue;
    const GradedMatrix mt = cc.m_matrix(t);
    for (long r : span) {
      for (long s : span) {
        const CommuteVerdict verdict = mn_classify(sc, t, r, s);
        const bool oracle = commute_oracle(mt, n_cache.at({r, s}));
        REQUIRE(verdict.commutes == oracle);
        if (verdict.commutes) ++mn_hits[verdict.condition];
      }
    }
  }
}

} // namespace

TEST_CASE("commute_oracle equals the full commutator") {
  const ConnectionContext cc{Weight{13, 6}};
  for (long r : {-2L, 0L, 2L, 3L}) {
    for (long s : {-2L, 0L, 2L, 3L}) {
      const GradedMatrix a = cc.n_matrix(r, s);
      for (long u : {-2L, 0L, 3L}) {
        for (long v : {-2L, 2L, 3L}) {
          const GradedMatrix b = cc.n_matrix(u, v);
          CHECK(commute_oracle(a, b) == commutator(a, b).is_zero());
        }
      }
      CHECK(commute_oracle(cc.m_matrix(2), a) ==
            commutator(cc.m_matrix(2), a).is_zero());
    }
  }
}

TEST_CASE("classifier agrees with the commutator at generic weights") {
  std::map<int, long> nn_hits, mn_hits;
  for (const Weight& k :
       {Weight{2, 1}, Weight{13, 6}, Weight{1, 2}, Weight{9, 7}}) {
    exact_sweep(k, ConnectionContext::Gate::enforce, 3, nn_hits, mn_hits);
  }
  CHECK(nn_hits[1] > 0);
  CHECK(nn_hits[2] > 0);
  CHECK(mn_hits[1] > 0);
}

TEST_CASE("classifier agrees at closure-zero weights and uses the diagonal "
          "conditions") {
  std::map<int, long> nn_hits, mn_hits;
  exact_sweep(Weight{6, 1}, ConnectionContext::Gate::enforce, 4, nn_hits,
              mn_hits);
  exact_sweep(Weight{10, 1}, ConnectionContext::Gate::enforce, 4, nn_hits,
              mn_hits);
  CHECK(nn_hits[6] > 0);
  CHECK(mn_hits[4] > 0);
}

TEST_CASE("classifier agrees at C = 2 weights through the bypass gate") {
  std::map<int, long> nn_hits, mn_hits;
  exact_sweep(Weight{0, 1}, ConnectionContext::Gate::bypass, 4, nn_hits,
              mn_hits);
  exact_sweep(Weight{4, 1}, ConnectionContext::Gate::bypass, 4, nn_hits,
              mn_hits);
  CHECK(nn_hits[5] > 0);
  CHECK(mn_hits[5] > 0);
}

TEST_CASE("specific conditions fire in order at k = 13/6") {
  const SpectralContext sc{Weight{13, 6}};
  const long q = sc.z_period();
  REQUIRE(q == 36);

  CHECK(nn_classify(sc, 0, 0, 2, 3) == CommuteVerdict{true, 1});
  CHECK(nn_classify(sc, 2, 3, 2 + q, 3 - q) == CommuteVerdict{true, 2});
  CHECK(nn_classify(sc, 2, q, 3, 0) == CommuteVerdict{true, 3});
  CHECK(nn_classify(sc, q, 2, 0, 3) == CommuteVerdict{true, 4});
  CHECK(nn_classify(sc, 0, 2, 3, 0) == CommuteVerdict{false, 0});

  CHECK(mn_classify(sc, 1, 2, 3) == CommuteVerdict{true, 1});
  CHECK(mn_classify(sc, 2, q, 2 * q) == CommuteVerdict{true, 2});
  CHECK(mn_classify(sc, 2, 2 + q, 2 - q) == CommuteVerdict{true, 3});
  CHECK(mn_classify(sc, 2, 3, 4) == CommuteVerdict{false, 0});
}

TEST_CASE("diagonal-degeneration conditions at k = 6") {
  const SpectralContext sc{Weight{6, 1}};
  REQUIRE(sc.z_period() == 6);
  REQUIRE(sc.closure().is_zero());
  // Z_r Z_s = 1 kills both diagonal differences; Z_t = -1 kills M's.
  CHECK(nn_classify(sc, 2, 4, 3, 3) == CommuteVerdict{true, 6});
  CHECK(mn_classify(sc, 3, 2, 4) == CommuteVerdict{true, 4});
}

TEST_CASE("gated entry points enforce validity and degeneracy") {
  CHECK_THROWS_AS(thnnc_classify(Weight{0, 1}, 2, 3, 4, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(thmnc_classify(Weight{4, 1}, 2, 3, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(thnnc_classify(Weight{5, 1}, 2, 3, 4, 5),
                  std::invalid_argument);
  const SpectralContext sc{Weight{13, 6}};
  CHECK(thnnc_classify(Weight{13, 6}, 2, 3, 4, 5) ==
        nn_classify(sc, 2, 3, 4, 5));
  CHECK(thmnc_classify(Weight{13, 6}, 2, 3, 4) == mn_classify(sc, 2, 3, 4));
  CHECK_THROWS_AS(nn_classify(sc, 1, 2, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(mn_classify(sc, 0, 2, 3), std::invalid_argument);
}

TEST_CASE("N is scalar exactly when K = 0 or Z_r = Z_s = 1") {
  for (const Weight& k : {Weight{13, 6}, Weight{1, 2}, Weight{6, 1}}) {
    const ConnectionContext cc{k};
    const SpectralContext& sc = cc.spectral();
    for (long r : ns_span(4)) {
      for (long s : ns_span(4)) {
        const bool expected = sc.k_rs(r, s).is_zero() ||
                              (sc.z_equal(r, 0) && sc.z_equal(s, 0));
        CHECK(cc.n_matrix(r, s).is_scalar() == expected);
      }
    }
  }
}

TEST_CASE("pair criterion matches the oracle where applicable") {
  const ConnectionContext cc{Weight{13, 6}};
  for (long r : {-2L, 2L, 3L}) {
    for (long s : {-3L, 2L, 4L}) {
      const GradedMatrix a = cc.n_matrix(r, s);
      const GradedMatrix b = cc.m_matrix(3);
      if (!a.l21().is_zero() && !b.l21().is_zero()) {
        CHECK(pair_criterion(a, b) == commute_oracle(a, b));
      }
    }
  }
  // rho(T) has a vanishing (2,1) coefficient.
  CHECK_THROWS_AS(pair_criterion(cc.rho_t(), cc.rho_s()), std::domain_error);
}

TEST_CASE("off-diagonal system cases") {
  const SpectralContext sc{Weight{13, 6}};
  const OffDiagonalSystem generic = mneqnm_data(sc, 2, 3);
  CHECK(generic.solution_case == 1);
  CHECK_FALSE(generic.det.is_zero());
  const OffDiagonalSystem equal_z = mneqnm_data(sc, 2, 2 + sc.z_period());
  CHECK(equal_z.solution_case == 2);
  CHECK(equal_z.det.is_zero());
  // W_s = 0 hands over to the triangular case.
  CHECK_THROWS_AS(mneqnm_data(sc, 0, 3), std::domain_error);

  const SpectralContext flat{Weight{0, 1}};
  CHECK(mneqnm_data(flat, 2, 3).solution_case == 3);
}

TEST_CASE("triangular case") {
  const SpectralContext sc{Weight{13, 6}};
  const long q = sc.z_period();
  CHECK(triangular_case(sc, 2, q, 3, 2 * q));
  CHECK_FALSE(triangular_case(sc, 2, q, 3, 4));
  CHECK_THROWS_AS(triangular_case(sc, 2, 3, 4, 5), std::domain_error);
}

TEST_CASE("tilde matrices and the graded commutator entries") {
  const ConnectionContext cc{Weight{13, 6}};
  const SpectralContext& sc = cc.spectral();
  CHECK(m_tilde(cc, 2) == cc.a_matrix(2) * Rational(1, 4));
  CHECK(n_tilde(cc, 2, 3) == cc.b_matrix(2, 3) * Rational(1, 4));
  CHECK_THROWS_AS(m_tilde(cc, 1), std::domain_error);

  for (long t : {2L, 3L, -2L}) {
    for (long r : {-3L, 2L}) {
      for (long s : {3L, 4L}) {
        const TildeCommutatorEntries e = cmcnc_entries(sc, t, r, s);
        const GradedMatrix direct =
            commutator(m_tilde(cc, t), n_tilde(cc, r, s));
        CHECK(direct.d11() == e.c11.coeff);
        CHECK(direct.u12() == e.c12.coeff);
        CHECK(direct.l21() == e.c21.coeff);
        CHECK(direct.d22() == -e.c11.coeff);
        CHECK(e.c12.e12 == 1);
        CHECK(e.c21.e21 == 1);
        // [M, N] = K_t K_{r,s} [Mtilde, Ntilde].
        const CycNum scale = sc.k_t(t) * sc.k_rs(r, s);
        CHECK(commutator(cc.m_matrix(t), cc.n_matrix(r, s)) ==
              direct * scale);
      }
    }
  }
  CHECK_THROWS_AS(cmcnc_entries(sc, 1, 2, 3), std::domain_error);
}

TEST_CASE("floating-point screen is sound") {
  for (const Weight& k : {Weight{13, 6}, Weight{6, 1}}) {
    const ConnectionContext cc{k};
    const bool closure_zero = cc.spectral().closure().is_zero();
    const auto span = ns_span(3);
    long screened = 0;
    for (long r : span) {
      for (long s : span) {
        const GradedMatrix a = cc.n_matrix(r, s);
        const EmbeddedMatrix ea = embed_for_filter(a);
        for (long u : span) {
          for (long v : span) {
            const GradedMatrix b = cc.n_matrix(u, v);
            if (commutator_certainly_nonzero(ea, embed_for_filter(b),
                                             closure_zero)) {
              ++screened;
              CHECK_FALSE(commute_oracle(a, b));
            }
          }
        }
      }
    }
    CHECK(screened > 0);
  }
}

TEST_CASE("condition labels") {
  CHECK(condition_label(CommuteVerdict{false, 0}) == "none");
  CHECK(condition_label(CommuteVerdict{true, 3}) == "condition 3");
}
