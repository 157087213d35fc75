#include "doctest.h"

#include "kzmono/connection.hpp"

using namespace kz;

namespace {

std::vector<Weight> sample_weights() {
  return {Weight{2, 1}, Weight{1, 2}, Weight{13, 6}, Weight{7, 5},
          Weight{6, 1}};
}

} // namespace

TEST_CASE("the gate rejects degenerate and invalid weights") {
  for (long p : {0L, 4L, 5L, 11L, 12L, -1L}) {
    CHECK_THROWS_AS((ConnectionContext{Weight{p, 1}}), std::invalid_argument);
  }
  CHECK_NOTHROW((ConnectionContext{Weight{6, 1}}));
  CHECK_NOTHROW((ConnectionContext{Weight{13, 6}}));
  // Bypass admits gate-invalid weights but never degenerate ones.
  CHECK_NOTHROW(ConnectionContext(Weight{0, 1}, ConnectionContext::Gate::bypass));
  CHECK_THROWS_AS(ConnectionContext(Weight{5, 1}, ConnectionContext::Gate::bypass),
                  std::invalid_argument);
}

TEST_CASE("generator structure and group relations") {
  for (const Weight& k : sample_weights()) {
    const ConnectionContext cc{k};
    const SpectralContext& sc = cc.spectral();
    const CycNum one = CycNum::one(sc.field());
    const CycNum i = sc.imag_unit();

    const GradedMatrix t = cc.rho_t();
    CHECK(t.d11() == one);
    CHECK(t.l21().is_zero());
    CHECK(t.d22() == sc.z(1));
    CHECK(t.u12() == (one - sc.z(1)) * i * Rational(4));

    const GradedMatrix s = cc.rho_s();
    CHECK(s.d11() == -one);
    CHECK(s.u12().is_zero());
    CHECK(s.l21() == -(i * Rational(4)));
    CHECK(s.d22() == one);

    CHECK(s * s == cc.identity());
    const GradedMatrix ts = t * s;
    CHECK(ts * ts * ts == GradedMatrix::scalar(cc.ring(), cc.ts_cubed_scalar()));
    // The scalar is -i e^{3 i theta} = -zeta^{3q + 3(p+q)}.
    CHECK(cc.ts_cubed_scalar() == -sc.zeta(3 * k.q + 3 * (k.p + k.q)));

    CHECK(t.det() == sc.z(1));
    CHECK(s.det() == -one);
  }
}

TEST_CASE("rho(T)^t telescopes over all integers") {
  const ConnectionContext cc{Weight{13, 6}};
  CHECK(cc.rho_t_pow(0) == cc.identity());
  CHECK(cc.rho_t_pow(1) == cc.rho_t());
  for (long a : {-3L, 0L, 2L, 5L}) {
    for (long b : {-2L, 1L, 4L}) {
      CHECK(cc.rho_t_pow(a + b) == cc.rho_t_pow(a) * cc.rho_t_pow(b));
    }
  }
  CHECK(cc.rho_t_pow(-2) == cc.rho_t_pow(2).inverse());
  CHECK(cc.rho_t_pow(7).det() == cc.spectral().z(7));
}

TEST_CASE("A, M, B, N closed forms match repeated products") {
  for (const Weight& k : sample_weights()) {
    const ConnectionContext cc{k};
    const SpectralContext& sc = cc.spectral();
    for (long t = -4; t <= 4; ++t) {
      const GradedMatrix a = cc.a_matrix(t);
      CHECK(a == cc.rho_t_pow(t) * cc.rho_s());
      CHECK(a.trace() == -(sc.w(t) * Rational(1, 2)));
      CHECK(a.det() == -sc.z(t));
      if (t != 0) {
        CHECK(cc.m_matrix(t) == a.pow(3));
        // Cayley-Hamilton for A: M = (K_t/4) A - (Z_t W_t/2) E.
        CHECK(cc.m_matrix(t) ==
              a * (sc.k_t(t) * Rational(1, 4)) -
                  GradedMatrix::scalar(cc.ring(),
                                       sc.z(t) * sc.w(t) * Rational(1, 2)));
      }
    }
    for (long r : {-3L, 0L, 2L, 4L}) {
      for (long s : {-2L, 0L, 3L, 5L}) {
        const GradedMatrix b = cc.b_matrix(r, s);
        CHECK(b == cc.a_matrix(r) * cc.a_matrix(s));
        CHECK(b.trace() == sc.k_rs(r, s) * Rational(1, 4));
        CHECK(b.det() == sc.z(r) * sc.z(s));
        const GradedMatrix n = cc.n_matrix(r, s);
        CHECK(n == b.pow(2));
        // Cayley-Hamilton for B: N = (K_{r,s}/4) B - Z_r Z_s E.
        CHECK(n == b * (sc.k_rs(r, s) * Rational(1, 4)) -
                       GradedMatrix::scalar(cc.ring(), sc.z(r) * sc.z(s)));
        CHECK(n.det() == (sc.z(r) * sc.z(s)) * (sc.z(r) * sc.z(s)));
      }
    }
  }
}

TEST_CASE("scalar degenerations of N") {
  const ConnectionContext cc{Weight{13, 6}};
  // A(0) = rho(S), so N(0,0) = E although K_{0,0} = 8.
  CHECK(cc.n_matrix(0, 0).is_identity());
  CHECK(cc.spectral().k_rs(0, 0) ==
        CycNum::from_rational(cc.spectral().field(), Rational(8)));
  // Z_r = Z_s = 1 forces a scalar even with K != 0.
  const long q = cc.spectral().z_period();
  CHECK(cc.n_matrix(0, q).is_scalar());
  CHECK(cc.n_matrix(q, 2 * q).is_scalar());
}

TEST_CASE("word representation multiplies out exactly") {
  const ConnectionContext cc{Weight{7, 5}};
  CHECK(cc.word_representation(parse_word("")) == cc.identity());
  CHECK(cc.word_representation(parse_word("S^2")) == cc.identity());
  CHECK(cc.word_representation(parse_word("T^-2 T^2")) == cc.identity());
  CHECK(cc.word_representation(word_tts3(3)) == cc.m_matrix(3));
  CHECK(cc.word_representation(word_trsts2(2, 3)) == cc.n_matrix(2, 3));
  CHECK(cc.word_representation(parse_word("T^4 S")) == cc.a_matrix(4));
}

TEST_CASE("matrix preconditions") {
  const ConnectionContext cc{Weight{13, 6}};
  CHECK_THROWS_AS(cc.m_matrix(0), std::invalid_argument);
  CHECK_THROWS_AS(cc.n_matrix(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(cc.n_matrix(3, 1), std::invalid_argument);
}
