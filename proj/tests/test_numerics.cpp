#include "doctest.h"

#include "kzmono/connection.hpp"
#include "kzmono/numerics.hpp"

#include <cmath>

using namespace kz;

namespace {

const double PI = std::acos(-1.0);
const double SQRT_PI = std::sqrt(PI);

double rel_err(Complex got, Complex want) {
  return std::abs(got - want) / std::abs(want);
}

} // namespace

TEST_CASE("gamma function anchors") {
  CHECK(rel_err(complex_gamma(0.5), SQRT_PI) < 1e-12);
  CHECK(rel_err(complex_gamma(1.5), SQRT_PI / 2.0) < 1e-12);
  CHECK(rel_err(complex_gamma(-0.5), -2.0 * SQRT_PI) < 1e-12);
  CHECK(rel_err(complex_gamma(1.0), 1.0) < 1e-13);
  // Gamma(50) = 49!.
  double f49 = 1.0;
  for (int i = 2; i <= 49; ++i) f49 *= i;
  CHECK(rel_err(complex_gamma(50.0), f49) < 1e-11);
  // Recurrence and reflection off the real axis.
  const Complex z{0.3, 0.7};
  CHECK(std::abs(complex_gamma(z + 1.0) - z * complex_gamma(z)) < 1e-12);
  const Complex refl = complex_gamma(z) * complex_gamma(1.0 - z);
  CHECK(rel_err(refl, PI / std::sin(PI * z)) < 1e-11);
  CHECK_THROWS_AS(complex_gamma(0.0), GammaPole);
  CHECK_THROWS_AS(complex_gamma(-3.0), GammaPole);
}

TEST_CASE("rational to double conversion") {
  CHECK(to_double(Rational(1, 3)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(to_double(Rational(-7, 2)) == -3.5);
}

TEST_CASE("hypergeometric parameters of a weight") {
  const HypergeomParams hp = HypergeomParams::from_weight(Weight{13, 6});
  CHECK(hp.a == Rational(-13, 72));
  CHECK(hp.b == Rational(11, 72));
  CHECK(hp.c == Rational(17, 36));
  CHECK(hp.lambda == Rational(19, 36));
  CHECK(hp.mu == Rational(1, 2));
  CHECK(hp.nu == Rational(1, 3));
  for (const Weight& k : {Weight{2, 1}, Weight{7, 5}, Weight{13, 6}}) {
    const HypergeomParams p = HypergeomParams::from_weight(k);
    CHECK(p.a + p.b - p.c == Rational(-1, 2));
    CHECK(p.lambda == (Rational(1) + k.value()) / Rational(6));
  }
}

TEST_CASE("direct hypergeometric series") {
  // 2F1(1,1;2;x) = -log(1-x)/x.
  CHECK(std::abs(hyp2f1(1.0, 1.0, 2.0, 0.5) - 2.0 * std::log(2.0)) < 1e-13);
  // 2F1(a,b;b;x) = (1-x)^{-a}.
  CHECK(std::abs(hyp2f1(0.25, 3.0, 3.0, 0.6) - std::pow(0.4, -0.25)) < 1e-13);
  CHECK(std::abs(hyp2f1(2.0, -1.0, 5.0, 0.3) - (1.0 - 2.0 * 0.3 / 5.0)) <
        1e-14);
  CHECK_THROWS_AS(hyp2f1(1.0, 1.0, 2.0, 0.9), std::domain_error);
}

TEST_CASE("connection coefficients and the closure product") {
  for (const Weight& k :
       {Weight{2, 1}, Weight{13, 6}, Weight{7, 5}, Weight{6, 1}}) {
    const GammaConstants gc = gamma_constants(k);
    const SpectralContext sc{k};
    const Complex c = sc.cap_c().to_complex();
    CHECK(std::abs(16.0 * gc.g12 * gc.g21 - (c / 2.0 + 1.0)) < 1e-12);
  }
  // B vanishes exactly for k == 0 (mod 12), k >= 0 and k == 4 (mod 12), k >= 4.
  CHECK(gamma_constants(Weight{0, 1}).b_zero);
  CHECK(gamma_constants(Weight{12, 1}).b_zero);
  CHECK(gamma_constants(Weight{4, 1}).b_zero);
  CHECK(gamma_constants(Weight{16, 1}).b_zero);
  CHECK_FALSE(gamma_constants(Weight{6, 1}).b_zero);
  CHECK_FALSE(gamma_constants(Weight{2, 1}).b_zero);
  CHECK_FALSE(gamma_constants(Weight{13, 6}).b_zero);
  CHECK_FALSE(gamma_constants(Weight{-12, 1}).b_zero);
}

TEST_CASE("hypergeometric connection identity holds numerically") {
  for (const Weight& k : {Weight{13, 6}, Weight{7, 5}}) {
    const HypergeomParams hp = HypergeomParams::from_weight(k);
    CHECK(connection_identity_error(hp, 0.3) < 1e-10);
    CHECK(connection_identity_error(hp, 0.6) < 1e-10);
  }
  CHECK_THROWS_AS(
      connection_identity_error(HypergeomParams::from_weight(Weight{13, 6}),
                                0.9),
      std::domain_error);
}

TEST_CASE("numeric generators satisfy the group relations") {
  for (const Weight& k : {Weight{2, 1}, Weight{13, 6}, Weight{7, 5}}) {
    const NumericGenerators ng = numeric_generators(k);
    const CMat2 s2 = cmat_mul(ng.rho_s, ng.rho_s);
    CHECK(cmat_distance(s2, CMat2{1.0, 0.0, 0.0, 1.0}) < 1e-9);
    // (rho(T) rho(S))^3 is scalar: compare with its (1,1) entry times E.
    const CMat2 ts = cmat_mul(ng.rho_t, ng.rho_s);
    const CMat2 ts3 = cmat_mul(ts, cmat_mul(ts, ts));
    CHECK(std::abs(ts3[1]) < 1e-9);
    CHECK(std::abs(ts3[2]) < 1e-9);
    CHECK(std::abs(ts3[0] - ts3[3]) < 1e-9);

    // The exact generators embed onto the numeric ones.
    const ConnectionContext cc{k};
    const GammaConstants gc = gamma_constants(k);
    CHECK(cmat_distance(ng.rho_t,
                        embed_graded(cc.rho_t(), gc.g12, gc.g21)) < 1e-9);
    CHECK(cmat_distance(ng.rho_s,
                        embed_graded(cc.rho_s(), gc.g12, gc.g21)) < 1e-9);
  }
  CHECK_THROWS_AS(numeric_generators(Weight{5, 1}), std::domain_error);
  CHECK_THROWS_AS(numeric_generators(Weight{0, 1}), std::domain_error);
}

TEST_CASE("complex matrix helpers") {
  const CMat2 m{Complex{1, 1}, Complex{2, 0}, Complex{0, 1}, Complex{3, -1}};
  const CMat2 e{1.0, 0.0, 0.0, 1.0};
  CHECK(cmat_distance(cmat_mul(m, e), m) == 0.0);
  CHECK(cmat_distance(cmat_mul(m, cmat_inverse(m)), e) < 1e-14);
  CHECK(cmat_distance(m, m) == 0.0);
  CHECK_THROWS_AS(cmat_inverse(CMat2{1.0, 2.0, 2.0, 4.0}), std::domain_error);
}
