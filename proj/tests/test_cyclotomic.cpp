#include "doctest.h"

#include "kzmono/cyclotomic.hpp"

#include <complex>

using namespace kz;

namespace {

std::vector<Integer> ivec(std::initializer_list<long> v) {
  return std::vector<Integer>(v.begin(), v.end());
}

} // namespace

TEST_CASE("cyclotomic polynomials match the classical tables") {
  CHECK(cyclotomic_poly(1) == ivec({-1, 1}));
  CHECK(cyclotomic_poly(2) == ivec({1, 1}));
  CHECK(cyclotomic_poly(3) == ivec({1, 1, 1}));
  CHECK(cyclotomic_poly(4) == ivec({1, 0, 1}));
  CHECK(cyclotomic_poly(6) == ivec({1, -1, 1}));
  CHECK(cyclotomic_poly(12) == ivec({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_poly(24) == ivec({1, 0, 0, 0, -1, 0, 0, 0, 1}));
  CHECK(cyclotomic_poly(36) == ivec({1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1}));
  CHECK(cyclotomic_poly(60) == ivec({1, 0, 1, 0, 0, 0, -1, 0, -1, 0, -1, 0, 0, 0, 1, 0, 1}));
  // Phi_105 is the first with a coefficient outside {-1,0,1}.
  auto p105 = cyclotomic_poly(105);
  CHECK(p105.size() == 49);
  CHECK(p105[7] == -2);
  CHECK(p105[41] == -2);
}

TEST_CASE("field context validates conductors and exposes phi(n)") {
  CHECK_THROWS_AS(FieldContext::make(6), std::invalid_argument);
  CHECK_THROWS_AS(FieldContext::make(0), std::invalid_argument);
  CHECK_THROWS_AS(FieldContext::make(724), std::invalid_argument);
  auto f12 = FieldContext::make(12);
  CHECK(f12->degree() == 4);
  CHECK(FieldContext::make(60)->degree() == 16);
  CHECK(FieldContext::make(720)->degree() == 192);
  // Cached: the same context object comes back.
  CHECK(FieldContext::make(12).get() == f12.get());
}

TEST_CASE("power table reduces zeta^j correctly") {
  auto f4 = FieldContext::make(4);
  CHECK(f4->power(0) == ivec({1, 0}));
  CHECK(f4->power(1) == ivec({0, 1}));
  CHECK(f4->power(2) == ivec({-1, 0}));
  CHECK(f4->power(3) == ivec({0, -1}));
  // zeta_12^4 is a primitive cube root: zeta^4 = zeta^2 - 1 mod Phi_12.
  auto f12 = FieldContext::make(12);
  CHECK(f12->power(4) == ivec({-1, 0, 1, 0}));
  CHECK(f12->power(6) == ivec({-1, 0, 0, 0})); // zeta^6 = -1
}

TEST_CASE("roots of unity satisfy their defining relations") {
  for (long n : {4L, 12L, 24L, 60L}) {
    auto f = FieldContext::make(n);
    CycNum z = CycNum::root(f, 1);
    CycNum p = CycNum::one(f);
    for (long j = 1; j <= n; ++j) {
      p = p * z;
      CHECK(p == CycNum::root(f, j));
    }
    CHECK(p == CycNum::one(f)); // zeta^n == 1
    CHECK(CycNum::root(f, n / 2) == -CycNum::one(f));
    // i^2 == -1 with i = zeta^{n/4}
    CycNum i = CycNum::root(f, n / 4);
    CHECK(i * i == -CycNum::one(f));
    // negative exponents reduce mod n
    CHECK(CycNum::root(f, -1) == CycNum::root(f, n - 1));
  }
}

TEST_CASE("arithmetic is a field: inverses and cancellation") {
  auto f = FieldContext::make(12);
  CycNum z = CycNum::root(f, 1);
  CycNum a = z * Rational(3, 7) + Rational(2) - z * z * Rational(1, 5);
  CHECK((a * a.inverse()) == CycNum::one(f));
  CHECK((a / a) == CycNum::one(f));
  CHECK_THROWS_AS(CycNum::zero(f).inverse(), std::domain_error);

  // 1/(1 - zeta_3) = (1 - zeta_3^2)/3 with zeta_3 = zeta_12^4.
  CycNum z3 = CycNum::root(f, 4);
  CycNum lhs = (CycNum::one(f) - z3).inverse();
  CycNum rhs = (CycNum::one(f) - z3 * z3) * Rational(1, 3);
  CHECK(lhs == rhs);
}

TEST_CASE("rational detection and extraction") {
  auto f = FieldContext::make(12);
  CycNum z = CycNum::root(f, 1);
  CHECK(CycNum::from_rational(f, Rational(-5, 3)).is_rational());
  CHECK(CycNum::from_rational(f, Rational(-5, 3)).to_rational() == Rational(-5, 3));
  CHECK_FALSE(z.is_rational());
  CHECK_THROWS_AS(z.to_rational(), std::domain_error);
  // zeta + zeta^-1 for n=12 is sqrt(3), not rational; zeta^3 + zeta^-3 is 0.
  CHECK_FALSE((CycNum::root(f, 1) + CycNum::root(f, -1)).is_rational());
  CHECK((CycNum::root(f, 3) + CycNum::root(f, -3)).is_zero());
}

TEST_CASE("from_terms folds arbitrary exponents") {
  auto f = FieldContext::make(12);
  CycNum s = CycNum::from_terms(f, {{5, Rational(1)}, {-7, Rational(1)}});
  CHECK(s == CycNum::root(f, 5) * Rational(2));
  CycNum t = CycNum::from_terms(f, {{0, Rational(1, 2)}, {6, Rational(1, 2)}});
  CHECK(t.is_zero());
}

TEST_CASE("mixed conductors are rejected") {
  auto f12 = FieldContext::make(12);
  auto f24 = FieldContext::make(24);
  CycNum a = CycNum::one(f12);
  CycNum b = CycNum::one(f24);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(CycNum{} + a, std::logic_error);
}

TEST_CASE("numeric embedding agrees with the unit circle") {
  auto f = FieldContext::make(60);
  for (long j : {0L, 1L, 7L, 30L, 59L}) {
    auto v = CycNum::root(f, j).to_complex();
    double arg = 2.0 * 3.14159265358979323846 * double(j) / 60.0;
    CHECK(std::abs(v - std::polar(1.0, arg)) < 1e-12);
  }
  // A nontrivial exact identity checked numerically: 2 cos(pi/6) = sqrt(3).
  auto c = (CycNum::root(f, 5) + CycNum::root(f, -5)).to_complex();
  CHECK(std::abs(c.real() - std::sqrt(3.0)) < 1e-12);
  CHECK(std::abs(c.imag()) < 1e-15);
}

TEST_CASE("multiplication is a ring homomorphism numerically") {
  // Random-ish pair in a larger field: compare exact product against complex.
  auto f = FieldContext::make(84);
  CycNum a = CycNum::from_terms(f, {{1, Rational(2, 3)}, {11, Rational(-1, 4)}, {25, Rational(5)}});
  CycNum b = CycNum::from_terms(f, {{3, Rational(7, 2)}, {40, Rational(1, 9)}});
  auto lhs = (a * b).to_complex();
  auto rhs = a.to_complex() * b.to_complex();
  CHECK(std::abs(lhs - rhs) < 1e-9);
}

TEST_CASE("string form is readable") {
  auto f = FieldContext::make(12);
  CHECK(CycNum::zero(f).str() == "0");
  CHECK(CycNum::one(f).str() == "1");
  CycNum x = CycNum::root(f, 2) * Rational(-3, 2) + Rational(1);
  CHECK(x.str() == "1 - 3/2*z^2");
}
