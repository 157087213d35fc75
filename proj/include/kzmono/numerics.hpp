#pragma once

#include "kzmono/graded.hpp"

#include <array>
#include <complex>
#include <stdexcept>

namespace kz {

using Complex = std::complex<double>;
using CMat2 = std::array<Complex, 4>; // row-major {a, b, c, d}

// Signalled when the Gamma function is evaluated at a non-positive integer.
struct GammaPole : std::domain_error {
  explicit GammaPole(long where)
      : std::domain_error("Gamma pole at " + std::to_string(where)),
        pole(where) {}
  long pole;
};

// Lanczos evaluation with reflection for Re z < 1/2. Relative error below
// 1e-12 for |z| <= 50 away from poles.
Complex complex_gamma(Complex z);

double to_double(const Rational& r);

// The hypergeometric parameters attached to a weight:
// a = -k/12, b = -(k-4)/12, c = -(k-5)/6, with a + b - c = -1/2, and the
// local exponents (lambda, mu, nu) = ((1+k)/6, 1/2, 1/3).
struct HypergeomParams {
  Rational a;
  Rational b;
  Rational c;
  Rational lambda;
  Rational mu;
  Rational nu;

  static HypergeomParams from_weight(const Weight& k);
};

// Gauss series sum_{n} (a)_n (b)_n / ((c)_n n!) x^n, direct zone |x| <= 0.75.
Complex hyp2f1(Complex a, Complex b, Complex c, Complex x, double tol = 1e-14);

// Connection coefficients G12, G21 and the second connection coefficient B
// of y_1 = A y_3 + B y_4, with exact zero detection for B through the pole
// rule (B = 0 iff a denominator Gamma sits at a pole, which happens exactly
// for integer k == 0 (mod 12), k >= 0 or k == 4 (mod 12), k >= 4).
struct GammaConstants {
  double g12 = 0;
  double g21 = 0;
  double b = 0;
  bool b_zero = false;
};
GammaConstants gamma_constants(const Weight& k);

// The four coefficients {A, B, A', B'} linking (y1, y2) to (y3, y4).
// Requires c and c - a - b non-integer.
CMat2 connection_matrix(const HypergeomParams& params);

// |y1(x) - A y3(x) - B y4(x)| evaluated by direct series at real
// x in (0, 0.75].
double connection_identity_error(const HypergeomParams& params, double x);

// rho(T) = U^{-1} diag(1, e^{(k+1) pi i/3}) U and
// rho(S) = V^{-1} diag(1, -1) V with U, V assembled from the connection
// data. Requires a non-degenerate, gate-valid weight.
struct NumericGenerators {
  CMat2 rho_t;
  CMat2 rho_s;
  Complex monodromy0; // e^{2 pi i (1 - c)}
};
NumericGenerators numeric_generators(const Weight& k);

// Embedding of a graded matrix into complex 2x2 form using numeric values
// for the off-diagonal symbols.
CMat2 embed_graded(const GradedMatrix& m, double g12, double g21);

CMat2 cmat_mul(const CMat2& x, const CMat2& y);
CMat2 cmat_inverse(const CMat2& x);
double cmat_distance(const CMat2& x, const CMat2& y);

} // namespace kz
