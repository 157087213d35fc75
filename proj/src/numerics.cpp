#include "kzmono/numerics.hpp"

#include <cmath>
#include <numbers>
#include <optional>

namespace kz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosC = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

std::optional<long> pole_at(Complex z, double tol = 1e-12) {
  if (std::abs(z.imag()) > tol) {
    return std::nullopt;
  }
  const double r = std::round(z.real());
  if (r > 0.5 || std::abs(z.real() - r) > tol) {
    return std::nullopt;
  }
  return static_cast<long>(r);
}

// Exact pole test for rational arguments: z a non-positive integer.
bool rational_pole(const Rational& z) {
  Rational c = z;
  c.canonicalize();
  return c.get_den() == 1 && c <= 0;
}

Complex to_c(const Rational& r) { return Complex(to_double(r), 0.0); }

} // namespace

double to_double(const Rational& r) { return r.get_d(); }

Complex complex_gamma(Complex z) {
  if (auto p = pole_at(z)) {
    throw GammaPole(*p);
  }
  if (z.real() < 0.5) {
    return kPi / (std::sin(kPi * z) * complex_gamma(Complex(1.0) - z));
  }
  z -= 1.0;
  Complex acc(kLanczosC[0]);
  for (std::size_t i = 1; i < kLanczosC.size(); ++i) {
    acc += kLanczosC[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

HypergeomParams HypergeomParams::from_weight(const Weight& k) {
  const Rational kv = k.value();
  HypergeomParams p;
  p.a = -kv / 12;
  p.b = -(kv - 4) / 12;
  p.c = -(kv - 5) / 6;
  p.lambda = (1 + kv) / 6;
  p.mu = Rational(1, 2);
  p.nu = Rational(1, 3);
  p.a.canonicalize();
  p.b.canonicalize();
  p.c.canonicalize();
  p.lambda.canonicalize();
  if (p.a + p.b - p.c != Rational(-1, 2)) {
    throw std::logic_error("hypergeometric parameters violate a+b-c = -1/2");
  }
  return p;
}

Complex hyp2f1(Complex a, Complex b, Complex c, Complex x, double tol) {
  if (std::abs(x) > 0.75 + 1e-12) {
    throw std::domain_error("hyp2f1 direct series requires |x| <= 0.75");
  }
  if (pole_at(c)) {
    throw std::domain_error(
        "hypergeometric series undefined: c is zero or a negative integer");
  }
  Complex term(1.0);
  Complex sum(1.0);
  for (long n = 0; n < 4000; ++n) {
    const double dn = static_cast<double>(n);
    term *= (a + dn) * (b + dn) * x / ((c + dn) * (dn + 1.0));
    sum += term;
    if (std::abs(term) < tol * std::max(1.0, std::abs(sum)) && n > 2) {
      return sum;
    }
  }
  throw std::runtime_error("hyp2f1 series did not converge");
}

namespace {

// sqrt(pi) * Gamma(num) / (scale * Gamma(d1) * Gamma(d2)) with the exact
// reciprocal-pole rule: a denominator pole forces the value to zero.
double gamma_ratio(const Rational& num, const Rational& d1,
                   const Rational& d2, double scale) {
  if (rational_pole(num)) {
    throw std::domain_error("Gamma ratio has a pole in its numerator");
  }
  if (rational_pole(d1) || rational_pole(d2)) {
    return 0.0;
  }
  const Complex v = std::sqrt(kPi) * complex_gamma(to_c(num)) /
                    (scale * complex_gamma(to_c(d1)) *
                     complex_gamma(to_c(d2)));
  return v.real();
}

} // namespace

GammaConstants gamma_constants(const Weight& k) {
  if (is_degenerate(k)) {
    throw std::domain_error(
        "gamma constants undefined for degenerate weights");
  }
  const Rational kv = k.value();
  GammaConstants out;
  out.g12 = gamma_ratio((1 + kv) / 6, (2 + kv) / 12, (6 + kv) / 12, 4.0);
  out.g21 = gamma_ratio((5 - kv) / 6, (6 - kv) / 12, (10 - kv) / 12, 2.0);
  // B = Gamma(-(k-5)/6) Gamma(-1/2) / (Gamma(-k/12) Gamma(-(k-4)/12)).
  const Rational ba = -kv / 12;
  const Rational bb = -(kv - 4) / 12;
  out.b_zero = rational_pole(ba) || rational_pole(bb);
  if (out.b_zero) {
    out.b = 0.0;
  } else {
    const Complex v = complex_gamma(to_c((5 - kv) / 6)) *
                      (-2.0 * std::sqrt(kPi)) /
                      (complex_gamma(to_c(ba)) * complex_gamma(to_c(bb)));
    out.b = v.real();
  }
  return out;
}

CMat2 connection_matrix(const HypergeomParams& p) {
  auto is_integer = [](Rational r) {
    r.canonicalize();
    return r.get_den() == 1;
  };
  if (is_integer(p.c) || is_integer(p.c - p.a - p.b)) {
    throw std::domain_error("logarithmic connection unsupported: c or "
                            "c-a-b is an integer");
  }
  auto q = [](const Rational& r) { return to_c(r); };
  const Complex a = q(p.a);
  const Complex b = q(p.b);
  const Complex c = q(p.c);
  auto G = [](Complex z) { return complex_gamma(z); };
  const Complex one(1.0);
  const Complex two(2.0);
  return {G(c) * G(c - a - b) / (G(c - a) * G(c - b)),
          G(c) * G(a + b - c) / (G(a) * G(b)),
          G(two - c) * G(c - a - b) / (G(one - a) * G(one - b)),
          G(two - c) * G(a + b - c) /
              (G(a - c + one) * G(b - c + one))};
}

double connection_identity_error(const HypergeomParams& p, double x) {
  if (!(x > 0.0 && x <= 0.75)) {
    throw std::domain_error("identity check requires x in (0, 0.75]");
  }
  const CMat2 cm = connection_matrix(p);
  const Complex a = to_c(p.a);
  const Complex b = to_c(p.b);
  const Complex c = to_c(p.c);
  const Complex one(1.0);
  const Complex y1 = hyp2f1(a, b, c, Complex(x));
  const Complex y3 = hyp2f1(a, b, a + b - c + one, Complex(1.0 - x));
  const Complex y4 = std::pow(Complex(1.0 - x), c - a - b) *
                     hyp2f1(c - a, c - b, c - a - b + one, Complex(1.0 - x));
  return std::abs(y1 - cm[0] * y3 - cm[1] * y4);
}

CMat2 cmat_mul(const CMat2& x, const CMat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

CMat2 cmat_inverse(const CMat2& x) {
  const Complex det = x[0] * x[3] - x[1] * x[2];
  if (std::abs(det) < 1e-300) {
    throw std::domain_error("singular complex matrix");
  }
  return {x[3] / det, -x[1] / det, -x[2] / det, x[0] / det};
}

double cmat_distance(const CMat2& x, const CMat2& y) {
  double d = 0;
  for (int i = 0; i < 4; ++i) {
    d = std::max(d, std::abs(x[i] - y[i]));
  }
  return d;
}

NumericGenerators numeric_generators(const Weight& k) {
  if (is_degenerate(k)) {
    throw std::domain_error("numeric generators undefined for degenerate "
                            "weights");
  }
  if (!stiller_valid(k)) {
    throw std::domain_error("numeric generators undefined: weight outside "
                            "the validity gate of the solution basis");
  }
  const Rational kv = k.value();
  const GammaConstants gc = gamma_constants(k);
  const Complex i(0.0, 1.0);

  // kappa = sqrt(pi) i Gamma(-(k+1)/6) / (Gamma(-k/12) Gamma((4-k)/12)).
  const Complex kappa = std::sqrt(kPi) * i *
                        complex_gamma(to_c(-(kv + 1) / 6)) /
                        (complex_gamma(to_c(-kv / 12)) *
                         complex_gamma(to_c((4 - kv) / 12)));
  const CMat2 u = {Complex(1.0), 4.0 * gc.g12 * i, Complex(0.0), kappa};
  const Complex lambda0 =
      std::exp(i * kPi * to_double((kv + 1) / Rational(3)));
  const CMat2 d0 = {Complex(1.0), Complex(0.0), Complex(0.0), lambda0};

  const CMat2 v = {2.0 * gc.g21, i, Complex(gc.b), Complex(0.0)};
  const CMat2 d1 = {Complex(1.0), Complex(0.0), Complex(0.0), Complex(-1.0)};

  NumericGenerators out;
  out.rho_t = cmat_mul(cmat_inverse(u), cmat_mul(d0, u));
  out.rho_s = cmat_mul(cmat_inverse(v), cmat_mul(d1, v));
  out.monodromy0 = lambda0;
  return out;
}

CMat2 embed_graded(const GradedMatrix& m, double g12, double g21) {
  return {m.d11().to_complex(), m.u12().to_complex() * g12,
          m.l21().to_complex() * g21, m.d22().to_complex()};
}

} // namespace kz
