#include "kzmono/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace kz {

namespace {

Rational canon(Rational r) {
  r.canonicalize();
  return r;
}

long integer_offset(const Rational& hi, const Rational& lo, const char* what) {
  Rational d = canon(hi - lo);
  if (d.get_den() != 1) {
    throw std::domain_error(std::string(what) +
                            ": exponents differ by a non-integer");
  }
  return checked_long(Integer(d.get_num()), what);
}

void require_non_resonant(const Weight& k) {
  if (k.q == 1 && mod_floor(k.p, 6L) == 5) {
    throw std::domain_error("resonant weight: integer k == 5 (mod 6) has no "
                            "pair of Frobenius branches");
  }
}

} // namespace

QSeries::QSeries(Rational rho, std::vector<Rational> coeffs)
    : rho_(std::move(rho)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("series must carry at least one coefficient");
  }
  rho_.canonicalize();
  for (auto& c : coeffs_) {
    c.canonicalize();
  }
}

QSeries QSeries::constant(const Rational& value, long order) {
  if (order < 1) {
    throw std::invalid_argument("series order must be positive");
  }
  std::vector<Rational> c(static_cast<std::size_t>(order), Rational(0));
  c[0] = value;
  return QSeries(Rational(0), std::move(c));
}

Rational QSeries::known_through() const {
  return canon(rho_ + Rational(order() - 1));
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

Rational QSeries::coeff_at(const Rational& exp) const {
  if (canon(exp) > known_through()) {
    throw std::out_of_range("exponent outside the known window");
  }
  Rational d = canon(exp - rho_);
  if (d < 0 || d.get_den() != 1) {
    return Rational(0);
  }
  const long n = checked_long(Integer(d.get_num()), "series exponent");
  return coeffs_[static_cast<std::size_t>(n)];
}

QSeries QSeries::derive() const {
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    c[n] = canon(coeffs_[n] * (rho_ + Rational(static_cast<long>(n))));
  }
  return QSeries(rho_, std::move(c));
}

QSeries QSeries::pow_unit(const Rational& alpha) const {
  if (coeffs_[0] != 1) {
    throw std::domain_error("pow_unit requires constant coefficient 1");
  }
  const std::size_t len = coeffs_.size();
  std::vector<Rational> p(len, Rational(0));
  p[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    Rational acc(0);
    for (std::size_t m = 1; m <= n; ++m) {
      acc += ((alpha + Rational(1)) * Rational(static_cast<long>(m)) -
              Rational(static_cast<long>(n))) *
             coeffs_[m] * p[n - m];
    }
    p[n] = canon(acc / Rational(static_cast<long>(n)));
  }
  return QSeries(canon(rho_ * alpha), std::move(p));
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  const Rational rho = std::min(a.rho_, b.rho_);
  const long sa = integer_offset(a.rho_, rho, "series addition");
  const long sb = integer_offset(b.rho_, rho, "series addition");
  const long wa = sa + a.order();
  const long wb = sb + b.order();
  const long len = std::min(wa, wb);
  if (len < 1) {
    throw std::domain_error("series addition has an empty common window");
  }
  std::vector<Rational> c(static_cast<std::size_t>(len), Rational(0));
  for (long i = 0; i < a.order() && sa + i < len; ++i) {
    c[static_cast<std::size_t>(sa + i)] += a.coeffs_[static_cast<std::size_t>(i)];
  }
  for (long i = 0; i < b.order() && sb + i < len; ++i) {
    c[static_cast<std::size_t>(sb + i)] += b.coeffs_[static_cast<std::size_t>(i)];
  }
  return QSeries(rho, std::move(c));
}

QSeries QSeries::operator-() const {
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    c[n] = -coeffs_[n];
  }
  return QSeries(rho_, std::move(c));
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  const long len = std::min(a.order(), b.order());
  if (len < 1) {
    throw std::domain_error("series product has an empty window");
  }
  std::vector<Rational> c(static_cast<std::size_t>(len), Rational(0));
  for (long i = 0; i < std::min<long>(a.order(), len); ++i) {
    if (a.coeffs_[static_cast<std::size_t>(i)] == 0) {
      continue;
    }
    for (long j = 0; i + j < len && j < b.order(); ++j) {
      c[static_cast<std::size_t>(i + j)] +=
          a.coeffs_[static_cast<std::size_t>(i)] *
          b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return QSeries(canon(a.rho_ + b.rho_), std::move(c));
}

QSeries operator/(const QSeries& a, const QSeries& b) {
  long v = 0;
  while (v < b.order() && b.coeffs_[static_cast<std::size_t>(v)] == 0) {
    ++v;
  }
  if (v == b.order()) {
    throw std::domain_error("division by a zero series");
  }
  const long lb = b.order() - v;
  const long len = std::min(a.order(), lb);
  std::vector<Rational> c(static_cast<std::size_t>(len), Rational(0));
  const Rational& lead = b.coeffs_[static_cast<std::size_t>(v)];
  for (long n = 0; n < len; ++n) {
    Rational acc = a.coeffs_[static_cast<std::size_t>(n)];
    for (long j = 1; j <= n; ++j) {
      acc -= b.coeffs_[static_cast<std::size_t>(v + j)] *
             c[static_cast<std::size_t>(n - j)];
    }
    c[static_cast<std::size_t>(n)] = canon(acc / lead);
  }
  return QSeries(canon(a.rho_ - (b.rho_ + Rational(v))), std::move(c));
}

QSeries operator*(const QSeries& a, const Rational& c) {
  std::vector<Rational> out(a.coeffs_.size());
  for (std::size_t n = 0; n < a.coeffs_.size(); ++n) {
    out[n] = canon(a.coeffs_[n] * c);
  }
  return QSeries(a.rho_, std::move(out));
}

QSeries QSeries::compose(const QSeries& outer, const QSeries& inner) {
  if (outer.rho_ != 0) {
    throw std::domain_error("composition requires an outer series with "
                            "exponent zero");
  }
  Rational ri = canon(inner.rho_);
  if (ri.get_den() != 1 || ri < 0) {
    throw std::domain_error("composition requires an inner series with a "
                            "non-negative integer exponent");
  }
  const long shift = checked_long(Integer(ri.get_num()), "inner exponent");
  std::vector<Rational> in(static_cast<std::size_t>(shift + inner.order()),
                           Rational(0));
  for (long i = 0; i < inner.order(); ++i) {
    in[static_cast<std::size_t>(shift + i)] =
        inner.coeffs_[static_cast<std::size_t>(i)];
  }
  long val = 0;
  while (val < static_cast<long>(in.size()) &&
         in[static_cast<std::size_t>(val)] == 0) {
    ++val;
  }
  if (val < 1 || val == static_cast<long>(in.size())) {
    throw std::domain_error("composition requires an inner series with "
                            "valuation at least one");
  }
  const long len =
      std::min(val * outer.order(), static_cast<long>(in.size()));
  std::vector<Rational> r(static_cast<std::size_t>(len), Rational(0));
  r[0] = outer.coeffs_.back();
  for (long n = outer.order() - 2; n >= 0; --n) {
    std::vector<Rational> next(static_cast<std::size_t>(len), Rational(0));
    for (long i = 0; i < len; ++i) {
      if (r[static_cast<std::size_t>(i)] == 0) {
        continue;
      }
      for (long j = 0; i + j < len && j < static_cast<long>(in.size()); ++j) {
        next[static_cast<std::size_t>(i + j)] +=
            r[static_cast<std::size_t>(i)] * in[static_cast<std::size_t>(j)];
      }
    }
    next[0] += outer.coeffs_[static_cast<std::size_t>(n)];
    r = std::move(next);
  }
  return QSeries(Rational(0), std::move(r));
}

namespace {

QSeries eisenstein(long order, long weight_power, long factor) {
  if (order < 1) {
    throw std::invalid_argument("series order must be positive");
  }
  std::vector<Rational> c(static_cast<std::size_t>(order), Rational(0));
  c[0] = 1;
  for (long n = 1; n < order; ++n) {
    Integer sigma(0);
    for (long d = 1; d <= n; ++d) {
      if (n % d == 0) {
        Integer dp(d);
        Integer term(1);
        for (long e = 0; e < weight_power; ++e) {
          term *= dp;
        }
        sigma += term;
      }
    }
    c[static_cast<std::size_t>(n)] = Rational(Integer(factor) * sigma);
  }
  return QSeries(Rational(0), std::move(c));
}

} // namespace

QSeries e2_series(long order) { return eisenstein(order, 1, -24); }
QSeries e4_series(long order) { return eisenstein(order, 3, 240); }
QSeries e6_series(long order) { return eisenstein(order, 5, -504); }

QSeries eta_power_series(const Rational& exponent, long order) {
  if (order < 1) {
    throw std::invalid_argument("series order must be positive");
  }
  std::vector<Rational> u(static_cast<std::size_t>(order), Rational(0));
  u[0] = 1;
  for (long n = 1; n < order; ++n) {
    for (long i = order - 1 - n; i >= 0; --i) {
      u[static_cast<std::size_t>(i + n)] -= u[static_cast<std::size_t>(i)];
    }
  }
  QSeries powed = QSeries(Rational(0), std::move(u)).pow_unit(exponent);
  return QSeries(canon(exponent / Rational(24)), powed.coeffs());
}

QSeries delta_series(long order) {
  return eta_power_series(Rational(24), order);
}

QSeries x_of_q_series(long order) {
  const QSeries e4 = e4_series(order);
  return delta_series(order) * Rational(1728) / (e4 * e4 * e4);
}

QSeries hypergeometric_2f1_series(const Rational& a, const Rational& b,
                                  const Rational& c, long order) {
  if (order < 1) {
    throw std::invalid_argument("series order must be positive");
  }
  Rational cc = canon(c);
  if (cc.get_den() == 1 && cc <= 0) {
    throw std::domain_error(
        "hypergeometric series undefined: c is zero or a negative integer");
  }
  std::vector<Rational> t(static_cast<std::size_t>(order), Rational(0));
  t[0] = 1;
  for (long n = 1; n < order; ++n) {
    const Rational m(n - 1);
    t[static_cast<std::size_t>(n)] =
        canon(t[static_cast<std::size_t>(n - 1)] * (a + m) * (b + m) /
              ((c + m) * Rational(n)));
  }
  return QSeries(Rational(0), std::move(t));
}

QSeries kz_series_solution(const Weight& k, int branch, long order) {
  require_non_resonant(k);
  if (branch != 0 && branch != 1) {
    throw std::invalid_argument("branch must be 0 or 1");
  }
  if (order < 1) {
    throw std::invalid_argument("series order must be positive");
  }
  const Rational kv = k.value();
  const Rational kappa1 = canon((kv + 1) / Rational(6));
  const Rational kappa2 = canon(kv * (kv + 1) / Rational(12));
  const Rational rho = branch == 1 ? kappa1 : Rational(0);
  const QSeries e2 = e2_series(order);
  std::vector<Rational> a(static_cast<std::size_t>(order), Rational(0));
  a[0] = 1;
  for (long n = 1; n < order; ++n) {
    Rational acc(0);
    for (long m = 1; m <= n; ++m) {
      acc += e2.coeffs()[static_cast<std::size_t>(m)] *
             (kappa1 * (rho + Rational(n - m)) - kappa2 * Rational(m)) *
             a[static_cast<std::size_t>(n - m)];
    }
    const Rational den = canon((rho + Rational(n)) * (rho + Rational(n) - kappa1));
    if (den == 0) {
      throw std::logic_error("resonant denominator in Frobenius recurrence");
    }
    a[static_cast<std::size_t>(n)] = canon(acc / den);
  }
  return QSeries(rho, std::move(a));
}

QSeries kz_residual(const Weight& k, const QSeries& f) {
  const Rational kv = k.value();
  const Rational kappa1 = canon((kv + 1) / Rational(6));
  const Rational kappa2 = canon(kv * (kv + 1) / Rational(12));
  const QSeries e2 = e2_series(f.order());
  const QSeries df = f.derive();
  return df.derive() - (e2 * df) * kappa1 + (e2.derive() * f) * kappa2;
}

QSeries schwarzian_check(const Weight& k, long order) {
  require_non_resonant(k);
  if (k.p == -1 && k.q == 1) {
    throw std::domain_error("k = -1 has a vanishing branch ratio derivative");
  }
  const QSeries f0 = kz_series_solution(k, 0, order);
  const QSeries f1 = kz_series_solution(k, 1, order);
  const QSeries df = (f1 / f0).derive();
  const QSeries g = df.derive() / df;
  const Rational kv = k.value();
  const Rational scale = canon((kv + 1) * (kv + 1) / Rational(72));
  return g.derive() - (g * g) * Rational(1, 2) + e4_series(order) * scale;
}

NormalFormResiduals normal_form_check(const Weight& k, long order) {
  require_non_resonant(k);
  const Rational kv = k.value();
  const QSeries eta = eta_power_series(canon((kv + 1) * 2), order);
  const QSeries e4 = e4_series(order);
  const Rational lf_scale = canon((kv + 1) * (kv + 1) / Rational(144));
  const Rational ric_scale = canon((kv + 1) * (kv + 1) / Rational(72));
  auto build = [&](int branch) {
    const QSeries u = kz_series_solution(k, branch, order) / eta;
    const QSeries linear = u.derive().derive() - (e4 * u) * lf_scale;
    const QSeries h = (u.derive() / u) * Rational(-2);
    const QSeries ric =
        h.derive() - (h * h) * Rational(1, 2) + e4 * ric_scale;
    return std::pair<QSeries, QSeries>{linear, ric};
  };
  auto [l0, r0] = build(0);
  auto [l1, r1] = build(1);
  return NormalFormResiduals{{l0, l1}, {r0, r1}};
}

PullbackResiduals pullback_check(const Weight& k, long order) {
  require_non_resonant(k);
  const Rational kv = k.value();
  const QSeries outer = hypergeometric_2f1_series(
      canon(-kv / Rational(12)), canon(-(kv - 4) / Rational(12)),
      canon((Rational(5) - kv) / Rational(6)), order);
  const QSeries pulled = QSeries::compose(outer, x_of_q_series(order));
  const QSeries f =
      e4_series(order).pow_unit(canon(kv / Rational(4))) * pulled;
  return PullbackResiduals{kz_residual(k, f),
                           f - kz_series_solution(k, 0, order)};
}

QSeries ramanujan_check(long order) {
  const QSeries e2 = e2_series(order);
  return e2.derive() - (e2 * e2 - e4_series(order)) * Rational(1, 12);
}

} // namespace kz
