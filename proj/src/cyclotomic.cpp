#include "kzmono/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace kz {

namespace {

void trim(std::vector<Integer>& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; b must be monic and divide a.
std::vector<Integer> poly_div_exact(std::vector<Integer> a, const std::vector<Integer>& b) {
  trim(a);
  if (b.empty() || b.back() != 1)
    throw std::logic_error("poly_div_exact: divisor must be monic");
  const long db = static_cast<long>(b.size()) - 1;
  const long da = static_cast<long>(a.size()) - 1;
  if (da < db) throw std::logic_error("poly_div_exact: degree underflow");
  std::vector<Integer> q(da - db + 1);
  for (long i = da - db; i >= 0; --i) {
    Integer c = a[i + db];
    q[i] = c;
    if (c == 0) continue;
    for (long j = 0; j <= db; ++j) a[i + j] -= c * b[j];
  }
  for (const auto& r : a)
    if (r != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

} // namespace

std::vector<Integer> cyclotomic_poly(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be positive");
  static std::mutex mu;
  static std::map<long, std::vector<Integer>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.count(d)) continue;
    // x^d - 1 divided by Phi_e over proper divisors e | d (all already cached).
    std::vector<Integer> f(d + 1);
    f[0] = -1;
    f[d] = 1;
    for (long e = 1; e < d; ++e)
      if (d % e == 0) f = poly_div_exact(std::move(f), cache.at(e));
    cache.emplace(d, std::move(f));
  }
  return cache.at(n);
}

FieldContext::FieldContext(long n) : n_(n) {
  phi_ = cyclotomic_poly(n);
  degree_ = static_cast<long>(phi_.size()) - 1;
  powers_.resize(n);
  std::vector<Integer> cur(degree_);
  cur[0] = 1;
  powers_[0] = cur;
  for (long j = 1; j < n; ++j) {
    Integer carry = cur[degree_ - 1];
    for (long i = degree_ - 1; i >= 1; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (carry != 0) {
      // x^phi == -(lower part of Phi_n) since Phi_n is monic.
      for (long i = 0; i < degree_; ++i) cur[i] -= carry * phi_[i];
    }
    powers_[j] = cur;
  }
}

FieldPtr FieldContext::make(long n) {
  if (n <= 0 || n % 4 != 0)
    throw std::invalid_argument("FieldContext: conductor must be a positive multiple of 4");
  if (n > 720)
    throw std::invalid_argument("FieldContext: conductor above 720 not supported");
  static std::mutex mu;
  static std::map<long, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  FieldPtr f(new FieldContext(n));
  cache.emplace(n, f);
  return f;
}

void CycNum::require_set() const {
  if (!field_) throw std::logic_error("CycNum: used before initialization");
}

void CycNum::require_same(const CycNum& a, const CycNum& b) {
  a.require_set();
  b.require_set();
  if (a.field_->conductor() != b.field_->conductor())
    throw std::invalid_argument("CycNum: mixed cyclotomic conductors");
}

CycNum CycNum::zero(const FieldPtr& f) {
  return CycNum(f, std::vector<Rational>(f->degree()));
}

CycNum CycNum::one(const FieldPtr& f) { return from_rational(f, 1); }

CycNum CycNum::from_rational(const FieldPtr& f, const Rational& x) {
  std::vector<Rational> c(f->degree());
  c[0] = x;
  return CycNum(f, std::move(c));
}

CycNum CycNum::root(const FieldPtr& f, long e) {
  return from_terms(f, {{e, Rational(1)}});
}

CycNum CycNum::from_terms(const FieldPtr& f,
                          const std::vector<std::pair<long, Rational>>& terms) {
  std::vector<Rational> c(f->degree());
  for (const auto& [e, coeff] : terms) {
    const auto& row = f->power(mod_floor(e, f->conductor()));
    for (long i = 0; i < f->degree(); ++i)
      if (row[i] != 0) c[i] += coeff * Rational(row[i]);
  }
  return CycNum(f, std::move(c));
}

bool CycNum::is_zero() const {
  require_set();
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  require_set();
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CycNum::to_rational() const {
  if (!is_rational()) throw std::domain_error("CycNum: not a rational number");
  return c_[0];
}

CycNum CycNum::operator-() const {
  require_set();
  CycNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  CycNum::require_same(a, b);
  const auto& f = a.field_;
  const long d = f->degree();
  // Clear denominators so the convolution runs in integers.
  Integer da = 1, db = 1;
  for (const auto& x : a.c_) mpz_lcm(da.get_mpz_t(), da.get_mpz_t(), x.get_den_mpz_t());
  for (const auto& x : b.c_) mpz_lcm(db.get_mpz_t(), db.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> na(d), nb(d);
  for (long i = 0; i < d; ++i) {
    na[i] = a.c_[i].get_num() * (da / a.c_[i].get_den());
    nb[i] = b.c_[i].get_num() * (db / b.c_[i].get_den());
  }
  std::vector<Integer> t(2 * d - 1);
  for (long i = 0; i < d; ++i) {
    if (na[i] == 0) continue;
    for (long j = 0; j < d; ++j) {
      if (nb[j] == 0) continue;
      mpz_addmul(t[i + j].get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
    }
  }
  for (long j = 2 * d - 2; j >= d; --j) {
    if (t[j] == 0) continue;
    const auto& row = f->power(j); // 2*phi-2 < n whenever 4 | n
    for (long i = 0; i < d; ++i)
      if (row[i] != 0) mpz_addmul(t[i].get_mpz_t(), t[j].get_mpz_t(), row[i].get_mpz_t());
    t[j] = 0;
  }
  Integer den = da * db;
  std::vector<Rational> rc(d);
  for (long i = 0; i < d; ++i) {
    rc[i] = Rational(t[i], den);
    rc[i].canonicalize();
  }
  return CycNum(f, std::move(rc));
}

CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

CycNum CycNum::operator+(const Rational& x) const {
  require_set();
  CycNum r = *this;
  r.c_[0] += x;
  return r;
}

CycNum CycNum::operator-(const Rational& x) const {
  require_set();
  CycNum r = *this;
  r.c_[0] -= x;
  return r;
}

CycNum CycNum::operator*(const Rational& x) const {
  require_set();
  CycNum r = *this;
  for (auto& v : r.c_) v *= x;
  return r;
}

namespace {

using QPoly = std::vector<Rational>; // constant term first

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Division with remainder over Q[x]; returns quotient, leaves remainder in a.
QPoly qdivmod(QPoly& a, const QPoly& b) {
  qtrim(a);
  const long db = static_cast<long>(b.size()) - 1;
  QPoly q;
  if (static_cast<long>(a.size()) - 1 < db) return q;
  q.assign(a.size() - b.size() + 1, Rational(0));
  for (long i = static_cast<long>(a.size()) - 1 - db; i >= 0; --i) {
    Rational c = a[i + db] / b[db];
    q[i] = c;
    if (c == 0) continue;
    for (long j = 0; j <= db; ++j) a[i + j] -= c * b[j];
  }
  qtrim(a);
  return q;
}

} // namespace

CycNum CycNum::inverse() const {
  require_set();
  if (is_zero()) throw std::domain_error("CycNum: division by zero");
  // Extended Euclid in Q[x] against Phi_n: t0 * this == gcd (mod Phi_n),
  // and the gcd is a nonzero constant since Phi_n is irreducible.
  QPoly r0(field_->minimal_poly().begin(), field_->minimal_poly().end());
  QPoly r1(c_.begin(), c_.end());
  qtrim(r1);
  QPoly t0, t1{Rational(1)};
  while (!r1.empty()) {
    QPoly rem = r0;
    QPoly q = qdivmod(rem, r1);
    QPoly tn = t0;
    if (!q.empty()) {
      if (tn.size() < q.size() + t1.size() - 1) tn.resize(q.size() + t1.size() - 1, Rational(0));
      for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (std::size_t j = 0; j < t1.size(); ++j) tn[i + j] -= q[i] * t1[j];
      }
    }
    qtrim(tn);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(tn);
  }
  if (r0.size() != 1)
    throw std::logic_error("CycNum: gcd with Phi_n not constant");
  std::vector<Rational> out(field_->degree());
  for (std::size_t i = 0; i < t0.size(); ++i) out[i] = t0[i] / r0[0];
  return CycNum(field_, std::move(out));
}

bool CycNum::operator==(const CycNum& o) const {
  require_same(*this, o);
  return c_ == o.c_;
}

std::complex<double> CycNum::to_complex() const {
  require_set();
  const double step = 2.0 * std::numbers::pi / static_cast<double>(field_->conductor());
  long double re = 0, im = 0;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const double v = c_[j].get_d();
    re += v * std::cos(step * static_cast<double>(j));
    im += v * std::sin(step * static_cast<double>(j));
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::string CycNum::str() const {
  require_set();
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    Rational v = c_[j];
    if (first) {
      if (v < 0) { os << "-"; v = -v; }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    if (j == 0 || v != 1) os << v.get_str();
    if (j > 0) {
      if (v != 1) os << "*";
      os << "z";
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

} // namespace kz
