#include "kzmono/spectral.hpp"

#include <numeric>
#include <sstream>

namespace kz {

Weight Weight::of(const Rational& k) {
  Rational r = k;
  r.canonicalize();
  Weight w;
  w.p = checked_long(r.get_num(), "weight numerator");
  w.q = checked_long(r.get_den(), "weight denominator");
  return w;
}

Weight Weight::parse(const std::string& text) {
  return of(parse_rational(text));
}

std::string Weight::str() const {
  std::ostringstream os;
  os << p;
  if (q != 1) os << "/" << q;
  return os.str();
}

bool is_degenerate(const Weight& k) {
  return k.q == 1 && mod_floor(k.p, 6) == 5;
}

bool stiller_valid(const Weight& k) {
  if (k.q >= 2) return true;
  long r = mod_floor(k.p, 12);
  return r != 0 && r != 4 && r != 5 && r != 11;
}

SpectralContext::SpectralContext(const Weight& k) : k_(k) {
  if (k.q < 1 || std::gcd(k.p, k.q) != 1)
    throw std::invalid_argument("SpectralContext: weight must be in lowest terms");
  if (is_degenerate(k))
    throw std::invalid_argument("SpectralContext: degenerate weight " + k.str());
  field_ = FieldContext::make(12 * k.q);
  z_period_ = 6 * k.q / std::gcd(k.p + k.q, 6L);
  // theta = (1+k) pi/6 is never a multiple of pi for non-degenerate weights,
  // so sin(theta) != 0 and the inverse exists.
  cap_c_ = sin_theta().inverse();
  closure_ = (cap_c_ + Rational(2)) * Rational(1, 32);
}

CycNum SpectralContext::zeta(long e) const { return CycNum::root(field_, e); }

CycNum SpectralContext::imag_unit() const { return zeta(3 * k_.q); }

CycNum SpectralContext::exp_i_theta() const { return zeta(k_.p + k_.q); }

CycNum SpectralContext::sin_theta() const {
  // (e^{i theta} - e^{-i theta}) / (2i)
  return (zeta(k_.p + k_.q) - zeta(-(k_.p + k_.q))) * imag_unit() * Rational(-1, 2);
}

CycNum SpectralContext::cos_theta() const {
  return (zeta(k_.p + k_.q) + zeta(-(k_.p + k_.q))) * Rational(1, 2);
}

const CycNum& SpectralContext::z(long l) const {
  const long key = mod_floor(l, z_period_);
  auto it = z_cache_.find(key);
  if (it == z_cache_.end())
    it = z_cache_.emplace(key, zeta(2 * key * (k_.p + k_.q))).first;
  return it->second;
}

const CycNum& SpectralContext::w(long l) const {
  const long key = mod_floor(l, z_period_);
  auto it = w_cache_.find(key);
  if (it == w_cache_.end())
    it = w_cache_.emplace(key, (z(l) - CycNum::one(field_)) * cap_c_).first;
  return it->second;
}

const CycNum& SpectralContext::k_t(long t) const {
  const long key = mod_floor(t, z_period_);
  auto it = kt_cache_.find(key);
  if (it == kt_cache_.end()) {
    const CycNum& wt = w(t);
    it = kt_cache_.emplace(key, wt * wt + z(t) * Rational(4)).first;
  }
  return it->second;
}

const CycNum& SpectralContext::k_rs(long r, long s) const {
  // Symmetric in (r, s), so cache on the sorted residue pair.
  std::pair<long, long> key{mod_floor(r, z_period_), mod_floor(s, z_period_)};
  if (key.first > key.second) std::swap(key.first, key.second);
  auto it = krs_cache_.find(key);
  if (it == krs_cache_.end())
    it = krs_cache_.emplace(key, w(r) * w(s) + (z(r) + z(s)) * Rational(4))
             .first;
  return it->second;
}

bool SpectralContext::z_equal(long a, long b) const {
  return mod_floor(a - b, z_period_) == 0;
}

} // namespace kz
