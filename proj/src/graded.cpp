#include "kzmono/graded.hpp"

namespace kz {

std::shared_ptr<const GradeRing> GradeRing::make(const SpectralContext& sc) {
  auto r = std::make_shared<GradeRing>();
  r->field = sc.field();
  r->g = sc.closure();
  return r;
}

GradedMatrix::GradedMatrix(RingPtr ring, CycNum d11, CycNum u12, CycNum l21,
                           CycNum d22)
    : ring_(std::move(ring)),
      d11_(std::move(d11)),
      u12_(std::move(u12)),
      l21_(std::move(l21)),
      d22_(std::move(d22)) {}

GradedMatrix GradedMatrix::identity(const RingPtr& ring) {
  return scalar(ring, CycNum::one(ring->field));
}

GradedMatrix GradedMatrix::scalar(const RingPtr& ring, const CycNum& c) {
  CycNum z = CycNum::zero(ring->field);
  return GradedMatrix(ring, c, z, z, c);
}

void GradedMatrix::require_set() const {
  if (!ring_) throw std::logic_error("GradedMatrix: used before initialization");
}

void GradedMatrix::require_same(const GradedMatrix& a, const GradedMatrix& b) {
  a.require_set();
  b.require_set();
  if (a.ring_->field->conductor() != b.ring_->field->conductor() ||
      a.ring_->g != b.ring_->g)
    throw std::invalid_argument("GradedMatrix: mixed weight contexts");
}

bool GradedMatrix::is_zero() const {
  require_set();
  return d11_.is_zero() && u12_.is_zero() && l21_.is_zero() && d22_.is_zero();
}

bool GradedMatrix::is_scalar() const {
  require_set();
  return u12_.is_zero() && l21_.is_zero() && d11_ == d22_;
}

bool GradedMatrix::is_identity() const {
  require_set();
  return is_scalar() && d11_ == CycNum::one(ring_->field);
}

CycNum GradedMatrix::trace() const {
  require_set();
  return d11_ + d22_;
}

CycNum GradedMatrix::det() const {
  require_set();
  return d11_ * d22_ - u12_ * l21_ * ring_->g;
}

GradedMatrix GradedMatrix::operator-() const {
  require_set();
  return GradedMatrix(ring_, -d11_, -u12_, -l21_, -d22_);
}

GradedMatrix operator+(const GradedMatrix& a, const GradedMatrix& b) {
  GradedMatrix::require_same(a, b);
  return GradedMatrix(a.ring_, a.d11_ + b.d11_, a.u12_ + b.u12_,
                      a.l21_ + b.l21_, a.d22_ + b.d22_);
}

GradedMatrix operator-(const GradedMatrix& a, const GradedMatrix& b) {
  GradedMatrix::require_same(a, b);
  return GradedMatrix(a.ring_, a.d11_ - b.d11_, a.u12_ - b.u12_,
                      a.l21_ - b.l21_, a.d22_ - b.d22_);
}

GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
  GradedMatrix::require_same(a, b);
  const CycNum& g = a.ring_->g;
  // (1,2)*(2,1) products pick up G12*G21 = g; (1,2)*(2,2) etc keep their
  // marker, so each entry lands back in its graded slot.
  return GradedMatrix(a.ring_,
                      a.d11_ * b.d11_ + a.u12_ * b.l21_ * g,
                      a.d11_ * b.u12_ + a.u12_ * b.d22_,
                      a.l21_ * b.d11_ + a.d22_ * b.l21_,
                      a.l21_ * b.u12_ * g + a.d22_ * b.d22_);
}

GradedMatrix GradedMatrix::operator*(const CycNum& c) const {
  require_set();
  return GradedMatrix(ring_, d11_ * c, u12_ * c, l21_ * c, d22_ * c);
}

GradedMatrix GradedMatrix::operator*(const Rational& c) const {
  require_set();
  return GradedMatrix(ring_, d11_ * c, u12_ * c, l21_ * c, d22_ * c);
}

GradedMatrix GradedMatrix::inverse() const {
  require_set();
  CycNum d = det();
  if (d.is_zero()) throw std::domain_error("GradedMatrix: singular matrix");
  CycNum dinv = d.inverse();
  // Adjugate in the same graded slots: swapping the diagonal and negating the
  // off-diagonal coefficients leaves the markers in place.
  return GradedMatrix(ring_, d22_ * dinv, -(u12_ * dinv), -(l21_ * dinv),
                      d11_ * dinv);
}

GradedMatrix GradedMatrix::pow(long e) const {
  require_set();
  GradedMatrix base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
  GradedMatrix acc = identity(ring_);
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool GradedMatrix::operator==(const GradedMatrix& o) const {
  require_same(*this, o);
  return d11_ == o.d11_ && u12_ == o.u12_ && l21_ == o.l21_ && d22_ == o.d22_;
}

GradedMatrix commutator(const GradedMatrix& a, const GradedMatrix& b) {
  return a * b - b * a;
}

GradedScalar GradedScalar::operator*(const GradedScalar& o) const {
  return {coeff * o.coeff, e12 + o.e12, e21 + o.e21};
}

GradedScalar GradedScalar::operator/(const GradedScalar& o) const {
  return {coeff / o.coeff, e12 - o.e12, e21 - o.e21};
}

GradedScalar GradedScalar::operator+(const GradedScalar& o) const {
  if (is_zero()) return {o.coeff + coeff, o.e12, o.e21};
  if (o.is_zero()) return {coeff + o.coeff, e12, e21};
  if (e12 != o.e12 || e21 != o.e21)
    throw std::invalid_argument("GradedScalar: adding mismatched grades");
  return {coeff + o.coeff, e12, e21};
}

GradedScalar GradedScalar::operator-(const GradedScalar& o) const {
  return *this + GradedScalar{-o.coeff, o.e12, o.e21};
}

bool GradedScalar::operator==(const GradedScalar& o) const {
  if (is_zero() && o.is_zero()) return true;
  return e12 == o.e12 && e21 == o.e21 && coeff == o.coeff;
}

} // namespace kz
