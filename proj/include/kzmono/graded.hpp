#pragma once

#include "kzmono/spectral.hpp"

#include <memory>

namespace kz {

// Shared context for graded 2x2 matrices over one weight: the field plus the
// closure constant g = G12 * G21 = (C/2 + 1)/16 used to fold off-diagonal
// products back onto the diagonal.
struct GradeRing {
  FieldPtr field;
  CycNum g;

  static std::shared_ptr<const GradeRing> make(const SpectralContext& sc);
};
using RingPtr = std::shared_ptr<const GradeRing>;

// A 2x2 matrix whose (1,2) entry is u12 * G12 and whose (2,1) entry is
// l21 * G21, with G12, G21 kept as formal markers. Products stay in this
// shape because G12 and G21 only ever meet through their product g, which is
// an exact field element. Determinants, traces, inverses and commutators are
// all exact.
class GradedMatrix {
public:
  GradedMatrix() = default; // unset; arithmetic throws

  GradedMatrix(RingPtr ring, CycNum d11, CycNum u12, CycNum l21, CycNum d22);

  static GradedMatrix identity(const RingPtr& ring);
  static GradedMatrix scalar(const RingPtr& ring, const CycNum& c);

  const RingPtr& ring() const { return ring_; }
  const CycNum& d11() const { return d11_; }
  const CycNum& u12() const { return u12_; }
  const CycNum& l21() const { return l21_; }
  const CycNum& d22() const { return d22_; }

  bool is_zero() const;
  bool is_scalar() const; // u12 = l21 = 0 and d11 = d22
  bool is_identity() const;

  CycNum trace() const; // d11 + d22
  CycNum det() const;   // d11 d22 - u12 l21 g

  GradedMatrix operator-() const;
  friend GradedMatrix operator+(const GradedMatrix& a, const GradedMatrix& b);
  friend GradedMatrix operator-(const GradedMatrix& a, const GradedMatrix& b);
  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b);
  GradedMatrix operator*(const CycNum& c) const;
  GradedMatrix operator*(const Rational& c) const;

  GradedMatrix inverse() const; // throws std::domain_error when det = 0
  GradedMatrix pow(long e) const;

  bool operator==(const GradedMatrix& o) const;
  bool operator!=(const GradedMatrix& o) const { return !(*this == o); }

private:
  void require_set() const;
  static void require_same(const GradedMatrix& a, const GradedMatrix& b);

  RingPtr ring_;
  CycNum d11_, u12_, l21_, d22_;
};

// AB - BA, the direct commutativity oracle.
GradedMatrix commutator(const GradedMatrix& a, const GradedMatrix& b);

// A field element carrying a formal G12^e12 * G21^e21 marker. Used where
// ratios of matrix entries are compared: both sides of a comparison carry the
// same marker, which is checked structurally instead of ever dividing the
// transcendental constants.
struct GradedScalar {
  CycNum coeff;
  int e12 = 0;
  int e21 = 0;

  bool is_zero() const { return coeff.is_zero(); }

  GradedScalar operator*(const GradedScalar& o) const;
  GradedScalar operator/(const GradedScalar& o) const; // o.coeff nonzero
  // Addition and equality require matching markers (a zero coefficient
  // matches any marker).
  GradedScalar operator+(const GradedScalar& o) const;
  GradedScalar operator-(const GradedScalar& o) const;
  bool operator==(const GradedScalar& o) const;
  bool operator!=(const GradedScalar& o) const { return !(*this == o); }
};

} // namespace kz
