#pragma once

#include "kzmono/graded.hpp"
#include "kzmono/sl2.hpp"

namespace kz {

// The monodromy representation attached to a weight: generators rho(T),
// rho(S) and the word matrices A(t), M(t), B(r,s), N(r,s), all exact graded
// matrices over Q(zeta_{12q}).
class ConnectionContext {
public:
  // The gate rejects integer weights k == 0, 4, 5, 11 (mod 12): there the
  // hypergeometric basis behind the representation degenerates (a Gamma
  // factor hits a pole or the two branches coincide). Bypass exists so the
  // formal algebra can still be exercised on gated weights in tests.
  enum class Gate { enforce, bypass };

  explicit ConnectionContext(const Weight& k, Gate gate = Gate::enforce);

  const SpectralContext& spectral() const { return sc_; }
  const RingPtr& ring() const { return ring_; }

  GradedMatrix identity() const { return GradedMatrix::identity(ring_); }

  // rho(T)^t in closed form {1, 4i(1 - Z_t), 0, Z_t}, valid for every
  // integer t (the formula telescopes in both directions).
  GradedMatrix rho_t_pow(long t) const;
  GradedMatrix rho_t() const { return rho_t_pow(1); }
  GradedMatrix rho_s() const; // {-1, 0, -4i, 1}

  // A(t) = rho(T)^t rho(S).
  GradedMatrix a_matrix(long t) const;

  // M(t) = rho((T^t S)^3) by its closed form
  // -(1/2) Z_t W_t E + K_t [(-(2Z_t+W_t)/8, -i(Z_t-1); -i Z_t, Z_t/4)].
  GradedMatrix m_matrix(long t) const; // pre: t != 0

  // B(r,s) = A(r) A(s) in closed form.
  GradedMatrix b_matrix(long r, long s) const;

  // N(r,s) = rho((T^r S T^s S)^2) by its closed form
  // -Z_r Z_s E + (1/2) K_{r,s} [(1/2 + (2(Z_s-1)+W_s)(2+W_r)/8, ...)].
  GradedMatrix n_matrix(long r, long s) const; // pre: r != 1, s != 1

  // The scalar of (rho(T) rho(S))^3 = -i e^{3 i theta} E.
  CycNum ts_cubed_scalar() const;

  // Evaluate rho on an arbitrary word in T, S by graded products.
  GradedMatrix word_representation(const Word& w) const;

private:
  SpectralContext sc_;
  RingPtr ring_;
};

} // namespace kz
