#include "kzmono/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <tuple>

namespace kz {

namespace {

std::string tuple_str(std::initializer_list<long> xs) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (long x : xs) {
    if (!first) {
      os << ", ";
    }
    os << x;
    first = false;
  }
  os << ")";
  return os.str();
}

std::vector<long> span_without(long bound, long hole) {
  std::vector<long> out;
  for (long v = -bound; v <= bound; ++v) {
    if (v != hole) {
      out.push_back(v);
    }
  }
  return out;
}

CMat2 cmat_pow(const CMat2& m, long e) {
  CMat2 base = e < 0 ? cmat_inverse(m) : m;
  long n = e < 0 ? -e : e;
  CMat2 acc{Complex(1.0), Complex(0.0), Complex(0.0), Complex(1.0)};
  for (long i = 0; i < n; ++i) {
    acc = cmat_mul(acc, base);
  }
  return acc;
}

std::pair<std::complex<double>, double> embed_coeff(const CycNum& x) {
  double amp = 0;
  for (const Rational& c : x.coeffs()) {
    amp += std::abs(c.get_d());
  }
  // Per term: rational-to-double and root evaluation are relatively accurate
  // to a few ulp, and the summation adds at most degree() rounding steps, so
  // 1e-13 * sum|c_i| dominates the true error by orders of magnitude.
  return {x.to_complex(), amp * 1e-13};
}

// Is x*y - z*w nonzero beyond any doubt? The error bound uses magnitude
// upper bounds (value plus its own bound), so it is valid outward rounding.
bool product_gap(const std::complex<double>& x, double ex,
                 const std::complex<double>& y, double ey,
                 const std::complex<double>& z, double ez,
                 const std::complex<double>& w, double ew) {
  const double mx = std::abs(x) + ex, my = std::abs(y) + ey;
  const double mz = std::abs(z) + ez, mw = std::abs(w) + ew;
  const double err =
      mx * ey + my * ex + mz * ew + mw * ez + 1e-15 * (mx * my + mz * mw);
  return std::abs(x * y - z * w) > 64.0 * err + 1e-120;
}

} // namespace

EmbeddedMatrix embed_for_filter(const GradedMatrix& m) {
  EmbeddedMatrix e;
  std::tie(e.u, e.eu) = embed_coeff(m.u12());
  std::tie(e.l, e.el) = embed_coeff(m.l21());
  std::tie(e.d, e.ed) = embed_coeff(m.d11() - m.d22());
  return e;
}

bool commutator_certainly_nonzero(const EmbeddedMatrix& a,
                                  const EmbeddedMatrix& b, bool closure_zero) {
  // Same three entries as commute_oracle: the diagonal carries the closure
  // factor G12 G21 and is skipped when that factor vanishes.
  if (!closure_zero && product_gap(a.u, a.eu, b.l, b.el, b.u, b.eu, a.l, a.el))
    return true;
  if (product_gap(b.u, b.eu, a.d, a.ed, a.u, a.eu, b.d, b.ed)) return true;
  return product_gap(a.l, a.el, b.d, b.ed, b.l, b.el, a.d, a.ed);
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::vector<CheckResult> verify_lemmas(long t_max, long rs_bound) {
  std::vector<CheckResult> out;

  {
    CheckResult c{"tts3 congruence sweep", true, ""};
    long plus = 0;
    long minus = 0;
    for (long t = 1; t <= t_max && c.passed; ++t) {
      switch (gamma_membership(eval_word(word_tts3(t)), Integer(t + 1))) {
        case Membership::InGamma:
          ++plus;
          break;
        case Membership::MinusInGamma:
          ++minus;
          break;
        case Membership::Neither:
          c.passed = false;
          c.detail = "(T^t S)^3 not congruent to +-E mod t+1 at t = " +
                     std::to_string(t);
          break;
      }
    }
    if (c.passed) {
      c.detail = "t in [1, " + std::to_string(t_max) + "]: " +
                 std::to_string(minus) + " cases -E, " + std::to_string(plus) +
                 " cases +E (mod t+1)";
    }
    out.push_back(c);
  }

  {
    CheckResult c{"tts3 closed form discrepancy", true, ""};
    for (long t = 1; t <= t_max && c.passed; ++t) {
      if (closed_form_tts3(t) != -eval_word(word_tts3(t))) {
        c.passed = false;
        c.detail = "relation other than a global sign flip at t = " +
                   std::to_string(t);
      }
    }
    if (c.passed) {
      c.detail = "closed form equals the negative of direct evaluation for "
                 "all t in [1, " +
                 std::to_string(t_max) + "] (global sign)";
    }
    out.push_back(c);
  }

  {
    CheckResult c{"trsts2 congruence sweep", true, ""};
    long cases = 0;
    for (long r = -rs_bound; r <= rs_bound && c.passed; ++r) {
      for (long s = -rs_bound; s <= rs_bound && c.passed; ++s) {
        if (r == 1 || s == 1 || std::abs(r * s - 2) < 2) {
          continue;
        }
        ++cases;
        if (gamma_membership(eval_word(word_trsts2(r, s)),
                             Integer(std::abs(r * s - 2))) ==
            Membership::Neither) {
          c.passed = false;
          c.detail = "(T^r S T^s S)^2 not congruent to +-E mod |rs-2| at " +
                     tuple_str({r, s});
        }
      }
    }
    if (c.passed) {
      c.detail = std::to_string(cases) + " pairs with r, s in [-" +
                 std::to_string(rs_bound) + ", " + std::to_string(rs_bound) +
                 "], congruent to +-E mod |rs-2|";
    }
    out.push_back(c);
  }

  {
    CheckResult c{"trsts2 closed form discrepancy", true, ""};
    long flips = 0;
    for (long r = -rs_bound; r <= rs_bound && c.passed; ++r) {
      for (long s = -rs_bound; s <= rs_bound && c.passed; ++s) {
        if (r == 1 || s == 1) {
          continue;
        }
        const auto rel = compare_entries(closed_form_trsts2(r, s),
                                         eval_word(word_trsts2(r, s)));
        const bool diag_ok =
            (rel[0] == EntryRelation::Equal || rel[0] == EntryRelation::Zero) &&
            (rel[1] == EntryRelation::Equal || rel[1] == EntryRelation::Zero) &&
            (rel[3] == EntryRelation::Equal || rel[3] == EntryRelation::Zero);
        const bool corner_ok = rel[2] == EntryRelation::Negated ||
                               rel[2] == EntryRelation::Zero;
        if (rel[2] == EntryRelation::Negated) {
          ++flips;
        }
        if (!diag_ok || !corner_ok) {
          c.passed = false;
          c.detail = "relation other than a (2,1) sign flip at " +
                     tuple_str({r, s});
        }
      }
    }
    if (c.passed) {
      c.detail = "closed form differs from direct evaluation only in the "
                 "(2,1) entry sign (" +
                 std::to_string(flips) + " nonzero flips observed)";
    }
    out.push_back(c);
  }

  return out;
}

std::vector<CheckResult> verify_relations(const Weight& k, long range) {
  std::vector<CheckResult> out;
  const ConnectionContext cc{k};
  const SpectralContext& sc = cc.spectral();
  const RingPtr& ring = cc.ring();
  const auto ts = span_without(range, 0);
  const auto rss = span_without(range, 1);

  out.push_back({"rho(S)^2 = E",
                 cc.rho_s() * cc.rho_s() == cc.identity(),
                 "exact"});
  out.push_back(
      {"(rho(T) rho(S))^3 = -i e^{3 i theta} E",
       (cc.rho_t() * cc.rho_s()).pow(3) ==
           GradedMatrix::scalar(ring, cc.ts_cubed_scalar()),
       "exact scalar"});

  {
    bool ok = true;
    for (long t = -range; t <= range && ok; ++t) {
      ok = cc.rho_t_pow(t) == cc.rho_t().pow(t);
    }
    out.push_back({"rho(T)^t power law", ok,
                   "t in [-" + std::to_string(range) + ", " +
                       std::to_string(range) + "]"});
  }

  {
    bool ok = true;
    for (long t : ts) {
      ok = ok && cc.a_matrix(t).trace() == sc.w(t) * Rational(-1, 2) &&
           cc.a_matrix(t).det() == -sc.z(t);
    }
    out.push_back({"A(t) trace = -W_t/2, det = -Z_t", ok, "exact"});
  }

  {
    bool ok = true;
    for (long t : ts) {
      ok = ok && cc.m_matrix(t) == cc.a_matrix(t).pow(3);
    }
    out.push_back({"M(t) = A(t)^3", ok,
                   std::to_string(ts.size()) + " exponents, exact"});
  }

  {
    bool ok = true;
    for (long r : rss) {
      for (long s : rss) {
        ok = ok && cc.b_matrix(r, s) == cc.a_matrix(r) * cc.a_matrix(s);
      }
    }
    out.push_back({"B(r,s) = A(r) A(s)", ok,
                   std::to_string(rss.size() * rss.size()) + " pairs, exact"});
  }

  {
    bool ok = true;
    for (long r : rss) {
      for (long s : rss) {
        ok = ok && cc.n_matrix(r, s) == cc.b_matrix(r, s).pow(2);
      }
    }
    out.push_back({"N(r,s) = (A(r) A(s))^2", ok,
                   std::to_string(rss.size() * rss.size()) + " pairs, exact"});
  }

  const GammaConstants gc = gamma_constants(k);
  {
    const double lhs = 16.0 * gc.g12 * gc.g21;
    const double rhs = sc.cap_c().to_complex().real() / 2.0 + 1.0;
    const double dev = std::abs(lhs - rhs);
    std::ostringstream os;
    os << "max deviation " << dev;
    out.push_back({"16 G12 G21 = C/2 + 1 (numeric)", dev < 1e-12, os.str()});
  }

  const NumericGenerators ng = numeric_generators(k);
  {
    const double dev = std::max(
        cmat_distance(ng.rho_t, embed_graded(cc.rho_t(), gc.g12, gc.g21)),
        cmat_distance(ng.rho_s, embed_graded(cc.rho_s(), gc.g12, gc.g21)));
    std::ostringstream os;
    os << "max deviation " << dev;
    out.push_back(
        {"numeric generators match exact embeddings", dev < 1e-9, os.str()});
  }

  {
    double dev = 0;
    const long cap = std::min<long>(range, 3);
    for (long t = -cap; t <= cap; ++t) {
      if (t == 0) {
        continue;
      }
      const CMat2 numeric = cmat_pow(
          cmat_mul(cmat_pow(ng.rho_t, t), ng.rho_s), 3);
      dev = std::max(dev, cmat_distance(numeric, embed_graded(cc.m_matrix(t),
                                                              gc.g12, gc.g21)));
    }
    std::ostringstream os;
    os << "max deviation " << dev;
    out.push_back(
        {"numeric (rho(T)^t rho(S))^3 matches M(t)", dev < 1e-8, os.str()});
  }

  {
    double dev = 0;
    for (auto [r, s] : {std::pair<long, long>{0, 2}, {2, 3}, {-2, 4}}) {
      const CMat2 ar = cmat_mul(cmat_pow(ng.rho_t, r), ng.rho_s);
      const CMat2 as = cmat_mul(cmat_pow(ng.rho_t, s), ng.rho_s);
      const CMat2 numeric = cmat_pow(cmat_mul(ar, as), 2);
      dev = std::max(dev, cmat_distance(numeric, embed_graded(
                                                     cc.n_matrix(r, s),
                                                     gc.g12, gc.g21)));
    }
    std::ostringstream os;
    os << "max deviation " << dev;
    out.push_back(
        {"numeric (A(r) A(s))^2 matches N(r,s)", dev < 1e-8, os.str()});
  }

  return out;
}

std::vector<CheckResult> verify_rseqpm12(long q_lo, long q_hi) {
  std::vector<CheckResult> out;
  for (long q = q_lo; q <= q_hi; ++q) {
    CheckResult c{"residue classes at q = " + std::to_string(q), true, ""};
    long weights = 0;
    for (long p = 0; p < 12 * q && c.passed; ++p) {
      if (std::gcd(p, q) != 1) {
        continue;
      }
      ++weights;
      const long qq = modulus_q(p, q);
      const std::vector<std::pair<long, long>> expected{
          {1, 2}, {2, 1}, {qq - 2, qq - 1}, {qq - 1, qq - 2}};
      if (rseqpm12_enumerate(p, q) != expected) {
        c.passed = false;
        c.detail = "unexpected class set at p = " + std::to_string(p);
      }
    }
    if (c.passed) {
      c.detail = std::to_string(weights) +
                 " weights over a full period; classes are exactly "
                 "+-(1,2), +-(2,1)";
    }
    out.push_back(c);
  }
  return out;
}

std::vector<Weight> oracle_weight_grid(long max_den, long max_num) {
  std::vector<Weight> grid;
  for (long b = 1; b <= max_den; ++b) {
    for (long a = -max_num; a <= max_num; ++a) {
      if (std::gcd(std::abs(a), b) != 1) {
        continue;
      }
      const Weight k = Weight::of(Rational(a, b));
      if (is_degenerate(k) || !stiller_valid(k)) {
        continue;
      }
      grid.push_back(k);
    }
  }
  return grid;
}

CheckResult verify_oracle_nn(const Weight& k, long bound) {
  CheckResult c{"N-N oracle grid at k = " + k.str(), true, ""};
  const SpectralContext sc{k};
  const ConnectionContext cc{k};
  const bool closure_zero = sc.closure().is_zero();
  const auto ps = span_without(bound, 1);
  const long n = static_cast<long>(ps.size());
  std::vector<GradedMatrix> nm(static_cast<std::size_t>(n * n));
  std::vector<EmbeddedMatrix> em(nm.size());
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      const auto idx = static_cast<std::size_t>(i * n + j);
      nm[idx] = cc.n_matrix(ps[i], ps[j]);
      em[idx] = embed_for_filter(nm[idx]);
    }
  }
  long tuples = 0;
  for (long i = 0; i < n && c.passed; ++i) {
    for (long j = 0; j < n && c.passed; ++j) {
      const auto left = static_cast<std::size_t>(i * n + j);
      for (long a = 0; a < n && c.passed; ++a) {
        for (long b = 0; b < n; ++b) {
          const auto right = static_cast<std::size_t>(a * n + b);
          ++tuples;
          const bool predicted =
              nn_classify(sc, ps[i], ps[j], ps[a], ps[b]).commutes;
          const bool actual =
              commutator_certainly_nonzero(em[left], em[right], closure_zero)
                  ? false
                  : commute_oracle(nm[left], nm[right]);
          if (predicted != actual) {
            c.passed = false;
            c.detail = "disagreement at (r, s, u, v) = " +
                       tuple_str({ps[i], ps[j], ps[a], ps[b]}) +
                       ": classifier says " +
                       (predicted ? "commute" : "do not commute") +
                       ", commutator says the opposite";
            break;
          }
        }
      }
    }
  }
  if (c.passed) {
    c.detail = std::to_string(tuples) + " tuples, 100% agreement";
  }
  return c;
}

CheckResult verify_oracle_mn(const Weight& k, long bound) {
  CheckResult c{"M-N oracle grid at k = " + k.str(), true, ""};
  const SpectralContext sc{k};
  const ConnectionContext cc{k};
  const bool closure_zero = sc.closure().is_zero();
  const auto ts = span_without(bound, 0);
  const auto ps = span_without(bound, 1);
  const long nt = static_cast<long>(ts.size());
  const long n = static_cast<long>(ps.size());
  std::vector<GradedMatrix> mm(static_cast<std::size_t>(nt));
  std::vector<EmbeddedMatrix> emm(mm.size());
  for (long i = 0; i < nt; ++i) {
    mm[static_cast<std::size_t>(i)] = cc.m_matrix(ts[i]);
    emm[static_cast<std::size_t>(i)] = embed_for_filter(mm[i]);
  }
  std::vector<GradedMatrix> nm(static_cast<std::size_t>(n * n));
  std::vector<EmbeddedMatrix> emn(nm.size());
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      const auto idx = static_cast<std::size_t>(i * n + j);
      nm[idx] = cc.n_matrix(ps[i], ps[j]);
      emn[idx] = embed_for_filter(nm[idx]);
    }
  }
  long tuples = 0;
  for (long i = 0; i < nt && c.passed; ++i) {
    for (long a = 0; a < n && c.passed; ++a) {
      for (long b = 0; b < n; ++b) {
        const auto mi = static_cast<std::size_t>(i);
        const auto ni = static_cast<std::size_t>(a * n + b);
        ++tuples;
        const bool predicted = mn_classify(sc, ts[i], ps[a], ps[b]).commutes;
        const bool actual =
            commutator_certainly_nonzero(emm[mi], emn[ni], closure_zero)
                ? false
                : commute_oracle(mm[mi], nm[ni]);
        if (predicted != actual) {
          c.passed = false;
          c.detail = "disagreement at (t, r, s) = " +
                     tuple_str({ts[i], ps[a], ps[b]}) + ": classifier says " +
                     (predicted ? "commute" : "do not commute") +
                     ", commutator says the opposite";
          break;
        }
      }
    }
  }
  if (c.passed) {
    c.detail = std::to_string(tuples) + " tuples, 100% agreement";
  }
  return c;
}

std::vector<CheckResult> verify_oracle(long max_den, long max_num,
                                       long bound) {
  std::vector<CheckResult> out;
  for (const Weight& k : oracle_weight_grid(max_den, max_num)) {
    out.push_back(verify_oracle_nn(k, bound));
    out.push_back(verify_oracle_mn(k, bound));
  }
  return out;
}

} // namespace kz
