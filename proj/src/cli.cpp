#include "kzmono/cli.hpp"

#include "kzmono/json_io.hpp"
#include "kzmono/qseries.hpp"
#include "kzmono/verify.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <string>

namespace kz::cli {

namespace {

struct RangeArg {
  long lo = 0;
  long hi = 0;
};

RangeArg parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos || pos == 0 || pos + 2 >= text.size()) {
    throw std::invalid_argument("range must be written lo..hi");
  }
  RangeArg r;
  try {
    std::size_t used = 0;
    const std::string lo_part = text.substr(0, pos);
    const std::string hi_part = text.substr(pos + 2);
    r.lo = std::stol(lo_part, &used);
    if (used != lo_part.size()) throw std::invalid_argument("");
    r.hi = std::stol(hi_part, &used);
    if (used != hi_part.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("range must be written lo..hi with integers");
  }
  if (r.lo > r.hi) {
    throw std::invalid_argument("range lo must not exceed hi");
  }
  return r;
}

void print_witness_text(std::ostream& out, const Witness& w) {
  out << "witness: level N = " << w.level << ", words in Gamma("
      << w.n_target << "), residue modulus Q = " << w.modulus << "\n";
  for (int i = 0; i < 2; ++i) {
    out << "  pair " << (i + 1) << ": residues (" << w.pairs[i].first << ", "
        << w.pairs[i].second << ") mod " << w.modulus << ", lift ("
        << w.lifts[i].first << ", " << w.lifts[i].second << "), word "
        << word_str(w.words[i]) << ", "
        << membership_str(w.membership[i]) << "\n";
  }
  out << "  commutator nonzero: " << (w.commutator_nonzero ? "yes" : "no")
      << "\n";
}

void print_graded_text(std::ostream& out, const std::string& name,
                       const GradedMatrix& m) {
  out << name << " over Q(zeta_" << m.ring()->field->conductor() << "):\n"
      << "  d11 = " << m.d11().str() << "\n"
      << "  u12 = (" << m.u12().str() << ") * G12\n"
      << "  l21 = (" << m.l21().str() << ") * G21\n"
      << "  d22 = " << m.d22().str() << "\n";
}

int run_classify(const Weight& k, long level, bool json, std::ostream& out) {
  const ClassificationResult res = classify_weight(k, level);
  if (json) {
    out << classification_to_json(k, res).dump(2) << "\n";
    return 0;
  }
  out << "k = " << k.str() << ": " << verdict_str(res.verdict) << "\n"
      << "reason: " << res.reason << "\n";
  if (res.witness) print_witness_text(out, *res.witness);
  return 0;
}

int run_witness(const Weight& k, long level, bool json, std::ostream& out,
                std::ostream& err) {
  const ClassificationResult res = classify_weight(k, level);
  if (!res.witness) {
    err << "no witness for k = " << k.str() << ": " << res.reason << "\n";
    return 1;
  }
  if (json) {
    out << witness_to_json(*res.witness).dump(2) << "\n";
  } else {
    out << "k = " << k.str() << "\n";
    print_witness_text(out, *res.witness);
  }
  return 0;
}

int run_qcheck(const Weight& k, long order, bool json, std::ostream& out) {
  struct Report {
    std::string identity;
    long order;
    std::string max_nonzero;
    bool zero;
  };
  std::vector<Report> reports;
  const auto add = [&](const std::string& name, const QSeries& residual,
                       long used_order) {
    Rational mx(0);
    bool any = false;
    for (const Rational& c : residual.coeffs()) {
      if (c == 0) continue;
      const Rational a = abs(c);
      if (!any || a > mx) mx = a;
      any = true;
    }
    reports.push_back(
        {name, used_order, any ? rational_str(mx) : "0", !any});
  };

  add("frobenius-branch0", kz_residual(k, kz_series_solution(k, 0, order)),
      order);
  add("frobenius-branch1", kz_residual(k, kz_series_solution(k, 1, order)),
      order);
  add("schwarzian", schwarzian_check(k, order), order);
  const NormalFormResiduals nf = normal_form_check(k, order);
  add("normal-form-branch0", nf.linear[0], order);
  add("normal-form-branch1", nf.linear[1], order);
  add("riccati-branch0", nf.riccati[0], order);
  add("riccati-branch1", nf.riccati[1], order);
  const PullbackResiduals pb = pullback_check(k, order);
  add("pullback-residual", pb.residual, order);
  add("pullback-branch-difference", pb.branch_difference, order);
  const long ramanujan_order = std::max(order, 51L);
  add("ramanujan", ramanujan_check(ramanujan_order), ramanujan_order);

  bool all_zero = true;
  if (json) {
    Json arr = Json::array();
    for (const Report& r : reports) {
      Json j;
      j["identity"] = r.identity;
      j["k"] = k.str();
      j["order"] = r.order;
      j["max_nonzero_coefficient"] = r.max_nonzero;
      arr.push_back(j);
      all_zero = all_zero && r.zero;
    }
    out << arr.dump(2) << "\n";
  } else {
    for (const Report& r : reports) {
      out << "qcheck " << r.identity << " k=" << k.str()
          << " order=" << r.order
          << " max_nonzero_coefficient=" << r.max_nonzero << " "
          << (r.zero ? "pass" : "FAIL") << "\n";
      all_zero = all_zero && r.zero;
    }
  }
  return all_zero ? 0 : 1;
}

int print_checks(const std::vector<CheckResult>& checks, bool json,
                 std::ostream& out) {
  if (json) {
    Json arr = Json::array();
    for (const CheckResult& c : checks) {
      Json j;
      j["name"] = c.name;
      j["passed"] = c.passed;
      j["detail"] = c.detail;
      arr.push_back(j);
    }
    out << arr.dump(2) << "\n";
    return all_passed(checks) ? 0 : 1;
  }
  for (const CheckResult& c : checks) {
    out << (c.passed ? "pass" : "FAIL") << " " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  const bool ok = all_passed(checks);
  out << (ok ? "all checks passed" : "some checks FAILED") << " ("
      << checks.size() << " checks)\n";
  return ok ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Exact monodromy of the Kaneko-Zagier equation: weight classification, "
      "connection matrices, commutativity, witnesses, verification suites"};
  app.require_subcommand(1);

  std::string k_text;
  long level = 1;
  long t = 0, r = 0, s = 0, u = 0, v = 0;
  long order = 24;
  std::string word_text, suite, range_text;
  bool json = false, fast = false;

  CLI::App* classify = app.add_subcommand(
      "classify", "Classify a weight: Allowed / Excluded / Degenerate, with a "
                  "verified witness for generic exclusions");
  classify->add_option("--k", k_text, "weight as a reduced fraction p/q")
      ->required();
  classify->add_option("--N", level, "level of the target group Gamma(N)")
      ->capture_default_str();
  classify->add_flag("--json", json, "emit JSON");

  CLI::App* matrix = app.add_subcommand(
      "matrix", "Print an exact connection matrix: --t for M(t), --r/--s for "
                "N(r,s), --word for an arbitrary word in T, S");
  matrix->add_option("--k", k_text, "weight as a reduced fraction p/q")
      ->required();
  CLI::Option* mt = matrix->add_option("--t", t, "exponent of M(t), t != 0");
  CLI::Option* mr = matrix->add_option("--r", r, "first exponent of N(r,s)");
  CLI::Option* ms = matrix->add_option("--s", s, "second exponent of N(r,s)");
  CLI::Option* mw = matrix->add_option(
      "--word", word_text, "word in T, S, e.g. \"(T^2 S T^3 S)^2\"");
  matrix->add_flag("--json", json, "emit JSON");

  CLI::App* commute = app.add_subcommand(
      "commute", "Classify a commuting pair: --t/--r/--s for M(t) vs N(r,s), "
                 "--r/--s/--u/--v for N(r,s) vs N(u,v); the verdict is "
                 "cross-checked against the exact commutator");
  commute->add_option("--k", k_text, "weight as a reduced fraction p/q")
      ->required();
  CLI::Option* ct = commute->add_option("--t", t, "exponent of M(t)");
  CLI::Option* cr = commute->add_option("--r", r, "first exponent of N(r,s)");
  CLI::Option* cs = commute->add_option("--s", s, "second exponent of N(r,s)");
  CLI::Option* cu = commute->add_option("--u", u, "first exponent of N(u,v)");
  CLI::Option* cv = commute->add_option("--v", v, "second exponent of N(u,v)");
  commute->add_flag("--json", json, "emit JSON");

  CLI::App* witness = app.add_subcommand(
      "witness", "Produce the non-commutativity witness for an excluded "
                 "weight (exit 1 when none exists)");
  witness->add_option("--k", k_text, "weight as a reduced fraction p/q")
      ->required();
  witness->add_option("--N", level, "level of the target group Gamma(N)")
      ->capture_default_str();
  witness->add_flag("--json", json, "emit JSON");

  CLI::App* verify = app.add_subcommand(
      "verify", "Run a verification suite; exit 0 iff every check passes");
  verify
      ->add_option("suite", suite,
                   "lemmas: congruence sweeps for (T^t S)^3 mod t+1 and "
                   "(T^r S T^s S)^2 mod rs-2; relations: exact group "
                   "relations and the floating-point cross-channel for one "
                   "weight (--k required); rseqpm12: exhaustive residue "
                   "classes with rs == 2 (mod Q); oracle: classifier vs "
                   "commutator grids (--k restricts to one weight)")
      ->required()
      ->check(CLI::IsMember({"lemmas", "relations", "rseqpm12", "oracle"}));
  CLI::Option* vk =
      verify->add_option("--k", k_text, "weight as a reduced fraction p/q");
  verify->add_flag("--fast", fast, "smaller parameter ranges");
  verify->add_option(
      "--range", range_text,
      "lo..hi; lemmas: t sweep bound (hi), relations: exponent bound (hi), "
      "rseqpm12: denominator interval, oracle: exponent bound (hi)");
  verify->add_flag("--json", json, "emit JSON");

  CLI::App* qcheck = app.add_subcommand(
      "qcheck", "q-expansion identities for one weight: Frobenius residuals, "
                "Schwarzian, normal forms, hypergeometric pullback, plus the "
                "Ramanujan self-test; exit 0 iff every residual vanishes");
  qcheck->add_option("--k", k_text, "weight as a reduced fraction p/q")
      ->required();
  qcheck->add_option("--order", order, "series window length")
      ->capture_default_str()
      ->check(CLI::Range(3L, 400L));
  qcheck->add_flag("--json", json, "emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (app.got_subcommand(classify)) {
      return run_classify(Weight::parse(k_text), level, json, out);
    }

    if (app.got_subcommand(matrix)) {
      const bool has_t = mt->count() > 0;
      const bool has_r = mr->count() > 0, has_s = ms->count() > 0;
      const bool has_word = mw->count() > 0;
      const int modes = (has_t ? 1 : 0) + (has_r || has_s ? 1 : 0) +
                        (has_word ? 1 : 0);
      if (modes != 1 || (has_r != has_s)) {
        err << "matrix requires exactly one of --t, --r with --s, or --word\n";
        return 2;
      }
      const ConnectionContext cc{Weight::parse(k_text)};
      GradedMatrix m;
      std::string name;
      if (has_t) {
        if (t == 0) throw std::invalid_argument("M(t) requires t != 0");
        m = cc.m_matrix(t);
        name = "M(" + std::to_string(t) + ")";
      } else if (has_r) {
        if (r == 1 || s == 1) {
          throw std::invalid_argument("N(r,s) requires r != 1 and s != 1");
        }
        m = cc.n_matrix(r, s);
        name = "N(" + std::to_string(r) + "," + std::to_string(s) + ")";
      } else {
        const Word w = parse_word(word_text);
        m = cc.word_representation(w);
        name = "rho(" + word_str(w) + ")";
      }
      if (json) {
        out << graded_to_json(m).dump(2) << "\n";
      } else {
        print_graded_text(out, name, m);
      }
      return 0;
    }

    if (app.got_subcommand(commute)) {
      const bool has_t = ct->count() > 0;
      const bool has_r = cr->count() > 0, has_s = cs->count() > 0;
      const bool has_u = cu->count() > 0, has_v = cv->count() > 0;
      const Weight k = Weight::parse(k_text);
      const ConnectionContext cc{k};
      CommuteVerdict verdict;
      bool oracle = false;
      std::string family, lhs, rhs;
      if (has_t && has_r && has_s && !has_u && !has_v) {
        if (t == 0) throw std::invalid_argument("M(t) requires t != 0");
        if (r == 1 || s == 1) {
          throw std::invalid_argument("N(r,s) requires r != 1 and s != 1");
        }
        verdict = thmnc_classify(k, t, r, s);
        oracle = commute_oracle(cc.m_matrix(t), cc.n_matrix(r, s));
        family = "MN";
        lhs = "M(" + std::to_string(t) + ")";
        rhs = "N(" + std::to_string(r) + "," + std::to_string(s) + ")";
      } else if (!has_t && has_r && has_s && has_u && has_v) {
        if (r == 1 || s == 1 || u == 1 || v == 1) {
          throw std::invalid_argument(
              "N exponents must avoid 1 (rho(T S) is not among the words)");
        }
        verdict = thnnc_classify(k, r, s, u, v);
        oracle = commute_oracle(cc.n_matrix(r, s), cc.n_matrix(u, v));
        family = "NN";
        lhs = "N(" + std::to_string(r) + "," + std::to_string(s) + ")";
        rhs = "N(" + std::to_string(u) + "," + std::to_string(v) + ")";
      } else {
        err << "commute requires --t --r --s (M vs N) or --r --s --u --v "
               "(N vs N)\n";
        return 2;
      }
      if (verdict.commutes != oracle) {
        throw std::logic_error("classifier disagrees with the commutator at "
                               "k = " + k.str() + ", " + lhs + " vs " + rhs);
      }
      if (json) {
        Json j;
        j["k"] = k.str();
        j["family"] = family;
        if (family == "MN") j["t"] = t;
        j["r"] = r;
        j["s"] = s;
        if (family == "NN") {
          j["u"] = u;
          j["v"] = v;
        }
        j["verdict"] = verdict_to_json(verdict);
        j["oracle_commutes"] = oracle;
        out << j.dump(2) << "\n";
      } else {
        static const char* nn_text[] = {
            "one of the matrices is scalar",
            "Z_s = Z_v and Z_r = Z_u",
            "Z_s = Z_v = 1",
            "Z_r = Z_u = 1",
            "C = 2 mixed relation",
            "G12 G21 = 0 and both diagonal differences vanish",
        };
        static const char* mn_text[] = {
            "K_t K_{r,s} = 0",
            "Z_r = Z_s = 1",
            "Z_t = Z_r = Z_s",
            "G12 G21 = 0 and both diagonal differences vanish",
            "C = 2 mixed relation",
        };
        std::string label = condition_label(verdict);
        if (verdict.condition >= 1) {
          const char* desc = family == "NN" ? nn_text[verdict.condition - 1]
                                            : mn_text[verdict.condition - 1];
          label += std::string(" (") + desc + ")";
        }
        out << "k = " << k.str() << ": " << lhs << " vs " << rhs << "\n"
            << "commute: " << (verdict.commutes ? "yes" : "no") << "\n"
            << "condition: " << label << "\n"
            << "oracle agreement: yes\n";
      }
      return 0;
    }

    if (app.got_subcommand(witness)) {
      return run_witness(Weight::parse(k_text), level, json, out, err);
    }

    if (app.got_subcommand(verify)) {
      std::optional<RangeArg> range;
      if (!range_text.empty()) range = parse_range(range_text);
      std::vector<CheckResult> checks;
      if (suite == "lemmas") {
        long t_max = fast ? 50 : 200;
        const long rs_bound = fast ? 6 : 10;
        if (range) t_max = range->hi;
        checks = verify_lemmas(t_max, rs_bound);
      } else if (suite == "relations") {
        if (vk->count() == 0) {
          err << "verify relations requires --k\n";
          return 2;
        }
        long bound = fast ? 3 : 6;
        if (range) bound = range->hi;
        checks = verify_relations(Weight::parse(k_text), bound);
      } else if (suite == "rseqpm12") {
        long lo = 3, hi = fast ? 8 : 21;
        if (range) {
          lo = range->lo;
          hi = range->hi;
        }
        checks = verify_rseqpm12(lo, hi);
      } else {
        long bound = fast ? 4 : 6;
        if (range) bound = range->hi;
        if (vk->count() > 0) {
          const Weight k = Weight::parse(k_text);
          checks.push_back(verify_oracle_nn(k, bound));
          checks.push_back(verify_oracle_mn(k, bound));
        } else {
          const long max_den = fast ? 3 : 8;
          const long max_num = fast ? 6 : 24;
          checks = verify_oracle(max_den, max_num, bound);
        }
      }
      return print_checks(checks, json, out);
    }

    if (app.got_subcommand(qcheck)) {
      return run_qcheck(Weight::parse(k_text), order, json, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  err << "no subcommand\n";
  return 2;
}

} // namespace kz::cli
