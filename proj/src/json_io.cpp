#include "kzmono/json_io.hpp"

#include <stdexcept>

namespace kz {

Json cycnum_to_json(const CycNum& c) {
  Json j;
  j["n"] = c.field()->conductor();
  Json coeffs = Json::array();
  for (const auto& x : c.coeffs()) {
    coeffs.push_back(rational_str(x));
  }
  j["coeffs"] = coeffs;
  return j;
}

CycNum cycnum_from_json(const Json& j) {
  const long n = j.at("n").get<long>();
  const FieldPtr field = FieldContext::make(n);
  const auto& coeffs = j.at("coeffs");
  if (!coeffs.is_array() ||
      static_cast<long>(coeffs.size()) != field->degree()) {
    throw std::invalid_argument(
        "coefficient array does not match the field degree");
  }
  std::vector<std::pair<long, Rational>> terms;
  terms.reserve(coeffs.size());
  long e = 0;
  for (const auto& s : coeffs) {
    terms.emplace_back(e++, parse_rational(s.get<std::string>()));
  }
  return CycNum::from_terms(field, terms);
}

Json graded_to_json(const GradedMatrix& m) {
  Json j;
  j["d11"] = cycnum_to_json(m.d11());
  j["d22"] = cycnum_to_json(m.d22());
  j["u12_times_G12"] = cycnum_to_json(m.u12());
  j["l21_times_G21"] = cycnum_to_json(m.l21());
  return j;
}

GradedMatrix graded_from_json(const RingPtr& ring, const Json& j) {
  const CycNum d11 = cycnum_from_json(j.at("d11"));
  const CycNum d22 = cycnum_from_json(j.at("d22"));
  const CycNum u12 = cycnum_from_json(j.at("u12_times_G12"));
  const CycNum l21 = cycnum_from_json(j.at("l21_times_G21"));
  if (d11.field()->conductor() != ring->field->conductor()) {
    throw std::invalid_argument("matrix conductor does not match the ring");
  }
  return GradedMatrix(ring, d11, u12, l21, d22);
}

Json intmat_to_json(const IntMat2& m) {
  return Json::array({Json::array({m.a.get_str(), m.b.get_str()}),
                      Json::array({m.c.get_str(), m.d.get_str()})});
}

Json verdict_to_json(const CommuteVerdict& v) {
  Json j;
  j["commutes"] = v.commutes;
  j["condition"] = v.condition;
  j["label"] = condition_label(v);
  return j;
}

Json witness_to_json(const Witness& w) {
  Json j;
  j["k"] = w.k.str();
  j["N"] = w.level;
  j["modulus"] = w.modulus;
  j["n_target"] = w.n_target;
  j["pairs"] = Json::array({Json::array({w.pairs[0].first, w.pairs[0].second}),
                            Json::array({w.pairs[1].first, w.pairs[1].second})});
  j["lifts"] = Json::array({Json::array({w.lifts[0].first, w.lifts[0].second}),
                            Json::array({w.lifts[1].first, w.lifts[1].second})});
  j["words"] = Json::array({word_str(w.words[0]), word_str(w.words[1])});
  j["membership"] = Json::array(
      {membership_str(w.membership[0]), membership_str(w.membership[1])});
  j["commutator_nonzero"] = w.commutator_nonzero;
  const ConnectionContext cc{w.k};
  j["matrices"] = Json::array(
      {graded_to_json(cc.n_matrix(w.lifts[0].first, w.lifts[0].second)),
       graded_to_json(cc.n_matrix(w.lifts[1].first, w.lifts[1].second))});
  return j;
}

Json classification_to_json(const Weight& k, const ClassificationResult& r) {
  Json j;
  j["k"] = k.str();
  j["verdict"] = verdict_str(r.verdict);
  j["reason"] = r.reason;
  j["witness"] = r.witness ? witness_to_json(*r.witness) : Json(nullptr);
  return j;
}

} // namespace kz
