#pragma once

#include "kzmono/search.hpp"

#include <json.hpp>

namespace kz {

// Deterministic JSON: insertion-ordered objects, stable field layout.
using Json = nlohmann::ordered_json;

// {"n": conductor, "coeffs": ["num/den", ...]} on the power basis.
Json cycnum_to_json(const CycNum& c);
CycNum cycnum_from_json(const Json& j);

// {"d11", "d22", "u12_times_G12", "l21_times_G21"} with CycNum payloads.
Json graded_to_json(const GradedMatrix& m);
GradedMatrix graded_from_json(const RingPtr& ring, const Json& j);

Json intmat_to_json(const IntMat2& m); // [[a, b], [c, d]] of decimal strings

Json verdict_to_json(const CommuteVerdict& v);

Json witness_to_json(const Witness& w);

Json classification_to_json(const Weight& k, const ClassificationResult& r);

} // namespace kz
