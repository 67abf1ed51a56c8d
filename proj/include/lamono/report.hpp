#pragma once

#include "json.hpp"

#include "lamono/arrangement.hpp"
#include "lamono/error.hpp"
#include "lamono/exact/dense_poly.hpp"
#include "lamono/exact/unity_poly.hpp"
#include "lamono/invariants.hpp"
#include "lamono/localsys.hpp"
#include "lamono/monodromy.hpp"
#include "lamono/verify.hpp"

// JSON views of the library types. nlohmann::json keeps object keys in a
// std::map, so every dump has lexicographic key order.

namespace lamono {

using Json = nlohmann::json;

/// {"m": c_m, ...} with decimal string keys.
Json to_json(const detail::ExponentMap& factors);

/// Coefficients as JSON integers, or decimal strings when outside int64.
Json to_json(const DensePoly& coefficients);

/// "p/q" when real, {"re": "p/q", "im": "r/s"} otherwise (the input grammar).
Json to_json(const GaussianRational& z);

Json to_json(const Line& line);
Json to_json(const CombinatorialSummary& cs);
Json to_json(const InvariantReport& r);
Json to_json(const BoundReport& r);
Json to_json(const VerificationSummary& v);

/// Numerator / denominator split of a zeta function.
Json zeta_to_json(const ZetaFunction& z);

Json error_json(ErrorCode code, const std::string& message);

}  // namespace lamono
