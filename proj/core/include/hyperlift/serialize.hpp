#pragma once

#include <nlohmann/json.hpp>

#include "hyperlift/curve.hpp"
#include "hyperlift/families.hpp"
#include "hyperlift/groups.hpp"
#include "hyperlift/lift_rules.hpp"

namespace hyperlift {

/// Insertion-ordered so reports read top-down and stay byte-stable.
using Json = nlohmann::ordered_json;

/// {"p", "m", "coeffs"}
Json to_json(const FqElem& x);
/// {"a", "b", "d"} with decimal-string a, b.
Json to_json(const QuadInt& x);
/// {"ring": "Fq", "p", "m", "coeffs": [[...]]}, coefficients low-to-high.
Json to_json(const FqPoly& f);
/// {"ring": "Z"|"Zsqrt", "d"?, "coeffs"}
Json to_json(const CharZeroPoly& f);
Json to_json(const FactoredForm& ff);
Json to_json(const P1Point& pt);
/// [a, b, c, d]
Json to_json(const Moebius& h);
/// {"matrix", "e"}
Json to_json(const CurveAut& s);
/// {"order", "labels", "cayley"}
Json to_json(const FiniteGroup& g);
/// {"liftable", "rule", "oort", "flags"}
Json to_json(const LiftVerdict& v);
Json to_json(const ConsistencyCheck& c);
/// {"claim", "source", "status", "detail"}
Json to_json(const ClaimResult& c);
Json to_json(const ReductionReport& r);
Json to_json(const AllowedWords& a);
Json to_json(const CyclicEquation& e);

FqElem fq_elem_from_json(const Json& j);
QuadInt quadint_from_json(const Json& j);
/// {"p": int, "m": int?, "f": [ints low-to-high]}; ints may be JSON numbers
/// or decimal strings. Throws InvalidInput on schema or curve errors.
HyperCurve curve_from_json(const Json& j);

}  // namespace hyperlift
