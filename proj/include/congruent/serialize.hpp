#pragma once

#include <json.hpp>

#include "congruent/constructions.hpp"
#include "congruent/tunnell.hpp"

namespace congruent {

using json = nlohmann::json;

json to_json(const Rational& r);
json to_json(const UniPoly& p);
json to_json(const NumberField& f);
json to_json(const FieldElement& e);
json to_json(const CurvePoint& p);
// `digits` fractional digits in the display-only approximations.
json to_json(const Triangle& t, unsigned digits);
json to_json(const OrderCertificate& c, const CurvePoint& p);
json to_json(const TunnellCounts& t);
json to_json(const DesbovesCheck& c);

json witness_bundle(const QuadraticWitness& w, unsigned digits, std::string_view construction = "quadratic");
json witness_bundle(const CubicWitness& w, const KappaLambda& kl, unsigned digits);

// Decimal string within 10^-digits of the real value of e.
std::string approx_decimal(const FieldElement& e, unsigned digits);

// Parsing; every function throws ParseError on malformed input.
Rational rational_from_json(const json& j);
UniPoly poly_from_json(const json& j);
// Rebuilds the field and re-certifies the stored root interval.
FieldPtr field_from_json(const json& j);
FieldElement element_from_json(const json& j, const FieldPtr& field);

struct ParsedBundle {
    FieldPtr field;
    CurvePoint point;
    Triangle triangle;
};

// Re-checks the curve equation and the triangle identities of a stored
// witness bundle. Throws CacheCorrupt when anything fails.
ParsedBundle revalidate_bundle(const json& bundle);

} // namespace congruent
