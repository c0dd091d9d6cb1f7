#include "congruent/serialize.hpp"

#include "congruent/errors.hpp"

namespace congruent {

namespace {

json integer_json(const Integer& v) {
    if (mpz_fits_slong_p(v.get_mpz_t()))
        return v.get_si();
    return v.get_str();
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer())
        return Integer(std::to_string(j.get<long long>()));
    if (j.is_string())
        return Integer(j.get<std::string>());
    throw MathError(ErrorKind::ParseError, "expected an integer, got " + j.dump());
}

Rational pow10_inverse(unsigned digits) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
    return Rational(Integer(1), p);
}

const json& field_of(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw MathError(ErrorKind::ParseError, std::string("missing field '") + key + "'");
    return j.at(key);
}

} // namespace

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const UniPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs())
        a.push_back(to_json(c));
    return a;
}

json to_json(const NumberField& f) {
    json j;
    j["label"] = f.label();
    j["min_poly"] = to_json(f.min_poly());
    if (f.degree() >= 2)
        j["root_interval"] = json::array({to_json(f.root_interval().lo), to_json(f.root_interval().hi)});
    else
        j["root_interval"] = nullptr;
    return j;
}

json to_json(const FieldElement& e) {
    json coeffs = json::array();
    for (const auto& c : e.coeffs())
        coeffs.push_back(to_json(c));
    return {{"field_label", e.field()->label()}, {"coeffs", coeffs}};
}

json to_json(const CurvePoint& p) {
    json j;
    j["n"] = integer_json(p.curve().n());
    if (p.is_infinity()) {
        j["infinity"] = true;
    } else {
        j["x"] = to_json(p.x());
        j["y"] = to_json(p.y());
    }
    return j;
}

std::string approx_decimal(const FieldElement& e, unsigned digits) {
    const Enclosure enc = e.approx(pow10_inverse(digits + 1));
    return enc.midpoint().to_decimal(digits);
}

json to_json(const Triangle& t, unsigned digits) {
    json j;
    j["n"] = integer_json(t.n());
    j["field_label"] = t.field()->label();
    j["a"] = to_json(t.a());
    j["b"] = to_json(t.b());
    j["c"] = to_json(t.c());
    j["approx"] = {{"a", approx_decimal(t.a(), digits)},
                   {"b", approx_decimal(t.b(), digits)},
                   {"c", approx_decimal(t.c(), digits)}};
    return j;
}

json to_json(const OrderCertificate& c, const CurvePoint& p) {
    json checks = json::array();
    for (const auto& chk : c.checks)
        checks.push_back({{"m", chk.m}, {"value_nonzero", chk.value_nonzero}});
    json j;
    j["point"] = to_json(p);
    j["verdict"] = c.infinite_order() ? "infinite_order" : "torsion";
    j["checks"] = checks;
    j["reason"] = c.reason;
    j["bound_set"] = torsion_bound_set();
    if (c.torsion_order)
        j["torsion_order"] = *c.torsion_order;
    return j;
}

json to_json(const TunnellCounts& t) {
    return {{"n", t.n},
            {"count_8", t.count_8},
            {"count_32", t.count_32},
            {"verdict", std::string(to_string(t.verdict))},
            {"note", std::string(t.note)}};
}

json to_json(const DesbovesCheck& c) {
    return {{"grid_points", c.grid_points}, {"random_points", c.random_points}, {"all_zero", c.all_zero()}};
}

json witness_bundle(const QuadraticWitness& w, unsigned digits, std::string_view construction) {
    json j;
    j["n"] = integer_json(w.n);
    j["construction"] = std::string(construction);
    j["field"] = to_json(*w.field);
    j["triangle"] = to_json(w.triangle, digits);
    j["point"] = to_json(w.point);
    j["minus_point"] = to_json(w.minus_point);
    j["certificate"] = to_json(w.certificate, w.point);
    j["cross_checks"] = {{"coord_agrees", nullptr},
                         {"d_equation_holds", nullptr},
                         {"torsion_fact_applies", w.torsion_fact_applies}};
    j["parameters"] = {{"b", to_json(w.b)}, {"m", to_json(w.m)}, {"s", integer_json(w.s)}};
    return j;
}

json witness_bundle(const CubicWitness& w, const KappaLambda& kl, unsigned digits) {
    json j;
    j["n"] = integer_json(w.n);
    j["construction"] = "cubic";
    j["field"] = to_json(*w.field);
    j["triangle"] = to_json(w.triangle, digits);
    j["point"] = to_json(w.point);
    j["minus_point"] = to_json(w.minus_point);
    j["certificate"] = to_json(w.certificate, w.point);
    j["cross_checks"] = {{"coord_agrees", w.coord_checked ? json(w.coord_agrees) : json(nullptr)},
                         {"d_equation_holds", w.d_equation_holds},
                         {"cubic_vanishes", w.cubic_vanishes},
                         {"kappa_consistent", kl.consistent}};
    const std::string expr = "cbrt(" + kl.radicand_rational.to_string() + " + " + kl.sqrt_coeff.get_str() +
                             "*sqrt(" + kl.sqrt_arg.get_str() + "))";
    j["parameters"] = {
        {"integer_min_poly", to_json(lambda_cubic(w.n))},
        {"rational_lambda", w.rational_lambda},
        {"lambda", to_json(w.lambda)},
        {"lambda_approx", approx_decimal(w.lambda, digits)},
        {"kappa",
         {{"expression", expr},
          {"radicand_rational", to_json(kl.radicand_rational)},
          {"sqrt_coeff", integer_json(kl.sqrt_coeff)},
          {"sqrt_arg", integer_json(kl.sqrt_arg)},
          {"enclosure", json::array({to_json(kl.kappa.lo), to_json(kl.kappa.hi)})}}},
        {"lambda_enclosure", json::array({to_json(kl.lambda.lo), to_json(kl.lambda.hi)})},
    };
    return j;
}

Rational rational_from_json(const json& j) {
    if (!j.is_string())
        throw MathError(ErrorKind::ParseError, "expected a rational string, got " + j.dump());
    return Rational::parse(j.get<std::string>());
}

UniPoly poly_from_json(const json& j) {
    if (!j.is_array())
        throw MathError(ErrorKind::ParseError, "expected a coefficient array, got " + j.dump());
    std::vector<Rational> c;
    for (const auto& e : j)
        c.push_back(rational_from_json(e));
    return UniPoly(std::move(c));
}

FieldPtr field_from_json(const json& j) {
    const UniPoly mp = poly_from_json(field_of(j, "min_poly"));
    const std::string label = field_of(j, "label").get<std::string>();
    const json& iv = field_of(j, "root_interval");
    if (mp.degree() == 1)
        return mp == UniPoly::x() ? NumberField::rationals() : NumberField::make(mp, label);
    if (!iv.is_array() || iv.size() != 2)
        throw MathError(ErrorKind::ParseError, "root_interval must be a pair");
    return NumberField::make(mp, IsolatingInterval{rational_from_json(iv[0]), rational_from_json(iv[1])}, label);
}

FieldElement element_from_json(const json& j, const FieldPtr& field) {
    if (field_of(j, "field_label").get<std::string>() != field->label())
        throw MathError(ErrorKind::ParseError, "element belongs to " + j.at("field_label").dump() + ", expected " +
                                                   field->label());
    const json& c = field_of(j, "coeffs");
    if (!c.is_array() || c.size() != static_cast<std::size_t>(field->degree()))
        throw MathError(ErrorKind::ParseError, "coefficient vector has the wrong length");
    std::vector<Rational> coeffs;
    for (const auto& e : c)
        coeffs.push_back(rational_from_json(e));
    return FieldElement(field, coeffs);
}

ParsedBundle revalidate_bundle(const json& bundle) {
    try {
        const Integer n = integer_from_json(field_of(bundle, "n"));
        FieldPtr field = field_from_json(field_of(bundle, "field"));
        const json& pj = field_of(bundle, "point");
        if (integer_from_json(field_of(pj, "n")) != n)
            throw MathError(ErrorKind::ParseError, "point n differs from bundle n");
        const CurveEn curve(n, field);
        CurvePoint p = CurvePoint::affine(curve, element_from_json(field_of(pj, "x"), field),
                                          element_from_json(field_of(pj, "y"), field));
        const json& tj = field_of(bundle, "triangle");
        if (integer_from_json(field_of(tj, "n")) != n)
            throw MathError(ErrorKind::ParseError, "triangle n differs from bundle n");
        Triangle t = triangle_new(element_from_json(field_of(tj, "a"), field),
                                  element_from_json(field_of(tj, "b"), field),
                                  element_from_json(field_of(tj, "c"), field), n);
        if (!point_to_triangle(p).same_legs(t))
            throw MathError(ErrorKind::NotRightTriangle, "stored triangle does not come from the stored point");
        return {field, p, t};
    } catch (const MathError& e) {
        throw MathError(ErrorKind::CacheCorrupt, e.what());
    } catch (const json::exception& e) {
        throw MathError(ErrorKind::CacheCorrupt, e.what());
    }
}

} // namespace congruent
