#include "congruent/correspondence.hpp"

#include <algorithm>

#include "congruent/errors.hpp"

namespace congruent {

Triangle triangle_new(const FieldElement& a, const FieldElement& b, const FieldElement& c, const Integer& n) {
    const FieldElement pyth = a * a + b * b - c * c;
    if (!pyth.is_zero())
        throw MathError(ErrorKind::NotRightTriangle, "a^2 + b^2 - c^2 = " + pyth.to_string());
    const FieldElement area = a * b / Rational(2) - Rational(n);
    if (!area.is_zero())
        throw MathError(ErrorKind::WrongArea, "ab/2 - n = " + area.to_string() + " for n = " + n.get_str());
    for (const FieldElement* side : {&a, &b, &c})
        if (side->sign() <= 0)
            throw MathError(ErrorKind::NonPositiveSide, "side " + side->to_string() + " is not positive");
    return Triangle(a, b, c, n);
}

Triangle Triangle::canonical() const {
    if ((b_ - a_).sign() < 0)
        return Triangle(b_, a_, c_, n_);
    return *this;
}

bool Triangle::same_legs(const Triangle& o) const {
    return (a_ == o.a_ && b_ == o.b_) || (a_ == o.b_ && b_ == o.a_);
}

PointPair triangle_to_points(const Triangle& t) {
    const CurveEn curve(t.n(), t.field());
    const FieldElement xp = t.a() * (t.a() + t.c()) / Rational(2);
    const FieldElement xm = t.a() * (t.a() - t.c()) / Rational(2);
    return {CurvePoint::affine(curve, xp, t.a() * xp), CurvePoint::affine(curve, xm, t.a() * xm)};
}

Triangle point_to_triangle(const CurvePoint& p) {
    if (p.is_infinity())
        throw MathError(ErrorKind::TorsionInput, "the point at infinity gives no triangle");
    if (p.y().is_zero())
        throw MathError(ErrorKind::TorsionInput, "2-torsion point (" + p.x().to_string() + ", 0) gives no triangle");
    const Rational n(p.curve().n());
    const FieldElement& x = p.x();
    const FieldElement abs_y = p.y().abs();
    const FieldElement a = (p.y() / x).abs();
    const FieldElement b = (x / p.y()).abs() * (Rational(2) * n);
    const FieldElement c = (x * x + n * n) / abs_y;
    return triangle_new(a, b, c, p.curve().n()).canonical();
}

std::vector<Triangle> generate_triangles(const CurvePoint& p, int count, int cap_factor) {
    return generate_triangles(p, certify_infinite_order(p), count, cap_factor);
}

std::vector<Triangle> generate_triangles(const CurvePoint& p, const OrderCertificate& cert, int count,
                                         int cap_factor) {
    if (count < 1)
        throw MathError(ErrorKind::InvalidArgument, "count must be >= 1");
    if (!cert.infinite_order())
        throw MathError(ErrorKind::NotCertified, "point is not certified to have infinite order: " + cert.reason);
    std::vector<Triangle> out;
    CurvePoint kp = p;
    const long long cap = static_cast<long long>(cap_factor) * count;
    for (long long k = 1; k <= cap; ++k) {
        if (k > 1)
            kp = kp + p;
        Triangle t = point_to_triangle(kp);
        const bool seen = std::any_of(out.begin(), out.end(), [&](const Triangle& o) { return o.same_legs(t); });
        if (!seen) {
            out.push_back(std::move(t));
            if (static_cast<int>(out.size()) == count)
                return out;
        }
    }
    throw MathError(ErrorKind::IterationCap, "only " + std::to_string(out.size()) + " distinct triangles in " +
                                                 std::to_string(cap) + " multiples");
}

} // namespace congruent
