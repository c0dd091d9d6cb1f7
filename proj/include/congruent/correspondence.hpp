#pragma once

#include <vector>

#include "congruent/elliptic.hpp"

namespace congruent {

/*
 * Right triangle with legs a, b and hypotenuse c in a real number field:
 * a^2 + b^2 = c^2 and ab/2 = n hold exactly, and every side is positive
 * under the designated real embedding.
 */
class Triangle {
public:
    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    const FieldElement& c() const { return c_; }
    const Integer& n() const { return n_; }
    const FieldPtr& field() const { return a_.field(); }

    // Same triangle with the legs ordered a <= b.
    Triangle canonical() const;
    // {a, b} == {other.a, other.b}
    bool same_legs(const Triangle& other) const;

    friend Triangle triangle_new(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                                 const Integer& n);

private:
    Triangle(FieldElement a, FieldElement b, FieldElement c, Integer n)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), n_(std::move(n)) {}

    FieldElement a_, b_, c_;
    Integer n_;
};

// Throws NotRightTriangle, WrongArea or NonPositiveSide (in that order of checking).
Triangle triangle_new(const FieldElement& a, const FieldElement& b, const FieldElement& c, const Integer& n);

struct PointPair {
    CurvePoint plus;  // x = a(a + c)/2, y = a x
    CurvePoint minus; // x = a(a - c)/2, y = a x
};

PointPair triangle_to_points(const Triangle& t);

// a = |y/x|, b = 2n|x/y|, c = (x^2 + n^2)/|y|, legs ordered a <= b.
// Throws TorsionInput for the point at infinity or y = 0.
Triangle point_to_triangle(const CurvePoint& p);

// The first `count` triangles with pairwise distinct leg sets among
// point_to_triangle(k P), k = 1, 2, ... Certifies P first (NotCertified if
// torsion); gives up with IterationCap after cap_factor * count multiples.
std::vector<Triangle> generate_triangles(const CurvePoint& p, int count, int cap_factor = 10);

// Same, with a certificate the caller already holds for p.
std::vector<Triangle> generate_triangles(const CurvePoint& p, const OrderCertificate& cert, int count,
                                         int cap_factor = 10);

} // namespace congruent
