#include <doctest.h>

#include "congruent/correspondence.hpp"
#include "helpers.hpp"

using namespace congruent;
using testing::kind_of;
using testing::q;

namespace {
FieldPtr Q() { return NumberField::rationals(); }
FieldElement r(const char* v) { return FieldElement::from_rational(Q(), q(v)); }
CurvePoint pt(long n, const char* x, const char* y) {
    return CurvePoint::affine(CurveEn(Integer(n), Q()), r(x), r(y));
}
} // namespace

TEST_CASE("triangle validation") {
    CHECK_NOTHROW(triangle_new(r("3/2"), r("20/3"), r("41/6"), Integer(5)));
    CHECK_NOTHROW(triangle_new(r("3"), r("4"), r("5"), Integer(6)));
    CHECK(kind_of([] { triangle_new(r("3"), r("4"), r("6"), Integer(6)); }) == ErrorKind::NotRightTriangle);
    CHECK(kind_of([] { triangle_new(r("3"), r("4"), r("5"), Integer(7)); }) == ErrorKind::WrongArea);
    CHECK(kind_of([] { triangle_new(r("-3"), r("-4"), r("5"), Integer(6)); }) == ErrorKind::NonPositiveSide);

    auto f = NumberField::make(UniPoly{-2, 0, 1});
    auto s = FieldElement::generator(f);
    CHECK_NOTHROW(triangle_new(s, s, FieldElement::from_rational(f, Rational(2)), Integer(1)));
}

TEST_CASE("triangle to points") {
    Triangle t = triangle_new(r("3/2"), r("20/3"), r("41/6"), Integer(5));
    PointPair pp = triangle_to_points(t);
    CHECK(pp.plus == pt(5, "25/4", "75/8"));
    CHECK(triangle_to_points(triangle_new(r("3"), r("4"), r("5"), Integer(6))).plus == pt(6, "12", "36"));

    auto f = NumberField::make(UniPoly{-2, 0, 1});
    auto s = FieldElement::generator(f);
    Triangle t2 = triangle_new(s, s, FieldElement::from_rational(f, Rational(2)), Integer(1));
    PointPair p2 = triangle_to_points(t2);
    CHECK(p2.plus.x() == Rational(1) + s);
    CHECK(p2.plus.y() == s + Rational(2));
    CHECK(p2.minus.x() == Rational(1) - s);
    CHECK(p2.minus.y() == s - Rational(2));
}

TEST_CASE("point to triangle") {
    Triangle t = point_to_triangle(pt(5, "25/4", "75/8"));
    CHECK(t.a() == r("3/2"));
    CHECK(t.b() == r("20/3"));
    CHECK(t.c() == r("41/6"));
    Triangle d = point_to_triangle(pt(5, "1681/144", "-62279/1728"));
    CHECK(d.a() == r("1519/492"));
    CHECK(d.b() == r("4920/1519"));
    CHECK(kind_of([] { point_to_triangle(pt(5, "5", "0")); }) == ErrorKind::TorsionInput);
}

TEST_CASE("triangle generation") {
    auto two = generate_triangles(pt(5, "25/4", "75/8"), 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].a() == r("3/2"));
    CHECK(two[1].a() == r("1519/492"));
    CHECK(generate_triangles(pt(5, "25/4", "75/8"), 1).size() == 1);

    auto six = generate_triangles(pt(6, "12", "36"), 3);
    REQUIRE(six.size() == 3);
    for (std::size_t i = 0; i < six.size(); ++i) {
        CHECK(six[i].a() * six[i].b() == FieldElement::from_rational(Q(), Rational(12)));
        for (std::size_t j = 0; j < i; ++j)
            CHECK_FALSE(six[i].same_legs(six[j]));
    }
    CHECK(kind_of([] { generate_triangles(pt(5, "5", "0"), 2); }) == ErrorKind::NotCertified);
    CHECK(kind_of([] { generate_triangles(pt(5, "25/4", "75/8"), 0); }) == ErrorKind::InvalidArgument);
}
