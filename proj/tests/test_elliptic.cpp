#include <doctest.h>

#include "congruent/elliptic.hpp"
#include "helpers.hpp"

using namespace congruent;
using testing::kind_of;
using testing::q;

namespace {
FieldPtr Q() { return NumberField::rationals(); }
FieldElement r(const Rational& v) { return FieldElement::from_rational(Q(), v); }
CurvePoint pt(long n, const char* x, const char* y) { return CurvePoint::affine(CurveEn(Integer(n), Q()), r(q(x)), r(q(y))); }
} // namespace

TEST_CASE("points on E_5") {
    const CurveEn e5(Integer(5), Q());
    CHECK_NOTHROW(pt(5, "25/4", "75/8"));
    CHECK_NOTHROW(pt(5, "5", "0"));
    CHECK(kind_of([] { pt(5, "1", "1"); }) == ErrorKind::NotOnCurve);
    CHECK(kind_of([] { CurveEn(Integer(0), NumberField::rationals()); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("group law") {
    const CurvePoint p = pt(5, "25/4", "75/8");
    const CurvePoint o = CurvePoint::infinity(p.curve());
    CHECK(p + o == p);
    CHECK(o + p == p);
    CHECK((p + p) == pt(5, "1681/144", "-62279/1728"));
    CHECK((p + -p).is_infinity());
    const CurvePoint t = pt(5, "5", "0");
    CHECK((t + t).is_infinity());
    CHECK(scalar_mul(1, p) == p);
    CHECK(scalar_mul(2, p) == p + p);
    CHECK(scalar_mul(4, t).is_infinity());
    CHECK(scalar_mul(0, p).is_infinity());
    CHECK(scalar_mul(-3, p) == -(p + p + p));
    CHECK(kind_of([&] { (void)(p + pt(6, "12", "36")); }) == ErrorKind::CurveMismatch);
}

TEST_CASE("division polynomials") {
    CHECK(division_poly_sq(Integer(1), 1) == UniPoly{1});
    CHECK(division_poly_sq(Integer(5), 2) == UniPoly{0, -100, 0, 4});
    const UniPoly psi3{-1, 0, -6, 0, 3};
    CHECK(division_poly_sq(Integer(1), 3) == psi3 * psi3);
    for (long n : {1L, 2L, 7L}) {
        const Rational n4 = Rational(n).pow(4);
        CHECK(division_poly_sq(Integer(n), 3).eval(Rational(0)) == n4 * n4);
    }
    CHECK(kind_of([] { division_poly_sq(Integer(1), 0); }) == ErrorKind::InvalidIndex);
}

TEST_CASE("torsion bound set") {
    const std::vector<int> expected{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18};
    CHECK(torsion_bound_set() == expected);
    CHECK(torsion_bound_set_self_check());
    CHECK(euler_phi(18) == 6);
    CHECK(euler_phi(7) == 6);
    CHECK(euler_phi(11) == 10);
}

TEST_CASE("non-torsion certificate over Q") {
    OrderCertificate c = certify_infinite_order(pt(5, "25/4", "75/8"));
    CHECK(c.infinite_order());
    CHECK(c.checks.size() == 12);
    for (const auto& chk : c.checks)
        CHECK(chk.value_nonzero);

    OrderCertificate t = certify_infinite_order(pt(5, "5", "0"));
    CHECK_FALSE(t.infinite_order());
    CHECK(t.torsion_order == 2);
    CHECK(certify_infinite_order(pt(5, "0", "0")).torsion_order == 2);
    CHECK(certify_infinite_order(CurvePoint::infinity(CurveEn(Integer(5), Q()))).torsion_order == 1);
}

TEST_CASE("torsion over Q(sqrt 2)") {
    auto f = NumberField::make(UniPoly{-2, 0, 1});
    auto s = FieldElement::generator(f);
    const CurveEn e1(Integer(1), f);
    for (int sign : {1, -1}) {
        const FieldElement x = Rational(1) + s * Rational(sign);
        const FieldElement y = Rational(2 * sign) + s;
        CurvePoint p = CurvePoint::affine(e1, x, y);
        OrderCertificate c = certify_infinite_order(p);
        CHECK_FALSE(c.infinite_order());
        REQUIRE(c.torsion_order);
        CHECK(scalar_mul(*c.torsion_order, p).is_infinity());
        for (int k = 1; k < *c.torsion_order; ++k)
            CHECK_FALSE(scalar_mul(k, p).is_infinity());
    }
}
