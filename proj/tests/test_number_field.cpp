#include <doctest.h>

#include "congruent/constructions.hpp"
#include "helpers.hpp"

using namespace congruent;

using testing::kind_of;
using testing::q;

TEST_CASE("field construction preconditions") {
    CHECK(kind_of([] { NumberField::make(UniPoly{-4, 0, 1}); }) == ErrorKind::Reducible);
    CHECK(kind_of([] { NumberField::make(UniPoly{1, 0, 1}); }) == ErrorKind::NoRealRoot);
    CHECK(kind_of([] { NumberField::make(UniPoly{1, 0, 0, 0, 1}); }) == ErrorKind::InvalidArgument);
    auto f = NumberField::make(UniPoly{-5, 0, 1});
    CHECK(f->label() == "Q(sqrt(5))");
    CHECK(f->root_interval().lo >= Rational(0));
    // non-monic input is normalised
    auto g = NumberField::make(UniPoly{-5, 0, 2});
    CHECK(g->min_poly() == UniPoly{q("-5/2"), 0, 1});
}

TEST_CASE("quadratic arithmetic") {
    auto f = NumberField::make(UniPoly{-5, 0, 1});
    auto r5 = FieldElement::generator(f);
    CHECK((Rational(2) + r5) * (Rational(-2) + r5) == FieldElement::one(f));
    CHECK((Rational(2) + r5).inverse() == Rational(-2) + r5);
    CHECK(r5 * r5 == FieldElement::from_rational(f, Rational(5)));
    CHECK(r5.sign() == 1);
    CHECK((Rational(2) - r5).sign() == -1);
    CHECK((Rational(q("9/4")) - r5).sign() == 1);
    CHECK(kind_of([&] { (void)FieldElement::zero(f).inverse(); }) == ErrorKind::DivisionByZero);
    CHECK_FALSE(r5.is_rational());
    CHECK((r5 * r5).to_rational() == Rational(5));
}

TEST_CASE("cubic reduction of lambda^3") {
    auto f = NumberField::make(lambda_cubic(Integer(1)));
    CHECK(f->min_poly() == UniPoly{q("1/32"), q("1/4"), -1, 1});
    auto l = FieldElement::generator(f);
    CHECK(l.pow(3) == l * l - l * q("1/4") - FieldElement::from_rational(f, q("1/32")));
    CHECK(l.pow(3).coeffs() == std::vector<Rational>{q("-1/32"), q("-1/4"), 1});
    CHECK(l.sign() == -1);
    auto enc = l.approx(q("1/1000000000"));
    CHECK(enc.contains(enc.midpoint()));
    CHECK(enc.lo < q("-898260/10000000"));
    CHECK(enc.hi > q("-898261/10000000"));
}

TEST_CASE("mixing fields is refused") {
    auto f = NumberField::make(UniPoly{-5, 0, 1});
    auto g = NumberField::make(UniPoly{-3, 0, 1});
    auto a = FieldElement::generator(f), b = FieldElement::generator(g);
    CHECK(kind_of([&] { (void)(a + b); }) == ErrorKind::FieldMismatch);
    CHECK_FALSE(a == b);
}

TEST_CASE("sign of 1 + 2 lambda follows 16 - n^2") {
    for (long n = 1; n <= 12; ++n) {
        if (n == 4)
            continue;
        CubicWitness w = cubic_witness(Integer(n));
        const int expected = n < 4 ? 1 : -1;
        CHECK((w.lambda * Rational(2) + Rational(1)).sign() == expected);
    }
}

TEST_CASE("three real roots designate the largest") {
    auto f = NumberField::make(UniPoly{1, -3, 0, 1}); // t^3 - 3t + 1, roots near -1.88, 0.35, 1.53
    CHECK(f->root_interval().lo >= Rational(1));
    auto t = FieldElement::generator(f);
    CHECK((t - q("3/2")).sign() == 1);
    CHECK((t - q("8/5")).sign() == -1);
}
