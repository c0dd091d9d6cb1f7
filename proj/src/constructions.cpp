#include "congruent/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "congruent/errors.hpp"

namespace congruent {

// ---------------------------------------------------------------- identities

Rational desboves_residual(const Rational& x, const Rational& y) {
    const Rational x2 = x * x, y2 = y * y;
    const Rational first = (y2 + Rational(2) * x * y - x2).pow(4);
    const Rational second = (Rational(2) * x2 * x * y + x2 * y2) * (Rational(2) * x + Rational(2) * y).pow(4);
    const Rational rhs = (x2 * x2 + y2 * y2 + Rational(10) * x2 * y2 + Rational(4) * x * y2 * y +
                          Rational(12) * x2 * x * y)
                             .pow(2);
    return first + second - rhs;
}

bool DesbovesCheck::all_zero() const {
    return std::all_of(residuals.begin(), residuals.end(), [](const Rational& r) { return r.is_zero(); });
}

DesbovesCheck desboves_identity_check(int samples, int grid_size, std::uint64_t seed) {
    if (samples < 45)
        throw MathError(ErrorKind::InvalidArgument, "Desboves check needs at least 45 samples, got " +
                                                        std::to_string(samples));
    if (grid_size < 9)
        throw MathError(ErrorKind::InvalidArgument, "grid must have more than 8 values per axis");
    DesbovesCheck check;
    auto record = [&](const Rational& x, const Rational& y) {
        Rational r = desboves_residual(x, y);
        if (!r.is_zero())
            throw MathError(ErrorKind::IdentityViolated, "Desboves residual " + r.to_string() + " at (" +
                                                             x.to_string() + ", " + y.to_string() + ")");
        check.points.emplace_back(x, y);
        check.residuals.push_back(std::move(r));
    };
    for (int i = 0; i < grid_size; ++i)
        for (int j = 0; j < grid_size; ++j)
            record(Rational(i - grid_size / 2, 3), Rational(j - grid_size / 2 + 5, 7));
    check.grid_points = check.points.size();

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> num(-1'000'000'000LL, 1'000'000'000LL);
    std::uniform_int_distribution<long long> den(1, 1'000'000'000LL);
    for (int k = 0; k < samples; ++k) {
        const long long xn = num(rng), xd = den(rng), yn = num(rng), yd = den(rng);
        record(Rational(xn, xd), Rational(yn, yd));
    }
    check.random_points = static_cast<std::size_t>(samples);
    return check;
}

Rational substituted_identity_check(const Rational& t) {
    const Rational t2 = t * t, t3 = t2 * t, t4 = t2 * t2;
    const Rational u = Rational(1) - Rational(12) * t + Rational(4) * t2;
    const Rational d = Rational(8) * t * (Rational(2) * t - Rational(1)).pow(2);
    const Rational w = Rational(2) * (Rational(1) + Rational(2) * t);
    const Rational v =
        Rational(1) + Rational(40) * t - Rational(104) * t2 + Rational(160) * t3 + Rational(16) * t4;
    return u.pow(4) + d * w.pow(4) - v.pow(2);
}

// ---------------------------------------------------------------- quadratic fields

namespace {

bool exceptional_pair(const Integer& n, const Integer& s) { return s == 2 && (n == 1 || n == 2); }

FieldPtr quadratic_field(const Integer& s) {
    if (s == 1)
        return NumberField::rationals();
    return NumberField::make(UniPoly({Rational(Integer(-s)), Rational(0), Rational(1)}),
                             "Q(sqrt(" + s.get_str() + "))");
}

// sqrt(m) in Q(sqrt(s)) where s = squarefree_part(m) > 0.
FieldElement sqrt_in_field(const FieldPtr& field, const Rational& m, const Integer& s) {
    auto r = is_rational_square(m / Rational(s));
    if (!r)
        throw MathError(ErrorKind::InvalidArgument, m.to_string() + " / " + s.get_str() + " is not a square");
    if (s == 1)
        return FieldElement::from_rational(field, *r);
    return FieldElement::generator(field) * *r;
}

} // namespace

QuadraticWitness quadratic_witness(const Integer& n, const Rational& b) {
    if (n < 1)
        throw MathError(ErrorKind::InvalidArgument, "n must be >= 1");
    if (b.sign() <= 0)
        throw MathError(ErrorKind::InvalidArgument, "b must be positive, got " + b.to_string());
    const Rational nq(n);
    const Rational m = Rational(4) * nq * nq + b.pow(4);
    const Integer s = squarefree_part(m);
    if (exceptional_pair(n, s))
        throw MathError(ErrorKind::ExceptionalTorsionPair,
                        "(n, s) = (" + n.get_str() + ", 2): m = " + m.to_string() +
                            " has square-free part 2 and E_n has extra torsion over Q(sqrt(2)); choose another b");
    FieldPtr field = quadratic_field(s);
    const FieldElement bb = FieldElement::from_rational(field, b);
    const FieldElement a = FieldElement::from_rational(field, Rational(2) * nq / b);
    const FieldElement c = sqrt_in_field(field, m, s) / b;
    Triangle t = triangle_new(a, bb, c, n);
    PointPair pts = triangle_to_points(t);
    OrderCertificate cert = certify_infinite_order(pts.plus);
    return QuadraticWitness{n, b, m, s, field, t, pts.plus, pts.minus, std::move(cert), !pts.plus.y().is_zero()};
}

std::optional<CnmPoint> cnm_point_search(const Integer& n, const Integer& m, long height) {
    if (m == 0)
        throw MathError(ErrorKind::InvalidArgument, "m must be nonzero");
    if (height < 1)
        throw MathError(ErrorKind::InvalidArgument, "height must be >= 1");
    const Rational four_n2(Integer(4 * n * n));
    const Rational mq(m);
    auto try_x = [&](const Rational& x) -> std::optional<CnmPoint> {
        auto y = is_rational_square((x.pow(4) + four_n2) / mq);
        if (y)
            return CnmPoint{x, *y};
        return std::nullopt;
    };
    for (long h = 1; h <= height; ++h) {
        for (long q = 1; q <= h; ++q) {
            for (long p = 0; p <= h; ++p) {
                if (std::max(p, q) != h || std::gcd(p, q) != 1)
                    continue;
                if (auto hit = try_x(Rational(p, q)))
                    return hit;
                if (p != 0)
                    if (auto hit = try_x(Rational(-p, q)))
                        return hit;
            }
        }
    }
    return std::nullopt;
}

QuadraticWitness cnm_to_witness(const Integer& n, const Integer& m, const CnmPoint& pt) {
    if (pt.x.is_zero())
        throw MathError(ErrorKind::InvalidArgument, "x = 0 on C_{n,m} gives no triangle (b = 0)");
    const Rational lhs = Rational(m) * pt.y * pt.y;
    if (lhs != pt.x.pow(4) + Rational(Integer(4 * n * n)))
        throw MathError(ErrorKind::NotOnCurve, "point is not on C_{n,m}");
    QuadraticWitness w = quadratic_witness(n, pt.x.abs());
    // c = y sqrt(m) / b, computed independently of the factory.
    const FieldElement c = sqrt_in_field(w.field, Rational(m), w.s) * (pt.y / pt.x.abs());
    if (w.s != squarefree_part(m) || !(c == w.triangle.c()))
        throw MathError(ErrorKind::InvalidArgument, "C_{n,m} conversion disagrees with the quadratic factory");
    return w;
}

// ---------------------------------------------------------------- cubic fields

UniPoly lambda_cubic(const Integer& n) {
    return UniPoly({Rational(Integer(n * n)), Rational(8), Rational(-32), Rational(32)});
}

std::pair<UniPoly, UniPoly> closed_form_coordinates(const Integer& n) {
    const Integer n2 = n * n, n4 = n2 * n2, n6 = n4 * n2, n8 = n4 * n4;
    const Integer k = n2 - 16;
    if (k == 0)
        throw MathError(ErrorKind::DegenerateN4, "closed-form coordinates have the factor n^2 - 16 = 0");
    const Rational xden(Integer(4 * k * k));
    const Rational yden(Integer(32 * k * k * k));
    UniPoly x({Rational(Integer(256 + 992 * n2 + 65 * n4)), Rational(Integer(1024 - 2688 * n2 - 28 * n4)),
               Rational(Integer(1024 + 1920 * n2 + 4 * n4))});
    UniPoly y({Rational(Integer(-16384 + 72704 * n2 + 80960 * n4 + 2868 * n6 - n8)),
               Rational(Integer(196608 - 462848 * n2 - 145152 * n4 - 1456 * n6)),
               Rational(Integer(196608 + 421888 * n2 + 100608 * n4 + 208 * n6))});
    return {x * xden.inverse(), y * yden.inverse()};
}

CubicWitness cubic_witness(const Integer& n) {
    if (n < 1)
        throw MathError(ErrorKind::InvalidArgument, "n must be >= 1");
    const UniPoly cubic = lambda_cubic(n);
    const auto roots = rational_roots(cubic);
    FieldPtr field;
    std::optional<FieldElement> lam;
    if (!roots.empty()) {
        const Rational& r = roots.front();
        if ((Rational(1) + Rational(2) * r).is_zero())
            throw MathError(ErrorKind::DegenerateN4,
                            "n = " + n.get_str() + ": the cubic has the root lambda = -1/2, so 1 + 2 lambda = 0 and "
                            "n^2 - 16 = 0; both coordinate formulas are singular. Use the quadratic construction.");
        field = NumberField::rationals();
        lam = FieldElement::from_rational(field, r);
    } else {
        field = NumberField::make(cubic, "Q(lambda_" + n.get_str() + ")");
        lam = FieldElement::generator(field);
    }
    const FieldElement& l = *lam;
    const Rational n2(Integer(n * n));

    const bool cubic_vanishes = evaluate(cubic, l).is_zero();
    const FieldElement d = l * Rational(8) * (l * Rational(2) - Rational(1)).pow(2);
    const bool d_holds = d == FieldElement::from_rational(field, -n2);

    const FieldElement l2 = l * l;
    const FieldElement u = Rational(1) - l * Rational(12) + l2 * Rational(4);
    const FieldElement v = Rational(1) + l * Rational(40) - l2 * Rational(104) + l2 * l * Rational(160) +
                           l2 * l2 * Rational(16);
    const FieldElement w = Rational(1) + l * Rational(2);
    const FieldElement x = u * u / (w * w * Rational(4));
    const FieldElement y = u * v / (w.pow(3) * Rational(8));

    bool coord_checked = false, coord_agrees = false;
    if (n2 != Rational(16)) {
        auto [cx, cy] = closed_form_coordinates(n);
        coord_checked = true;
        coord_agrees = evaluate(cx, l) == x && evaluate(cy, l) == y;
    }

    const CurveEn curve(n, field);
    CurvePoint p = CurvePoint::affine(curve, x, y);
    OrderCertificate cert = certify_infinite_order(p);
    Triangle t = point_to_triangle(p);
    return CubicWitness{n,        field,           !roots.empty(), l,           d,           p,           -p, t,
                        std::move(cert), cubic_vanishes, d_holds,  coord_checked, coord_agrees};
}

namespace {

// [lo, hi] with lo^2 <= a <= hi^2, width <= w, for integer a >= 0.
Enclosure sqrt_enclosure(const Integer& a, const Rational& w) {
    Integer r = sqrt(a);
    if (r * r == a)
        return {Rational(r), Rational(r)};
    Rational lo(r), hi(Integer(r + 1));
    const Rational target(a);
    while (hi - lo > w) {
        Rational mid = (lo + hi) / Rational(2);
        (mid * mid <= target ? lo : hi) = mid;
    }
    return {lo, hi};
}

// Lower (upper) bound of the real cube root of a > 0 within w.
Rational cbrt_bound(const Rational& a, const Rational& w, bool upper) {
    Rational lo(0), hi = std::max(Rational(1), a);
    while (hi - lo > w) {
        Rational mid = (lo + hi) / Rational(2);
        (mid.pow(3) <= a ? lo : hi) = mid;
    }
    return upper ? hi : lo;
}

} // namespace

KappaLambda kappa_lambda_closed_form(const Integer& n, const Rational& width) {
    if (n < 1)
        throw MathError(ErrorKind::InvalidArgument, "n must be >= 1");
    if (width.sign() <= 0)
        throw MathError(ErrorKind::InvalidArgument, "width must be positive");
    KappaLambda out;
    const Integer n2 = n * n;
    out.radicand_rational = Rational(Integer(-8 - 27 * n2));
    out.sqrt_coeff = 3;
    out.sqrt_arg = 48 * n2 + 81 * n2 * n2;

    Rational w = width;
    while (true) {
        const Enclosure s = sqrt_enclosure(out.sqrt_arg, w);
        const Enclosure inner{out.radicand_rational + Rational(3) * s.lo, out.radicand_rational + Rational(3) * s.hi};
        if (inner.hi.sign() < 0) {
            // kappa = -cbrt(-inner), negative
            const Rational mag_lo = cbrt_bound(-inner.hi, w, false);
            const Rational mag_hi = cbrt_bound(-inner.lo, w, true);
            if (mag_lo.sign() > 0) {
                out.kappa = {-mag_hi, -mag_lo};
                const Enclosure third{Rational(1, 3), Rational(1, 3)};
                const Enclosure twelfth{Rational(1, 12), Rational(1, 12)};
                const Enclosure one{Rational(1), Rational(1)};
                const Enclosure three{Rational(3), Rational(3)};
                out.lambda = third + out.kappa * twelfth + one / (three * out.kappa);
                if (out.lambda.width() <= width && out.kappa.width() <= width)
                    break;
            }
        }
        w /= Rational(1 << 20);
    }

    const UniPoly cubic = lambda_cubic(n);
    const auto roots = rational_roots(cubic);
    if (!roots.empty()) {
        const Rational r = roots.front();
        out.cubic_root = {r - width, r + width};
        out.consistent = out.lambda.contains(r);
    } else {
        out.cubic_root = refine(cubic, isolate_unique_real_root(cubic), width);
        out.consistent = out.lambda.intersects({out.cubic_root.lo, out.cubic_root.hi});
    }
    return out;
}

} // namespace congruent
