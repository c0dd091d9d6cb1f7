#pragma once

#include <optional>
#include <vector>

#include "congruent/number_field.hpp"

namespace congruent {

// E_n : Y^2 = X^3 - n^2 X over a number field.
class CurveEn {
public:
    // Throws InvalidArgument for n < 1.
    CurveEn(Integer n, FieldPtr field);

    const Integer& n() const { return n_; }
    const FieldPtr& field() const { return field_; }

    // X^3 - n^2 X as a polynomial in X.
    UniPoly rhs() const;
    // y^2 - (x^3 - n^2 x)
    FieldElement residual(const FieldElement& x, const FieldElement& y) const;

    friend bool operator==(const CurveEn& a, const CurveEn& b);

private:
    Integer n_;
    FieldPtr field_;
};

class CurvePoint {
public:
    static CurvePoint infinity(const CurveEn& curve);
    // Throws NotOnCurve (message carries the residual) unless y^2 = x^3 - n^2 x.
    static CurvePoint affine(const CurveEn& curve, const FieldElement& x, const FieldElement& y);

    const CurveEn& curve() const { return curve_; }
    bool is_infinity() const { return !x_.has_value(); }
    // Affine coordinates; precondition !is_infinity().
    const FieldElement& x() const { return *x_; }
    const FieldElement& y() const { return *y_; }

    CurvePoint operator-() const;

    friend bool operator==(const CurvePoint& a, const CurvePoint& b);

private:
    explicit CurvePoint(CurveEn curve) : curve_(std::move(curve)) {}

    CurveEn curve_;
    std::optional<FieldElement> x_;
    std::optional<FieldElement> y_;
};

inline CurvePoint point_new(const CurveEn& curve, const FieldElement& x, const FieldElement& y) {
    return CurvePoint::affine(curve, x, y);
}

// Chord-and-tangent addition, identity at infinity. Throws CurveMismatch.
CurvePoint point_add(const CurvePoint& p, const CurvePoint& q);

inline CurvePoint operator+(const CurvePoint& p, const CurvePoint& q) { return point_add(p, q); }

// Double-and-add; k may be negative or zero.
CurvePoint scalar_mul(long long k, const CurvePoint& p);

/*
 * psi_m^2 as a polynomial in x alone for E_n (A = -n^2, B = 0). The
 * recurrence is run on g_m, where psi_m = g_m(x) for odd m and
 * psi_m = y * g_m(x) for even m; then psi_m^2 is g_m^2 or f * g_m^2 with
 * f = x^3 - n^2 x. For an affine point P, m*P = O iff psi_m^2(x_P) = 0.
 * Tables are memoized per n behind a mutex. Throws InvalidIndex for m < 1.
 */
UniPoly division_poly_sq(const Integer& n, int m);
inline UniPoly division_poly_sq(const CurveEn& curve, int m) { return division_poly_sq(curve.n(), m); }

// Possible torsion orders over a number field of degree <= 3 for a curve
// with CM by Z[i]: every M with phi(M) <= 6.
const std::vector<int>& torsion_bound_set();

// Recomputes {M : phi(M) <= 6} by enumeration and compares with the table.
bool torsion_bound_set_self_check();

int euler_phi(int m);

struct TorsionCheck {
    int m;
    bool value_nonzero;
    FieldElement value; // psi_m^2(x_P)
};

enum class OrderVerdict { InfiniteOrder, Torsion };

struct OrderCertificate {
    OrderVerdict verdict;
    // Exact order when the verdict is Torsion.
    std::optional<int> torsion_order;
    std::vector<TorsionCheck> checks;
    std::string reason;

    bool infinite_order() const { return verdict == OrderVerdict::InfiniteOrder; }
};

/*
 * Decides whether P has infinite order by sweeping the torsion bound set:
 * P is torsion iff psi_m^2(x_P) = 0 for some m in it. For y_P = 0 the point
 * is 2-torsion and no sweep is run.
 */
OrderCertificate certify_infinite_order(const CurvePoint& p);

} // namespace congruent
