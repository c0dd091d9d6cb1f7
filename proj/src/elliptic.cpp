#include "congruent/elliptic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "congruent/errors.hpp"

namespace congruent {

CurveEn::CurveEn(Integer n, FieldPtr field) : n_(std::move(n)), field_(std::move(field)) {
    if (n_ < 1)
        throw MathError(ErrorKind::InvalidArgument, "E_n needs n >= 1, got " + n_.get_str());
}

UniPoly CurveEn::rhs() const {
    return UniPoly({Rational(0), Rational(Integer(-n_ * n_)), Rational(0), Rational(1)});
}

FieldElement CurveEn::residual(const FieldElement& x, const FieldElement& y) const {
    const Rational n2(Integer(n_ * n_));
    return y * y - (x * x * x - x * n2);
}

bool operator==(const CurveEn& a, const CurveEn& b) {
    return a.n_ == b.n_ && (a.field_ == b.field_ || a.field_->same_field(*b.field_));
}

CurvePoint CurvePoint::infinity(const CurveEn& curve) { return CurvePoint(curve); }

CurvePoint CurvePoint::affine(const CurveEn& curve, const FieldElement& x, const FieldElement& y) {
    const FieldElement r = curve.residual(x, y);
    if (!r.is_zero())
        throw MathError(ErrorKind::NotOnCurve, "(" + x.to_string() + ", " + y.to_string() + ") is not on E_" +
                                                   curve.n().get_str() + ", residual y^2 - x^3 + n^2 x = " +
                                                   r.to_string());
    CurvePoint p(curve);
    p.x_ = x;
    p.y_ = y;
    return p;
}

CurvePoint CurvePoint::operator-() const {
    CurvePoint p = *this;
    if (p.y_)
        p.y_ = -*p.y_;
    return p;
}

bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (!(a.curve_ == b.curve_))
        return false;
    if (a.is_infinity() || b.is_infinity())
        return a.is_infinity() == b.is_infinity();
    return *a.x_ == *b.x_ && *a.y_ == *b.y_;
}

CurvePoint point_add(const CurvePoint& p, const CurvePoint& q) {
    if (!(p.curve() == q.curve()))
        throw MathError(ErrorKind::CurveMismatch, "points lie on different curves");
    if (p.is_infinity())
        return q;
    if (q.is_infinity())
        return p;
    const CurveEn& curve = p.curve();
    const Rational n2(Integer(curve.n() * curve.n()));
    FieldElement slope = FieldElement::zero(curve.field());
    if (p.x() == q.x()) {
        if (!(p.y() == q.y()) || p.y().is_zero())
            return CurvePoint::infinity(curve);
        slope = (p.x() * p.x() * Rational(3) - n2) / (p.y() * Rational(2));
    } else {
        slope = (q.y() - p.y()) / (q.x() - p.x());
    }
    FieldElement x3 = slope * slope - p.x() - q.x();
    FieldElement y3 = slope * (p.x() - x3) - p.y();
    return CurvePoint::affine(curve, x3, y3);
}

CurvePoint scalar_mul(long long k, const CurvePoint& p) {
    if (k < 0)
        return -scalar_mul(-k, p);
    CurvePoint acc = CurvePoint::infinity(p.curve());
    CurvePoint base = p;
    auto e = static_cast<unsigned long long>(k);
    while (e) {
        if (e & 1u)
            acc = acc + base;
        e >>= 1;
        if (e)
            base = base + base;
    }
    return acc;
}

// ---------------------------------------------------------------- division polynomials

namespace {

struct DivisionTable {
    std::vector<UniPoly> g; // g[m], see division_poly_sq
};

std::mutex table_mutex;
std::map<Integer, DivisionTable> table_cache;

// Extends `t` so that g[0..m] are available.
void extend(DivisionTable& t, const Integer& n, int m) {
    const Rational a(Integer(-n * n));
    const UniPoly f({Rational(0), a, Rational(0), Rational(1)});
    const UniPoly f2 = f * f;
    if (t.g.empty()) {
        t.g.push_back(UniPoly());                       // g0 = 0
        t.g.push_back(UniPoly::constant(1));            // g1 = 1
        t.g.push_back(UniPoly::constant(2));            // psi2 = 2y
        // psi3 = 3x^4 + 6Ax^2 + 12Bx - A^2
        t.g.push_back(UniPoly({-a * a, Rational(0), a * Rational(6), Rational(0), Rational(3)}));
        // psi4 = 4y(x^6 + 5Ax^4 + 20Bx^3 - 5A^2x^2 - 4ABx - 8B^2 - A^3)
        t.g.push_back(UniPoly({-a * a * a, Rational(0), -a * a * Rational(5), Rational(0), a * Rational(5),
                               Rational(0), Rational(1)}) *
                      Rational(4));
    }
    auto& g = t.g;
    for (int i = static_cast<int>(g.size()); i <= m; ++i) {
        const int k = i / 2;
        if (i % 2 == 1) {
            // psi_{2k+1} = psi_{k+2} psi_k^3 - psi_{k-1} psi_{k+1}^3; y^2 pairs become f
            const UniPoly lhs = g[k + 2] * g[k].pow(3);
            const UniPoly rhs = g[k - 1] * g[k + 1].pow(3);
            g.push_back(k % 2 == 0 ? f2 * lhs - rhs : lhs - f2 * rhs);
        } else {
            // psi_{2k} = psi_k (psi_{k+2} psi_{k-1}^2 - psi_{k-2} psi_{k+1}^2) / (2y)
            const UniPoly inner = g[k + 2] * g[k - 1].pow(2) - g[k - 2] * g[k + 1].pow(2);
            g.push_back(g[k] * inner * Rational(1, 2));
        }
    }
}

} // namespace

UniPoly division_poly_sq(const Integer& n, int m) {
    if (m < 1)
        throw MathError(ErrorKind::InvalidIndex, "division polynomial index must be >= 1, got " + std::to_string(m));
    UniPoly gm;
    {
        std::lock_guard lock(table_mutex);
        DivisionTable& t = table_cache[n];
        if (static_cast<int>(t.g.size()) <= m)
            extend(t, n, m);
        gm = t.g[static_cast<std::size_t>(m)];
    }
    UniPoly sq = gm * gm;
    if (m % 2 == 0)
        sq = sq * UniPoly({Rational(0), Rational(Integer(-n * n)), Rational(0), Rational(1)});
    return sq;
}

int euler_phi(int m) {
    int result = m;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0)
                m /= p;
            result -= result / p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

const std::vector<int>& torsion_bound_set() {
    static const std::vector<int> orders{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18};
    return orders;
}

bool torsion_bound_set_self_check() {
    // phi(M) >= sqrt(M/2), so phi(M) <= 6 forces M <= 72
    std::vector<int> computed;
    for (int m = 1; m <= 1000; ++m)
        if (euler_phi(m) <= 6)
            computed.push_back(m);
    return computed == torsion_bound_set();
}

OrderCertificate certify_infinite_order(const CurvePoint& p) {
    static const bool table_ok = torsion_bound_set_self_check();
    if (!table_ok)
        throw MathError(ErrorKind::InvalidArgument, "torsion bound table does not match {M : phi(M) <= 6}");
    if (p.curve().field()->degree() > 3)
        throw MathError(ErrorKind::InvalidArgument, "torsion bound only holds over fields of degree <= 3");
    OrderCertificate cert{OrderVerdict::Torsion, std::nullopt, {}, {}};
    if (p.is_infinity()) {
        cert.torsion_order = 1;
        cert.reason = "point at infinity";
        return cert;
    }
    if (p.y().is_zero()) {
        cert.torsion_order = 2;
        cert.reason = "2-torsion: y = 0";
        return cert;
    }
    for (int m : torsion_bound_set()) {
        if (m == 1)
            continue;
        FieldElement v = evaluate(division_poly_sq(p.curve(), m), p.x());
        const bool nonzero = !v.is_zero();
        if (!nonzero && !cert.torsion_order)
            cert.torsion_order = m;
        cert.checks.push_back({m, nonzero, std::move(v)});
    }
    if (cert.torsion_order) {
        cert.reason = "psi_" + std::to_string(*cert.torsion_order) + "^2 vanishes at x_P";
    } else {
        cert.verdict = OrderVerdict::InfiniteOrder;
        cert.reason = "psi_m^2(x_P) != 0 for every m with phi(m) <= 6";
    }
    return cert;
}

} // namespace congruent
