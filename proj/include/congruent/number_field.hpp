#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "congruent/poly.hpp"
#include "congruent/real_roots.hpp"

namespace congruent {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Closed rational interval [lo, hi], lo <= hi. Used for enclosures of real
// values; degenerate when the value is rational.
struct Enclosure {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
    bool contains(const Rational& t) const { return lo <= t && t <= hi; }
    bool intersects(const Enclosure& o) const { return lo <= o.hi && o.lo <= hi; }
};

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, const Enclosure& b);
// Requires 0 not in b.
Enclosure operator/(const Enclosure& a, const Enclosure& b);

// Enclosure of p over [iv.lo, iv.hi] by interval Horner evaluation.
Enclosure eval_enclosure(const UniPoly& p, const Enclosure& iv);

/*
 * Q(theta) with theta a designated real root of a monic irreducible
 * polynomial of degree 1, 2 or 3. For degree <= 3, having no rational root
 * certifies irreducibility. The designated root is the largest real root:
 * the positive square root for t^2 - m, the only real root for cubics with
 * negative discriminant.
 *
 * The isolating interval can be tightened by concurrent readers; the
 * refined copy lives behind a mutex and is only ever replaced by a
 * sub-interval, so every reader sees a valid isolating interval.
 */
class NumberField {
public:
    // The input polynomial is made monic. Throws InvalidArgument for degree
    // outside 1..3, Reducible, or NoRealRoot.
    static FieldPtr make(const UniPoly& min_poly, std::string label = {});

    // As above but with a caller-supplied interval, which is verified to
    // isolate a root (used when loading serialized fields).
    static FieldPtr make(const UniPoly& min_poly, const IsolatingInterval& root, std::string label);

    // The shared field Q, minimal polynomial t.
    static FieldPtr rationals();

    NumberField(const NumberField&) = delete;
    NumberField& operator=(const NumberField&) = delete;

    const UniPoly& min_poly() const { return min_poly_; }
    int degree() const { return static_cast<int>(min_poly_.degree()); }
    const std::string& label() const { return label_; }

    // Interval certified at construction.
    const IsolatingInterval& root_interval() const { return initial_; }

    // Isolating interval of width <= max_width (shared refinement cache).
    IsolatingInterval refined_root(const Rational& max_width) const;

    // Degree-1 fields are all Q; otherwise same polynomial and same root.
    bool same_field(const NumberField& other) const;

private:
    NumberField(UniPoly min_poly, IsolatingInterval root, std::string label);

    UniPoly min_poly_;
    IsolatingInterval initial_;
    std::string label_;

    mutable std::mutex refine_mutex_;
    mutable IsolatingInterval refined_;
};

/*
 * c0 + c1*theta + ... + c_{d-1}*theta^{d-1}. The coefficient vector always
 * has exactly deg(field) entries, so equality is coefficient-wise.
 */
class FieldElement {
public:
    // `coeffs` of any length; reduced modulo the minimal polynomial.
    FieldElement(FieldPtr field, const std::vector<Rational>& coeffs);
    FieldElement(FieldPtr field, const UniPoly& poly);

    static FieldElement from_rational(FieldPtr field, const Rational& value);
    static FieldElement zero(FieldPtr field) { return from_rational(std::move(field), Rational(0)); }
    static FieldElement one(FieldPtr field) { return from_rational(std::move(field), Rational(1)); }
    static FieldElement generator(FieldPtr field);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    UniPoly as_poly() const { return UniPoly(coeffs_); }

    bool is_zero() const;
    bool is_rational() const;
    // Throws InvalidArgument unless is_rational().
    Rational to_rational() const;

    FieldElement inverse() const;
    FieldElement pow(unsigned e) const;

    // Exact sign under the designated real embedding.
    int sign() const;
    FieldElement abs() const { return sign() < 0 ? -*this : *this; }

    // Enclosure of the real value with width <= width (width > 0).
    Enclosure approx(const Rational& width) const;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    FieldElement operator-() const;

    friend FieldElement operator+(FieldElement a, const Rational& b);
    friend FieldElement operator-(FieldElement a, const Rational& b);
    friend FieldElement operator*(FieldElement a, const Rational& b);
    friend FieldElement operator/(FieldElement a, const Rational& b);
    friend FieldElement operator+(const Rational& a, const FieldElement& b) { return b + a; }
    friend FieldElement operator-(const Rational& a, const FieldElement& b) { return -b + a; }
    friend FieldElement operator*(const Rational& a, const FieldElement& b) { return b * a; }

    // False for elements of different fields.
    friend bool operator==(const FieldElement& a, const FieldElement& b);

    // e.g. "1313/900 - 47/25*t + 737/225*t^2"
    std::string to_string(const std::string& var = "t") const;

private:
    void check_same_field(const FieldElement& o) const;

    FieldPtr field_;
    std::vector<Rational> coeffs_;
};

// p(x) evaluated in x's field by Horner's rule.
FieldElement evaluate(const UniPoly& p, const FieldElement& x);

} // namespace congruent
