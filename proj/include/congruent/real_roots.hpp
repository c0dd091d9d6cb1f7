#pragma once

#include <vector>

#include "congruent/poly.hpp"

namespace congruent {

// Open rational interval (lo, hi) holding exactly one real root of some
// square-free polynomial, with opposite signs at the endpoints.
struct IsolatingInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
    bool contains(const Rational& t) const { return lo < t && t < hi; }

    friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

// Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k).
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

// Number of distinct real roots of p in (lo, hi].
int count_roots(const std::vector<UniPoly>& sturm, const Rational& lo, const Rational& hi);

// Number of distinct real roots of p.
int count_real_roots(const std::vector<UniPoly>& sturm);

// Power of two strictly larger than the absolute value of every root.
Rational root_bound(const UniPoly& p);

// Isolating intervals (with respect to the square-free part of p) for every
// distinct real root, sorted ascending. Endpoints are dyadic.
std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p);

// Sturm-certified isolation of the only real root of p. Throws
// NotUniqueRealRoot when p has zero or several distinct real roots.
IsolatingInterval isolate_unique_real_root(const UniPoly& p);

// One bisection step keeping the sign change; halves the width. `p` must be
// the square-free polynomial the interval isolates a root of.
IsolatingInterval bisect(const UniPoly& p, const IsolatingInterval& iv);

// Bisect until width <= max_width.
IsolatingInterval refine(const UniPoly& p, IsolatingInterval iv, const Rational& max_width);

// True when iv isolates exactly one root of square-free p with a sign change.
bool is_isolating(const UniPoly& p, const IsolatingInterval& iv);

} // namespace congruent
