#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "congruent/correspondence.hpp"

namespace congruent {

// ---------------------------------------------------------------- identities

// LHS - RHS of Desboves' identity
//   (Y^2 + 2XY - X^2)^4 + (2X^3 Y + X^2 Y^2)(2X + 2Y)^4
//     = (X^4 + Y^4 + 10X^2 Y^2 + 4XY^3 + 12X^3 Y)^2
Rational desboves_residual(const Rational& x, const Rational& y);

struct DesbovesCheck {
    std::vector<std::pair<Rational, Rational>> points;
    std::vector<Rational> residuals;
    std::size_t grid_points = 0; // the first grid_points entries form the grid
    std::size_t random_points = 0;

    bool all_zero() const;
};

/*
 * Evaluates Desboves' identity on a grid_size x grid_size grid of distinct
 * rationals and on `samples` pseudo-random rational points. Each side has
 * degree <= 8 in each variable, so vanishing on a grid with more than 8
 * values per axis already proves the identity. Throws InvalidArgument for
 * samples < 45 and IdentityViolated on a nonzero residual.
 */
DesbovesCheck desboves_identity_check(int samples, int grid_size = 50, std::uint64_t seed = 20080827);

// LHS - RHS of the identity after X = 1 - 2t, Y = 4t:
//   (1 - 12t + 4t^2)^4 + 8t(2t - 1)^2 (2(1 + 2t))^4 = (1 + 40t - 104t^2 + 160t^3 + 16t^4)^2
Rational substituted_identity_check(const Rational& lambda);

// ---------------------------------------------------------------- quadratic fields

struct QuadraticWitness {
    Integer n;
    Rational b;
    Rational m;     // 4n^2 + b^4
    Integer s;      // square-free part of m; the field is Q(sqrt(s))
    FieldPtr field;
    Triangle triangle; // (2n/b, b, sqrt(m)/b)
    CurvePoint point;       // "+" point of triangle_to_points
    CurvePoint minus_point; // "-" point
    OrderCertificate certificate;
    // Torsion over Q(sqrt(s)) is only 2-torsion for (n, s) outside {(1,2),(2,2)}.
    bool torsion_fact_applies = false;
};

// Throws InvalidArgument (n < 1 or b <= 0) or ExceptionalTorsionPair.
QuadraticWitness quadratic_witness(const Integer& n, const Rational& b);

struct CnmPoint {
    Rational x;
    Rational y; // >= 0
};

/*
 * First rational point on C_{n,m} : m y^2 = x^4 + 4n^2 with x = p/q,
 * gcd(p, q) = 1, max(|p|, q) <= height. Candidates are ordered by
 * max(|p|, q), then q, then |p|, positive before negative.
 */
std::optional<CnmPoint> cnm_point_search(const Integer& n, const Integer& m, long height);

// b = |x|, a = 2n/b, c = y sqrt(m)/b over Q(sqrt(sf(m))). Requires x != 0.
QuadraticWitness cnm_to_witness(const Integer& n, const Integer& m, const CnmPoint& pt);

// ---------------------------------------------------------------- cubic fields

// 32 t^3 - 32 t^2 + 8 t + n^2
UniPoly lambda_cubic(const Integer& n);

struct CubicWitness {
    Integer n;
    FieldPtr field;       // Q(lambda), or Q when the cubic has a rational root
    bool rational_lambda = false;
    FieldElement lambda;
    FieldElement d_value; // 8 lambda (2 lambda - 1)^2
    CurvePoint point;     // P_lambda
    CurvePoint minus_point;
    Triangle triangle;
    OrderCertificate certificate;
    bool cubic_vanishes = false;    // 32 l^3 - 32 l^2 + 8 l + n^2 = 0 in the field
    bool d_equation_holds = false;  // d_value = -n^2
    bool coord_checked = false;     // closed-form coordinates evaluated (n^2 != 16)
    bool coord_agrees = false;
};

/*
 * P_lambda on E_n over Q(lambda) via x = u^2 / (4 w^2), y = u v / (8 w^3) with
 * u = 1 - 12l + 4l^2, v = 1 + 40l - 104l^2 + 160l^3 + 16l^4, w = 1 + 2l,
 * cross-checked against the closed forms with (n^2 - 16) denominators.
 * Throws DegenerateN4 for n = 4 where w = 0 and n^2 - 16 = 0.
 */
CubicWitness cubic_witness(const Integer& n);

// Closed-form coordinates (x, y) of P_lambda as polynomials in lambda of
// degree <= 2. Requires n^2 != 16.
std::pair<UniPoly, UniPoly> closed_form_coordinates(const Integer& n);

struct KappaLambda {
    Rational radicand_rational; // -8 - 27 n^2
    Integer sqrt_coeff;         // 3
    Integer sqrt_arg;           // 48 n^2 + 81 n^4
    Enclosure kappa;            // kappa = cbrt(radicand_rational + 3 sqrt(sqrt_arg)) < 0
    Enclosure lambda;           // 1/3 + kappa/12 + 1/(3 kappa)
    IsolatingInterval cubic_root; // independent isolation of the cubic's real root
    bool consistent = false;    // lambda enclosure meets cubic_root
};

// Certified enclosures of width <= width. Throws InvalidArgument for n < 1
// or width <= 0.
KappaLambda kappa_lambda_closed_form(const Integer& n, const Rational& width);

} // namespace congruent
