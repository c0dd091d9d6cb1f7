#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "congruent/rational.hpp"

namespace congruent {

/*
 * Univariate polynomial over Q, coefficients lowest degree first.
 * The zero polynomial has no coefficients; otherwise the leading
 * coefficient is nonzero.
 */
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<Rational> coeffs) : UniPoly(std::vector<Rational>(coeffs)) {}

    static UniPoly constant(const Rational& c) { return UniPoly({c}); }
    static UniPoly monomial(const Rational& c, std::size_t degree);
    static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    // Coefficient of t^i, zero past the degree.
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational eval(const Rational& t) const;
    int sign_at(const Rational& t) const { return eval(t).sign(); }
    UniPoly derivative() const;
    UniPoly monic() const;
    // p(-t)
    UniPoly reflect() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    UniPoly operator-() const;
    UniPoly pow(unsigned e) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    // Human-readable, e.g. "t^3 - t^2 + 1/4*t + 1/32".
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

struct DivMod {
    UniPoly quotient;
    UniPoly remainder;
};

// p = q * quotient + remainder, deg(remainder) < deg(q). Throws DivisionByZero for q = 0.
DivMod divmod(const UniPoly& p, const UniPoly& q);

// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& p, const UniPoly& q);

struct ExtGcd {
    UniPoly gcd; // monic (or zero)
    UniPoly u;
    UniPoly v;   // u*p + v*q = gcd
};

ExtGcd ext_gcd(const UniPoly& p, const UniPoly& q);

// Integer coefficients with content 1 and positive leading coefficient,
// a positive rational multiple of p. Returns the integer coefficients.
std::vector<Integer> primitive_integer_form(const UniPoly& p);

// All distinct rational roots, ascending. Requires p != 0.
std::vector<Rational> rational_roots(const UniPoly& p);

// p / gcd(p, p'), made monic.
UniPoly squarefree_part(const UniPoly& p);

} // namespace congruent
