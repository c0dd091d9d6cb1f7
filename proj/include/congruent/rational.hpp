#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace congruent {

using Integer = mpz_class;

/*
 * Exact rational number, always stored in lowest terms with a positive
 * denominator. Zero is 0/1. Because the representation is canonical,
 * equality is structural, which the torsion certificates rely on.
 */
class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(Integer(std::to_string(v))) {}
    Rational(const Integer& v) : q_(v) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long long num, long long den);

    // Accepts "p/q" or "p" (optional leading sign). Throws ParseError.
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational abs() const;
    Rational inverse() const;
    Rational pow(unsigned e) const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.q_ = -q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // "p/q", or "p" when q = 1.
    std::string to_string() const;
    // Decimal with `digits` fractional digits, rounded to nearest.
    std::string to_decimal(unsigned digits) const;
    double to_double() const { return q_.get_d(); }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Nonnegative rational square root when `a` is the square of a rational.
std::optional<Rational> is_rational_square(const Rational& a);

// Unique square-free integer s with a = s * (rational square); sign kept.
// Throws ZeroInput for a = 0.
Integer squarefree_part(const Rational& a);

// Square-free part of a nonzero integer (sign kept).
Integer squarefree_part(const Integer& a);

// Positive divisors of |a| (a != 0), ascending.
std::vector<Integer> positive_divisors(const Integer& a);

// 2^k as a rational, k may be negative.
Rational pow2(long k);

} // namespace congruent
