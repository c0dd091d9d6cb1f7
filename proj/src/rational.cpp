#include "congruent/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "congruent/errors.hpp"

namespace congruent {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Integer parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return Integer(std::string(s));
}

// Trial-division factorisation of |a| > 0 into (prime, exponent) pairs.
std::vector<std::pair<Integer, unsigned>> factor(Integer r) {
    std::vector<std::pair<Integer, unsigned>> out;
    r = abs(r);
    Integer d = 2;
    while (d * d <= r) {
        if (mpz_divisible_p(r.get_mpz_t(), d.get_mpz_t())) {
            unsigned e = 0;
            while (mpz_divisible_p(r.get_mpz_t(), d.get_mpz_t())) {
                r /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
        d += (d == 2) ? 1 : 2;
    }
    if (r > 1)
        out.emplace_back(r, 1u);
    return out;
}

} // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw MathError(ErrorKind::DivisionByZero, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(long long num, long long den)
    : Rational(Integer(std::to_string(num)), Integer(std::to_string(den))) {}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw MathError(ErrorKind::ParseError, "not a rational literal: '" + std::string(text) + "'");
    return Rational(parse_integer(num), parse_integer(den));
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero())
        throw MathError(ErrorKind::DivisionByZero, "inverse of zero");
    return Rational(q_.get_den(), q_.get_num());
}

Rational Rational::pow(unsigned e) const {
    Rational r;
    mpz_pow_ui(r.q_.get_num_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(r.q_.get_den_mpz_t(), q_.get_den_mpz_t(), e);
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw MathError(ErrorKind::DivisionByZero, "division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const {
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::to_decimal(unsigned digits) const {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    // round half away from zero
    Integer scaled_num = ::abs(q_.get_num()) * scale * 2 + q_.get_den();
    Integer rounded = scaled_num / (2 * q_.get_den());
    std::string s = rounded.get_str();
    if (s.size() <= digits)
        s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0)
        s.insert(s.size() - digits, ".");
    if (sign() < 0 && rounded != 0)
        s.insert(0, "-");
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::optional<Rational> is_rational_square(const Rational& a) {
    if (a.sign() < 0)
        return std::nullopt;
    Integer num = a.numerator(), den = a.denominator();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    return Rational(Integer(sqrt(num)), Integer(sqrt(den)));
}

Integer squarefree_part(const Integer& a) {
    if (a == 0)
        throw MathError(ErrorKind::ZeroInput, "square-free part of zero");
    Integer r = abs(a);
    Integer s = 1;
    Integer d = 2;
    // Once d^3 > r, what is left has at most two prime factors, all > d.
    while (d * d * d <= r) {
        unsigned e = 0;
        while (mpz_divisible_p(r.get_mpz_t(), d.get_mpz_t())) {
            r /= d;
            ++e;
        }
        if (e % 2 == 1)
            s *= d;
        d += (d == 2) ? 1 : 2;
    }
    if (!mpz_perfect_square_p(r.get_mpz_t()))
        s *= r;
    return a < 0 ? Integer(-s) : s;
}

Integer squarefree_part(const Rational& a) {
    if (a.is_zero())
        throw MathError(ErrorKind::ZeroInput, "square-free part of zero");
    // p/q = p*q / q^2
    return squarefree_part(Integer(a.numerator() * a.denominator()));
}

std::vector<Integer> positive_divisors(const Integer& a) {
    if (a == 0)
        throw MathError(ErrorKind::ZeroInput, "divisors of zero");
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : factor(a)) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Rational pow2(long k) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -k : k));
    return k < 0 ? Rational(Integer(1), p) : Rational(p);
}

} // namespace congruent
