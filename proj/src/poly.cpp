#include "congruent/poly.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

#include "congruent/errors.hpp"

namespace congruent {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Rational UniPoly::eval(const Rational& t) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero())
        return {};
    return *this * leading().inverse();
}

UniPoly UniPoly::reflect() const {
    std::vector<Rational> v = coeffs_;
    for (std::size_t i = 1; i < v.size(); i += 2)
        v[i] = -v[i];
    return UniPoly(std::move(v));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Rational& c) {
    for (auto& x : coeffs_)
        x *= c;
    trim();
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& x : r.coeffs_)
        x = -x;
    return r;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly result = constant(1), base = *this;
    while (e) {
        if (e & 1u)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c.is_zero())
            continue;
        Rational mag = c.abs();
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != Rational(1))
            os << mag << "*";
        os << var;
        if (k > 1)
            os << "^" << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

DivMod divmod(const UniPoly& p, const UniPoly& q) {
    if (q.is_zero())
        throw MathError(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (p.degree() < q.degree())
        return {UniPoly(), p};
    std::vector<Rational> rem = p.coeffs();
    const std::size_t dq = static_cast<std::size_t>(q.degree());
    std::vector<Rational> quot(rem.size() - dq);
    const Rational lead_inv = q.leading().inverse();
    for (std::size_t k = rem.size(); k-- > dq;) {
        if (rem[k].is_zero())
            continue;
        Rational f = rem[k] * lead_inv;
        quot[k - dq] = f;
        for (std::size_t j = 0; j <= dq; ++j)
            rem[k - dq + j] -= f * q.coeffs()[j];
    }
    rem.resize(dq);
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& p, const UniPoly& q) {
    UniPoly a = p, b = q;
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtGcd ext_gcd(const UniPoly& p, const UniPoly& q) {
    // invariant: old_r = old_u*p + old_v*q, r = u*p + v*q
    UniPoly old_r = p, r = q;
    UniPoly old_u = UniPoly::constant(1), u;
    UniPoly old_v, v = UniPoly::constant(1);
    while (!r.is_zero()) {
        DivMod dm = divmod(old_r, r);
        old_r = std::exchange(r, dm.remainder);
        old_u = std::exchange(u, old_u - dm.quotient * u);
        old_v = std::exchange(v, old_v - dm.quotient * v);
    }
    if (old_r.is_zero())
        return {};
    Rational s = old_r.leading().inverse();
    return {old_r * s, old_u * s, old_v * s};
}

std::vector<Integer> primitive_integer_form(const UniPoly& p) {
    if (p.is_zero())
        throw MathError(ErrorKind::ZeroInput, "primitive form of the zero polynomial");
    Integer l = 1;
    for (const auto& c : p.coeffs())
        l = lcm(l, c.denominator());
    std::vector<Integer> ints;
    ints.reserve(p.coeffs().size());
    Integer content = 0;
    for (const auto& c : p.coeffs()) {
        ints.push_back(c.numerator() * (l / c.denominator()));
        content = gcd(content, ints.back());
    }
    if (p.leading().sign() < 0)
        content = -content;
    for (auto& c : ints)
        c /= content;
    return ints;
}

std::vector<Rational> rational_roots(const UniPoly& p) {
    if (p.is_zero())
        throw MathError(ErrorKind::ZeroInput, "rational roots of the zero polynomial");
    std::vector<Integer> ints = primitive_integer_form(p);
    std::set<Rational> roots;
    // strip the factor t^k
    std::size_t low = 0;
    while (ints[low] == 0)
        ++low;
    if (low > 0)
        roots.insert(Rational(0));
    std::vector<Integer> core(ints.begin() + static_cast<long>(low), ints.end());
    if (core.size() > 1) {
        const UniPoly reduced = [&] {
            std::vector<Rational> v(core.begin(), core.end());
            return UniPoly(std::move(v));
        }();
        const auto num_divs = positive_divisors(core.front());
        const auto den_divs = positive_divisors(core.back());
        for (const auto& q : den_divs) {
            for (const auto& pn : num_divs) {
                if (gcd(pn, q) != 1)
                    continue;
                for (int s : {1, -1}) {
                    Rational cand(Integer(s * pn), q);
                    if (reduced.eval(cand).is_zero())
                        roots.insert(cand);
                }
            }
        }
    }
    return {roots.begin(), roots.end()};
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() <= 0)
        return p.monic();
    return divmod(p, gcd(p, p.derivative())).quotient.monic();
}

} // namespace congruent
