#include "congruent/number_field.hpp"

#include <algorithm>
#include <sstream>

#include "congruent/errors.hpp"

namespace congruent {

Enclosure operator+(const Enclosure& a, const Enclosure& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Enclosure operator-(const Enclosure& a, const Enclosure& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    const Rational p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
    return {*mn, *mx};
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
    if (b.contains(Rational(0)))
        throw MathError(ErrorKind::DivisionByZero, "interval division by an interval containing zero");
    return a * Enclosure{b.hi.inverse(), b.lo.inverse()};
}

Enclosure eval_enclosure(const UniPoly& p, const Enclosure& iv) {
    Enclosure acc{Rational(0), Rational(0)};
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * iv + Enclosure{*it, *it};
    return acc;
}

// ---------------------------------------------------------------- field

NumberField::NumberField(UniPoly min_poly, IsolatingInterval root, std::string label)
    : min_poly_(std::move(min_poly)), initial_(root), label_(std::move(label)), refined_(root) {}

namespace {

std::string default_label(const UniPoly& monic) {
    if (monic.degree() == 1)
        return "Q";
    if (monic.degree() == 2 && monic.coeff(1).is_zero())
        return "Q(sqrt(" + (-monic.coeff(0)).to_string() + "))";
    return "Q[t]/(" + monic.to_string() + ")";
}

void check_shape(const UniPoly& monic) {
    if (monic.degree() < 1 || monic.degree() > 3)
        throw MathError(ErrorKind::InvalidArgument,
                        "minimal polynomial must have degree 1, 2 or 3, got " + monic.to_string());
    if (monic.degree() >= 2) {
        auto roots = rational_roots(monic);
        if (!roots.empty())
            throw MathError(ErrorKind::Reducible,
                            monic.to_string() + " has the rational root " + roots.front().to_string());
    }
}

} // namespace

FieldPtr NumberField::make(const UniPoly& min_poly, std::string label) {
    const UniPoly monic = min_poly.monic();
    check_shape(monic);
    if (label.empty())
        label = default_label(monic);
    if (monic.degree() == 1) {
        const Rational r = -monic.coeff(0);
        return FieldPtr(new NumberField(monic, {r - Rational(1), r + Rational(1)}, std::move(label)));
    }
    auto roots = isolate_real_roots(monic);
    if (roots.empty())
        throw MathError(ErrorKind::NoRealRoot, monic.to_string() + " has no real root");
    return FieldPtr(new NumberField(monic, roots.back(), std::move(label)));
}

FieldPtr NumberField::make(const UniPoly& min_poly, const IsolatingInterval& root, std::string label) {
    const UniPoly monic = min_poly.monic();
    check_shape(monic);
    if (!is_isolating(monic, root))
        throw MathError(ErrorKind::InvalidArgument, "interval (" + root.lo.to_string() + ", " +
                                                        root.hi.to_string() + ") does not isolate a root of " +
                                                        monic.to_string());
    if (label.empty())
        label = default_label(monic);
    return FieldPtr(new NumberField(monic, root, std::move(label)));
}

FieldPtr NumberField::rationals() {
    static const FieldPtr q = make(UniPoly::x(), "Q");
    return q;
}

IsolatingInterval NumberField::refined_root(const Rational& max_width) const {
    std::lock_guard lock(refine_mutex_);
    if (refined_.width() > max_width)
        refined_ = refine(min_poly_, refined_, max_width);
    return refined_;
}

bool NumberField::same_field(const NumberField& other) const {
    if (this == &other)
        return true;
    if (degree() == 1 && other.degree() == 1)
        return true;
    return min_poly_ == other.min_poly_ && initial_.lo < other.initial_.hi && other.initial_.lo < initial_.hi;
}

// ---------------------------------------------------------------- element

FieldElement::FieldElement(FieldPtr field, const std::vector<Rational>& coeffs) : field_(std::move(field)) {
    const auto d = static_cast<std::size_t>(field_->degree());
    if (coeffs.size() <= d) {
        coeffs_ = coeffs;
    } else {
        coeffs_ = divmod(UniPoly(coeffs), field_->min_poly()).remainder.coeffs();
    }
    coeffs_.resize(d);
}

FieldElement::FieldElement(FieldPtr field, const UniPoly& poly) : FieldElement(std::move(field), poly.coeffs()) {}

FieldElement FieldElement::from_rational(FieldPtr field, const Rational& value) {
    return FieldElement(std::move(field), std::vector<Rational>{value});
}

FieldElement FieldElement::generator(FieldPtr field) {
    return FieldElement(std::move(field), std::vector<Rational>{Rational(0), Rational(1)});
}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool FieldElement::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

Rational FieldElement::to_rational() const {
    if (!is_rational())
        throw MathError(ErrorKind::InvalidArgument, to_string() + " is not rational");
    return coeffs_.front();
}

FieldElement FieldElement::inverse() const {
    if (is_zero())
        throw MathError(ErrorKind::DivisionByZero, "inverse of zero in " + field_->label());
    if (is_rational())
        return from_rational(field_, coeffs_.front().inverse());
    // u*a + v*m = 1, so u = a^{-1} modulo the minimal polynomial.
    ExtGcd eg = ext_gcd(as_poly(), field_->min_poly());
    if (eg.gcd != UniPoly::constant(Rational(1)))
        throw MathError(ErrorKind::Reducible, "element shares a factor with " + field_->min_poly().to_string());
    return FieldElement(field_, eg.u);
}

FieldElement FieldElement::pow(unsigned e) const {
    FieldElement result = one(field_), base = *this;
    while (e) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

int FieldElement::sign() const {
    if (is_rational())
        return coeffs_.front().sign();
    const UniPoly p = as_poly();
    Rational width = field_->root_interval().width();
    while (true) {
        const IsolatingInterval iv = field_->refined_root(width);
        const Enclosure e = eval_enclosure(p, {iv.lo, iv.hi});
        if (e.lo.sign() > 0)
            return 1;
        if (e.hi.sign() < 0)
            return -1;
        width = iv.width() / Rational(256);
    }
}

Enclosure FieldElement::approx(const Rational& width) const {
    if (width.sign() <= 0)
        throw MathError(ErrorKind::InvalidArgument, "approximation width must be positive");
    if (is_rational())
        return {coeffs_.front(), coeffs_.front()};
    const UniPoly p = as_poly();
    Rational root_width = width;
    while (true) {
        const IsolatingInterval iv = field_->refined_root(root_width);
        const Enclosure e = eval_enclosure(p, {iv.lo, iv.hi});
        if (e.width() <= width)
            return e;
        root_width = iv.width() / Rational(256);
    }
}

void FieldElement::check_same_field(const FieldElement& o) const {
    if (field_ != o.field_ && !field_->same_field(*o.field_))
        throw MathError(ErrorKind::FieldMismatch, field_->label() + " vs " + o.field_->label());
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    check_same_field(o);
    const std::size_t d = coeffs_.size();
    std::vector<Rational> prod(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < d; ++j)
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    // theta^k = -sum_{i<d} m_i theta^{k-d+i}, highest power first
    const auto& m = field_->min_poly().coeffs();
    for (std::size_t k = prod.size(); k-- > d;) {
        if (prod[k].is_zero())
            continue;
        for (std::size_t i = 0; i < d; ++i)
            if (!m[i].is_zero())
                prod[k - d + i] -= prod[k] * m[i];
    }
    prod.resize(d);
    coeffs_ = std::move(prod);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    check_same_field(o);
    return *this *= o.inverse();
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

FieldElement operator+(FieldElement a, const Rational& b) {
    a.coeffs_.front() += b;
    return a;
}

FieldElement operator-(FieldElement a, const Rational& b) {
    a.coeffs_.front() -= b;
    return a;
}

FieldElement operator*(FieldElement a, const Rational& b) {
    for (auto& c : a.coeffs_)
        c *= b;
    return a;
}

FieldElement operator/(FieldElement a, const Rational& b) { return a * b.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.field_ != b.field_ && !a.field_->same_field(*b.field_))
        return false;
    return a.coeffs_ == b.coeffs_;
}

std::string FieldElement::to_string(const std::string& var) const {
    if (is_rational())
        return coeffs_.front().to_string();
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero())
            continue;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        const Rational mag = c.abs();
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

FieldElement evaluate(const UniPoly& p, const FieldElement& x) {
    FieldElement acc = FieldElement::zero(x.field());
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= x;
        acc = acc + *it;
    }
    return acc;
}

} // namespace congruent
