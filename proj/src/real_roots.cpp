#include "congruent/real_roots.hpp"

#include <algorithm>

#include "congruent/errors.hpp"

namespace congruent {

namespace {

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++v;
        last = s;
    }
    return v;
}

int variations_at(const std::vector<UniPoly>& sturm, const Rational& t) {
    std::vector<int> signs;
    signs.reserve(sturm.size());
    for (const auto& q : sturm)
        signs.push_back(q.sign_at(t));
    return variations(signs);
}

// Sign of q(t) as t -> +inf (positive) or -inf (negative).
int variations_at_infinity(const std::vector<UniPoly>& sturm, bool positive) {
    std::vector<int> signs;
    for (const auto& q : sturm) {
        int s = q.leading().sign();
        if (!positive && q.degree() % 2 == 1)
            s = -s;
        signs.push_back(s);
    }
    return variations(signs);
}

// (lo, hi] holds exactly one root of square-free p; tighten to a proper
// isolating interval whose endpoints are not roots.
IsolatingInterval settle(const UniPoly& p, const std::vector<UniPoly>& sturm, Rational lo, Rational hi) {
    if (p.eval(hi).is_zero()) {
        const Rational root = hi;
        Rational delta = (hi - lo) / Rational(2);
        while (count_roots(sturm, root - delta, root + delta) != 1 || p.eval(root - delta).is_zero() ||
               p.eval(root + delta).is_zero())
            delta /= Rational(2);
        return {root - delta, root + delta};
    }
    if (p.eval(lo).is_zero()) {
        Rational step = (hi - lo) / Rational(2);
        Rational moved = lo + step;
        while (count_roots(sturm, moved, hi) != 1) {
            step /= Rational(2);
            moved = lo + step;
        }
        lo = moved;
    }
    return {lo, hi};
}

} // namespace

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
    std::vector<UniPoly> seq;
    if (p.is_zero())
        return seq;
    seq.push_back(p);
    UniPoly d = p.derivative();
    if (d.is_zero())
        return seq;
    seq.push_back(d);
    while (true) {
        UniPoly r = divmod(seq[seq.size() - 2], seq.back()).remainder;
        if (r.is_zero())
            break;
        seq.push_back(-r);
    }
    return seq;
}

int count_roots(const std::vector<UniPoly>& sturm, const Rational& lo, const Rational& hi) {
    return variations_at(sturm, lo) - variations_at(sturm, hi);
}

int count_real_roots(const std::vector<UniPoly>& sturm) {
    return variations_at_infinity(sturm, false) - variations_at_infinity(sturm, true);
}

Rational root_bound(const UniPoly& p) {
    Rational m;
    const Rational lead = p.leading().abs();
    for (long i = 0; i < p.degree(); ++i)
        m = std::max(m, p.coeff(static_cast<std::size_t>(i)).abs() / lead);
    Rational bound = m + Rational(1);
    Rational b(1);
    while (b < bound)
        b *= Rational(2);
    if (b == bound)
        b *= Rational(2);
    return b;
}

std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p) {
    const UniPoly sf = squarefree_part(p);
    if (sf.degree() <= 0)
        return {};
    const auto sturm = sturm_sequence(sf);
    const Rational b = root_bound(sf);
    std::vector<IsolatingInterval> out;
    std::vector<std::pair<Rational, Rational>> stack{{-b, b}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        const int c = count_roots(sturm, lo, hi);
        if (c == 0)
            continue;
        if (c == 1) {
            out.push_back(settle(sf, sturm, lo, hi));
            continue;
        }
        const Rational mid = (lo + hi) / Rational(2);
        stack.emplace_back(lo, mid);
        stack.emplace_back(mid, hi);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    return out;
}

IsolatingInterval isolate_unique_real_root(const UniPoly& p) {
    if (p.degree() < 1)
        throw MathError(ErrorKind::NotUniqueRealRoot, "constant polynomial has no root");
    const int n = count_real_roots(sturm_sequence(squarefree_part(p)));
    if (n != 1)
        throw MathError(ErrorKind::NotUniqueRealRoot,
                        p.to_string() + " has " + std::to_string(n) + " distinct real roots");
    return isolate_real_roots(p).front();
}

IsolatingInterval bisect(const UniPoly& p, const IsolatingInterval& iv) {
    const Rational mid = iv.midpoint();
    const int s_mid = p.sign_at(mid);
    if (s_mid == 0) {
        const Rational q = iv.width() / Rational(4);
        return {mid - q, mid + q};
    }
    if (s_mid == p.sign_at(iv.lo))
        return {mid, iv.hi};
    return {iv.lo, mid};
}

IsolatingInterval refine(const UniPoly& p, IsolatingInterval iv, const Rational& max_width) {
    while (iv.width() > max_width)
        iv = bisect(p, iv);
    return iv;
}

bool is_isolating(const UniPoly& p, const IsolatingInterval& iv) {
    if (!(iv.lo < iv.hi))
        return false;
    const int slo = p.sign_at(iv.lo), shi = p.sign_at(iv.hi);
    if (slo == 0 || shi == 0 || slo == shi)
        return false;
    return count_roots(sturm_sequence(squarefree_part(p)), iv.lo, iv.hi) == 1;
}

} // namespace congruent
