#pragma once

// Reference computations that share no code with the library: plain mpq_class
// arithmetic and brute-force loops.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <utility>

namespace oracle {

struct QPoint {
    bool inf = false;
    mpq_class x, y;
};

inline bool on_en(const mpq_class& n, const QPoint& p) {
    return p.inf || p.y * p.y == p.x * p.x * p.x - n * n * p.x;
}

inline QPoint add(const mpq_class& n, const QPoint& p, const QPoint& q) {
    if (p.inf)
        return q;
    if (q.inf)
        return p;
    mpq_class lam;
    if (p.x == q.x) {
        if (p.y + q.y == 0)
            return {true, 0, 0};
        lam = (3 * p.x * p.x - n * n) / (2 * p.y);
    } else {
        lam = (q.y - p.y) / (q.x - p.x);
    }
    mpq_class x3 = lam * lam - p.x - q.x;
    mpq_class y3 = lam * (p.x - x3) - p.y;
    return {false, x3, y3};
}

inline QPoint mul(const mpq_class& n, int k, const QPoint& p) {
    QPoint r{true, 0, 0};
    for (int i = 0; i < k; ++i)
        r = add(n, r, p);
    return r;
}

// Legs and hypotenuse from a point with y != 0.
inline std::pair<mpq_class, mpq_class> legs(const mpq_class& n, const QPoint& p) {
    mpq_class a = abs(p.y / p.x);
    mpq_class b = abs(2 * n * p.x / p.y);
    if (b < a)
        std::swap(a, b);
    return {a, b};
}

inline std::uint64_t tunnell_count(std::int64_t n, std::int64_t zc) {
    std::uint64_t c = 0;
    for (std::int64_t x = -n; x <= n; ++x)
        for (std::int64_t y = -n; y <= n; ++y)
            for (std::int64_t z = -n; z <= n; ++z)
                if (2 * x * x + y * y + zc * z * z == n)
                    ++c;
    return c;
}

inline mpq_class random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound), den(1, den_bound);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

} // namespace oracle
