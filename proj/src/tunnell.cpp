#include "congruent/tunnell.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "congruent/errors.hpp"

namespace congruent {

namespace {

std::uint64_t isqrt(std::uint64_t v) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
    while (r * r > v)
        --r;
    while ((r + 1) * (r + 1) <= v)
        ++r;
    return r;
}

} // namespace

std::string_view to_string(TunnellVerdict v) noexcept {
    switch (v) {
    case TunnellVerdict::ConsistentCongruent: return "congruent_conditional_on_BSD";
    case TunnellVerdict::NotCongruent: return "not_congruent";
    case TunnellVerdict::Inapplicable: return "inapplicable";
    }
    return "inapplicable";
}

std::uint64_t count_representations(std::uint64_t n, unsigned z_coeff) {
    if (z_coeff != 8 && z_coeff != 32)
        throw MathError(ErrorKind::InvalidArgument, "z coefficient must be 8 or 32, got " + std::to_string(z_coeff));
    std::uint64_t count = 0;
    const std::uint64_t xmax = isqrt(n / 2);
    const std::uint64_t zmax = isqrt(n / z_coeff);
    // x, z >= 0 here; each nonzero coordinate doubles the count.
    for (std::uint64_t x = 0; x <= xmax; ++x) {
        const std::uint64_t after_x = n - 2 * x * x;
        for (std::uint64_t z = 0; z <= zmax; ++z) {
            const std::uint64_t zz = z_coeff * z * z;
            if (zz > after_x)
                break;
            const std::uint64_t rest = after_x - zz;
            const std::uint64_t y = isqrt(rest);
            if (y * y != rest)
                continue;
            std::uint64_t mult = (x ? 2 : 1) * (z ? 2 : 1) * (y ? 2 : 1);
            count += mult;
        }
    }
    return count;
}

bool is_squarefree(std::uint64_t n) {
    if (n == 0)
        return false;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0)
            return false;
        if (n % p == 0)
            n /= p;
    }
    return true;
}

TunnellCounts tunnell_verdict(std::uint64_t n) {
    TunnellCounts out;
    out.n = n;
    if (n == 0 || n % 2 == 0) {
        out.note = "criterion covers odd n only";
        return out;
    }
    if (!is_squarefree(n)) {
        out.note = "n is not square-free; divide out the largest square factor first";
        return out;
    }
    out.count_8 = count_representations(n, 8);
    out.count_32 = count_representations(n, 32);
    if (out.count_8 == 2 * out.count_32) {
        out.verdict = TunnellVerdict::ConsistentCongruent;
        out.note = "counts agree: congruent conditional on BSD";
    } else {
        out.verdict = TunnellVerdict::NotCongruent;
        out.note = "counts differ: not congruent";
    }
    return out;
}

std::vector<TunnellCounts> tunnell_scan(std::uint64_t first, std::uint64_t last, unsigned threads) {
    if (last < first)
        return {};
    const std::uint64_t total = last - first + 1;
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
    std::vector<TunnellCounts> out(total);
    std::vector<std::thread> workers;
    // Strided assignment balances the O(n) cost per entry.
    for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
            for (std::uint64_t i = t; i < total; i += threads)
                out[i] = tunnell_verdict(first + i);
        });
    }
    for (auto& w : workers)
        w.join();
    return out;
}

} // namespace congruent
