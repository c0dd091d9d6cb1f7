#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace congruent {

enum class TunnellVerdict {
    // count_8 == 2 count_32: congruent provided BSD holds
    ConsistentCongruent,
    // count_8 != 2 count_32: not congruent, unconditionally
    NotCongruent,
    // n even or not square-free
    Inapplicable,
};

// "congruent_conditional_on_BSD", "not_congruent", "inapplicable"
std::string_view to_string(TunnellVerdict v) noexcept;

struct TunnellCounts {
    std::uint64_t n = 0;
    std::uint64_t count_8 = 0;  // #{2x^2 + y^2 + 8z^2 = n}
    std::uint64_t count_32 = 0; // #{2x^2 + y^2 + 32z^2 = n}
    TunnellVerdict verdict = TunnellVerdict::Inapplicable;
    std::string_view note;
};

// #{(x, y, z) in Z^3 : 2x^2 + y^2 + z_coeff z^2 = n}, all signs counted.
// z_coeff must be 8 or 32 (InvalidArgument otherwise).
std::uint64_t count_representations(std::uint64_t n, unsigned z_coeff);

bool is_squarefree(std::uint64_t n);

// Odd square-free n gets both counts; otherwise the verdict is Inapplicable
// and the counts are left at zero.
TunnellCounts tunnell_verdict(std::uint64_t n);

// tunnell_verdict for every n in [first, last], in order, sharded over
// `threads` workers (0 = hardware concurrency).
std::vector<TunnellCounts> tunnell_scan(std::uint64_t first, std::uint64_t last, unsigned threads = 0);

} // namespace congruent
