#include "rule150/blocksum.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "rule150/checked.hpp"
#include "rule150/replicate.hpp"

namespace rule150 {

namespace {

// Largest n with S_n representable in 64 bits, found once by running the
// recurrence until it overflows.
unsigned max_block_sum_index() {
    static const unsigned max_n = [] {
        std::uint64_t prev = 1, cur = 4;
        unsigned n = 1;
        for (;;) {
            std::uint64_t twice, quad, next;
            if (__builtin_mul_overflow(cur, std::uint64_t{2}, &twice) ||
                __builtin_mul_overflow(prev, std::uint64_t{4}, &quad) ||
                __builtin_add_overflow(twice, quad, &next))
                return n;
            prev = cur;
            cur = next;
            ++n;
        }
    }();
    return max_n;
}

} // namespace

std::uint64_t block_sum(unsigned n) {
    if (n > max_block_sum_index())
        throw_overflow(("S_" + std::to_string(n) + " exceeds the 64-bit exact range (max n = " +
                        std::to_string(max_block_sum_index()) + ")")
                           .c_str());
    std::uint64_t prev = 1, cur = 4;
    if (n == 0) return prev;
    for (unsigned k = 2; k <= n; ++k) {
        const std::uint64_t next = 2 * cur + 4 * prev; // in range by the max-n guard
        prev = cur;
        cur = next;
    }
    return cur;
}

std::uint64_t fibonacci(unsigned n) {
    if (n == 0) throw std::domain_error("fibonacci requires n >= 1");
    std::uint64_t a = 1, b = 1; // F_1, F_2
    if (n <= 2) return 1;
    for (unsigned k = 3; k <= n; ++k) {
        const std::uint64_t next =
            checked_add(a, b, ("F_" + std::to_string(n) + " exceeds the 64-bit exact range").c_str());
        a = b;
        b = next;
    }
    return b;
}

std::uint64_t block_sum_fib(unsigned n) {
    const std::string what = "S_" + std::to_string(n) + " exceeds the 64-bit exact range";
    return checked_shl(fibonacci(n + 2), n, what.c_str());
}

std::uint64_t detrend_offset(unsigned n) {
    if (n == 0) return 1;
    const std::uint64_t diff = block_sum(n) - block_sum(n - 1); // S_n > S_{n-1}
    return diff >> (n - 1); // exact: S_n - S_{n-1} = 2^{n-1} * (2 F_{n+2} - F_{n+1})
}

std::vector<std::int64_t> detrended_series(std::uint64_t count) {
    if (count == 0 || !std::has_single_bit(count))
        throw std::domain_error("detrended_series requires a power-of-two count");

    const activity_string series = activity_series(count);
    std::vector<std::int64_t> out;
    out.reserve(count);
    const char* const what = "detrended value exceeds the 64-bit exact range";
    for (std::uint64_t t = 0; t < count; ++t) {
        const unsigned n = t == 0 ? 0 : static_cast<unsigned>(std::bit_width(t));
        const std::int64_t x = static_cast<std::int64_t>(series.values[t]);
        const std::int64_t offset = static_cast<std::int64_t>(detrend_offset(n));
        out.push_back(checked_add(x, -offset, what));
    }
    return out;
}

double eigenvalue_ratio(unsigned n) {
    if (n < 2) throw std::domain_error("eigenvalue_ratio requires n >= 2");
    return static_cast<double>(block_sum(n)) / static_cast<double>(block_sum(n - 1));
}

} // namespace rule150
