#include "rule150/spin.hpp"

#include <bit>
#include <stdexcept>

#include "rule150/checked.hpp"

namespace rule150 {

spin_word::spin_word(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    while (!bits_.empty() && bits_.back() == 0) bits_.pop_back();
}

std::uint64_t spin_word::value() const {
    std::uint64_t t = 0;
    for (std::size_t j = bits_.size(); j-- > 0;) t = (t << 1) | bits_[j];
    return t;
}

spin_word spin_decompose(std::uint64_t t) {
    std::vector<std::uint8_t> bits;
    if (t != 0) {
        bits.reserve(static_cast<std::size_t>(std::bit_width(t)));
        for (std::uint64_t v = t; v != 0; v >>= 1) bits.push_back(v & 1u);
    }
    return spin_word(std::move(bits));
}

block_multiset spin_blocks(const spin_word& w) {
    block_multiset blocks;
    unsigned run = 0;
    // The virtual sigma_N = 0 terminates a trailing run.
    for (std::size_t j = 0; j <= w.width(); ++j) {
        if (w.digit(static_cast<std::int64_t>(j)) == 1) {
            ++run;
        } else if (run > 0) {
            ++blocks.counts[run];
            run = 0;
        }
    }
    return blocks;
}

std::uint64_t chi(unsigned n) {
    std::uint64_t x = 1;
    for (unsigned k = 1; k <= n; ++k) {
        x = checked_mul(x, 2, "chi(n) exceeds the 64-bit exact range");
        // 2x >= 2, so subtracting 1 on even k cannot underflow.
        if (k & 1u)
            x = checked_add(x, std::uint64_t{1}, "chi(n) exceeds the 64-bit exact range");
        else
            x -= 1;
    }
    return x;
}

std::uint64_t chi_closed(unsigned n) {
    if (n > 63) throw_overflow("chi(n) exceeds the 64-bit exact range (max n = 63)");
    const unsigned __int128 v = ((static_cast<unsigned __int128>(1) << (n + 2)) + 1) / 3;
    if (v > UINT64_MAX) throw_overflow("chi(n) exceeds the 64-bit exact range (max n = 63)");
    return static_cast<std::uint64_t>(v);
}

std::uint64_t activity_closed_form(std::uint64_t t) {
    std::uint64_t x = 1;
    // Single pass over the digits: close each maximal run of 1s and
    // multiply in chi(run length). The extra iteration at t == 0 closes
    // a trailing run against the virtual sigma_N = 0.
    unsigned run = 0;
    while (t != 0 || run != 0) {
        if (t & 1u) {
            ++run;
        } else if (run > 0) {
            x = checked_mul(x, chi(run), "X(t) exceeds the 64-bit exact range");
            run = 0;
        }
        t >>= 1;
    }
    return x;
}

std::uint64_t rule90_activity(std::uint64_t t) {
    const int pc = std::popcount(t);
    return checked_shl(1, static_cast<unsigned>(pc), "X90(t) exceeds the 64-bit exact range");
}

} // namespace rule150
