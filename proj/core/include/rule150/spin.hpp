#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace rule150 {

/// Binary "time spin" expansion of a time index t = sum sigma_j * 2^j.
/// Digits are stored least-significant first; width() is the number of
/// significant bits (0 for t = 0, no leading zeros kept). The virtual
/// boundary digits sigma_{-1} and sigma_N read as 0.
class spin_word {
public:
    spin_word() = default;
    explicit spin_word(std::vector<std::uint8_t> bits);

    std::size_t width() const { return bits_.size(); }

    /// sigma_j with the boundary convention: 0 for j < 0 or j >= width().
    int digit(std::int64_t j) const {
        if (j < 0 || j >= static_cast<std::int64_t>(bits_.size())) return 0;
        return bits_[static_cast<std::size_t>(j)];
    }

    /// Reconstructs the original time index.
    std::uint64_t value() const;

    const std::vector<std::uint8_t>& bits() const { return bits_; }

private:
    std::vector<std::uint8_t> bits_;
};

/// Multiset of maximal runs of 1-digits in a spin word, as a map from run
/// length n >= 1 to multiplicity c_n. Empty for t = 0;
/// sum of n * c_n equals popcount(t).
struct block_multiset {
    std::map<unsigned, unsigned> counts;

    bool operator==(const block_multiset&) const = default;
};

spin_word spin_decompose(std::uint64_t t);

block_multiset spin_blocks(const spin_word& w);

/// chi(n): activity at t = 2^n - 1, by the recurrence
/// chi(n) = 2*chi(n-1) - (-1)^n with chi(0) = 1.
/// The first values are 1, 3, 5, 11, 21, 43, 85, 171, 341, ...
std::uint64_t chi(unsigned n);

/// chi(n) in closed form, floor((2^{n+2} + 1) / 3). Agrees with chi(n)
/// everywhere; kept as an algebraically independent route.
std::uint64_t chi_closed(unsigned n);

/// Total activity X(t) of the single-seeded rule 150 automaton as the
/// spin-block product: X(t) = prod over blocks of chi(n)^{c_n}. X(0) = 1.
/// Cost is O(number of digits of t).
std::uint64_t activity_closed_form(std::uint64_t t);

/// Rule 90 (Sierpinski) counterpart: X90(t) = 2^popcount(t).
std::uint64_t rule90_activity(std::uint64_t t);

} // namespace rule150
