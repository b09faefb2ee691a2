#pragma once

#include <cstdint>
#include <vector>

namespace rule150 {

/// An elementary cellular automaton rule, the 8-bit output table over the
/// neighborhoods 000..111. Only quiescent rules (table bit 0 clear, so an
/// all-zero background stays zero) make sense for single-seeded evolution
/// on an infinite lattice; step() rejects the others.
class rule_number {
public:
    explicit rule_number(unsigned value);

    unsigned value() const { return value_; }
    bool output(bool left, bool center, bool right) const {
        return (value_ >> ((left << 2) | (center << 1) | static_cast<unsigned>(right))) & 1u;
    }
    bool quiescent() const { return (value_ & 1u) == 0; }

    static rule_number rule90() { return rule_number(90); }
    static rule_number rule150() { return rule_number(150); }

private:
    unsigned value_;
};

/// One row of the infinite lattice: a packed bit window plus the lattice
/// coordinate of its first cell. Cells outside the window are 0. Windows
/// are kept trimmed (first and last cell set) except for the empty row.
class lattice_window {
public:
    lattice_window() = default;
    lattice_window(std::vector<std::uint64_t> words, std::int64_t left, std::size_t width);

    static lattice_window single_seed();

    std::size_t width() const { return width_; }
    std::int64_t left() const { return left_; }
    bool empty() const { return width_ == 0; }

    /// Cell value at an absolute lattice coordinate (0 outside the window).
    bool cell(std::int64_t pos) const;

    /// Number of 1-cells: the row's contribution X(t) to the sum signal.
    std::uint64_t activity() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

    bool operator==(const lattice_window&) const = default;

private:
    std::vector<std::uint64_t> words_;
    std::int64_t left_ = 0;
    std::size_t width_ = 0;
};

/// Applies one synchronous update to a row, widening the window by one
/// cell per side and trimming zero margins. Throws std::domain_error for
/// non-quiescent rules.
lattice_window step(rule_number rule, const lattice_window& row);

/// Activity of the first `rows` rows evolved from the single seed.
/// Word-parallel shift-xor for rules 90 and 150, table-driven otherwise;
/// total work O(rows^2 / word size) on the fast path.
std::vector<std::uint64_t> simulate_activity(rule_number rule, std::uint64_t rows);

/// The first `rows` rows themselves, for space-time grid export.
std::vector<lattice_window> simulate_rows(rule_number rule, std::uint64_t rows);

/// Row t of single-seeded rule 150 as the coefficients of
/// (1 + x + x^2)^t mod 2, placed at lattice offset -t. Computed by binary
/// exponentiation with carry-less convolution; bit-exact equal to t
/// iterated step() calls.
lattice_window row150_polynomial(std::uint64_t t);

} // namespace rule150
