#include "rule150/eca.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace rule150 {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t cells) { return (cells + kWordBits - 1) / kWordBits; }

// dst ^= src << shift, both as little-endian bit arrays; dst must be large
// enough for the shifted source.
void xor_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                 unsigned shift) {
    const std::size_t word_off = shift / kWordBits;
    const unsigned bit_off = shift % kWordBits;
    for (std::size_t j = 0; j < src.size(); ++j) {
        if (bit_off == 0) {
            dst[j + word_off] ^= src[j];
        } else {
            dst[j + word_off] ^= src[j] << bit_off;
            if (j + word_off + 1 < dst.size()) dst[j + word_off + 1] ^= src[j] >> (kWordBits - bit_off);
        }
    }
}

void mask_tail(std::vector<std::uint64_t>& words, std::size_t cells) {
    if (cells % kWordBits != 0 && !words.empty())
        words.back() &= (std::uint64_t{1} << (cells % kWordBits)) - 1;
}

bool get_bit(const std::vector<std::uint64_t>& words, std::size_t i) {
    return (words[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void set_bit(std::vector<std::uint64_t>& words, std::size_t i) {
    words[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}

// Realigns a bit array so that cell `first` becomes cell 0 of a window of
// `count` cells.
std::vector<std::uint64_t> extract_bits(const std::vector<std::uint64_t>& words, std::size_t first,
                                        std::size_t count) {
    std::vector<std::uint64_t> out(words_for(count), 0);
    const std::size_t word_off = first / kWordBits;
    const unsigned bit_off = first % kWordBits;
    for (std::size_t j = 0; j < out.size(); ++j) {
        std::uint64_t v = words[j + word_off] >> bit_off;
        if (bit_off != 0 && j + word_off + 1 < words.size())
            v |= words[j + word_off + 1] << (kWordBits - bit_off);
        out[j] = v;
    }
    mask_tail(out, count);
    return out;
}

lattice_window trimmed(std::vector<std::uint64_t> words, std::int64_t left, std::size_t cells) {
    mask_tail(words, cells);
    std::size_t first = cells, last = 0;
    for (std::size_t j = 0; j < words.size(); ++j) {
        if (words[j] == 0) continue;
        const std::size_t lo = j * kWordBits + static_cast<std::size_t>(std::countr_zero(words[j]));
        const std::size_t hi = j * kWordBits + (kWordBits - 1) -
                               static_cast<std::size_t>(std::countl_zero(words[j]));
        if (lo < first) first = lo;
        if (hi > last) last = hi;
    }
    if (first == cells) return lattice_window{}; // all zero
    const std::size_t width = last - first + 1;
    if (first == 0) {
        words.resize(words_for(width));
        return lattice_window(std::move(words), left, width);
    }
    return lattice_window(extract_bits(words, first, width),
                          left + static_cast<std::int64_t>(first), width);
}

} // namespace

rule_number::rule_number(unsigned value) : value_(value) {
    if (value > 255) throw std::domain_error("rule number must be in [0, 255]");
}

lattice_window::lattice_window(std::vector<std::uint64_t> words, std::int64_t left,
                               std::size_t width)
    : words_(std::move(words)), left_(left), width_(width) {
    if (words_.size() != words_for(width_))
        throw std::logic_error("lattice window word count does not match its width");
}

lattice_window lattice_window::single_seed() { return lattice_window({1}, 0, 1); }

bool lattice_window::cell(std::int64_t pos) const {
    if (pos < left_ || pos >= left_ + static_cast<std::int64_t>(width_)) return false;
    return get_bit(words_, static_cast<std::size_t>(pos - left_));
}

std::uint64_t lattice_window::activity() const {
    std::uint64_t n = 0;
    for (const std::uint64_t w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
    return n;
}

lattice_window step(rule_number rule, const lattice_window& row) {
    if (!rule.quiescent())
        throw std::domain_error("rule " + std::to_string(rule.value()) +
                                " maps an all-zero neighborhood to 1; the single-seed "
                                "infinite-lattice evolution is not defined for it");
    if (row.empty()) return lattice_window{};

    const std::size_t new_cells = row.width() + 2;
    std::vector<std::uint64_t> out(words_for(new_cells), 0);

    const unsigned r = rule.value();
    if (r == 150 || r == 90) {
        // New cell i = old(i-2) ^ [center] old(i-1) ^ old(i) in window
        // coordinates, i.e. three (two) shifted xors of the packed row.
        xor_shifted(out, row.words(), 0);
        if (r == 150) xor_shifted(out, row.words(), 1);
        xor_shifted(out, row.words(), 2);
    } else {
        for (std::size_t i = 0; i < new_cells; ++i) {
            const std::int64_t p = row.left() - 1 + static_cast<std::int64_t>(i);
            if (rule.output(row.cell(p - 1), row.cell(p), row.cell(p + 1))) set_bit(out, i);
        }
    }
    return trimmed(std::move(out), row.left() - 1, new_cells);
}

std::vector<std::uint64_t> simulate_activity(rule_number rule, std::uint64_t rows) {
    if (rows == 0) throw std::domain_error("simulate_activity requires rows >= 1");

    std::vector<std::uint64_t> activities;
    activities.reserve(rows);

    const unsigned r = rule.value();
    if (r == 150 || r == 90) {
        // Ping-pong between two preallocated buffers; the light cone grows
        // one cell per side per step and the corner cells stay 1, so no
        // trimming or reallocation is ever needed.
        const std::size_t max_cells = 2 * rows + 1;
        std::vector<std::uint64_t> cur(words_for(max_cells), 0), nxt(words_for(max_cells), 0);
        cur[0] = 1;
        std::size_t cells = 1;
        for (std::uint64_t t = 0; t < rows; ++t) {
            std::uint64_t activity = 0;
            for (std::size_t j = 0; j < words_for(cells); ++j)
                activity += static_cast<std::uint64_t>(std::popcount(cur[j]));
            activities.push_back(activity);
            if (t + 1 == rows) break;

            const std::size_t new_cells = cells + 2;
            std::fill(nxt.begin(), nxt.begin() + static_cast<std::ptrdiff_t>(words_for(new_cells)),
                      0);
            for (std::size_t j = 0; j < words_for(cells); ++j) {
                const std::uint64_t w = cur[j];
                std::uint64_t v = (w << 2) ^ w;
                std::uint64_t carry = w >> 62;
                if (r == 150) {
                    v ^= w << 1;
                    carry ^= w >> 63;
                }
                nxt[j] ^= v;
                if (j + 1 < words_for(new_cells)) nxt[j + 1] ^= carry;
            }
            std::swap(cur, nxt);
            cells = new_cells;
        }
        return activities;
    }

    lattice_window row = lattice_window::single_seed();
    for (std::uint64_t t = 0; t < rows; ++t) {
        activities.push_back(row.activity());
        if (t + 1 < rows) row = step(rule, row);
    }
    return activities;
}

std::vector<lattice_window> simulate_rows(rule_number rule, std::uint64_t rows) {
    if (rows == 0) throw std::domain_error("simulate_rows requires rows >= 1");
    std::vector<lattice_window> out;
    out.reserve(rows);
    out.push_back(lattice_window::single_seed());
    for (std::uint64_t t = 1; t < rows; ++t) out.push_back(step(rule, out.back()));
    return out;
}

namespace {

// GF(2)[x] polynomial as a packed little-endian coefficient bit array.
struct gf2poly {
    std::vector<std::uint64_t> words;
    std::size_t bits; // degree + 1 for nonzero polynomials
};

gf2poly gf2_mul(const gf2poly& a, const gf2poly& b) {
    gf2poly out{std::vector<std::uint64_t>(words_for(a.bits + b.bits - 1), 0),
                a.bits + b.bits - 1};
    for (std::size_t j = 0; j < a.words.size(); ++j) {
        std::uint64_t w = a.words[j];
        while (w != 0) {
            const unsigned bit = static_cast<unsigned>(std::countr_zero(w));
            w &= w - 1;
            xor_shifted(out.words, b.words, static_cast<unsigned>(j * kWordBits) + bit);
        }
    }
    mask_tail(out.words, out.bits);
    return out;
}

// Squaring over GF(2) just spreads the coefficients: bit i -> bit 2i.
std::uint64_t spread_half(std::uint64_t x) {
    x &= 0xFFFFFFFFull;
    x = (x | (x << 16)) & 0x0000FFFF0000FFFFull;
    x = (x | (x << 8)) & 0x00FF00FF00FF00FFull;
    x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0Full;
    x = (x | (x << 2)) & 0x3333333333333333ull;
    x = (x | (x << 1)) & 0x5555555555555555ull;
    return x;
}

gf2poly gf2_square(const gf2poly& a) {
    gf2poly out{std::vector<std::uint64_t>(words_for(2 * a.bits - 1), 0), 2 * a.bits - 1};
    for (std::size_t j = 0; j < a.words.size(); ++j) {
        if (2 * j < out.words.size()) out.words[2 * j] = spread_half(a.words[j]);
        if (2 * j + 1 < out.words.size()) out.words[2 * j + 1] = spread_half(a.words[j] >> 32);
    }
    mask_tail(out.words, out.bits);
    return out;
}

} // namespace

lattice_window row150_polynomial(std::uint64_t t) {
    gf2poly result{{1}, 1};       // 1
    gf2poly base{{0b111}, 3};     // 1 + x + x^2
    for (std::uint64_t e = t; e != 0; e >>= 1) {
        if (e & 1u) result = gf2_mul(result, base);
        if (e > 1) base = gf2_square(base);
    }
    return trimmed(std::move(result.words), -static_cast<std::int64_t>(t), result.bits);
}

} // namespace rule150
