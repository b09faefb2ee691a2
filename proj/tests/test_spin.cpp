#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "golden_activity.hpp"
#include "rule150/eca.hpp"
#include "rule150/spin.hpp"

using namespace rule150;

TEST_CASE("spin_decompose matches the binary expansion") {
    CHECK(spin_decompose(0).width() == 0);
    CHECK(spin_decompose(0).value() == 0);

    const spin_word five = spin_decompose(5);
    CHECK(five.width() == 3);
    CHECK(five.bits() == std::vector<std::uint8_t>{1, 0, 1});

    const spin_word w240 = spin_decompose(240);
    CHECK(w240.width() == 8);
    CHECK(w240.bits() == std::vector<std::uint8_t>{0, 0, 0, 0, 1, 1, 1, 1});

    // Virtual boundary digits read as zero.
    CHECK(five.digit(-1) == 0);
    CHECK(five.digit(3) == 0);
    CHECK(five.digit(2) == 1);
}

TEST_CASE("spin_decompose round-trips 10^6 random time indices") {
    std::mt19937_64 rng(0x150);
    std::uint64_t bad_round_trips = 0, leading_zeros = 0;
    for (int i = 0; i < 1000000; ++i) {
        // Vary the magnitude so small and large widths both get exercised.
        const std::uint64_t t = rng() >> (rng() % 64);
        const spin_word w = spin_decompose(t);
        if (w.value() != t) ++bad_round_trips;
        if (w.width() > 0 && w.digit(static_cast<std::int64_t>(w.width()) - 1) != 1)
            ++leading_zeros;
    }
    CHECK(bad_round_trips == 0);
    CHECK(leading_zeros == 0);
}

TEST_CASE("spin_blocks collects maximal runs of 1-digits") {
    CHECK(spin_blocks(spin_decompose(0)).counts.empty());

    const block_multiset b7 = spin_blocks(spin_decompose(7));
    CHECK(b7.counts == std::map<unsigned, unsigned>{{3, 1}});

    const block_multiset b5 = spin_blocks(spin_decompose(5));
    CHECK(b5.counts == std::map<unsigned, unsigned>{{1, 2}});

    // 240 = 11110000: one run of four.
    CHECK(spin_blocks(spin_decompose(240)).counts == std::map<unsigned, unsigned>{{4, 1}});
}

TEST_CASE("spin_blocks multiplicities account for every 1-digit") {
    std::mt19937_64 rng(0x151);
    for (int i = 0; i < 20000; ++i) {
        const std::uint64_t t = rng() >> (rng() % 64);
        const block_multiset blocks = spin_blocks(spin_decompose(t));
        std::uint64_t total = 0;
        for (const auto& [len, mult] : blocks.counts) {
            CHECK(len >= 1);
            CHECK(mult >= 1);
            total += std::uint64_t{len} * mult;
        }
        CHECK(total == static_cast<std::uint64_t>(std::popcount(t)));
    }
}

TEST_CASE("chi recurrence and closed form") {
    CHECK(chi(0) == 1);
    CHECK(chi(3) == 11);
    CHECK(chi(5) == 43);

    CHECK(chi_closed(0) == 1);
    CHECK(chi_closed(2) == 5);
    CHECK(chi_closed(4) == 21);

    for (unsigned n = 0; n <= 63; ++n) CHECK(chi(n) == chi_closed(n));

    CHECK_THROWS_AS(chi(64), std::overflow_error);
    CHECK_THROWS_AS(chi_closed(64), std::overflow_error);
    CHECK_THROWS_AS(chi_closed(200), std::overflow_error);
}

TEST_CASE("chi(n) equals the activity at t = 2^n - 1") {
    for (unsigned n = 0; n <= 20; ++n)
        CHECK(chi(n) == activity_closed_form((std::uint64_t{1} << n) - 1));
}

TEST_CASE("activity_closed_form reproduces the golden series") {
    CHECK(activity_closed_form(0) == 1);
    CHECK(activity_closed_form(5) == 9);
    CHECK(activity_closed_form(255) == 341);
    for (std::uint64_t t = 0; t < 256; ++t)
        CHECK(activity_closed_form(t) == testing::golden_activity(t));
}

TEST_CASE("activity is multiplicative across a separating zero digit") {
    std::mt19937_64 rng(0x152);
    int checked = 0;
    while (checked < 20000) {
        const std::uint64_t t = rng() >> (8 + rng() % 40);
        const unsigned k = static_cast<unsigned>(rng() % 48);
        if ((t >> k) & 1u) continue; // need sigma_k = 0 to bound independent blocks
        const std::uint64_t high = t >> (k + 1);
        const std::uint64_t low = t & ((std::uint64_t{1} << k) - 1);
        CHECK(activity_closed_form(t) ==
              activity_closed_form(high) * activity_closed_form(low));
        ++checked;
    }
}

TEST_CASE("rule90_activity is 2^popcount and matches the lattice oracle") {
    CHECK(rule90_activity(0) == 1);
    CHECK(rule90_activity(3) == 4);
    CHECK(rule90_activity(7) == 8);

    const auto simulated = simulate_activity(rule_number::rule90(), std::uint64_t{1} << 13);
    for (std::uint64_t t = 0; t < simulated.size(); ++t)
        CHECK(rule90_activity(t) == simulated[t]);

    CHECK_THROWS_AS(rule90_activity(~std::uint64_t{0}), std::overflow_error);
}

TEST_CASE("activity overflow is reported, never wrapped") {
    // 2^63 - 1 is a single run of 63 ones: X = chi(63), still representable.
    CHECK(activity_closed_form((std::uint64_t{1} << 63) - 1) == chi(63));
    // All 64 digits set: X = chi(64), past the 64-bit range.
    CHECK_THROWS_AS(activity_closed_form(~std::uint64_t{0}), std::overflow_error);
}
