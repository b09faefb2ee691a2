#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "golden_activity.hpp"
#include "rule150/replicate.hpp"
#include "rule150/spin.hpp"

using namespace rule150;

namespace {

std::vector<std::int64_t> run_rule(const replication_rule& rule, unsigned generations) {
    generation_state state = initial_state(rule);
    for (unsigned g = 0; g < generations; ++g) state = apply_generation(rule, state);
    return concatenated(state);
}

} // namespace

TEST_CASE("parse_rule accepts the three replication laws") {
    const replication_rule r150 = parse_rule("a,b -> a,b,3a,2a+b");
    CHECK(r150.arity == 2);
    REQUIRE(r150.outputs.size() == 2);
    CHECK(r150.outputs[0] == std::vector<segment>{{1, 0}, {0, 1}});
    CHECK(r150.outputs[1] == std::vector<segment>{{3, 0}, {2, 1}});

    const replication_rule sier = parse_rule("a -> a,2a");
    CHECK(sier.arity == 1);
    CHECK(sier.outputs[0] == std::vector<segment>{{1, 0}, {2, 0}});

    const replication_rule tm = parse_rule("a -> a,-a");
    CHECK(tm.arity == 1);
    CHECK(tm.outputs[0] == std::vector<segment>{{1, 0}, {-1, 0}});
}

TEST_CASE("parse_rule handles whitespace, signs and repeated terms") {
    const replication_rule r = parse_rule("  a , b ->  a+a ,  -2a + b , b-a , +b ");
    CHECK(r.arity == 2);
    CHECK(r.outputs[0] == std::vector<segment>{{2, 0}, {-2, 1}});
    CHECK(r.outputs[1] == std::vector<segment>{{-1, 1}, {0, 1}});
}

TEST_CASE("parse_rule reports errors with positions") {
    CHECK_THROWS_AS(parse_rule("a,b -> a,b,3a,2a+c"), rule_parse_error);
    CHECK_THROWS_AS(parse_rule("a,b,c -> a,b,c"), rule_parse_error);
    CHECK_THROWS_AS(parse_rule("a -> "), rule_parse_error);
    CHECK_THROWS_AS(parse_rule("a b"), rule_parse_error);
    CHECK_THROWS_AS(parse_rule("a -> a,b,3a"), rule_parse_error); // unknown ident b
    CHECK_THROWS_AS(parse_rule("a,b -> a,b,3a"), rule_parse_error); // 3 combos, arity 2
    CHECK_THROWS_AS(parse_rule("a -> a, 2"), rule_parse_error);
    CHECK_THROWS_AS(parse_rule("a,a -> a,a"), rule_parse_error);

    try {
        parse_rule("a,b -> a,b,3a,2a+c");
        FAIL("expected rule_parse_error");
    } catch (const rule_parse_error& e) {
        CHECK(e.position() == 17); // offset of 'c'
        CHECK(std::string(e.what()).find("17") != std::string::npos);
    }
}

TEST_CASE("set_seeds validates shape") {
    replication_rule rule = parse_rule("a,b -> a,b,3a,2a+b");
    CHECK_THROWS_AS(set_seeds(rule, {{1}}), std::domain_error);
    CHECK_THROWS_AS(set_seeds(rule, {{1}, {}}), std::domain_error);
    CHECK_THROWS_AS(set_seeds(rule, {{1}, {3, 4}}), std::domain_error);
    set_seeds(rule, {{1}, {3}});
    CHECK(rule.seeds == std::vector<std::vector<std::int64_t>>{{1}, {3}});
}

TEST_CASE("apply_generation doubles the rule 150 strings") {
    generation_state s0 = initial_state(rule150_iteration());
    CHECK(s0.generation == 0);
    CHECK(s0.strings == std::vector<std::vector<std::int64_t>>{{1}, {3}});

    const generation_state s1 = apply_generation(rule150_iteration(), s0);
    CHECK(s1.generation == 1);
    CHECK(s1.strings[0] == std::vector<std::int64_t>{1, 3});
    CHECK(s1.strings[1] == std::vector<std::int64_t>{3, 5});

    const generation_state s2 = apply_generation(rule150_iteration(), s1);
    CHECK(s2.strings[0] == std::vector<std::int64_t>{1, 3, 3, 5});
    CHECK(s2.strings[1] == std::vector<std::int64_t>{3, 9, 5, 11});
}

TEST_CASE("apply_generation on the Thue-Morse rule") {
    generation_state s = initial_state(thue_morse_iteration());
    s = apply_generation(thue_morse_iteration(), s);
    CHECK(concatenated(s) == std::vector<std::int64_t>{1, -1});
    s = apply_generation(thue_morse_iteration(), s);
    CHECK(concatenated(s) == std::vector<std::int64_t>{1, -1, -1, 1});
}

TEST_CASE("activity_series reproduces the golden values") {
    CHECK(activity_series(1).values == std::vector<std::uint64_t>{1});
    CHECK(activity_series(8).values == std::vector<std::uint64_t>{1, 3, 3, 5, 3, 9, 5, 11});

    const activity_string first16 = activity_series(16);
    for (std::uint64_t t = 0; t < 16; ++t)
        CHECK(first16.values[t] == testing::golden_activity(t));

    const activity_string full = activity_series(256);
    CHECK(full.start_time == 0);
    for (std::uint64_t t = 0; t < 256; ++t)
        CHECK(full.values[t] == testing::golden_activity(t));

    CHECK_THROWS_AS(activity_series(0), std::domain_error);
}

TEST_CASE("activity_series agrees with the closed form up to 2^16") {
    const activity_string series = activity_series(std::uint64_t{1} << 16);
    std::uint64_t mismatches = 0;
    for (std::uint64_t t = 0; t < series.values.size(); ++t)
        if (series.values[t] != activity_closed_form(t)) ++mismatches;
    CHECK(mismatches == 0);
}

TEST_CASE("series is prefix-stable under doubling") {
    for (const replication_rule* rule :
         {&rule150_iteration(), &sierpinski_iteration(), &thue_morse_iteration()}) {
        generation_state state = initial_state(*rule);
        std::vector<std::int64_t> prev = concatenated(state);
        for (unsigned g = 1; g <= 12; ++g) {
            state = apply_generation(*rule, state);
            const std::vector<std::int64_t> cur = concatenated(state);
            CHECK(cur.size() == prev.size() * 2);
            CHECK(std::equal(prev.begin(), prev.end(), cur.begin()));
            prev = cur;
        }
    }
}

TEST_CASE("variant rules match their popcount oracles") {
    const std::vector<std::int64_t> sier = run_rule(sierpinski_iteration(), 12);
    REQUIRE(sier.size() == (std::size_t{1} << 12));
    for (std::uint64_t t = 0; t < sier.size(); ++t) {
        CHECK(sier[t] == std::int64_t{1} << std::popcount(t));
        CHECK(static_cast<std::uint64_t>(sier[t]) == rule90_activity(t));
    }

    const std::vector<std::int64_t> tm = run_rule(thue_morse_iteration(), 12);
    for (std::uint64_t t = 0; t < tm.size(); ++t)
        CHECK(tm[t] == (std::popcount(t) % 2 == 0 ? 1 : -1));
}

TEST_CASE("parsing is insensitive to whitespace placement") {
    const replication_rule canonical = parse_rule("a,b -> a,b,3a,2a+b");
    std::mt19937_64 rng(0x153);
    const std::string tokens[] = {"a", ",", "b", "->", "a", ",", "b", ",",
                                  "3", "a", ",", "2", "a", "+", "b"};
    for (int trial = 0; trial < 200; ++trial) {
        std::string text;
        for (const std::string& tok : tokens) {
            for (std::uint64_t k = rng() % 3; k > 0; --k) text += ' ';
            text += tok;
        }
        const replication_rule r = parse_rule(text);
        CHECK(r.idents == canonical.idents);
        CHECK(r.outputs == canonical.outputs);
    }
}

TEST_CASE("activity_at matches the series and the golden spot values") {
    CHECK(activity_at(33) == 9);
    CHECK(activity_at(129) == 9);
    CHECK(activity_at(171) == 135);

    const activity_string series = activity_series(4096);
    for (std::uint64_t t = 0; t < 4096; ++t) CHECK(activity_at(t) == series.values[t]);
}

TEST_CASE("self-similarity identity") {
    CHECK(self_similarity_check(33));
    CHECK(self_similarity_check(8));
    CHECK(self_similarity_check(11));

    for (std::uint64_t t = 8; t < (std::uint64_t{1} << 14); ++t)
        if (((t >> 2) & 1u) == 0) CHECK(self_similarity_check(t));

    CHECK_THROWS_AS(self_similarity_check(12), std::domain_error); // sigma_2 = 1
    CHECK_THROWS_AS(self_similarity_check(4), std::domain_error);  // t < 8
}

TEST_CASE("doubling iteration does linear total work") {
    // Element writes are counted by the engine; reaching 2T values must
    // cost at most a fixed multiple of the final length.
    for (unsigned n = 4; n <= 16; ++n) {
        const std::uint64_t target = std::uint64_t{1} << n;
        generation_state state = initial_state(rule150_iteration());
        while (concatenated(state).size() < target)
            state = apply_generation(rule150_iteration(), state);
        const std::uint64_t produced = concatenated(state).size();
        CHECK(state.element_ops <= 2 * produced);
        CHECK(produced < 2 * target);
    }
}

TEST_CASE("generation overflow names the generation") {
    // Seed large enough that the 3a segment overflows 64-bit elements.
    replication_rule rule = parse_rule("a,b -> a,b,3a,2a+b");
    set_seeds(rule, {{std::int64_t{1} << 62}, {std::int64_t{1} << 62}});
    const generation_state s0 = initial_state(rule);
    CHECK_THROWS_WITH_AS(apply_generation(rule, s0), doctest::Contains("generation 1"),
                         std::overflow_error);
}
