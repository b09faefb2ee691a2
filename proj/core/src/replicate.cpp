#include "rule150/replicate.hpp"

#include <stdexcept>

#include "rule150/checked.hpp"
#include "rule150/spin.hpp"

namespace rule150 {

namespace {

replication_rule make_named_rule(std::string_view text,
                                 std::vector<std::vector<std::int64_t>> seeds) {
    replication_rule rule = parse_rule(text);
    set_seeds(rule, std::move(seeds));
    return rule;
}

} // namespace

const replication_rule& rule150_iteration() {
    static const replication_rule rule = make_named_rule("a,b -> a,b,3a,2a+b", {{1}, {3}});
    return rule;
}

const replication_rule& sierpinski_iteration() {
    static const replication_rule rule = make_named_rule("a -> a,2a", {{1}});
    return rule;
}

const replication_rule& thue_morse_iteration() {
    static const replication_rule rule = make_named_rule("a -> a,-a", {{1}});
    return rule;
}

generation_state initial_state(const replication_rule& rule) {
    if (rule.seeds.size() != rule.arity)
        throw std::domain_error("rule has no seeds attached");
    generation_state state;
    state.strings = rule.seeds;
    return state;
}

generation_state apply_generation(const replication_rule& rule, const generation_state& state) {
    if (state.strings.size() != rule.arity)
        throw std::domain_error("state carries a different number of strings than the rule arity");
    const std::size_t len = state.strings.front().size();
    for (const auto& s : state.strings)
        if (s.size() != len) throw std::domain_error("carried strings must have equal length");

    generation_state next;
    next.generation = state.generation + 1;
    next.element_ops = state.element_ops;
    next.strings.resize(rule.arity);

    const std::vector<std::int64_t>& a = state.strings[0];
    const std::vector<std::int64_t>* b = rule.arity == 2 ? &state.strings[1] : nullptr;

    try {
        const char* const what = "string element exceeds the 64-bit exact range";
        for (unsigned o = 0; o < rule.arity; ++o) {
            const auto& segments = rule.outputs[o];
            std::vector<std::int64_t>& out = next.strings[o];
            out.reserve(segments.size() * len);
            for (const segment& seg : segments) {
                for (std::size_t i = 0; i < len; ++i) {
                    std::int64_t v = checked_mul(seg.alpha, a[i], what);
                    if (b != nullptr && seg.beta != 0)
                        v = checked_add(v, checked_mul(seg.beta, (*b)[i], what), what);
                    out.push_back(v);
                }
            }
            next.element_ops += out.size();
        }
    } catch (const std::overflow_error&) {
        throw_overflow(("string element at generation " + std::to_string(next.generation) +
                        " exceeds the 64-bit exact range")
                           .c_str());
    }
    return next;
}

std::vector<std::int64_t> concatenated(const generation_state& state) {
    std::vector<std::int64_t> all;
    std::size_t total = 0;
    for (const auto& s : state.strings) total += s.size();
    all.reserve(total);
    for (const auto& s : state.strings) all.insert(all.end(), s.begin(), s.end());
    return all;
}

activity_string activity_series(std::uint64_t count) {
    if (count == 0) throw std::domain_error("activity_series requires count >= 1");

    generation_state state = initial_state(rule150_iteration());
    auto covered = [&state] {
        std::uint64_t n = 0;
        for (const auto& s : state.strings) n += s.size();
        return n;
    };
    while (covered() < count) state = apply_generation(rule150_iteration(), state);

    const std::vector<std::int64_t> series = concatenated(state);
    activity_string out;
    out.values.reserve(count);
    for (std::uint64_t t = 0; t < count; ++t) {
        const std::int64_t v = series[t];
        if (v <= 0) throw std::logic_error("rule 150 activity must be positive");
        out.values.push_back(static_cast<std::uint64_t>(v));
    }
    return out;
}

std::uint64_t activity_at(std::uint64_t t) { return activity_closed_form(t); }

bool self_similarity_check(std::uint64_t t) {
    if (t < 8) throw std::domain_error("self_similarity_check requires t >= 8");
    if ((t >> 2) & 1u)
        throw std::domain_error("self_similarity_check requires spin sigma_2 = 0 (bit 2 of t clear)");
    const std::uint64_t lhs = activity_at(t);
    const std::uint64_t rhs = checked_mul(activity_at(t & 3u), activity_at(t >> 3),
                                          "self-similarity product exceeds the 64-bit exact range");
    return lhs == rhs;
}

} // namespace rule150
