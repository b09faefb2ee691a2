#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rule150 {

/// Thrown by parse_rule; position is the 0-based byte offset into the
/// rule text where the problem was detected.
class rule_parse_error : public std::runtime_error {
public:
    rule_parse_error(std::size_t position, const std::string& message)
        : std::runtime_error("rule parse error at offset " + std::to_string(position) +
                             ": " + message),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// One segment of an output string: the elementwise combination
/// alpha * a + beta * b of the carried strings. beta is 0 under arity 1.
struct segment {
    std::int64_t alpha = 0;
    std::int64_t beta = 0;

    bool operator==(const segment&) const = default;
};

/// A linear string-rewriting rule. Each generation maps the carried
/// strings (one or two, all of equal length) to new carried strings built
/// by concatenating segments; with two segments per output the lengths
/// double every generation.
///
/// The rule text grammar is
///
///   idents "->" combo ("," combo)*
///
/// where idents declares the carried strings (one or two identifiers,
/// [a-z]+) and each combo is a signed-integer-weighted sum of them, e.g.
///
///   a,b -> a,b,3a,2a+b      (rule 150, seeds a=(1), b=(3))
///   a -> a,2a               (Sierpinski / rule 90, seed a=(1))
///   a -> a,-a               (Thue-Morse, seed a=(1))
///
/// Whitespace is optional, coefficients are decimal with optional sign,
/// and a bare identifier means coefficient 1. The combos are split evenly
/// and in order among the carried strings: with arity 2 and four combos,
/// the first two form the new a and the last two the new b. Seeds are not
/// part of the text; they are attached with set_seeds().
struct replication_rule {
    unsigned arity = 0;
    std::vector<std::string> idents;
    std::vector<std::vector<segment>> outputs;   // arity entries
    std::vector<std::vector<std::int64_t>> seeds; // arity strings, equal length
};

replication_rule parse_rule(std::string_view text);

/// Attaches seed strings; throws std::domain_error unless there are
/// exactly arity of them, all non-empty and of equal length.
void set_seeds(replication_rule& rule, std::vector<std::vector<std::int64_t>> seeds);

/// The three rules above, seeds included.
const replication_rule& rule150_iteration();
const replication_rule& sierpinski_iteration();
const replication_rule& thue_morse_iteration();

/// Carried strings after `generation` applications of a rule. A value
/// type: apply_generation returns a fresh state. element_ops accumulates
/// the number of elements written so far, which is how the linear-work
/// property of the doubling iteration is asserted in tests.
struct generation_state {
    unsigned generation = 0;
    std::vector<std::vector<std::int64_t>> strings;
    std::uint64_t element_ops = 0;
};

generation_state initial_state(const replication_rule& rule);

generation_state apply_generation(const replication_rule& rule, const generation_state& state);

/// The carried strings joined in declaration order. For the rule 150
/// iteration at generation n this is X(0), ..., X(2^{n+1} - 1).
std::vector<std::int64_t> concatenated(const generation_state& state);

/// Activity values X(start_time), X(start_time + 1), ...
struct activity_string {
    std::vector<std::uint64_t> values;
    std::uint64_t start_time = 0;
};

/// X(0), ..., X(count - 1) for single-seeded rule 150, by doubling the
/// generation strings until they cover `count` values and truncating.
/// Total work and memory are O(count).
activity_string activity_series(std::uint64_t count);

/// X(t) in O(log t), via the spin-block product. Tests pin this to the
/// series route; the two must agree everywhere.
std::uint64_t activity_at(std::uint64_t t);

/// The partial self-similarity of the series: for t with spin sigma_2 = 0
/// and t >= 8, checks X(t) == X(t mod 4) * X(t div 8).
/// Throws std::domain_error if bit 2 of t is set or t < 8.
bool self_similarity_check(std::uint64_t t);

} // namespace rule150
