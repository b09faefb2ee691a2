#include <cctype>
#include <optional>

#include "rule150/replicate.hpp"

namespace rule150 {

namespace {

// Hand-rolled scanner over the rule text. Token set: identifiers [a-z]+,
// decimal integers, '+', '-', ',', '->'.
class scanner {
public:
    explicit scanner(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool consume_arrow() {
        skip_ws();
        if (pos_ + 1 < text_.size() && text_[pos_] == '-' && text_[pos_ + 1] == '>') {
            pos_ += 2;
            return true;
        }
        return false;
    }

    // Lookahead: does "->" start here?
    bool arrow_ahead() {
        skip_ws();
        return pos_ + 1 < text_.size() && text_[pos_] == '-' && text_[pos_ + 1] == '>';
    }

    std::optional<std::string> ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') ++pos_;
        if (pos_ == start) return std::nullopt;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::optional<std::int64_t> integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) return std::nullopt;
        std::int64_t v = 0;
        for (std::size_t i = start; i < pos_; ++i) {
            if (v > (INT64_MAX - (text_[i] - '0')) / 10)
                throw rule_parse_error(start, "coefficient out of range");
            v = v * 10 + (text_[i] - '0');
        }
        return v;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// combo := term (('+'|'-') term)*
// term  := ['+'|'-'] [integer] ident
segment parse_combo(scanner& sc, const std::vector<std::string>& idents) {
    segment combo;
    bool first = true;
    for (;;) {
        std::int64_t sign = 1;
        if (sc.arrow_ahead())
            throw rule_parse_error(sc.pos(), "unexpected '->'");
        if (sc.consume('-'))
            sign = -1;
        else if (sc.consume('+'))
            sign = 1;
        else if (!first)
            break;

        std::int64_t coeff = sc.integer().value_or(1);
        auto name = sc.ident();
        if (!name) throw rule_parse_error(sc.pos(), "expected identifier");
        std::size_t which = idents.size();
        for (std::size_t i = 0; i < idents.size(); ++i)
            if (idents[i] == *name) which = i;
        if (which == idents.size())
            throw rule_parse_error(sc.pos() - name->size(), "unknown identifier '" + *name + "'");

        std::int64_t weighted = sign * coeff;
        if (which == 0)
            combo.alpha += weighted;
        else
            combo.beta += weighted;
        first = false;

        if (sc.peek() != '+' && sc.peek() != '-') break;
        if (sc.arrow_ahead()) break;
    }
    return combo;
}

} // namespace

replication_rule parse_rule(std::string_view text) {
    scanner sc(text);
    replication_rule rule;

    // Declared carried strings.
    for (;;) {
        auto name = sc.ident();
        if (!name) throw rule_parse_error(sc.pos(), "expected identifier");
        for (const auto& seen : rule.idents)
            if (seen == *name)
                throw rule_parse_error(sc.pos() - name->size(),
                                       "duplicate identifier '" + *name + "'");
        rule.idents.push_back(*name);
        if (!sc.consume(',')) break;
        if (sc.arrow_ahead()) throw rule_parse_error(sc.pos(), "expected identifier");
    }
    if (rule.idents.size() > 2)
        throw rule_parse_error(sc.pos(), "arity must be 1 or 2");
    rule.arity = static_cast<unsigned>(rule.idents.size());

    if (!sc.consume_arrow()) throw rule_parse_error(sc.pos(), "expected '->'");

    std::vector<segment> combos;
    for (;;) {
        combos.push_back(parse_combo(sc, rule.idents));
        if (!sc.consume(',')) break;
    }
    if (!sc.at_end()) throw rule_parse_error(sc.pos(), "trailing input");

    if (combos.size() % rule.arity != 0)
        throw rule_parse_error(sc.pos(), "combo count must be a multiple of the arity");

    const std::size_t per_output = combos.size() / rule.arity;
    rule.outputs.resize(rule.arity);
    for (unsigned o = 0; o < rule.arity; ++o)
        rule.outputs[o].assign(combos.begin() + static_cast<std::ptrdiff_t>(o * per_output),
                               combos.begin() + static_cast<std::ptrdiff_t>((o + 1) * per_output));
    return rule;
}

void set_seeds(replication_rule& rule, std::vector<std::vector<std::int64_t>> seeds) {
    if (seeds.size() != rule.arity)
        throw std::domain_error("expected " + std::to_string(rule.arity) + " seed string(s), got " +
                                std::to_string(seeds.size()));
    for (const auto& s : seeds) {
        if (s.empty()) throw std::domain_error("seed strings must be non-empty");
        if (s.size() != seeds.front().size())
            throw std::domain_error("seed strings must have equal length");
    }
    rule.seeds = std::move(seeds);
}

} // namespace rule150
