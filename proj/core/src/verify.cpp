#include "rule150/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "rule150/checked.hpp"
#include "rule150/eca.hpp"
#include "rule150/replicate.hpp"
#include "rule150/spin.hpp"

namespace rule150 {

verify_methods verify_methods::standard() {
    verify_methods m;
    m.iteration = [](std::uint64_t count) { return activity_series(count).values; };
    m.closed_form = [](std::uint64_t count) {
        std::vector<std::uint64_t> v;
        v.reserve(count);
        for (std::uint64_t t = 0; t < count; ++t) v.push_back(activity_closed_form(t));
        return v;
    };
    m.simulation = [](std::uint64_t count) {
        return simulate_activity(rule_number::rule150(), count);
    };
    m.polynomial = [](std::uint64_t count) {
        std::vector<std::uint64_t> v;
        v.reserve(count);
        for (std::uint64_t t = 0; t < count; ++t) v.push_back(row150_polynomial(t).activity());
        return v;
    };
    return m;
}

std::optional<verify_mismatch> cross_verify(const verify_options& options,
                                            const verify_methods& methods) {
    if (options.max_t == 0) throw std::domain_error("verify requires max_t >= 1");
    if (options.oracle_max_t > options.max_t)
        throw std::domain_error("oracle_max_t must not exceed max_t");

    const auto iter = methods.iteration(options.max_t);
    const auto closed = methods.closed_form(options.max_t);
    for (std::uint64_t t = 0; t < options.max_t; ++t) {
        if (iter[t] != closed[t])
            return verify_mismatch{t, "iteration=" + std::to_string(iter[t]) +
                                          " closed=" + std::to_string(closed[t])};
    }

    if (options.oracle_max_t > 0) {
        const auto sim = methods.simulation(options.oracle_max_t);
        for (std::uint64_t t = 0; t < options.oracle_max_t; ++t) {
            if (sim[t] != closed[t])
                return verify_mismatch{t, "simulation=" + std::to_string(sim[t]) +
                                              " iteration=" + std::to_string(iter[t]) +
                                              " closed=" + std::to_string(closed[t])};
        }
    }

    const std::uint64_t poly_n = std::min(options.poly_max_t, options.max_t);
    if (poly_n > 0) {
        const auto poly = methods.polynomial(poly_n);
        for (std::uint64_t t = 0; t < poly_n; ++t) {
            if (poly[t] != closed[t])
                return verify_mismatch{t, "polynomial=" + std::to_string(poly[t]) +
                                              " iteration=" + std::to_string(iter[t]) +
                                              " closed=" + std::to_string(closed[t])};
        }
    }

    if (options.self_similarity) {
        for (std::uint64_t t = 8; t < options.max_t; ++t) {
            if ((t >> 2) & 1u) continue;
            const std::uint64_t lhs = closed[t];
            const std::uint64_t rhs =
                checked_mul(closed[t & 3u], closed[t >> 3],
                            "self-similarity product exceeds the 64-bit exact range");
            if (lhs != rhs)
                return verify_mismatch{t, "self-similarity X(t)=" + std::to_string(lhs) +
                                              " X(t mod 4)*X(t div 8)=" + std::to_string(rhs)};
        }
    }

    return std::nullopt;
}

} // namespace rule150
