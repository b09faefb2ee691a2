#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rule150 {

/// The three activity routes plus the polynomial row oracle, as injectable
/// series providers (each returns X(0..count-1)). Tests substitute broken
/// providers to exercise the mismatch reporting.
struct verify_methods {
    std::function<std::vector<std::uint64_t>(std::uint64_t)> iteration;
    std::function<std::vector<std::uint64_t>(std::uint64_t)> closed_form;
    std::function<std::vector<std::uint64_t>(std::uint64_t)> simulation;
    std::function<std::vector<std::uint64_t>(std::uint64_t)> polynomial;

    static verify_methods standard();
};

struct verify_options {
    std::uint64_t max_t = 1;         // iteration vs closed form for t < max_t
    std::uint64_t oracle_max_t = 1;  // both vs lattice simulation for t < oracle_max_t
    std::uint64_t poly_max_t = 0;    // vs polynomial-row popcount for t < poly_max_t
    bool self_similarity = true;     // X(8m+j) = X(j) X(m) wherever sigma_2 = 0
};

struct verify_mismatch {
    std::uint64_t t = 0;
    std::string what; // one line: the check that failed and every value involved
};

/// Cross-checks the methods pairwise; std::nullopt means everything agreed.
std::optional<verify_mismatch> cross_verify(const verify_options& options,
                                            const verify_methods& methods = verify_methods::standard());

} // namespace rule150
