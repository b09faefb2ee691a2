#pragma once

#include <cstdint>

namespace rule150::testing {

// Frozen golden values of the single-seeded rule 150 total activity
// X(0..255), indexed as kGoldenActivity[t % 16][t / 16]. Every activity
// route in the library must reproduce this table exactly.
inline constexpr std::uint64_t kGoldenActivity[16][16] = {
    {1, 3, 3, 5, 3, 9, 5, 11, 3, 9, 9, 15, 5, 15, 11, 21},
    {3, 9, 9, 15, 9, 27, 15, 33, 9, 27, 27, 45, 15, 45, 33, 63},
    {3, 9, 9, 15, 9, 27, 15, 33, 9, 27, 27, 45, 15, 45, 33, 63},
    {5, 15, 15, 25, 15, 45, 25, 55, 15, 45, 45, 75, 25, 75, 55, 105},
    {3, 9, 9, 15, 9, 27, 15, 33, 9, 27, 27, 45, 15, 45, 33, 63},
    {9, 27, 27, 45, 27, 81, 45, 99, 27, 81, 81, 135, 45, 135, 99, 189},
    {5, 15, 15, 25, 15, 45, 25, 55, 15, 45, 45, 75, 25, 75, 55, 105},
    {11, 33, 33, 55, 33, 99, 55, 121, 33, 99, 99, 165, 55, 165, 121, 231},
    {3, 5, 9, 11, 9, 15, 15, 21, 9, 15, 27, 33, 15, 25, 33, 43},
    {9, 15, 27, 33, 27, 45, 45, 63, 27, 45, 81, 99, 45, 75, 99, 129},
    {9, 15, 27, 33, 27, 45, 45, 63, 27, 45, 81, 99, 45, 75, 99, 129},
    {15, 25, 45, 55, 45, 75, 75, 105, 45, 75, 135, 165, 75, 125, 165, 215},
    {5, 11, 15, 21, 15, 33, 25, 43, 15, 33, 45, 63, 25, 55, 55, 85},
    {15, 33, 45, 63, 45, 99, 75, 129, 45, 99, 135, 189, 75, 165, 165, 255},
    {11, 21, 33, 43, 33, 63, 55, 85, 33, 63, 99, 129, 55, 105, 121, 171},
    {21, 43, 63, 85, 63, 129, 105, 171, 63, 129, 189, 255, 105, 215, 231, 341},
};

inline constexpr std::uint64_t golden_activity(std::uint64_t t) {
    return kGoldenActivity[t % 16][t / 16];
}

// Golden dyadic block sums S_0..S_17 (S_n = sum of X(t) for t < 2^n).
inline constexpr std::uint64_t kGoldenBlockSums[18] = {
    1,       4,       12,       40,       128,      416,       1344,      4352,      14080,
    45568,   147456,  477184,   1544192,  4997120,  16171008,  52330496,  169345024, 548012032,
};

} // namespace rule150::testing
