#pragma once

#include <cstdint>
#include <vector>

namespace rule150 {

/// Dyadic block sum S_n = sum of X(t) over t in [0, 2^n - 1], by the
/// recurrence S_n = 2 S_{n-1} + 4 S_{n-2} with S_0 = 1, S_1 = 4.
/// Throws std::overflow_error past the 64-bit range (max n = 37), naming
/// the maximal supported index.
std::uint64_t block_sum(unsigned n);

/// Standard Fibonacci numbers with F_1 = F_2 = 1; n >= 1.
std::uint64_t fibonacci(unsigned n);

/// S_n via the closed form F_{n+2} * 2^n. Equal to block_sum(n) everywhere.
std::uint64_t block_sum_fib(unsigned n);

/// Detrend offset N_n: the per-block mean (S_n - S_{n-1}) / 2^{n-1}, an
/// exact integer division; N_0 = 1. First values 1, 3, 4, 7, 11, 18.
std::uint64_t detrend_offset(unsigned n);

/// X(t) - N_n over the dyadic block t in [2^{n-1}, 2^n - 1] (t = 0 uses
/// N_0). count must be a power of two; the result sums to exactly zero
/// over every dyadic block and hence over the whole range.
std::vector<std::int64_t> detrended_series(std::uint64_t count);

/// S_n / S_{n-1} as a real quotient; converges to 1 + sqrt(5), the top
/// eigenvalue of the recurrence matrix [[2,4],[1,0]]. Requires n >= 2.
double eigenvalue_ratio(unsigned n);

} // namespace rule150
