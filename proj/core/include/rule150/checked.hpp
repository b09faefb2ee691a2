#pragma once

#include <cstdint>
#include <stdexcept>

namespace rule150 {

// All exact-integer arithmetic in this library is checked: an operation that
// would leave the 64-bit range throws std::overflow_error instead of wrapping.

[[noreturn]] inline void throw_overflow(const char* what) { throw std::overflow_error(what); }

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* what) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw_overflow(what);
    return r;
}

inline std::uint64_t checked_sub(std::uint64_t a, std::uint64_t b, const char* what) {
    std::uint64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw_overflow(what);
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw_overflow(what);
    return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b, const char* what) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw_overflow(what);
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* what) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw_overflow(what);
    return r;
}

// a * 2^k, checked.
inline std::uint64_t checked_shl(std::uint64_t a, unsigned k, const char* what) {
    if (a == 0 || k == 0) return a;
    if (k >= 64 || (a >> (64 - k)) != 0) throw_overflow(what);
    return a << k;
}

inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp, const char* what) {
    std::uint64_t r = 1;
    while (exp--) r = checked_mul(r, base, what);
    return r;
}

} // namespace rule150
