#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "nct/errors.hpp"

namespace nct {

// 128-bit signed integers with explicit overflow errors. No silent wraparound:
// every arithmetic path that could leave the range throws OverflowError.
using int128 = __int128;
using uint128 = unsigned __int128;

inline constexpr int128 int128_min() {
    return static_cast<int128>(static_cast<uint128>(1) << 127);
}

inline constexpr int128 int128_max() {
    return ~int128_min();
}

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflows 128 bits");
    return r;
}

inline int128 checked_sub(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer subtraction overflows 128 bits");
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflows 128 bits");
    return r;
}

inline int128 checked_neg(int128 a) {
    if (a == int128_min()) throw OverflowError("integer negation overflows 128 bits");
    return -a;
}

inline int128 abs128(int128 a) {
    if (a == int128_min()) throw OverflowError("integer magnitude overflows 128 bits");
    return a < 0 ? -a : a;
}

inline uint128 umag(int128 a) {
    // magnitude without the int128_min pitfall
    return a < 0 ? static_cast<uint128>(0) - static_cast<uint128>(a) : static_cast<uint128>(a);
}

// gcd over magnitudes, result nonnegative; gcd(0, 0) = 0. Falls into a
// 64-bit Euclid loop as soon as both operands fit, which is the hot case.
inline int128 gcd128(int128 a, int128 b) {
    uint128 x = umag(a);
    uint128 y = umag(b);
    while (y != 0) {
        if (x <= std::numeric_limits<std::uint64_t>::max() &&
            y <= std::numeric_limits<std::uint64_t>::max()) {
            std::uint64_t u = static_cast<std::uint64_t>(x);
            std::uint64_t v = static_cast<std::uint64_t>(y);
            while (v != 0) {
                std::uint64_t t = u % v;
                u = v;
                v = t;
            }
            return static_cast<int128>(u);
        }
        uint128 t = x % y;
        x = y;
        y = t;
    }
    return static_cast<int128>(x);
}

inline std::int64_t to_int64_checked(int128 v) {
    if (v > static_cast<int128>(std::numeric_limits<std::int64_t>::max()) ||
        v < static_cast<int128>(std::numeric_limits<std::int64_t>::min()))
        throw OverflowError("value does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

inline std::string to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    uint128 m = umag(v);
    std::string digits;
    while (m != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
        m /= 10;
    }
    if (neg) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

}  // namespace nct
