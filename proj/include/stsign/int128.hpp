// 128-bit integer helpers: decimal I/O and checked arithmetic.
//
// a(p) for the weight-12 eta-product form grows like p^(11/2), which
// overflows int64 already near p ~ 2800; everything that stores raw
// Fourier coefficients uses __int128 and goes through these helpers.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stsign {

using int128 = __int128;
using uint128 = unsigned __int128;

inline constexpr int128 INT128_MAX_VALUE =
    static_cast<int128>((~uint128{0}) >> 1);
inline constexpr int128 INT128_MIN_VALUE = -INT128_MAX_VALUE - 1;

inline std::string to_string(int128 x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    uint128 u = neg ? uint128(0) - uint128(x) : uint128(x);
    std::string s;
    while (u) {
        s += char('0' + int(u % 10));
        u /= 10;
    }
    if (neg) s += '-';
    return std::string(s.rbegin(), s.rend());
}

inline int128 int128_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("bare sign in integer literal");
    uint128 u = 0;
    const uint128 limit = uint128(INT128_MAX_VALUE) + (neg ? 1 : 0);
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9')
            throw std::invalid_argument("bad digit in integer literal: " + s);
        uint128 d = uint128(c - '0');
        if (u > (limit - d) / 10)
            throw std::overflow_error("integer literal exceeds 128 bits: " + s);
        u = u * 10 + d;
    }
    if (neg) {
        if (u == limit) return INT128_MIN_VALUE;
        return -static_cast<int128>(u);
    }
    return static_cast<int128>(u);
}

// Checked ops: throw instead of wrapping.
inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("int128 addition overflow");
    return r;
}

inline int128 checked_sub(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("int128 subtraction overflow");
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("int128 multiplication overflow");
    return r;
}

inline int128 abs128(int128 x) { return x < 0 ? -x : x; }

}  // namespace stsign
