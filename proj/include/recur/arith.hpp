#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "recur/error.hpp"

namespace recur {

/// Integer time unit. One tick is the base duration unit after decimal
/// normalization; all endpoints and durations are measured in ticks.
using Tick = std::int64_t;

inline Tick checked_add(Tick a, Tick b) {
    Tick r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("tick addition overflows: " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline Tick checked_sub(Tick a, Tick b) {
    Tick r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("tick subtraction overflows: " + std::to_string(a) + " - " + std::to_string(b));
    return r;
}

inline Tick checked_mul(Tick a, Tick b) {
    Tick r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("tick multiplication overflows: " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

/// Floor division (rounds toward negative infinity, unlike `/`).
constexpr Tick floor_div(Tick a, Tick b) noexcept {
    Tick q = a / b;
    Tick r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

/// Non-negative remainder matching floor_div.
constexpr Tick floor_mod(Tick a, Tick b) noexcept {
    return a - floor_div(a, b) * b;
}

/// lcm of two positive ticks with overflow checking.
inline Tick checked_lcm(Tick a, Tick b) {
    return checked_mul(a / std::gcd(a, b), b);
}

/// 10^k as a tick, overflow-checked.
inline Tick pow10_tick(unsigned k) {
    Tick f = 1;
    for (unsigned i = 0; i < k; ++i) f = checked_mul(f, 10);
    return f;
}

}  // namespace recur
