#pragma once

#include <cstdint>
#include <string>

#include "persista/core/errors.hpp"

namespace persista::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

// a + b * c
inline std::int64_t fma(std::int64_t a, std::int64_t b, std::int64_t c) { return add(a, mul(b, c)); }

} // namespace persista::checked
