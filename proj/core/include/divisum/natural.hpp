#pragma once

#include <cstdint>
#include <stdexcept>

namespace divisum {

// Nonnegative 64-bit magnitude. Every sigma argument and every sigma value
// in this library is a Natural; arithmetic on them goes through the checked
// helpers below so overflow surfaces as an error instead of wrapping.
using Natural = std::uint64_t;

template <typename Int>
inline Int checked_add(Int a, Int b) {
    Int result;
    if (__builtin_add_overflow(a, b, &result))
        throw std::overflow_error("checked_add: result does not fit");
    return result;
}

template <typename Int>
inline Int checked_sub(Int a, Int b) {
    Int result;
    if (__builtin_sub_overflow(a, b, &result))
        throw std::overflow_error("checked_sub: result does not fit");
    return result;
}

template <typename Int>
inline Int checked_mul(Int a, Int b) {
    Int result;
    if (__builtin_mul_overflow(a, b, &result))
        throw std::overflow_error("checked_mul: result does not fit");
    return result;
}

}  // namespace divisum
