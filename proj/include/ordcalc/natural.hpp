#pragma once

#include <cstdint>

#include "ordcalc/errors.hpp"

namespace ordcalc {

// Coefficients, exponents and scalars are semantically unbounded naturals.
// They are carried in 64 bits; any operation that would wrap reports an
// OverflowError instead of silently truncating.
using Nat = std::uint64_t;

inline Nat checked_add(Nat a, Nat b) {
    Nat r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("natural addition overflows");
    return r;
}

inline Nat checked_mul(Nat a, Nat b) {
    Nat r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("natural multiplication overflows");
    return r;
}

}  // namespace ordcalc
