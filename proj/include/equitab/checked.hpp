#pragma once

#include <cstdint>

#include "equitab/error.hpp"

namespace equitab {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Resource, "coefficient overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Resource, "coefficient overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Resource, "coefficient overflow in multiplication");
    return r;
}

}  // namespace equitab
