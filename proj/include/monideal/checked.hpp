#ifndef MONIDEAL_CHECKED_HPP
#define MONIDEAL_CHECKED_HPP

#include <cstdint>

#include "monideal/errors.hpp"

namespace monideal {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("exponent addition overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("exponent multiplication overflow");
    return r;
}

} // namespace monideal

#endif
