#pragma once

#include <cstdint>

#include "erlab/errors.hpp"

namespace erlab {

// Exact unsigned arithmetic; throws instead of wrapping around.

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw arithmetic_overflow_error("64-bit addition overflow");
  return out;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw arithmetic_overflow_error("64-bit multiplication overflow");
  return out;
}

inline std::uint64_t checked_sub(std::uint64_t a, std::uint64_t b) {
  if (b > a) throw arithmetic_overflow_error("64-bit subtraction underflow");
  return a - b;
}

}  // namespace erlab
