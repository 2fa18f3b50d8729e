#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace hts {

// Raised when a degree or exponent computation leaves the 64-bit range.
struct OverflowError : std::runtime_error {
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a requested window exceeds the configured caps.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Resource caps for the enumeration-heavy entry points. The CLI fills these
// from environment overrides; the defaults are sized for interactive use.
struct Limits {
  std::int64_t max_d = 5000;          // largest internal degree per request
  std::int64_t max_ambient = 200000;  // largest per-bidegree basis
  std::int64_t max_generators = 512;  // candidate generators per enumeration
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in degree arithmetic");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in degree arithmetic");
  return r;
}

// 2^k as a signed 64-bit value.
inline std::int64_t pow2(int k) {
  if (k < 0 || k > 62)
    throw OverflowError("2^" + std::to_string(k) + " out of 64-bit range");
  return std::int64_t{1} << k;
}

// 2^t - 1; t = 63 is exactly the signed maximum.
inline std::int64_t mersenne(int t) {
  if (t < 1 || t > 63) throw OverflowError("2^" + std::to_string(t) + " - 1 out of 64-bit range");
  if (t == 63) return std::numeric_limits<std::int64_t>::max();
  return pow2(t) - 1;
}

}  // namespace hts
