#include "sk1/arith.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "sk1/error.hpp"

namespace sk1 {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonOddPrime:
      return "NonOddPrime";
    case ErrorCode::NotPPower:
      return "NotPPower";
    case ErrorCode::DimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::TooLarge:
      return "TooLarge";
    case ErrorCode::BadParams:
      return "BadParams";
    case ErrorCode::InfiniteCokernel:
      return "InfiniteCokernel";
    case ErrorCode::DomainViolation:
      return "DomainViolation";
  }
  return "Unknown";
}

bool is_prime(std::int64_t value) noexcept {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::int64_t d = 3; d <= value / d; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

std::int64_t checked_pow(std::int64_t base, int exponent) {
  if (exponent < 0) throw Error(ErrorCode::BadParams, "negative exponent");
  std::int64_t result = 1;
  for (int k = 0; k < exponent; ++k) {
    if (__builtin_mul_overflow(result, base, &result)) {
      throw Error(ErrorCode::TooLarge, std::to_string(base) + "^" + std::to_string(exponent) +
                                           " does not fit in 64 bits");
    }
  }
  return result;
}

std::optional<int> exact_log(std::int64_t base, std::int64_t value) noexcept {
  if (base < 2 || value < 1) return std::nullopt;
  int e = 0;
  while (value % base == 0) {
    value /= base;
    ++e;
  }
  if (value != 1) return std::nullopt;
  return e;
}

int valuation(std::int64_t base, std::int64_t value) noexcept {
  int e = 0;
  while (value != 0 && value % base == 0) {
    value /= base;
    ++e;
  }
  return e;
}

std::int64_t mul_mod(std::int64_t value, std::int64_t factor, std::int64_t modulus) noexcept {
  __extension__ using Wide = __int128;
  return static_cast<std::int64_t>(static_cast<Wide>(value) * factor % modulus);
}

std::int64_t mod_inverse(std::int64_t unit, std::int64_t modulus) noexcept {
  std::int64_t old_r = mod_floor(unit, modulus), r = modulus;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  return mod_floor(old_s, modulus);
}

std::int64_t exact_div(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0 || numerator % denominator != 0) {
    throw std::logic_error("inexact division " + std::to_string(numerator) + " / " +
                           std::to_string(denominator));
  }
  return numerator / denominator;
}

void require_odd_prime(std::int64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw Error(ErrorCode::NonOddPrime, std::to_string(p) + " is not an odd prime");
  }
}

}  // namespace sk1
