#pragma once

// Small exact integer helpers shared by the group and formula modules.

#include <cstdint>
#include <optional>

namespace sk1 {

bool is_prime(std::int64_t value) noexcept;

/// base^exponent, throwing Error{TooLarge} if the result leaves int64.
std::int64_t checked_pow(std::int64_t base, int exponent);

/// e such that base^e == value, if value is an exact positive power of base.
std::optional<int> exact_log(std::int64_t base, std::int64_t value) noexcept;

/// Largest e with base^e dividing value; value must be nonzero.
int valuation(std::int64_t base, std::int64_t value) noexcept;

/// Representative of value in [0, modulus).
constexpr std::int64_t mod_floor(std::int64_t value, std::int64_t modulus) noexcept {
  const std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

/// value * factor mod modulus for operands in [0, modulus), without overflow.
std::int64_t mul_mod(std::int64_t value, std::int64_t factor, std::int64_t modulus) noexcept;

/// Inverse of a unit modulo modulus (extended Euclid). Precondition: gcd == 1.
std::int64_t mod_inverse(std::int64_t unit, std::int64_t modulus) noexcept;

/// numerator / denominator, throwing std::logic_error when the division is
/// not exact. Used for closed-form counts where inexactness means the
/// formula was mistyped, not that the caller erred.
std::int64_t exact_div(std::int64_t numerator, std::int64_t denominator);

/// Throws Error{NonOddPrime} unless p is an odd prime.
void require_odd_prime(std::int64_t p);

}  // namespace sk1
