#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sk1 {

using BigInt = mpz_class;

/// A finite abelian group as a multiset of cyclic orders > 1. The empty
/// multiset is the trivial group.
class CyclicDecomposition {
 public:
  CyclicDecomposition() = default;

  /// Divisors equal to 1 are dropped; zero or negative divisors throw
  /// Error{BadParams}.
  static CyclicDecomposition from_divisors(const std::vector<BigInt>& divisors);
  static CyclicDecomposition from_multiplicities(
      const std::vector<std::pair<std::int64_t, std::int64_t>>& counts);

  const std::map<BigInt, std::int64_t>& multiplicities() const noexcept { return counts_; }
  std::int64_t multiplicity(const BigInt& divisor) const;
  bool is_trivial() const noexcept { return counts_.empty(); }
  /// Number of cyclic factors.
  std::int64_t factor_count() const;
  BigInt order() const;
  /// Largest divisor (1 for the trivial group).
  BigInt exponent() const;

  /// "(C3)^8 x (C9)^2", divisors ascending; "0" when trivial.
  std::string to_human() const;
  /// One "divisor<TAB>multiplicity" line per divisor; empty when trivial.
  std::string to_tsv() const;

  /// Inverse of to_human(); throws Error{BadParams} on malformed text.
  static CyclicDecomposition parse_human(std::string_view text);
  /// Inverse of to_tsv(); throws Error{BadParams} on malformed text.
  static CyclicDecomposition parse_tsv(std::string_view text);

  friend bool operator==(const CyclicDecomposition&, const CyclicDecomposition&) = default;

 private:
  void add(const BigInt& divisor, std::int64_t count);

  std::map<BigInt, std::int64_t> counts_;
};

}  // namespace sk1
