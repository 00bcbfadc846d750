#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sk1 {

/// Hard cap on exhaustive element enumeration.
inline constexpr std::int64_t kMaxEnumeratedElements = 10'000'000;

/// Exponent vector with respect to the distinguished generators of an
/// AbelianPGroup; coords[i] is reduced modulo the i-th cyclic order.
struct Element {
  std::vector<std::int64_t> coords;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

/// A finite abelian p-group C_{o_1} x ... x C_{o_k} with o_1 >= ... >= o_k,
/// every o_i a positive power of the odd prime p.
class AbelianPGroup {
 public:
  /// Validates and normalizes (sorts orders descending). Throws
  /// Error{NonOddPrime} or Error{NotPPower}.
  static AbelianPGroup make(std::int64_t p, std::vector<std::int64_t> orders);

  std::int64_t prime() const noexcept { return prime_; }
  std::span<const std::int64_t> orders() const noexcept { return orders_; }
  std::size_t rank() const noexcept { return orders_.size(); }
  std::int64_t exponent() const noexcept { return orders_.front(); }
  /// Group order; throws Error{TooLarge} if it does not fit in int64.
  std::int64_t order() const;

  Element identity() const;
  /// Distinguished generator of the i-th cyclic factor.
  Element generator(std::size_t i) const;
  std::vector<Element> generators() const;

  /// Reduces arbitrary integer coordinates into canonical form.
  Element element(std::vector<std::int64_t> coords) const;

  bool is_valid(const Element& x) const noexcept;

  Element mul(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;
  Element pow(const Element& x, std::int64_t k) const;
  std::int64_t element_order(const Element& x) const;

  /// All elements, lexicographic in coords. Throws Error{TooLarge} above
  /// max_elements (never more than kMaxEnumeratedElements).
  std::vector<Element> enumerate_elements(std::int64_t max_elements = kMaxEnumeratedElements) const;

  /// Position of x in enumerate_elements() order (mixed radix).
  std::int64_t index_of(const Element& x) const;

 private:
  AbelianPGroup(std::int64_t p, std::vector<std::int64_t> orders)
      : prime_(p), orders_(std::move(orders)) {}

  void check_dimension(const Element& x) const;

  std::int64_t prime_;
  std::vector<std::int64_t> orders_;
};

/// Free-function form of AbelianPGroup::make.
inline AbelianPGroup make_group(std::int64_t p, std::vector<std::int64_t> orders) {
  return AbelianPGroup::make(p, std::move(orders));
}

}  // namespace sk1
