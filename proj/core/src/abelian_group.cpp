#include "sk1/abelian_group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "sk1/arith.hpp"
#include "sk1/error.hpp"

namespace sk1 {

AbelianPGroup AbelianPGroup::make(std::int64_t p, std::vector<std::int64_t> orders) {
  require_odd_prime(p);
  if (orders.empty()) {
    throw Error(ErrorCode::NotPPower, "at least one cyclic factor is required");
  }
  for (std::int64_t o : orders) {
    const auto e = exact_log(p, o);
    if (!e || *e < 1) {
      throw Error(ErrorCode::NotPPower,
                  std::to_string(o) + " is not a positive power of " + std::to_string(p));
    }
  }
  std::sort(orders.begin(), orders.end(), std::greater<>());
  return AbelianPGroup(p, std::move(orders));
}

std::int64_t AbelianPGroup::order() const {
  std::int64_t total = 1;
  for (std::int64_t o : orders_) {
    if (__builtin_mul_overflow(total, o, &total)) {
      throw Error(ErrorCode::TooLarge, "group order does not fit in 64 bits");
    }
  }
  return total;
}

Element AbelianPGroup::identity() const {
  return Element{std::vector<std::int64_t>(orders_.size(), 0)};
}

Element AbelianPGroup::generator(std::size_t i) const {
  Element g = identity();
  g.coords.at(i) = 1;
  return g;
}

std::vector<Element> AbelianPGroup::generators() const {
  std::vector<Element> gens;
  gens.reserve(rank());
  for (std::size_t i = 0; i < rank(); ++i) gens.push_back(generator(i));
  return gens;
}

Element AbelianPGroup::element(std::vector<std::int64_t> coords) const {
  Element x{std::move(coords)};
  check_dimension(x);
  for (std::size_t i = 0; i < rank(); ++i) x.coords[i] = mod_floor(x.coords[i], orders_[i]);
  return x;
}

bool AbelianPGroup::is_valid(const Element& x) const noexcept {
  if (x.coords.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x.coords[i] < 0 || x.coords[i] >= orders_[i]) return false;
  }
  return true;
}

void AbelianPGroup::check_dimension(const Element& x) const {
  if (x.coords.size() != rank()) {
    throw Error(ErrorCode::DimensionMismatch, "element has " + std::to_string(x.coords.size()) +
                                                  " coordinates, group has " +
                                                  std::to_string(rank()) + " factors");
  }
}

Element AbelianPGroup::mul(const Element& x, const Element& y) const {
  check_dimension(x);
  check_dimension(y);
  Element z = identity();
  for (std::size_t i = 0; i < rank(); ++i) {
    z.coords[i] = mod_floor(x.coords[i] + y.coords[i], orders_[i]);
  }
  return z;
}

Element AbelianPGroup::inverse(const Element& x) const {
  check_dimension(x);
  Element z = identity();
  for (std::size_t i = 0; i < rank(); ++i) z.coords[i] = mod_floor(-x.coords[i], orders_[i]);
  return z;
}

Element AbelianPGroup::pow(const Element& x, std::int64_t k) const {
  check_dimension(x);
  Element z = identity();
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::int64_t o = orders_[i];
    z.coords[i] = mod_floor(mod_floor(x.coords[i], o) * mod_floor(k, o), o);
  }
  return z;
}

std::int64_t AbelianPGroup::element_order(const Element& x) const {
  check_dimension(x);
  std::int64_t result = 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::int64_t o = orders_[i];
    result = std::lcm(result, o / std::gcd(mod_floor(x.coords[i], o), o));
  }
  return result;
}

std::vector<Element> AbelianPGroup::enumerate_elements(std::int64_t max_elements) const {
  const std::int64_t limit = std::min(max_elements, kMaxEnumeratedElements);
  std::int64_t total = 0;
  try {
    total = order();
  } catch (const Error&) {
    total = limit + 1;
  }
  if (total > limit) {
    throw Error(ErrorCode::TooLarge, "group has more than " + std::to_string(limit) +
                                         " elements; exhaustive enumeration refused");
  }
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(total));
  Element x = identity();
  for (std::int64_t n = 0; n < total; ++n) {
    out.push_back(x);
    // Odometer increment, last coordinate fastest.
    for (std::size_t i = rank(); i-- > 0;) {
      if (++x.coords[i] < orders_[i]) break;
      x.coords[i] = 0;
    }
  }
  return out;
}

std::int64_t AbelianPGroup::index_of(const Element& x) const {
  check_dimension(x);
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    idx = idx * orders_[i] + mod_floor(x.coords[i], orders_[i]);
  return idx;
}

}  // namespace sk1
