#include "sk1/genetic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "sk1/arith.hpp"
#include "sk1/error.hpp"

namespace sk1 {

GeneticSubgroupA::GeneticSubgroupA(const AbelianPGroup& group, CyclicHom hom)
    : hom_(std::move(hom)), exponent_(group.exponent()) {
  if (hom_.tuple.size() != group.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "hom tuple length differs from group rank");
  }
  const auto orders = group.orders();
  images_.resize(orders.size());
  std::int64_t g = exponent_;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    hom_.tuple[i] = mod_floor(hom_.tuple[i], orders[i]);
    images_[i] = mod_floor((exponent_ / orders[i]) * hom_.tuple[i], exponent_);
    g = std::gcd(g, images_[i]);
  }
  step_ = g;
  index_ = exponent_ / step_;
}

std::int64_t GeneticSubgroupA::evaluate(const Element& x) const {
  if (x.coords.size() != images_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "element dimension differs from group rank");
  }
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    acc = mod_floor(acc + images_[i] * mod_floor(x.coords[i], exponent_), exponent_);
  }
  return acc;
}

std::vector<std::int64_t> GeneticSubgroupA::kernel_key() const {
  std::vector<std::int64_t> key;
  key.reserve(images_.size() + 1);
  key.push_back(index_);
  if (index_ == 1) {
    key.resize(images_.size() + 1, 0);
    return key;
  }
  // gcd(w_i, index) == 1 overall, so some w_i is a unit.
  std::int64_t scale = 0;
  for (std::int64_t v : images_) {
    const std::int64_t w = (v / step_) % index_;
    if (scale == 0 && std::gcd(w, index_) == 1) scale = mod_inverse(w, index_);
  }
  for (std::int64_t v : images_) key.push_back(mod_floor((v / step_) * scale, index_));
  return key;
}

namespace {

std::int64_t checked_tuple_count(const AbelianPGroup& group, std::int64_t first_range) {
  std::int64_t count = first_range;
  const auto orders = group.orders();
  for (std::size_t i = 1; i < orders.size(); ++i) {
    if (__builtin_mul_overflow(count, orders[i], &count) || count > kMaxEnumeratedElements) {
      throw Error(ErrorCode::TooLarge, "too many hom tuples to enumerate");
    }
  }
  return count;
}

}  // namespace

std::vector<CyclicHom> enumerate_cyclic_homs(const AbelianPGroup& group) {
  const std::int64_t p = group.prime();
  const std::int64_t eg = group.exponent();
  const int log_eg = *exact_log(p, eg);

  std::vector<std::int64_t> first;
  for (int x = 0; x <= log_eg; ++x) first.push_back(checked_pow(p, x) % eg);

  const auto orders = group.orders();
  const std::int64_t total = checked_tuple_count(group, static_cast<std::int64_t>(first.size()));

  std::vector<CyclicHom> homs;
  homs.reserve(static_cast<std::size_t>(total));
  // Positions into each coordinate's range list.
  std::vector<std::int64_t> pos(orders.size(), 0);
  for (std::int64_t n = 0; n < total; ++n) {
    CyclicHom h;
    h.tuple.resize(orders.size());
    h.tuple[0] = first[static_cast<std::size_t>(pos[0])];
    for (std::size_t i = 1; i < orders.size(); ++i) h.tuple[i] = pos[i];
    homs.push_back(std::move(h));
    for (std::size_t i = orders.size(); i-- > 0;) {
      const std::int64_t range = i == 0 ? static_cast<std::int64_t>(first.size()) : orders[i];
      if (++pos[i] < range) break;
      pos[i] = 0;
    }
  }
  return homs;
}

std::vector<GeneticSubgroupA> genetic_basis_abelian(const AbelianPGroup& group) {
  std::map<std::vector<std::int64_t>, std::size_t> seen;
  std::vector<GeneticSubgroupA> basis;
  for (auto& hom : enumerate_cyclic_homs(group)) {
    GeneticSubgroupA s(group, std::move(hom));
    if (seen.emplace(s.kernel_key(), basis.size()).second) basis.push_back(std::move(s));
  }
  std::stable_sort(basis.begin(), basis.end(),
                   [](const GeneticSubgroupA& x, const GeneticSubgroupA& y) {
                     if (x.index() != y.index()) return x.index() < y.index();
                     return x.hom() < y.hom();
                   });
  return basis;
}

std::int64_t count_formula_two_gen(std::int64_t p, int n, int m) {
  if (p == 2 || !is_prime(p) || n < 1 || m < n) {
    throw Error(ErrorCode::BadParams, "count formula needs an odd prime p and 1 <= n <= m");
  }
  const std::int64_t pn = checked_pow(p, n);
  return pn * (m - n + 1) + 2 * exact_div(pn - 1, p - 1);
}

}  // namespace sk1
