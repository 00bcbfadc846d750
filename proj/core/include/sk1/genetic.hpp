#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sk1/abelian_group.hpp"

namespace sk1 {

/// Homomorphism G -> Z/eg (eg = exponent of G) sending the i-th generator to
/// (eg / o_i) * tuple[i]. Its kernel is a subgroup with cyclic quotient.
struct CyclicHom {
  std::vector<std::int64_t> tuple;

  friend bool operator==(const CyclicHom&, const CyclicHom&) = default;
  friend auto operator<=>(const CyclicHom&, const CyclicHom&) = default;
};

/// A subgroup of an abelian p-group with cyclic quotient, stored as the kernel
/// of its defining CyclicHom.
///
/// The image of the hom is the cyclic subgroup of Z/eg generated by step();
/// the quotient G/S is identified with it, and the class mapping to step() is
/// the canonical quotient generator used by quotient_dlog.
class GeneticSubgroupA {
 public:
  GeneticSubgroupA(const AbelianPGroup& group, CyclicHom hom);

  const CyclicHom& hom() const noexcept { return hom_; }
  /// |G/S|, a power of p.
  std::int64_t index() const noexcept { return index_; }
  /// Minimal positive element of the image; index() * step() == exponent().
  std::int64_t step() const noexcept { return step_; }
  std::int64_t exponent() const noexcept { return exponent_; }
  /// Images of the distinguished generators in Z/eg.
  std::span<const std::int64_t> images() const noexcept { return images_; }

  /// phi(x) in [0, eg).
  std::int64_t evaluate(const Element& x) const;
  bool contains(const Element& x) const { return evaluate(x) == 0; }
  /// y in [0, index) with phi(x) == y * step (mod eg).
  std::int64_t quotient_dlog(const Element& x) const { return evaluate(x) / step_; }

  /// The element whose coordinates are the defining tuple.
  Element tuple_element() const { return Element{hom_.tuple}; }

  /// Canonical fingerprint of the kernel: equal keys iff equal subgroups.
  /// Layout: [index, w_1, ..., w_k] where w is the image vector divided by
  /// step and scaled so its first unit entry is 1 (mod index).
  std::vector<std::int64_t> kernel_key() const;

 private:
  CyclicHom hom_;
  std::vector<std::int64_t> images_;
  std::int64_t exponent_ = 1;
  std::int64_t step_ = 1;
  std::int64_t index_ = 1;
};

/// Cartesian product of the coordinate ranges: the first coordinate runs over
/// p^0, p^1, ..., p^L (mod eg, so the last is 0), the others over [0, o_i).
/// Enumeration order follows those lists, last coordinate fastest.
std::vector<CyclicHom> enumerate_cyclic_homs(const AbelianPGroup& group);

/// One subgroup per distinct kernel, keeping the first hom (in enumeration
/// order) that produced it. Sorted by (index, tuple); the full group comes
/// first.
std::vector<GeneticSubgroupA> genetic_basis_abelian(const AbelianPGroup& group);

/// Number of subgroups with cyclic quotient in C_{p^n} x C_{p^m}, 1 <= n <= m.
std::int64_t count_formula_two_gen(std::int64_t p, int n, int m);

inline std::int64_t quotient_dlog(const GeneticSubgroupA& subgroup, const Element& x) {
  return subgroup.quotient_dlog(x);
}

}  // namespace sk1
