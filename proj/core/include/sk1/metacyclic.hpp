#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sk1/decomposition.hpp"
#include "sk1/relations.hpp"

namespace sk1 {

/// a^i b^j in normal form: i mod p^{n-1}, j mod p.
struct MElement {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend bool operator==(const MElement&, const MElement&) = default;
  friend auto operator<=>(const MElement&, const MElement&) = default;
};

/// M_n(p) = < a, b | a^{p^{n-1}} = b^p = 1, b^-1 a b = a^r >, r = p^{n-2} + 1,
/// for an odd prime p and n >= 3.
class MetacyclicGroup {
 public:
  /// Throws Error{BadParams} for n < 3 or p not an odd prime.
  static MetacyclicGroup make(std::int64_t p, int n);

  std::int64_t prime() const noexcept { return p_; }
  int n() const noexcept { return n_; }
  /// p^{n-1}, the order of a.
  std::int64_t a_order() const noexcept { return a_order_; }
  std::int64_t twist() const noexcept { return r_; }
  std::int64_t order() const noexcept { return a_order_ * p_; }

  MElement identity() const noexcept { return {}; }
  MElement a() const noexcept { return {1, 0}; }
  MElement b() const noexcept { return {0, 1}; }
  MElement element(std::int64_t i, std::int64_t j) const;

  MElement mul(const MElement& x, const MElement& y) const;
  MElement inverse(const MElement& x) const;
  MElement pow(const MElement& x, std::int64_t k) const;
  std::int64_t element_order(const MElement& x) const;
  bool commute(const MElement& x, const MElement& y) const { return mul(x, y) == mul(y, x); }

  /// Dense index i * p + j, matching the (i, j) lexicographic order.
  std::size_t index_of(const MElement& x) const noexcept {
    return static_cast<std::size_t>(x.i * p_ + x.j);
  }
  MElement element_at(std::size_t index) const noexcept {
    const auto k = static_cast<std::int64_t>(index);
    return {k / p_, k % p_};
  }
  /// All elements in index order. Throws Error{TooLarge} above
  /// kMaxEnumeratedElements.
  std::vector<MElement> elements() const;

  /// Subgroup generated by gens, sorted by index.
  std::vector<MElement> generated_subgroup(std::span<const MElement> gens) const;

 private:
  MetacyclicGroup(std::int64_t p, int n);

  std::int64_t p_;
  int n_;
  std::int64_t a_order_;
  std::int64_t r_;
  // b^j a^k = a^{k * conj_[j]} b^j, conj_[j] = r^{-j} mod p^{n-1}.
  std::vector<std::int64_t> conj_;
};

inline MetacyclicGroup make_metacyclic(std::int64_t p, int n) {
  return MetacyclicGroup::make(p, n);
}

/// Brute-force centralizer, sorted by index.
std::vector<MElement> centralizer(const MetacyclicGroup& group, const MElement& h);

enum class CentralizerKind {
  Whole,   // h in A_1 = <a^p>, the center
  A1B,     // h in <a^p, b> but not in A_1
  Cyclic,  // otherwise; the centralizer is <h>
};

CentralizerKind classify_centralizer(const MetacyclicGroup& group, const MElement& h);

/// {a, b}, {a^p, b} or {h} according to classify_centralizer.
std::vector<MElement> centralizer_generators(const MetacyclicGroup& group, const MElement& h);

enum class MetaKind { FullGroup, A0, Q, AB, B };

/// Names a basis member: A0 = <a>, Q(i,j) = <a^{j p^i} b>, AB(i) = <a^{p^i}, b>,
/// B = <b>.
struct MetaLabel {
  MetaKind kind = MetaKind::FullGroup;
  int i = 0;
  int j = 0;

  std::string to_string() const;
  friend bool operator==(const MetaLabel&, const MetaLabel&) = default;
};

class MetaGeneticSubgroup {
 public:
  MetaGeneticSubgroup(const MetacyclicGroup& group, MetaLabel label);

  const MetaLabel& label() const noexcept { return label_; }
  const std::vector<MElement>& members() const noexcept { return members_; }
  std::int64_t order() const noexcept { return static_cast<std::int64_t>(members_.size()); }
  bool contains(const MElement& x) const { return member_flags_[index_of(x)] != 0; }
  bool normal() const noexcept { return normal_; }
  /// |N_P(S) / S|, from the brute-force normalizer.
  std::int64_t quotient_order() const noexcept { return quotient_order_; }
  std::int64_t normalizer_order() const noexcept { return normalizer_order_; }

  /// For normal S: the least element (index order) whose coset has order
  /// quotient_order().
  const MElement& quotient_generator() const;
  /// For normal S: y in [0, quotient_order) with x S = (generator S)^y.
  /// Throws Error{DomainViolation} when S is not normal.
  std::int64_t quotient_dlog(const MElement& x) const;

 private:
  std::size_t index_of(const MElement& x) const noexcept {
    return static_cast<std::size_t>(x.i * p_ + x.j);
  }

  MetaLabel label_;
  std::int64_t p_;
  std::vector<MElement> members_;
  std::vector<char> member_flags_;
  bool normal_ = false;
  std::int64_t normalizer_order_ = 0;
  std::int64_t quotient_order_ = 1;
  MElement generator_;
  std::vector<std::int64_t> coset_label_;
};

/// Generators of the labelled subgroup.
std::vector<MElement> label_generators(const MetacyclicGroup& group, const MetaLabel& label);

/// [FullGroup, A0, Q(0,1..p-1), AB(1), Q(1,1..p-1), AB(2), ..., Q(n-3,.),
/// AB(n-2), B]; (n-2)p + 3 members.
std::vector<MetaGeneticSubgroup> genetic_basis_metacyclic(const MetacyclicGroup& group);

/// Exponent of the N_P(S)/S component of psi_h(g). g must commute with h
/// (Error{DomainViolation} otherwise) and S must not be the full group.
///
/// Normal S: quotient_dlog(g) if h is in S, else 0.
/// S = B, quotient generated by the class of a^p:
///   h = 1:                      i + j (p-1) p^{n-3}  for g = a^i b^j
///   <h> conjugate to B:         i / p                 for g = a^i b^j in A_1 B
///   any other h:                0
std::int64_t psi_component(const MetacyclicGroup& group, const MetaGeneticSubgroup& subgroup,
                           const MElement& h, const MElement& g);

/// Diagonal seeds plus psi rows for every h and every centralizer generator.
/// Throws Error{TooLarge} when |G| exceeds max_order.
RelationSet metacyclic_relation_matrix(const MetacyclicGroup& group,
                                       std::span<const MetaGeneticSubgroup> basis,
                                       std::int64_t max_order = kDefaultMaxOrder,
                                       unsigned threads = 0);

/// SK1(Z M_n(p)). options.strategy is ignored: every h is used.
CyclicDecomposition sk1_metacyclic(const MetacyclicGroup& group,
                                   const PipelineOptions& options = {});

}  // namespace sk1
