#include "sk1/metacyclic.hpp"

#include <algorithm>
#include <string>

#include "sk1/abelian_group.hpp"
#include "sk1/arith.hpp"
#include "sk1/error.hpp"
#include "sk1/parallel.hpp"

namespace sk1 {

MetacyclicGroup::MetacyclicGroup(std::int64_t p, int n)
    : p_(p), n_(n), a_order_(checked_pow(p, n - 1)), r_(checked_pow(p, n - 2) + 1) {
  const std::int64_t r_inv = mod_floor(1 - checked_pow(p, n - 2), a_order_);
  conj_.resize(static_cast<std::size_t>(p));
  conj_[0] = 1;
  for (std::int64_t j = 1; j < p; ++j) {
    conj_[static_cast<std::size_t>(j)] =
        mul_mod(conj_[static_cast<std::size_t>(j - 1)], r_inv, a_order_);
  }
}

MetacyclicGroup MetacyclicGroup::make(std::int64_t p, int n) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw Error(ErrorCode::BadParams, std::to_string(p) + " is not an odd prime");
  }
  if (n < 3) {
    throw Error(ErrorCode::BadParams, "metacyclic groups need n >= 3, got " + std::to_string(n));
  }
  checked_pow(p, n);
  return MetacyclicGroup(p, n);
}

MElement MetacyclicGroup::element(std::int64_t i, std::int64_t j) const {
  return {mod_floor(i, a_order_), mod_floor(j, p_)};
}

MElement MetacyclicGroup::mul(const MElement& x, const MElement& y) const {
  // a^i1 b^j1 a^i2 b^j2 = a^{i1 + i2 r^{-j1}} b^{j1 + j2}
  const auto twisted = mul_mod(y.i, conj_[static_cast<std::size_t>(x.j)], a_order_);
  return {(x.i + twisted) % a_order_, (x.j + y.j) % p_};
}

MElement MetacyclicGroup::inverse(const MElement& x) const {
  // (a^i b^j)^-1 = a^{-i r^j} b^{-j}, and r^j = r^{-(p-j)} since r^p = 1.
  const std::int64_t back = (p_ - x.j) % p_;
  const auto i = mul_mod(x.i, conj_[static_cast<std::size_t>(back)], a_order_);
  return {mod_floor(-i, a_order_), back};
}

MElement MetacyclicGroup::pow(const MElement& x, std::int64_t k) const {
  MElement base = k < 0 ? inverse(x) : x;
  std::uint64_t e =
      k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  MElement acc = identity();
  while (e > 0) {
    if (e & 1u) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return acc;
}

std::int64_t MetacyclicGroup::element_order(const MElement& x) const {
  std::int64_t ord = 1;
  MElement y = x;
  while (y != identity()) {
    y = pow(y, p_);
    ord *= p_;
  }
  return ord;
}

std::vector<MElement> MetacyclicGroup::elements() const {
  if (order() > kMaxEnumeratedElements) {
    throw Error(ErrorCode::TooLarge,
                "group of order " + std::to_string(order()) + " is too large to enumerate");
  }
  std::vector<MElement> out;
  out.reserve(static_cast<std::size_t>(order()));
  for (std::int64_t i = 0; i < a_order_; ++i) {
    for (std::int64_t j = 0; j < p_; ++j) out.push_back({i, j});
  }
  return out;
}

std::vector<MElement> MetacyclicGroup::generated_subgroup(std::span<const MElement> gens) const {
  std::vector<char> seen(static_cast<std::size_t>(order()), 0);
  std::vector<MElement> frontier{identity()};
  seen[0] = 1;
  std::vector<MElement> out{identity()};
  while (!frontier.empty()) {
    const MElement x = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      const MElement y = mul(x, g);
      auto& flag = seen[index_of(y)];
      if (!flag) {
        flag = 1;
        out.push_back(y);
        frontier.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MElement> centralizer(const MetacyclicGroup& group, const MElement& h) {
  std::vector<MElement> out;
  for (const auto& g : group.elements()) {
    if (group.commute(g, h)) out.push_back(g);
  }
  return out;
}

CentralizerKind classify_centralizer(const MetacyclicGroup& group, const MElement& h) {
  if (h.i % group.prime() != 0) return CentralizerKind::Cyclic;
  return h.j == 0 ? CentralizerKind::Whole : CentralizerKind::A1B;
}

std::vector<MElement> centralizer_generators(const MetacyclicGroup& group, const MElement& h) {
  switch (classify_centralizer(group, h)) {
    case CentralizerKind::Whole:
      return {group.a(), group.b()};
    case CentralizerKind::A1B:
      return {group.element(group.prime(), 0), group.b()};
    case CentralizerKind::Cyclic:
      break;
  }
  return {h};
}

std::string MetaLabel::to_string() const {
  switch (kind) {
    case MetaKind::FullGroup:
      return "P";
    case MetaKind::A0:
      return "A0";
    case MetaKind::Q:
      return "Q(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case MetaKind::AB:
      return "AB(" + std::to_string(i) + ")";
    case MetaKind::B:
      return "B";
  }
  return "?";
}

std::vector<MElement> label_generators(const MetacyclicGroup& group, const MetaLabel& label) {
  const std::int64_t p = group.prime();
  switch (label.kind) {
    case MetaKind::FullGroup:
      return {group.a(), group.b()};
    case MetaKind::A0:
      return {group.a()};
    case MetaKind::Q:
      return {group.element(label.j * checked_pow(p, label.i), 1)};
    case MetaKind::AB:
      return {group.element(checked_pow(p, label.i), 0), group.b()};
    case MetaKind::B:
      return {group.b()};
  }
  return {};
}

MetaGeneticSubgroup::MetaGeneticSubgroup(const MetacyclicGroup& group, MetaLabel label)
    : label_(label), p_(group.prime()) {
  const auto gens = label_generators(group, label_);
  members_ = group.generated_subgroup(gens);
  member_flags_.assign(static_cast<std::size_t>(group.order()), 0);
  for (const auto& m : members_) member_flags_[index_of(m)] = 1;

  // x normalizes S iff it conjugates every generator of S into S.
  for (const auto& x : group.elements()) {
    const MElement x_inv = group.inverse(x);
    const bool normalizes = std::all_of(gens.begin(), gens.end(), [&](const MElement& s) {
      return contains(group.mul(group.mul(x, s), x_inv));
    });
    if (normalizes) ++normalizer_order_;
  }
  normal_ = normalizer_order_ == group.order();
  quotient_order_ = normalizer_order_ / order();
  if (!normal_) return;

  auto coset_order = [&](const MElement& g) {
    std::int64_t t = 1;
    for (MElement y = g; !contains(y); y = group.mul(y, g)) ++t;
    return t;
  };
  for (const auto& g : group.elements()) {
    if (coset_order(g) == quotient_order_) {
      generator_ = g;
      break;
    }
  }
  coset_label_.assign(static_cast<std::size_t>(group.order()), -1);
  MElement rep = group.identity();
  for (std::int64_t y = 0; y < quotient_order_; ++y) {
    for (const auto& s : members_) coset_label_[index_of(group.mul(rep, s))] = y;
    rep = group.mul(rep, generator_);
  }
}

const MElement& MetaGeneticSubgroup::quotient_generator() const {
  if (!normal_) {
    throw Error(ErrorCode::DomainViolation, label_.to_string() + " is not normal");
  }
  return generator_;
}

std::int64_t MetaGeneticSubgroup::quotient_dlog(const MElement& x) const {
  if (!normal_) {
    throw Error(ErrorCode::DomainViolation, label_.to_string() + " is not normal");
  }
  return coset_label_[index_of(x)];
}

std::vector<MetaGeneticSubgroup> genetic_basis_metacyclic(const MetacyclicGroup& group) {
  const int n = group.n();
  const auto p = static_cast<int>(group.prime());
  std::vector<MetaGeneticSubgroup> basis;
  basis.reserve(static_cast<std::size_t>((n - 2) * p + 3));
  basis.emplace_back(group, MetaLabel{MetaKind::FullGroup, 0, 0});
  basis.emplace_back(group, MetaLabel{MetaKind::A0, 0, 0});
  for (int i = 0; i <= n - 3; ++i) {
    for (int j = 1; j < p; ++j) basis.emplace_back(group, MetaLabel{MetaKind::Q, i, j});
    basis.emplace_back(group, MetaLabel{MetaKind::AB, i + 1, 0});
  }
  basis.emplace_back(group, MetaLabel{MetaKind::B, 0, 0});
  return basis;
}

std::int64_t psi_component(const MetacyclicGroup& group, const MetaGeneticSubgroup& subgroup,
                           const MElement& h, const MElement& g) {
  if (!group.commute(g, h)) {
    throw Error(ErrorCode::DomainViolation, "g does not centralize h");
  }
  if (subgroup.label().kind == MetaKind::FullGroup) {
    throw Error(ErrorCode::DomainViolation, "the full group has no psi component");
  }
  if (subgroup.normal()) return subgroup.contains(h) ? subgroup.quotient_dlog(g) : 0;

  const std::int64_t p = group.prime();
  const std::int64_t q = subgroup.quotient_order();
  const std::int64_t top = checked_pow(p, group.n() - 2);
  if (h == group.identity()) {
    const std::int64_t shift = (p - 1) * checked_pow(p, group.n() - 3) % q;
    return (g.i + g.j * shift) % q;
  }
  if (h.j != 0 && h.i % top == 0) return (g.i / p) % q;
  return 0;
}

RelationSet metacyclic_relation_matrix(const MetacyclicGroup& group,
                                       std::span<const MetaGeneticSubgroup> basis,
                                       std::int64_t max_order, unsigned threads) {
  if (group.order() > max_order) {
    throw Error(ErrorCode::TooLarge, "group order " + std::to_string(group.order()) +
                                         " exceeds the limit " + std::to_string(max_order));
  }
  std::vector<const MetaGeneticSubgroup*> columns;
  std::vector<std::int64_t> orders;
  for (const auto& s : basis) {
    if (s.label().kind == MetaKind::FullGroup) continue;
    columns.push_back(&s);
    orders.push_back(s.quotient_order());
  }
  RelationSet rel = seeded_relations(orders);

  const auto hs = group.elements();
  std::vector<std::vector<std::vector<std::int64_t>>> per_h(hs.size());
  parallel_for(hs.size(), threads, [&](std::size_t k) {
    for (const auto& g : centralizer_generators(group, hs[k])) {
      std::vector<std::int64_t> row;
      row.reserve(columns.size());
      for (const auto* s : columns) row.push_back(psi_component(group, *s, hs[k], g));
      per_h[k].push_back(std::move(row));
    }
  });
  std::vector<std::vector<std::int64_t>> rows;
  for (auto& block : per_h) {
    for (auto& r : block) rows.push_back(std::move(r));
  }
  append_unique_rows(rel, rows);
  return rel;
}

CyclicDecomposition sk1_metacyclic(const MetacyclicGroup& group, const PipelineOptions& options) {
  if (group.order() > options.max_order) {
    throw Error(ErrorCode::TooLarge, "group order " + std::to_string(group.order()) +
                                         " exceeds the limit " + std::to_string(options.max_order));
  }
  const auto basis = genetic_basis_metacyclic(group);
  const auto rel = metacyclic_relation_matrix(group, basis, options.max_order, options.threads);
  return reduce_relations(rel, group.prime(), options.route);
}

}  // namespace sk1
