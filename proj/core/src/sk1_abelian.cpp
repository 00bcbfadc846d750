#include "sk1/sk1_abelian.hpp"

#include <string>

#include "sk1/error.hpp"
#include "sk1/parallel.hpp"

namespace sk1 {

TargetProduct TargetProduct::from_basis(std::span<const GeneticSubgroupA> basis) {
  TargetProduct t;
  for (const auto& s : basis) {
    if (s.index() > 1) t.columns.push_back({s, s.index()});
  }
  return t;
}

std::vector<std::int64_t> TargetProduct::orders() const {
  std::vector<std::int64_t> out;
  out.reserve(columns.size());
  for (const auto& c : columns) out.push_back(c.order);
  return out;
}

std::vector<std::int64_t> psi_row(const AbelianPGroup& group,
                                  std::span<const GeneticSubgroupA> basis, const Element& h,
                                  const Element& gen) {
  if (!group.is_valid(h) || !group.is_valid(gen)) {
    throw Error(ErrorCode::DimensionMismatch, "psi_row arguments are not elements of the group");
  }
  std::vector<std::int64_t> row;
  row.reserve(basis.size());
  for (const auto& s : basis) {
    if (s.index() == 1) continue;
    row.push_back(s.contains(h) ? s.quotient_dlog(gen) : 0);
  }
  return row;
}

RelationSet relation_matrix(const AbelianPGroup& group, std::span<const GeneticSubgroupA> basis,
                            Strategy strategy, std::int64_t max_order, unsigned threads) {
  const auto target = TargetProduct::from_basis(basis);
  RelationSet rel = seeded_relations(target.orders());

  std::vector<Element> hs;
  if (strategy == Strategy::Exhaustive) {
    hs = group.enumerate_elements(max_order);
  } else {
    // The tuple of a basis member, read as an element, generates the cyclic
    // subgroup dual to it; all generators of one cyclic subgroup give the
    // same psi_h.
    hs.reserve(basis.size());
    for (const auto& s : basis) hs.push_back(s.tuple_element());
  }

  const auto gens = group.generators();
  std::vector<std::vector<std::int64_t>> rows(hs.size() * gens.size());
  parallel_for(hs.size(), threads, [&](std::size_t i) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      rows[i * gens.size() + g] = psi_row(group, basis, hs[i], gens[g]);
    }
  });
  append_unique_rows(rel, rows);
  return rel;
}

CyclicDecomposition sk1(const AbelianPGroup& group, const PipelineOptions& options) {
  const auto basis = genetic_basis_abelian(group);
  const auto rel =
      relation_matrix(group, basis, options.strategy, options.max_order, options.threads);
  return reduce_relations(rel, group.prime(), options.route);
}

}  // namespace sk1
