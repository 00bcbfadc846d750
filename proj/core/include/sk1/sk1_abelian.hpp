#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sk1/abelian_group.hpp"
#include "sk1/genetic.hpp"
#include "sk1/relations.hpp"

namespace sk1 {

/// One column of T = prod G/S over the genetic subgroups S != G.
struct TargetColumn {
  GeneticSubgroupA subgroup;
  std::int64_t order;  // |G/S|
};

/// Columns follow the genetic basis order with the full group removed.
struct TargetProduct {
  std::vector<TargetColumn> columns;

  static TargetProduct from_basis(std::span<const GeneticSubgroupA> basis);
  std::vector<std::int64_t> orders() const;
};

/// psi_h(gen) as one integer per T-column: the quotient discrete log of gen
/// when h lies in that column's subgroup, 0 otherwise. Basis members of
/// index 1 do not get a column.
std::vector<std::int64_t> psi_row(const AbelianPGroup& group,
                                  std::span<const GeneticSubgroupA> basis, const Element& h,
                                  const Element& gen);

/// Diagonal seed rows followed by psi rows for every chosen h and every
/// distinguished generator, duplicates skipped. Exhaustive mode throws
/// Error{TooLarge} when |G| exceeds max_order.
RelationSet relation_matrix(const AbelianPGroup& group, std::span<const GeneticSubgroupA> basis,
                            Strategy strategy, std::int64_t max_order = kDefaultMaxOrder,
                            unsigned threads = 0);

/// SK1(ZG) for an odd abelian p-group, as T modulo the psi images.
CyclicDecomposition sk1(const AbelianPGroup& group, const PipelineOptions& options = {});

}  // namespace sk1
