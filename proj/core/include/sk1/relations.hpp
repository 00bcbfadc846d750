#pragma once

// Pieces shared by the abelian and metacyclic SK1 pipelines: run options,
// the relation matrix container, and its reduction to a decomposition.

#include <cstdint>
#include <span>
#include <vector>

#include "sk1/decomposition.hpp"
#include "sk1/snf.hpp"

namespace sk1 {

/// Default guard on the group order for modes that walk every element.
inline constexpr std::int64_t kDefaultMaxOrder = 729;

enum class Strategy {
  /// One h per genetic subgroup: the element whose coordinates are the
  /// subgroup's defining tuple.
  Representatives,
  /// Every h in the group.
  Exhaustive,
};

enum class SnfRoute {
  /// Smith form over Z/p^e, e = log_p of the exponent of the target product.
  Local,
  /// Exact integer Smith form.
  Exact,
};

struct PipelineOptions {
  Strategy strategy = Strategy::Representatives;
  SnfRoute route = SnfRoute::Local;
  std::int64_t max_order = kDefaultMaxOrder;
  /// Worker threads for row generation; 0 means hardware concurrency.
  unsigned threads = 0;
};

/// Relation matrix whose cokernel is the target product modulo the images
/// of the psi homomorphisms. The first seed_rows rows are diag(column order).
struct RelationSet {
  IntMatrix matrix;
  std::size_t seed_rows = 0;
  std::vector<std::int64_t> column_orders;
};

/// Starts a RelationSet with its diagonal seed rows.
RelationSet seeded_relations(std::span<const std::int64_t> column_orders);

/// Appends rows in order, skipping exact duplicates of rows already present.
void append_unique_rows(RelationSet& relations, const std::vector<std::vector<std::int64_t>>& rows);

/// Cokernel of relations.matrix. Every column order must be a power of p.
CyclicDecomposition reduce_relations(const RelationSet& relations, std::int64_t p, SnfRoute route);

}  // namespace sk1
