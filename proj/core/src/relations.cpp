#include "sk1/relations.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "sk1/arith.hpp"
#include "sk1/error.hpp"

namespace sk1 {

namespace {

struct RowHash {
  std::size_t operator()(std::span<const std::int64_t> row) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::int64_t x : row) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct RowEq {
  bool operator()(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const noexcept {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
  }
};

}  // namespace

RelationSet seeded_relations(std::span<const std::int64_t> column_orders) {
  RelationSet rel;
  rel.column_orders.assign(column_orders.begin(), column_orders.end());
  rel.matrix = IntMatrix(column_orders.size());
  std::vector<std::int64_t> row(column_orders.size(), 0);
  for (std::size_t i = 0; i < column_orders.size(); ++i) {
    row[i] = column_orders[i];
    rel.matrix.add_row(row);
    row[i] = 0;
  }
  rel.seed_rows = column_orders.size();
  return rel;
}

void append_unique_rows(RelationSet& relations,
                        const std::vector<std::vector<std::int64_t>>& rows) {
  // Keys are copies: the matrix storage may reallocate while appending.
  std::unordered_set<std::vector<std::int64_t>, RowHash, RowEq> seen;
  seen.reserve(relations.matrix.rows() + rows.size());
  for (std::size_t i = 0; i < relations.matrix.rows(); ++i) {
    const auto r = relations.matrix.row(i);
    seen.emplace(r.begin(), r.end());
  }
  for (const auto& r : rows) {
    if (seen.insert(r).second) relations.matrix.add_row(r);
  }
}

CyclicDecomposition reduce_relations(const RelationSet& relations, std::int64_t p, SnfRoute route) {
  if (relations.column_orders.empty()) return {};
  if (route == SnfRoute::Exact) return cokernel_decomposition(relations.matrix);
  int exponent = 1;
  for (std::int64_t o : relations.column_orders) {
    const auto e = exact_log(p, o);
    if (!e) {
      throw Error(ErrorCode::NotPPower,
                  "column order " + std::to_string(o) + " is not a power of " + std::to_string(p));
    }
    exponent = std::max(exponent, *e);
  }
  return local_cokernel_decomposition(relations.matrix, p, exponent);
}

}  // namespace sk1
