#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sk1/decomposition.hpp"

namespace sk1 {

/// Dense row-major integer matrix. Rows are appended; every row has cols()
/// entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t cols) : cols_(cols) {}
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  /// Throws Error{DimensionMismatch} on ragged input.
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  std::int64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const std::int64_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  void add_row(std::span<const std::int64_t> values);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Smith invariants d_1 | d_2 | ... of M, min(rows, cols) of them, all
/// non-negative, zeros last. Exact: reduction starts in checked int64 and
/// restarts in arbitrary precision on overflow. Pivot is the smallest
/// nonzero absolute value of the remaining block.
std::vector<BigInt> smith_divisors(const IntMatrix& m);

/// Z^cols / rowspan(M) as cyclic factors > 1. Throws
/// Error{InfiniteCokernel} if the cokernel has a free part.
CyclicDecomposition cokernel_decomposition(const IntMatrix& m);

/// Same cokernel, computed over Z/p^e. Valid only when p^e annihilates the
/// cokernel, e.g. when M contains rows d_j * e_j with every d_j | p^e; the
/// relation matrices built by the SK1 pipelines have that form. Pivots on
/// minimal p-valuation, so entries never leave [0, p^e).
CyclicDecomposition local_cokernel_decomposition(const IntMatrix& m, std::int64_t p, int exponent);

}  // namespace sk1
