#include "sk1/snf.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "sk1/arith.hpp"
#include "sk1/error.hpp"

namespace sk1 {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return IntMatrix();
  IntMatrix m(rows.front().size());
  for (const auto& r : rows) m.add_row(r);
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void IntMatrix::add_row(std::span<const std::int64_t> values) {
  if (values.size() != cols_) {
    throw Error(ErrorCode::DimensionMismatch, "row has " + std::to_string(values.size()) +
                                                  " entries, matrix has " + std::to_string(cols_) +
                                                  " columns");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

namespace {

// ---------------------------------------------------------------------------
// Exact integer route

struct Overflow {};

std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t t;
  if (__builtin_mul_overflow(q, b, &t) || __builtin_sub_overflow(a, t, &t)) throw Overflow{};
  return t;
}
BigInt sub_mul(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t t;
  if (__builtin_add_overflow(a, b, &t)) throw Overflow{};
  return t;
}
BigInt add(const BigInt& a, const BigInt& b) { return a + b; }

std::int64_t magnitude(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return a < 0 ? -a : a;
}
BigInt magnitude(const BigInt& a) { return abs(a); }

bool is_zero(std::int64_t a) { return a == 0; }
bool is_zero(const BigInt& a) { return sgn(a) == 0; }

std::int64_t quotient(std::int64_t a, std::int64_t b) {
  if (b == -1) return sub_mul(0, 1, a);
  return a / b;
}
BigInt quotient(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool divides(std::int64_t d, std::int64_t a) { return d == 1 || d == -1 || a % d == 0; }
bool divides(const BigInt& d, const BigInt& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

template <class T>
class SmithReducer {
 public:
  SmithReducer(std::vector<std::vector<T>> a, std::size_t cols)
      : a_(std::move(a)), rows_(a_.size()), cols_(cols) {}

  std::vector<T> run() {
    const std::size_t rank_bound = std::min(rows_, cols_);
    std::vector<T> diag;
    diag.reserve(rank_bound);
    for (std::size_t t = 0; t < rank_bound; ++t) {
      if (!bring_smallest_to(t)) break;
      settle_pivot(t);
      diag.push_back(magnitude(a_[t][t]));
    }
    diag.resize(rank_bound, T(0));
    return diag;
  }

 private:
  void swap_cols(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& r : a_) std::swap(r[x], r[y]);
  }

  // Moves the smallest nonzero |entry| of the trailing block to (t, t).
  bool bring_smallest_to(std::size_t t) {
    bool found = false;
    std::size_t bi = t, bj = t;
    T best{};
    for (std::size_t i = t; i < rows_; ++i) {
      for (std::size_t j = t; j < cols_; ++j) {
        if (is_zero(a_[i][j])) continue;
        T m = magnitude(a_[i][j]);
        if (!found || m < best) {
          found = true;
          best = m;
          bi = i;
          bj = j;
        }
      }
    }
    if (!found) return false;
    std::swap(a_[t], a_[bi]);
    swap_cols(t, bj);
    return true;
  }

  // Smallest nonzero entry restricted to row t and column t.
  void bring_smallest_of_cross(std::size_t t) {
    std::size_t bi = t, bj = t;
    T best = magnitude(a_[t][t]);
    bool have = !is_zero(a_[t][t]);
    for (std::size_t i = t + 1; i < rows_; ++i) {
      if (is_zero(a_[i][t])) continue;
      T m = magnitude(a_[i][t]);
      if (!have || m < best) {
        have = true;
        best = m;
        bi = i;
        bj = t;
      }
    }
    for (std::size_t j = t + 1; j < cols_; ++j) {
      if (is_zero(a_[t][j])) continue;
      T m = magnitude(a_[t][j]);
      if (!have || m < best) {
        have = true;
        best = m;
        bi = t;
        bj = j;
      }
    }
    std::swap(a_[t], a_[bi]);
    swap_cols(t, bj);
  }

  void settle_pivot(std::size_t t) {
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows_; ++i) {
        if (is_zero(a_[i][t])) continue;
        const T q = quotient(a_[i][t], a_[t][t]);
        if (!is_zero(q)) {
          for (std::size_t j = t; j < cols_; ++j) a_[i][j] = sub_mul(a_[i][j], q, a_[t][j]);
        }
        if (!is_zero(a_[i][t])) clean = false;
      }
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (is_zero(a_[t][j])) continue;
        const T q = quotient(a_[t][j], a_[t][t]);
        if (!is_zero(q)) {
          for (std::size_t i = t; i < rows_; ++i) a_[i][j] = sub_mul(a_[i][j], q, a_[i][t]);
        }
        if (!is_zero(a_[t][j])) clean = false;
      }
      if (!clean) {
        bring_smallest_of_cross(t);
        continue;
      }
      // Row and column are clear; enforce d_t | every trailing entry.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows_ && !fixed; ++i) {
        for (std::size_t j = t + 1; j < cols_; ++j) {
          if (!divides(a_[t][t], a_[i][j])) {
            for (std::size_t k = t; k < cols_; ++k) a_[t][k] = add(a_[t][k], a_[i][k]);
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) return;
    }
  }

  std::vector<std::vector<T>> a_;
  std::size_t rows_;
  std::size_t cols_;
};

template <class T>
std::vector<std::vector<T>> to_dense(const IntMatrix& m) {
  std::vector<std::vector<T>> out(m.rows(), std::vector<T>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<T, BigInt>) {
        out[i][j] = BigInt(static_cast<long>(m.at(i, j)));
      } else {
        out[i][j] = m.at(i, j);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<BigInt> smith_divisors(const IntMatrix& m) {
  if (m.empty()) throw Error(ErrorCode::BadParams, "smith_divisors needs a non-empty matrix");
  try {
    auto small = SmithReducer<std::int64_t>(to_dense<std::int64_t>(m), m.cols()).run();
    std::vector<BigInt> out;
    out.reserve(small.size());
    for (std::int64_t d : small) out.emplace_back(static_cast<long>(d));
    return out;
  } catch (const Overflow&) {
    return SmithReducer<BigInt>(to_dense<BigInt>(m), m.cols()).run();
  }
}

CyclicDecomposition cokernel_decomposition(const IntMatrix& m) {
  if (m.cols() == 0) return {};
  if (m.rows() < m.cols()) {
    throw Error(ErrorCode::InfiniteCokernel, "fewer rows than columns");
  }
  const auto divisors = smith_divisors(m);
  for (const auto& d : divisors) {
    if (d == 0) throw Error(ErrorCode::InfiniteCokernel, "matrix does not have full column rank");
  }
  return CyclicDecomposition::from_divisors(divisors);
}

// ---------------------------------------------------------------------------
// Local route over Z/p^e

namespace {

class LocalReducer {
 public:
  LocalReducer(const IntMatrix& m, std::int64_t p, int exponent)
      : p_(p), exponent_(exponent), modulus_(checked_pow(p, exponent)), cols_(m.cols()) {
    if (modulus_ > (std::int64_t{1} << 31)) {
      throw Error(ErrorCode::TooLarge, "local modulus p^e must stay below 2^31");
    }
    // Each lazy update adds at most modulus^2 in magnitude.
    max_pending_ = (std::numeric_limits<std::int64_t>::max() / 2) / (modulus_ * modulus_);
    rows_.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Row r;
      r.v.assign(m.row(i).begin(), m.row(i).end());
      reduce(r);
      if (std::any_of(r.v.begin(), r.v.end(), [](std::int64_t x) { return x != 0; })) {
        rows_.push_back(std::move(r));
      }
    }
    active_.assign(cols_, 1);
  }

  CyclicDecomposition run() {
    std::size_t active_count = cols_;
    std::vector<std::pair<std::int64_t, std::int64_t>> counts;
    std::int64_t level_divisor = 1;  // p^v
    for (int v = 0; v < exponent_ && active_count > 0; ++v, level_divisor *= p_) {
      const std::int64_t next = level_divisor * p_;
      std::int64_t pivots_here = 0;
      std::size_t k = 0;
      while (k < rows_.size() && active_count > 0) {
        Row& r = rows_[k];
        reduce(r);
        std::size_t col = cols_;
        bool nonzero = false;
        for (std::size_t j = 0; j < cols_; ++j) {
          if (!active_[j] || r.v[j] == 0) continue;
          nonzero = true;
          if (r.v[j] % next != 0) {
            col = j;
            break;
          }
        }
        if (!nonzero) {
          std::swap(rows_[k], rows_.back());
          rows_.pop_back();
          continue;
        }
        if (col == cols_) {
          ++k;
          continue;
        }
        Row pivot = std::move(rows_[k]);
        std::swap(rows_[k], rows_.back());
        rows_.pop_back();
        active_[col] = 0;
        --active_count;
        ++pivots_here;
        eliminate(pivot, col, level_divisor);
      }
      if (v > 0 && pivots_here > 0) counts.emplace_back(level_divisor, pivots_here);
    }
    if (active_count > 0) {
      counts.emplace_back(modulus_, static_cast<std::int64_t>(active_count));
    }
    return CyclicDecomposition::from_multiplicities(counts);
  }

 private:
  struct Row {
    std::vector<std::int64_t> v;
    std::int64_t pending = 0;
  };

  void reduce(Row& r) const {
    for (auto& x : r.v) x = mod_floor(x, modulus_);
    r.pending = 0;
  }

  // Clears column col from every remaining row using the pivot row, whose
  // entry there has valuation exactly v (level_divisor = p^v).
  void eliminate(const Row& pivot, std::size_t col, std::int64_t level_divisor) {
    const std::int64_t unit = (pivot.v[col] / level_divisor) % modulus_;
    const std::int64_t unit_inv = mod_inverse(unit, modulus_);
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (pivot.v[j] != 0 && (active_[j] || j == col)) support.push_back(j);
    }
    for (Row& s : rows_) {
      const std::int64_t x = mod_floor(s.v[col], modulus_);
      if (x == 0) continue;
      const std::int64_t f = mod_floor((x / level_divisor) * unit_inv, modulus_);
      for (std::size_t j : support) s.v[j] -= f * pivot.v[j];
      s.v[col] = 0;
      if (++s.pending >= max_pending_) reduce(s);
    }
  }

  std::int64_t p_;
  int exponent_;
  std::int64_t modulus_;
  std::size_t cols_;
  std::int64_t max_pending_ = 1;
  std::vector<Row> rows_;
  std::vector<char> active_;
};

}  // namespace

CyclicDecomposition local_cokernel_decomposition(const IntMatrix& m, std::int64_t p, int exponent) {
  if (!is_prime(p) || exponent < 1) {
    throw Error(ErrorCode::BadParams, "local route needs a prime p and exponent >= 1");
  }
  if (m.cols() == 0) return {};
  return LocalReducer(m, p, exponent).run();
}

}  // namespace sk1
