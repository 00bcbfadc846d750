#pragma once

#include <cstdint>

namespace sk1 {

/// Numbers of irreducible complex, real and rational representations.
struct IrrepCounts {
  std::int64_t complex = 0;
  std::int64_t real = 0;
  std::int64_t rational = 0;

  friend bool operator==(const IrrepCounts&, const IrrepCounts&) = default;
};

/// C_{p^n} x C_{p^n}: c = p^{2n}, r = (c+1)/2, q = p^n + 2(p^n-1)/(p-1).
/// Throws Error{BadParams} unless p is an odd prime and n >= 1.
IrrepCounts irrep_counts_square_abelian(std::int64_t p, int n);

/// Free rank of Wh(C_{p^n} x C_{p^n}), (k p^{2n} - (p+1) p^n + k + 2)/(p-1)
/// with p - 1 = 2k.
std::int64_t rank_square_abelian(std::int64_t p, int n);

/// M_n(p): c = p^{n-3}(p-1) + p^{n-1}, r = (c+1)/2, q = (n-2)p + 3.
/// Throws Error{BadParams} unless p is an odd prime and n >= 3.
IrrepCounts irrep_counts_metacyclic(std::int64_t p, int n);

/// Free rank of Wh(M_n(p)), ((p-1)p^{n-3} + p^{n-1} - 2(n-2)p - 5)/2.
std::int64_t rank_metacyclic(std::int64_t p, int n);

}  // namespace sk1
