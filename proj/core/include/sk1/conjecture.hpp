#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sk1/decomposition.hpp"

namespace sk1 {

/// Predicted multiplicity of C_{p^i} in SK1(Z[C_{p^n} x C_{p^n}]) for
/// 0 < i < n. C_{p^n} itself never occurs.
struct ConjecturePrediction {
  std::int64_t p = 0;
  int n = 0;
  std::map<int, std::int64_t> multiplicities;

  std::int64_t multiplicity(int i) const;
  CyclicDecomposition as_decomposition() const;
};

/// (p-1)(2^{E(i)} p^{n-(floor(i/2)+2)} + (n-2i) p^{i-1}), E(i) = 1 iff i even.
/// Throws Error{BadParams} unless p is an odd prime, i >= 1 and n >= 2i.
std::int64_t T(std::int64_t p, int i, int n);

/// multiplicity(i) = T(p, i, n) if 2i <= n, else T(p, n-i, 2(n-i)).
/// Throws Error{BadParams} unless p is an odd prime and n >= 2.
ConjecturePrediction predicted_decomposition(std::int64_t p, int n);

struct VerifyDiff {
  std::int64_t predicted = 0;
  std::int64_t computed = 0;

  friend bool operator==(const VerifyDiff&, const VerifyDiff&) = default;
};

struct VerifyReport {
  bool match = false;
  /// Every exponent i with predicted != computed.
  std::map<int, VerifyDiff> diffs;
  /// Computed divisors that are not p^i with 0 < i < n.
  std::vector<BigInt> unexpected;
};

VerifyReport verify(std::int64_t p, int n, const CyclicDecomposition& computed);

}  // namespace sk1
