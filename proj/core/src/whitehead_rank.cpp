#include "sk1/whitehead_rank.hpp"

#include <string>

#include "sk1/arith.hpp"
#include "sk1/error.hpp"

namespace sk1 {

namespace {

void require_params(std::int64_t p, int n, int min_n) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw Error(ErrorCode::BadParams, std::to_string(p) + " is not an odd prime");
  }
  if (n < min_n) {
    throw Error(ErrorCode::BadParams,
                "n must be at least " + std::to_string(min_n) + ", got " + std::to_string(n));
  }
}

}  // namespace

IrrepCounts irrep_counts_square_abelian(std::int64_t p, int n) {
  require_params(p, n, 1);
  const std::int64_t pn = checked_pow(p, n);
  IrrepCounts out;
  out.complex = checked_pow(p, 2 * n);
  out.real = exact_div(out.complex + 1, 2);
  out.rational = pn + exact_div(2 * (pn - 1), p - 1);
  return out;
}

std::int64_t rank_square_abelian(std::int64_t p, int n) {
  require_params(p, n, 1);
  const std::int64_t k = exact_div(p - 1, 2);
  const std::int64_t pn = checked_pow(p, n);
  const std::int64_t p2n = checked_pow(p, 2 * n);
  return exact_div(k * p2n - (p + 1) * pn + k + 2, p - 1);
}

IrrepCounts irrep_counts_metacyclic(std::int64_t p, int n) {
  require_params(p, n, 3);
  IrrepCounts out;
  out.complex = checked_pow(p, n - 3) * (p - 1) + checked_pow(p, n - 1);
  out.real = exact_div(out.complex + 1, 2);
  out.rational = (n - 2) * p + 3;
  return out;
}

std::int64_t rank_metacyclic(std::int64_t p, int n) {
  require_params(p, n, 3);
  return exact_div((p - 1) * checked_pow(p, n - 3) + checked_pow(p, n - 1) - 2 * (n - 2) * p - 5,
                   2);
}

}  // namespace sk1
