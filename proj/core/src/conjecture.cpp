#include "sk1/conjecture.hpp"

#include <string>

#include "sk1/arith.hpp"
#include "sk1/error.hpp"

namespace sk1 {

namespace {

void require_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw Error(ErrorCode::BadParams, std::to_string(p) + " is not an odd prime");
  }
}

}  // namespace

std::int64_t ConjecturePrediction::multiplicity(int i) const {
  const auto it = multiplicities.find(i);
  return it == multiplicities.end() ? 0 : it->second;
}

CyclicDecomposition ConjecturePrediction::as_decomposition() const {
  std::vector<std::pair<std::int64_t, std::int64_t>> counts;
  for (const auto& [i, m] : multiplicities) counts.emplace_back(checked_pow(p, i), m);
  return CyclicDecomposition::from_multiplicities(counts);
}

std::int64_t T(std::int64_t p, int i, int n) {
  require_prime(p);
  if (i < 1 || n < 2 * i) {
    throw Error(ErrorCode::BadParams, "T needs 1 <= i and 2i <= n, got i=" + std::to_string(i) +
                                          " n=" + std::to_string(n));
  }
  const std::int64_t twice = i % 2 == 0 ? 2 : 1;
  return (p - 1) * (twice * checked_pow(p, n - (i / 2 + 2)) + (n - 2 * i) * checked_pow(p, i - 1));
}

ConjecturePrediction predicted_decomposition(std::int64_t p, int n) {
  require_prime(p);
  if (n < 2) throw Error(ErrorCode::BadParams, "n must be at least 2, got " + std::to_string(n));
  ConjecturePrediction out{p, n, {}};
  for (int i = 1; i < n; ++i) {
    out.multiplicities[i] = 2 * i <= n ? T(p, i, n) : T(p, n - i, 2 * (n - i));
  }
  return out;
}

VerifyReport verify(std::int64_t p, int n, const CyclicDecomposition& computed) {
  const auto predicted = predicted_decomposition(p, n);
  VerifyReport report;
  std::map<int, std::int64_t> seen;
  for (const auto& [divisor, count] : computed.multiplicities()) {
    const std::optional<int> e =
        divisor.fits_slong_p() ? exact_log(p, divisor.get_si()) : std::nullopt;
    if (!e || *e >= n) {
      report.unexpected.push_back(divisor);
      continue;
    }
    seen[*e] = count;
  }
  for (int i = 1; i < n; ++i) {
    const std::int64_t want = predicted.multiplicity(i);
    const std::int64_t got = seen.count(i) ? seen[i] : 0;
    if (want != got) report.diffs[i] = {want, got};
  }
  report.match = report.diffs.empty() && report.unexpected.empty();
  return report;
}

}  // namespace sk1
