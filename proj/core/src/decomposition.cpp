#include "sk1/decomposition.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "sk1/error.hpp"

namespace sk1 {

void CyclicDecomposition::add(const BigInt& divisor, std::int64_t count) {
  if (divisor <= 0) throw Error(ErrorCode::BadParams, "cyclic orders must be positive");
  if (count < 0) throw Error(ErrorCode::BadParams, "multiplicities must be non-negative");
  if (divisor == 1 || count == 0) return;
  counts_[divisor] += count;
}

CyclicDecomposition CyclicDecomposition::from_divisors(const std::vector<BigInt>& divisors) {
  CyclicDecomposition d;
  for (const auto& x : divisors) d.add(x, 1);
  return d;
}

CyclicDecomposition CyclicDecomposition::from_multiplicities(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& counts) {
  CyclicDecomposition d;
  for (const auto& [divisor, count] : counts) d.add(BigInt(static_cast<long>(divisor)), count);
  return d;
}

std::int64_t CyclicDecomposition::multiplicity(const BigInt& divisor) const {
  const auto it = counts_.find(divisor);
  return it == counts_.end() ? 0 : it->second;
}

std::int64_t CyclicDecomposition::factor_count() const {
  std::int64_t n = 0;
  for (const auto& [d, c] : counts_) n += c;
  return n;
}

BigInt CyclicDecomposition::order() const {
  BigInt total = 1;
  for (const auto& [d, c] : counts_) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(c));
    total *= power;
  }
  return total;
}

BigInt CyclicDecomposition::exponent() const {
  return counts_.empty() ? BigInt(1) : counts_.rbegin()->first;
}

std::string CyclicDecomposition::to_human() const {
  if (counts_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : counts_) {
    if (!first) os << " x ";
    os << "(C" << d.get_str() << ")^" << c;
    first = false;
  }
  return os.str();
}

std::string CyclicDecomposition::to_tsv() const {
  std::ostringstream os;
  for (const auto& [d, c] : counts_) os << d.get_str() << '\t' << c << '\n';
  return os.str();
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::BadParams,
                "cannot parse decomposition at offset " + std::to_string(pos_) + ": " + why);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CyclicDecomposition CyclicDecomposition::parse_human(std::string_view text) {
  Cursor cur(text);
  CyclicDecomposition d;
  if (cur.accept("0")) {
    if (!cur.done()) cur.fail("trailing text after trivial group");
    return d;
  }
  do {
    cur.expect("(C");
    const BigInt divisor(cur.digits());
    cur.expect(")^");
    const std::int64_t count = std::stoll(cur.digits());
    if (divisor < 2 || count < 1) cur.fail("factors must be (Cd)^k with d > 1 and k > 0");
    d.add(divisor, count);
  } while (cur.accept("x"));
  if (!cur.done()) cur.fail("trailing text");
  return d;
}

CyclicDecomposition CyclicDecomposition::parse_tsv(std::string_view text) {
  CyclicDecomposition d;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(ErrorCode::BadParams, "tsv line without tab: '" + line + "'");
    }
    BigInt divisor;
    std::int64_t count = 0;
    try {
      divisor = BigInt(line.substr(0, tab));
      count = std::stoll(line.substr(tab + 1));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::BadParams, "malformed tsv line: '" + line + "'");
    }
    if (divisor < 2 || count < 1) {
      throw Error(ErrorCode::BadParams, "tsv lines need divisor > 1 and count > 0: '" + line + "'");
    }
    d.add(divisor, count);
  }
  return d;
}

}  // namespace sk1
