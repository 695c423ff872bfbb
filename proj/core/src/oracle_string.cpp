#include "cvdj/oracle_string.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace cvdj {

OracleString::OracleString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty() || bits_.size() % 2 != 0) {
    std::ostringstream msg;
    msg << "OracleString: length must be even and positive, got " << bits_.size();
    throw std::domain_error(msg.str());
  }
  for (auto b : bits_) {
    if (b > 1) throw std::domain_error("OracleString: bits must be 0 or 1");
  }
}

OracleString OracleString::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      std::ostringstream msg;
      msg << "OracleString: invalid character '" << c << "' in \"" << text << '"';
      throw std::invalid_argument(msg.str());
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return OracleString(std::move(bits));
}

std::string OracleString::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

OracleString OracleString::complement() const {
  auto flipped = bits_;
  for (auto& b : flipped) b ^= 1U;
  return OracleString(std::move(flipped));
}

int OracleString::imbalance() const noexcept {
  int sum = 0;
  for (auto b : bits_) sum += b ? -1 : 1;
  return sum;
}

int OracleString::transitions() const noexcept {
  int count = 0;
  for (std::size_t i = 1; i < bits_.size(); ++i) count += bits_[i] != bits_[i - 1];
  return count;
}

std::string_view to_string(StringClass c) noexcept {
  switch (c) {
    case StringClass::Constant: return "Constant";
    case StringClass::AntisymBalanced: return "AntisymBalanced";
    case StringClass::SymBalanced: return "SymBalanced";
    case StringClass::OtherBalanced: return "OtherBalanced";
    case StringClass::Unbalanced: return "Unbalanced";
  }
  return "?";
}

std::string_view short_name(StringClass c) noexcept {
  switch (c) {
    case StringClass::Constant: return "C";
    case StringClass::AntisymBalanced: return "AB";
    case StringClass::SymBalanced: return "SB";
    case StringClass::OtherBalanced: return "other";
    case StringClass::Unbalanced: return "unbalanced";
  }
  return "?";
}

namespace {

std::vector<std::uint8_t> runs(std::initializer_list<std::pair<int, std::uint8_t>> parts) {
  std::vector<std::uint8_t> bits;
  for (auto [len, value] : parts) bits.insert(bits.end(), static_cast<std::size_t>(len), value);
  return bits;
}

}  // namespace

StringClass classify(const OracleString& z) {
  const int t = z.transitions();
  if (t == 0) return StringClass::Constant;
  if (!z.is_balanced()) return StringClass::Unbalanced;
  if (t == 1) return StringClass::AntisymBalanced;
  const auto n = static_cast<int>(z.size());
  if (t == 2 && n % 4 == 0) {
    const auto [sb0, sb1] = canonical(StringClass::SymBalanced, n);
    if (z == sb0 || z == sb1) return StringClass::SymBalanced;
  }
  return StringClass::OtherBalanced;
}

std::pair<OracleString, OracleString> canonical(StringClass cls, int n) {
  if (n <= 0 || n % 2 != 0) {
    throw std::domain_error("canonical: N must be positive and even, got " + std::to_string(n));
  }
  switch (cls) {
    case StringClass::Constant: {
      OracleString zeros(runs({{n, 0}}));
      return {zeros, zeros.complement()};
    }
    case StringClass::AntisymBalanced: {
      OracleString ab(runs({{n / 2, 0}, {n / 2, 1}}));
      return {ab, ab.complement()};
    }
    case StringClass::SymBalanced: {
      if (n % 4 != 0) {
        throw std::domain_error("canonical: SymBalanced needs N divisible by 4, got " +
                                std::to_string(n));
      }
      OracleString sb(runs({{n / 4, 0}, {n / 2, 1}, {n / 4, 0}}));
      return {sb, sb.complement()};
    }
    default:
      throw std::domain_error("canonical: no canonical pair for class " +
                              std::string(to_string(cls)));
  }
}

std::vector<OracleString> enumerate_balanced(int n) {
  if (n <= 0 || n % 2 != 0 || n > 16) {
    throw std::domain_error("enumerate_balanced: N must be even and in [2, 16], got " +
                            std::to_string(n));
  }
  // Bit 0 is the most significant position, so increasing masks give
  // lexicographic order.
  std::vector<OracleString> out;
  const std::uint32_t limit = 1U << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) != n / 2) continue;
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>((mask >> (n - 1 - i)) & 1U);
    out.emplace_back(std::move(bits));
  }
  return out;
}

}  // namespace cvdj
