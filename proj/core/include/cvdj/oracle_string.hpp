#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cvdj {

/// An N-bit oracle string z. N is even and at least 2; bit i is the value
/// of the hidden function on the i-th input in lexicographic order.
class OracleString {
 public:
  /// Throws std::domain_error if the length is odd or zero.
  explicit OracleString(std::vector<std::uint8_t> bits);

  /// Parses "00111100"; rejects any character other than '0' and '1'.
  static OracleString parse(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  int bit(std::size_t i) const { return bits_.at(i); }
  /// (-1)^{z_i}
  int sign(std::size_t i) const { return bits_.at(i) ? -1 : 1; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  std::string str() const;
  OracleString complement() const;

  /// sum_i (-1)^{z_i}
  int imbalance() const noexcept;
  bool is_balanced() const noexcept { return imbalance() == 0; }
  int transitions() const noexcept;

  friend bool operator==(const OracleString&, const OracleString&) = default;
  friend auto operator<=>(const OracleString&, const OracleString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

enum class StringClass {
  Constant,
  AntisymBalanced,
  SymBalanced,
  OtherBalanced,
  Unbalanced,
};

std::string_view to_string(StringClass c) noexcept;
/// Short tags used in tables: C, AB, SB, other, unbalanced.
std::string_view short_name(StringClass c) noexcept;

StringClass classify(const OracleString& z);

/// The canonical pair for Constant, AntisymBalanced and SymBalanced, first
/// member starting with 0. SymBalanced needs N divisible by 4.
std::pair<OracleString, OracleString> canonical(StringClass cls, int n);

/// All C(N, N/2) balanced strings in lexicographic order; N even, N <= 16.
std::vector<OracleString> enumerate_balanced(int n);

}  // namespace cvdj
