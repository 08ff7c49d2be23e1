#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace asg {

/// A string x = x_1 ... x_n over {0,1}. Positions are 1-based throughout.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t n, bool fill = false) : bits_(n, fill ? 1 : 0) {}

  /// Parses an ASCII string of '0' and '1'. Anything else is a ContractViolation.
  static BitString parse(std::string_view text);
  /// Bit i (1-based) of the result is bit i-1 of `mask`.
  static BitString from_mask(std::uint64_t mask, std::size_t n);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  bool at(std::size_t i) const;
  void set(std::size_t i, bool value);
  void push_back(bool value) { bits_.push_back(value ? 1 : 0); }

  std::size_t ones() const;
  std::size_t zeros() const { return size() - ones(); }

  /// Positions i with x_i = 1, ascending.
  std::vector<std::size_t> support() const;
  /// Inverse of from_mask; requires n <= 64.
  std::uint64_t to_mask() const;
  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// x ⊑ y: every 1-position of x is a 1-position of y.
bool dominates(const BitString& x, const BitString& y);

/// All 2^n strings of length n in increasing order of their mask.
std::vector<BitString> all_strings(std::size_t n);

}  // namespace asg
