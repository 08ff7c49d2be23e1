#include "asg/bitstring.hpp"

#include <algorithm>

#include "asg/errors.hpp"

namespace asg {

BitString BitString::parse(std::string_view text) {
  BitString x;
  x.bits_.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw ContractViolation("bit string may contain only '0' and '1', got '" +
                              std::string(text) + "'");
    }
    x.bits_.push_back(ch == '1');
  }
  return x;
}

BitString BitString::from_mask(std::uint64_t mask, std::size_t n) {
  if (n > 64) throw ContractViolation("from_mask supports at most 64 bits");
  BitString x(n);
  for (std::size_t i = 0; i < n; ++i) x.bits_[i] = (mask >> i) & 1U;
  return x;
}

bool BitString::at(std::size_t i) const {
  if (i == 0 || i > bits_.size()) throw ContractViolation("bit index out of range");
  return bits_[i - 1] != 0;
}

void BitString::set(std::size_t i, bool value) {
  if (i == 0 || i > bits_.size()) throw ContractViolation("bit index out of range");
  bits_[i - 1] = value ? 1 : 0;
}

std::size_t BitString::ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<std::size_t> BitString::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(i + 1);
  }
  return out;
}

std::uint64_t BitString::to_mask() const {
  if (bits_.size() > 64) throw ContractViolation("to_mask supports at most 64 bits");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::string BitString::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

bool dominates(const BitString& x, const BitString& y) {
  if (x.size() != y.size()) throw ContractViolation("dominates: length mismatch");
  for (std::size_t i = 1; i <= x.size(); ++i) {
    if (x.at(i) && !y.at(i)) return false;
  }
  return true;
}

std::vector<BitString> all_strings(std::size_t n) {
  if (n > 24) throw ResourceLimitExceeded("all_strings: n > 24");
  std::vector<BitString> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(BitString::from_mask(m, n));
  return out;
}

}  // namespace asg
