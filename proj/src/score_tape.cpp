#include <charconv>

#include "asg/advice_tape.hpp"
#include "asg/errors.hpp"
#include "asg/score.hpp"

namespace asg {

Score Score::parse(std::string_view text) {
  if (text == "+inf" || text == "inf") return plus_infinity();
  if (text == "-inf") return minus_infinity();
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ContractViolation("malformed score '" + std::string(text) + "'");
  }
  return finite(v);
}

std::uint64_t Score::value() const {
  if (!is_finite()) throw ContractViolation("value() of an infinite score");
  return value_;
}

std::string Score::to_string() const {
  switch (kind_) {
    case Kind::plus_infinity:
      return "+inf";
    case Kind::minus_infinity:
      return "-inf";
    case Kind::finite:
      break;
  }
  return std::to_string(value_);
}

std::strong_ordering operator<=>(const Score& a, const Score& b) {
  auto rank = [](const Score& s) {
    return s.kind_ == Score::Kind::minus_infinity ? 0 : s.kind_ == Score::Kind::finite ? 1 : 2;
  };
  if (auto r = rank(a) <=> rank(b); r != 0) return r;
  return a.value_ <=> b.value_;
}

bool AdviceTape::read() {
  bool bit = cursor_ < written_.size() ? written_[cursor_] : false;
  ++cursor_;
  if (cursor_ > bits_read_) bits_read_ = cursor_;
  return bit;
}

std::uint64_t AdviceTape::read_fixed(std::size_t width) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < width; ++i) v = (v << 1) | (read() ? 1U : 0U);
  return v;
}

std::uint64_t AdviceTape::read_self_delimiting() {
  // Past the written prefix the tape is all zeros, so the unary part always ends.
  std::size_t width = 0;
  while (read()) {
    if (++width > 64) throw MalformedAdvice("self-delimiting length exceeds 64 bits");
  }
  return read_fixed(width);
}

std::size_t ceil_log2(std::uint64_t m) {
  std::size_t k = 0;
  while (k < 64 && (std::uint64_t{1} << k) < m) ++k;
  return k;
}

void append_fixed(Bits& out, std::uint64_t value, std::size_t width) {
  if (width < 64 && (value >> width) != 0) {
    throw ContractViolation("value does not fit in the requested width");
  }
  for (std::size_t i = width; i-- > 0;) out.push_back((value >> i) & 1U);
}

std::size_t self_delimiting_length(std::uint64_t m) {
  std::size_t width = m == UINT64_MAX ? 64 : ceil_log2(m + 1);
  return 2 * width + 1;
}

void append_self_delimiting(Bits& out, std::uint64_t m) {
  std::size_t width = m == UINT64_MAX ? 64 : ceil_log2(m + 1);
  for (std::size_t i = 0; i < width; ++i) out.push_back(true);
  out.push_back(false);
  append_fixed(out, m, width);
}

Bits encode_self_delimiting(std::uint64_t m) {
  Bits out;
  append_self_delimiting(out, m);
  return out;
}

std::uint64_t decode_self_delimiting(const Bits& bits, std::size_t& pos) {
  std::size_t p = pos;
  std::size_t width = 0;
  for (;;) {
    if (p >= bits.size()) throw MalformedAdvice("unary length part has no terminating zero");
    if (!bits[p++]) break;
    if (++width > 64) throw MalformedAdvice("self-delimiting length exceeds 64 bits");
  }
  if (p + width > bits.size()) throw MalformedAdvice("truncated self-delimiting value");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < width; ++i) v = (v << 1) | (bits[p++] ? 1U : 0U);
  pos = p;
  return v;
}

}  // namespace asg
