#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace asg {

using Bits = std::vector<bool>;

/// The oracle's infinite advice string. The oracle writes a finite prefix;
/// everything past it reads as 0. `bits_read` is the furthest position the
/// algorithm has read, which is the advice complexity of a run.
class AdviceTape {
 public:
  AdviceTape() = default;
  explicit AdviceTape(Bits written) : written_(std::move(written)) {}

  const Bits& written() const { return written_; }

  bool read();
  /// Reads `width` bits most-significant first. Width 0 yields 0.
  std::uint64_t read_fixed(std::size_t width);
  /// Inverse of append_self_delimiting.
  std::uint64_t read_self_delimiting();

  std::size_t cursor() const { return cursor_; }
  std::size_t bits_read() const { return bits_read_; }

 private:
  Bits written_;
  std::size_t cursor_ = 0;
  std::size_t bits_read_ = 0;
};

/// Smallest k with 2^k >= m; ceil_log2(0) = ceil_log2(1) = 0.
std::size_t ceil_log2(std::uint64_t m);

/// Appends `value` on exactly `width` bits, most-significant first.
void append_fixed(Bits& out, std::uint64_t value, std::size_t width);

/// ceil(log(m+1)) ones, a zero, then m in binary on ceil(log(m+1)) bits:
/// 2*ceil(log(m+1)) + 1 bits in total.
void append_self_delimiting(Bits& out, std::uint64_t m);
Bits encode_self_delimiting(std::uint64_t m);
std::size_t self_delimiting_length(std::uint64_t m);

/// Decodes one self-delimited integer from a finite bit sequence starting at
/// `pos` and advances `pos`. Throws MalformedAdvice if the unary length part
/// has no terminating zero or the binary part is truncated.
std::uint64_t decode_self_delimiting(const Bits& bits, std::size_t& pos);

}  // namespace asg
