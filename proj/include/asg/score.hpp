#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace asg {

enum class Objective { minimize, maximize };

/// Cost or profit of an output. Infeasible outputs of minimization problems
/// score +inf, of maximization problems -inf; both are absorbing in comparisons.
class Score {
 public:
  enum class Kind { finite, plus_infinity, minus_infinity };

  static Score finite(std::uint64_t value) { return Score(Kind::finite, value); }
  static Score plus_infinity() { return Score(Kind::plus_infinity, 0); }
  static Score minus_infinity() { return Score(Kind::minus_infinity, 0); }
  /// The score of an infeasible output under `objective`.
  static Score infeasible(Objective objective) {
    return objective == Objective::minimize ? plus_infinity() : minus_infinity();
  }

  /// Parses an unsigned integer, "+inf" or "-inf".
  static Score parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  /// Requires is_finite().
  std::uint64_t value() const;

  std::string to_string() const;

  friend bool operator==(const Score&, const Score&) = default;
  friend std::strong_ordering operator<=>(const Score& a, const Score& b);

 private:
  Score(Kind kind, std::uint64_t value) : kind_(kind), value_(value) {}

  Kind kind_ = Kind::finite;
  std::uint64_t value_ = 0;
};

}  // namespace asg
