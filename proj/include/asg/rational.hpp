#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace asg {

/// Exact rational number with 64-bit numerator and positive denominator,
/// kept in lowest terms. Competitive ratios are always carried as Rational so
/// floor(c*t) and ceil(u/c) are exact integer thresholds.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  /// Accepts "P/Q" or "P" with optional sign. Decimal or exponent notation is
  /// rejected with DomainError.
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  std::int64_t floor() const;
  std::int64_t ceil() const;

  /// floor(this * k) computed without rounding.
  std::int64_t floor_times(std::int64_t k) const;
  /// ceil(k / this); requires this > 0.
  std::int64_t ceil_divide(std::int64_t k) const;

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  struct Normalized {};
  /// Trusted constructor for values already in lowest terms.
  constexpr Rational(Normalized, std::int64_t numerator, std::int64_t denominator)
      : num_(numerator), den_(denominator) {}

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace asg
