#include "asg/rational.hpp"

#include <charconv>
#include <numeric>

#include "asg/errors.hpp"

namespace asg {
namespace {

using Wide = __int128;

std::int64_t narrow(Wide v) {
  if (v > INT64_MAX || v < INT64_MIN) throw DomainError("rational overflow");
  return static_cast<std::int64_t>(v);
}

void normalize(Wide num, Wide den, std::int64_t& out_num, std::int64_t& out_den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    Wide r = a % b;
    a = b;
    b = r;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  out_num = narrow(num);
  out_den = narrow(den);
}

Rational make(Wide num, Wide den) {
  std::int64_t n = 0;
  std::int64_t d = 1;
  normalize(num, den, n, d);
  return Rational(Rational::Normalized{}, n, d);
}

Wide floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t parse_int(std::string_view part, std::string_view whole) {
  if (part.empty()) throw DomainError("malformed rational '" + std::string(whole) + "'");
  std::size_t start = (part.front() == '+') ? 1 : 0;
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(part.data() + start, part.data() + part.size(), value);
  if (ec != std::errc() || ptr != part.data() + part.size()) {
    throw DomainError("malformed rational '" + std::string(whole) +
                      "' (expected P/Q with integer P and Q)");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  normalize(numerator, denominator, num_, den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text), 1);
  return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

std::int64_t Rational::floor() const { return narrow(floor_div(num_, den_)); }

std::int64_t Rational::ceil() const { return narrow(-floor_div(-Wide(num_), den_)); }

std::int64_t Rational::floor_times(std::int64_t k) const {
  return narrow(floor_div(Wide(num_) * k, den_));
}

std::int64_t Rational::ceil_divide(std::int64_t k) const {
  if (num_ <= 0) throw DomainError("ceil_divide requires a positive rational");
  return narrow(-floor_div(-(Wide(k) * den_), num_));
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  return make(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = Wide(a.num_) * b.den_;
  Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace asg
