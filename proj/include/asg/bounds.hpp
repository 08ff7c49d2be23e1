#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "asg/bigint.hpp"
#include "asg/errors.hpp"
#include "asg/rational.hpp"

namespace asg::bounds {

/// Binary entropy in bits, H(0) = H(1) = 0. Throws DomainError outside [0,1].
template <class T>
T entropy(const T& p) {
  using std::log;
  if (p < 0 || p > 1) throw DomainError("entropy argument outside [0,1]");
  if (p == 0 || p == 1) return T(0);
  const T ln2 = log(T(2));
  return -(p * log(p) + (1 - p) * log(1 - p)) / ln2;
}

/// n * log2(1 + ((c-1)/c)^(c-1) / c), which equals n * log2(1 + (c-1)^(c-1)/c^c).
/// Requires c > 1.
Real advice_bound(std::uint64_t n, const Rational& c);
Real lower_envelope(std::uint64_t n, const Rational& c);  // n / (e ln2 c)
Real upper_envelope(std::uint64_t n, const Rational& c);  // n / c

struct BoundReport {
  std::uint64_t n = 0;
  Rational c;
  Real bound;
  Real lower_envelope;
  Real upper_envelope;
  bool sandwich_holds = false;
};

/// Relative tolerance applies to both envelope comparisons.
BoundReport bound_report(std::uint64_t n, const Rational& c, double relative_tolerance = 1e-9);

/// M(n,t) = n H(t/n) - c t H(1/c), defined for real t in [0, n].
Real entropy_exponent(std::uint64_t n, const Real& t, const Rational& c);

struct ExponentMaximizer {
  Rational c;
  Real n_over_t;  // (c/(c-1))^c (c-1) + 1
  Real t_star;    // the maximizing t
};

ExponentMaximizer exponent_maximizer(std::uint64_t n, const Rational& c);

// ---------------------------------------------------------------------------
// Property checks. Each returns the failing points rather than throwing.

struct CheckReport {
  std::size_t points = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  void merge(const CheckReport& other);
};

struct EntropyGrid {
  std::vector<double> s_values;  // s > 1, for the H(1/s) identity and bound
  std::vector<double> p_values;  // 0 < p < 1, for concavity and slope
  std::vector<double> monotone_t_values;
  std::uint64_t monotone_s_max = 50;
  std::vector<std::uint64_t> n_values;  // n >= 3, for the step difference
  std::vector<double> x_values;         // x > 2, for the step difference

  static EntropyGrid standard();
};

CheckReport check_entropy_properties(const EntropyGrid& grid);

/// 2^{nH(m/n)}/(n+1) <= binom(n,m) <= 2^{nH(m/n)}, compared in log space.
bool check_binomial_entropy(std::uint64_t n, std::uint64_t m);

/// Exact maximum of binom(n,t)/binom(floor(ct),t) over t with floor(ct) < n.
struct QuotientMax {
  std::uint64_t argmax = 0;
  BigInt numerator;    // binom(n, argmax)
  BigInt denominator;  // binom(floor(c argmax), argmax)
  Real log2_value;
};

QuotientMax max_min_quotient(std::uint64_t n, const Rational& c);
/// Exact maximum of binom(n,u)/binom(n - ceil(u/c), n - u) over 0 < u < n.
QuotientMax max_max_quotient(std::uint64_t n, const Rational& c);

struct QuotientSlackReport {
  std::uint64_t n = 0;
  Rational c;
  Real bound;
  Real log_max;        // log2 of the maximum quotient
  Real lower_limit;    // the quantity log_max must reach
  Real upper_limit;    // the quantity log_max + log n must stay under
  bool lower_holds = false;
  bool upper_holds = false;
  bool holds() const { return lower_holds && upper_holds; }
};

/// With f the min quotient and B the advice bound:
/// log max f >= B - 2log(n+1) - 5 and log max f + log n <= B + 3log(n+1).
QuotientSlackReport check_min_quotient_slack(std::uint64_t n, const Rational& c);
/// Same with g the max quotient: log max g >= B - 3log n - 6 and log max g + log n <= B + 4log(n+1).
QuotientSlackReport check_max_quotient_slack(std::uint64_t n, const Rational& c);

/// max_u g(u) <= n max_t f(t) and max_u g(u) >= max_t f(t) / n, exactly.
bool check_quotient_forms_within_n(std::uint64_t n, const Rational& c);

/// binom(a,c)/binom(b,c) == binom(a,b)/binom(a-c,a-b) for c <= b <= a, exactly.
bool check_binomial_fraction_identity(std::uint64_t a, std::uint64_t b, std::uint64_t c);

struct ExponentialQuotientReport {
  std::uint64_t n = 0;
  std::uint64_t c = 0;
  std::uint64_t t = 0;
  Real log_quotient;  // log2 binom(n,t) - log2 binom(ct,t)
  Real required;      // t log2 e
  bool holds = false;
};

/// At t = floor(n/(ec)): binom(n,t)/binom(ct,t) >= e^t, compared in log space
/// with an absolute tolerance. Requires integer c >= 2 and ct < n.
ExponentialQuotientReport check_exponential_quotient(std::uint64_t n, std::uint64_t c,
                                                     double tolerance = 1e-9);

}  // namespace asg::bounds
