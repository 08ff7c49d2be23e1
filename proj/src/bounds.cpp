#include "asg/bounds.hpp"

#include <sstream>

namespace asg::bounds {

namespace {

void require_above_one(const Rational& c) {
  if (c <= Rational(1)) throw DomainError("c must exceed 1, got " + c.to_string());
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

Real log2_real(const Real& x) { return log(x) / ln2(); }

}  // namespace

Real advice_bound(std::uint64_t n, const Rational& c) {
  require_above_one(c);
  const Real cr = to_real(c);
  const Real ratio = (cr - 1) / cr;
  return Real(n) * log2_real(1 + pow(ratio, cr - 1) / cr);
}

Real lower_envelope(std::uint64_t n, const Rational& c) {
  require_above_one(c);
  return Real(n) / (euler_e() * ln2() * to_real(c));
}

Real upper_envelope(std::uint64_t n, const Rational& c) {
  require_above_one(c);
  return Real(n) / to_real(c);
}

BoundReport bound_report(std::uint64_t n, const Rational& c, double relative_tolerance) {
  BoundReport r;
  r.n = n;
  r.c = c;
  r.bound = advice_bound(n, c);
  r.lower_envelope = lower_envelope(n, c);
  r.upper_envelope = upper_envelope(n, c);
  const Real tol(relative_tolerance);
  r.sandwich_holds = r.lower_envelope <= r.bound * (1 + tol) && r.bound <= r.upper_envelope * (1 + tol);
  return r;
}

Real entropy_exponent(std::uint64_t n, const Real& t, const Rational& c) {
  require_above_one(c);
  if (n == 0) throw DomainError("M(n,t) needs n >= 1");
  if (t < 0 || t > Real(n)) throw DomainError("M(n,t) needs 0 <= t <= n");
  const Real cr = to_real(c);
  return Real(n) * entropy(Real(t / Real(n))) - cr * t * entropy(Real(1 / cr));
}

ExponentMaximizer exponent_maximizer(std::uint64_t n, const Rational& c) {
  require_above_one(c);
  const Real cr = to_real(c);
  ExponentMaximizer m;
  m.c = c;
  m.n_over_t = pow(cr / (cr - 1), cr) * (cr - 1) + 1;
  m.t_star = Real(n) / m.n_over_t;
  return m;
}

void CheckReport::merge(const CheckReport& other) {
  points += other.points;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

EntropyGrid EntropyGrid::standard() {
  EntropyGrid g;
  g.s_values = {1.01, 1.1, 1.5, 2, 2.5, 3, 4, 5, 7.5, 10, 33, 100, 1000, 1e6};
  for (int i = 1; i < 100; ++i) g.p_values.push_back(i / 100.0);
  g.monotone_t_values = {0.5, 1, 2, 3.5, 10};
  g.monotone_s_max = 50;
  g.n_values = {3, 4, 5, 6, 10, 20, 100, 1000, 100000};
  g.x_values = {2.0001, 2.01, 2.1, 2.5, 3, 4, 5, 10, 100, 1000};
  return g;
}

CheckReport check_entropy_properties(const EntropyGrid& grid) {
  CheckReport report;
  auto H = [](const Real& p) { return entropy(p); };
  for (double sd : grid.s_values) {
    const Real s(sd);
    const Real lhs = H(1 / s);
    const Real h1 = log2_real(s) + (1 - s) / s * log2_real(s - 1);
    report.points += 2;
    if (abs(lhs - h1) > Real("1e-40")) report.violations.push_back("identity for H(1/s) fails at s=" + fmt(sd));
    if (s * lhs > log2_real(s) + 2) report.violations.push_back("s H(1/s) <= log s + 2 fails at s=" + fmt(sd));
  }
  for (double p : grid.p_values) {
    if (p <= 0 || p >= 1) continue;
    // Truncation error of the central differences grows like h^2 / p^2 near the ends.
    const double h = 1e-4 * std::min(p, 1 - p);
    const double second = (entropy(p + h) - 2 * entropy(p) + entropy(p - h)) / (h * h);
    const double slope = (entropy(p + h) - entropy(p - h)) / (2 * h);
    const double expected_slope = std::log2(1 / p - 1);
    report.points += 2;
    if (!(second < -1e-6)) report.violations.push_back("concavity fails at p=" + fmt(p));
    if (std::abs(slope - expected_slope) > 1e-6) report.violations.push_back("derivative log(1/p - 1) fails at p=" + fmt(p));
  }
  for (double td : grid.monotone_t_values) {
    const Real t(td);
    Real previous = -1;
    bool first = true;
    for (std::uint64_t si = static_cast<std::uint64_t>(std::floor(td)) + 1; si <= grid.monotone_s_max; ++si) {
      const Real s(si);
      if (s <= t) continue;
      const Real value = s * H(t / s);
      ++report.points;
      if (!first && !(value > previous)) {
        report.violations.push_back("s H(t/s) not increasing at t=" + fmt(td) + ", s=" + std::to_string(si));
      }
      previous = value;
      first = false;
    }
  }
  for (std::uint64_t n : grid.n_values) {
    for (double xd : grid.x_values) {
      if (n < 3 || xd <= 2) continue;
      const Real x(xd);
      const Real nn(n);
      const Real diff = nn * H(1 / x) - nn * H(1 / x + 1 / nn);
      ++report.points;
      if (!(diff < 3)) report.violations.push_back("n H(1/x) - n H(1/x + 1/n) >= 3 at n=" + std::to_string(n) + ", x=" + fmt(xd));
    }
  }
  return report;
}

bool check_binomial_entropy(std::uint64_t n, std::uint64_t m) {
  if (m > n) throw ContractViolation("check_binomial_entropy needs m <= n");
  if (n == 0) return true;
  const Real log_binom = asg::log2(binomial(n, m));
  const Real nh = Real(n) * entropy(Real(Real(m) / Real(n)));
  const Real eps("1e-60");
  return nh - log2_real(Real(n + 1)) <= log_binom + eps && log_binom <= nh + eps;
}

QuotientMax max_min_quotient(std::uint64_t n, const Rational& c) {
  require_above_one(c);
  QuotientMax best;
  bool have = false;
  BigInt row = 1;  // binom(n, t)
  for (std::uint64_t t = 0;; ++t) {
    const std::int64_t k = c.floor_times(static_cast<std::int64_t>(t));
    if (static_cast<std::uint64_t>(k) >= n) break;
    BigInt den = binomial(static_cast<std::uint64_t>(k), t);
    if (!have || row * best.denominator > best.numerator * den) {
      best.argmax = t;
      best.numerator = row;
      best.denominator = den;
      have = true;
    }
    if (t == n) break;
    row = row * (n - t) / (t + 1);
  }
  if (!have) throw DomainError("no t with floor(ct) < n");
  best.log2_value = log2_ratio(best.numerator, best.denominator);
  return best;
}

QuotientMax max_max_quotient(std::uint64_t n, const Rational& c) {
  require_above_one(c);
  if (n < 2) throw DomainError("max-variant quotient needs n >= 2");
  QuotientMax best;
  bool have = false;
  for (std::uint64_t u = 1; u < n; ++u) {
    const auto zeros = static_cast<std::uint64_t>(c.ceil_divide(static_cast<std::int64_t>(u)));
    BigInt num = binomial(n, u);
    BigInt den = binomial(n - zeros, n - u);
    if (!have || num * best.denominator > best.numerator * den) {
      best.argmax = u;
      best.numerator = std::move(num);
      best.denominator = std::move(den);
      have = true;
    }
  }
  best.log2_value = log2_ratio(best.numerator, best.denominator);
  return best;
}

QuotientSlackReport check_min_quotient_slack(std::uint64_t n, const Rational& c) {
  if (n < 3) throw DomainError("the quotient bounds need n >= 3");
  QuotientSlackReport r;
  r.n = n;
  r.c = c;
  r.bound = advice_bound(n, c);
  r.log_max = max_min_quotient(n, c).log2_value;
  const Real log_n1 = log2_real(Real(n + 1));
  r.lower_limit = r.bound - 2 * log_n1 - 5;
  r.upper_limit = r.bound + 3 * log_n1;
  r.lower_holds = r.log_max >= r.lower_limit;
  r.upper_holds = r.log_max + log2_real(Real(n)) <= r.upper_limit;
  return r;
}

QuotientSlackReport check_max_quotient_slack(std::uint64_t n, const Rational& c) {
  if (n < 3) throw DomainError("the quotient bounds need n >= 3");
  QuotientSlackReport r;
  r.n = n;
  r.c = c;
  r.bound = advice_bound(n, c);
  r.log_max = max_max_quotient(n, c).log2_value;
  const Real log_n = log2_real(Real(n));
  r.lower_limit = r.bound - 3 * log_n - 6;
  r.upper_limit = r.bound + 4 * log2_real(Real(n + 1));
  r.lower_holds = r.log_max >= r.lower_limit;
  r.upper_holds = r.log_max + log_n <= r.upper_limit;
  return r;
}

bool check_quotient_forms_within_n(std::uint64_t n, const Rational& c) {
  const QuotientMax f = max_min_quotient(n, c);
  const QuotientMax g = max_max_quotient(n, c);
  const BigInt gf = g.numerator * f.denominator;
  const BigInt fg = f.numerator * g.denominator;
  return gf <= fg * n && gf * n >= fg;
}

bool check_binomial_fraction_identity(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  if (!(c <= b && b <= a)) throw ContractViolation("identity needs c <= b <= a");
  // C(a,c)/C(b,c) == C(a,b)/C(a-c,a-b)  <=>  C(a,c) C(a-c,a-b) == C(a,b) C(b,c)
  return binomial(a, c) * binomial(a - c, a - b) == binomial(a, b) * binomial(b, c);
}

ExponentialQuotientReport check_exponential_quotient(std::uint64_t n, std::uint64_t c, double tolerance) {
  if (c < 2) throw DomainError("the exponential quotient check needs an integer c >= 2");
  ExponentialQuotientReport r;
  r.n = n;
  r.c = c;
  r.t = static_cast<std::uint64_t>(boost::multiprecision::floor(Real(n) / (euler_e() * Real(c))));
  if (c * r.t >= n && r.t > 0) throw DomainError("ct must stay below n");
  r.log_quotient = log2_ratio(binomial(n, r.t), binomial(c * r.t, r.t));
  r.required = Real(r.t) * log2_real(euler_e());
  r.holds = r.log_quotient >= r.required - Real(tolerance);
  return r;
}

}  // namespace asg::bounds
