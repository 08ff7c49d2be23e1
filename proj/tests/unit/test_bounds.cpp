#include <doctest.h>

#include <cmath>

#include "asg/bigint.hpp"
#include "asg/bounds.hpp"
#include "asg/errors.hpp"
#include "property.hpp"

using namespace asg;
using namespace asg::bounds;

namespace {

double as_double(const Real& r) { return r.convert_to<double>(); }

/// Entropy in plain double precision, for cross-checking the Real path.
double h(double p) {
  if (p <= 0 || p >= 1) return 0;
  return -(p * std::log2(p) + (1 - p) * std::log2(1 - p));
}

}  // namespace

TEST_CASE("entropy values") {
  CHECK(entropy(0.0) == 0.0);
  CHECK(entropy(1.0) == 0.0);
  CHECK(entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(entropy(0.25) == doctest::Approx(0.8112781244591328).epsilon(1e-13));
  CHECK(entropy(0.25) == doctest::Approx(2.0 - 0.75 * std::log2(3.0)).epsilon(1e-13));
  CHECK(as_double(entropy(Real(1) / 4)) == doctest::Approx(0.8112781244591328).epsilon(1e-15));
  CHECK_THROWS_AS(entropy(1.5), DomainError);
  CHECK_THROWS_AS(entropy(-0.1), DomainError);
}

TEST_CASE("advice bound values") {
  CHECK(as_double(advice_bound(1000, Rational(2))) == doctest::Approx(1000 * std::log2(1.25)).epsilon(1e-14));
  CHECK(as_double(advice_bound(1000, Rational(2))) == doctest::Approx(321.928).epsilon(1e-5));
  // c = 3: (c-1)^(c-1)/c^c = 4/27
  CHECK(as_double(advice_bound(27, Rational(3))) == doctest::Approx(27 * std::log2(31.0 / 27.0)).epsilon(1e-14));
  CHECK_THROWS_AS(advice_bound(10, Rational(1)), DomainError);
  CHECK_THROWS_AS(advice_bound(10, Rational(1, 2)), DomainError);
}

TEST_CASE("advice bound lies between the envelopes") {
  for (const Rational& c : {Rational(101, 100), Rational(11, 10), Rational(3, 2), Rational(2), Rational(3), Rational(5),
                            Rational(10), Rational(100)}) {
    const BoundReport r = bound_report(1'000'000, c);
    CAPTURE(c.to_string());
    CHECK(r.sandwich_holds);
    CHECK(r.lower_envelope <= r.bound);
    CHECK(r.bound <= r.upper_envelope);
  }
  asg_test::for_all<Rational>(
      3, 500, [](std::mt19937_64& rng) { return asg_test::random_ratio(rng, 1, 200); },
      [](const Rational& c) { return c <= Rational(1) || bound_report(1000, c).sandwich_holds; },
      [](const Rational& c) { return c.to_string(); });
}

TEST_CASE("the exponent maximizer") {
  const ExponentMaximizer m = exponent_maximizer(1000, Rational(2));
  CHECK(as_double(m.n_over_t) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(as_double(m.t_star) == doctest::Approx(200.0).epsilon(1e-15));
  for (const Rational& c : {Rational(11, 10), Rational(3, 2), Rational(2), Rational(3), Rational(7, 2), Rational(10)}) {
    CAPTURE(c.to_string());
    const std::uint64_t n = 5000;
    const ExponentMaximizer x = exponent_maximizer(n, c);
    const double cd = c.to_double();
    CHECK(as_double(x.n_over_t) > cd);
    CHECK(as_double(x.n_over_t) / cd >= 2.0);
    const Real at_max = entropy_exponent(n, x.t_star, c);
    const Real b = advice_bound(n, c);
    CHECK(as_double(abs(at_max - b) / b) < 1e-9);
    const Real step = Real(1) / 1000;
    const Real slope = (entropy_exponent(n, x.t_star + step, c) - entropy_exponent(n, x.t_star - step, c)) / (2 * step);
    CHECK(std::abs(as_double(slope)) < 1e-6 * n);
    const double t = as_double(x.t_star);
    CHECK(t > n / (std::exp(1.0) * cd));
    CHECK(t < n / (2 * cd));
    for (std::uint64_t s = 1; s + 1 < n; s += 37) {
      const Real second = entropy_exponent(n, Real(s + 1), c) - 2 * entropy_exponent(n, Real(s), c) +
                          entropy_exponent(n, Real(s - 1), c);
      CHECK(as_double(second) <= 0);
    }
  }
}

TEST_CASE("entropy properties on the standard grid") {
  const CheckReport r = check_entropy_properties(EntropyGrid::standard());
  CHECK(r.points > 0);
  for (const auto& v : r.violations) FAIL_CHECK(v);
}

TEST_CASE("the binomial entropy sandwich") {
  CHECK(check_binomial_entropy(10, 5));
  CHECK(check_binomial_entropy(10, 0));
  for (std::uint64_t n = 0; n <= 200; ++n)
    for (std::uint64_t m = 0; m <= n; ++m) REQUIRE(check_binomial_entropy(n, m));
}

TEST_CASE("binomial entropy agrees with the double-precision oracle") {
  for (std::uint64_t n : {10u, 50u, 120u}) {
    for (std::uint64_t m = 0; m <= n; ++m) {
      const double exact = as_double(asg::log2(binomial(n, m)));
      const double approx = n * h(static_cast<double>(m) / n);
      REQUIRE(exact <= approx + 1e-9);
      REQUIRE(exact >= approx - std::log2(n + 1.0) - 1e-9);
    }
  }
}

TEST_CASE("quotient slacks") {
  const QuotientSlackReport r = check_min_quotient_slack(100, Rational(2));
  CHECK(r.holds());
  CHECK(as_double(r.bound) == doctest::Approx(100 * std::log2(1.25)).epsilon(1e-12));
  CHECK(r.log_max >= r.bound - 2 * asg::log2(Real(101)) - 5);
  CHECK(r.log_max <= r.bound + 3 * asg::log2(Real(101)));
  for (std::uint64_t n = 3; n <= 300; n += 7) {
    for (const Rational& c : {Rational(3, 2), Rational(2), Rational(3), Rational(5)}) {
      CAPTURE(n);
      CAPTURE(c.to_string());
      REQUIRE(check_min_quotient_slack(n, c).holds());
      REQUIRE(check_max_quotient_slack(n, c).holds());
      REQUIRE(check_quotient_forms_within_n(n, c));
    }
  }
}

TEST_CASE("max_min_quotient matches a direct sweep") {
  for (std::uint64_t n = 3; n <= 60; ++n) {
    const Rational c(2);
    BigRational best = 0;
    for (std::uint64_t t = 1; c.floor_times(static_cast<std::int64_t>(t)) < static_cast<std::int64_t>(n); ++t) {
      const BigRational q(binomial(n, t), binomial(c.floor_times(static_cast<std::int64_t>(t)), t));
      if (q > best) best = q;
    }
    const QuotientMax m = max_min_quotient(n, c);
    REQUIRE(BigRational(m.numerator, m.denominator) == best);
  }
}

TEST_CASE("binomial fraction identity on random triples") {
  asg_test::for_all<std::array<std::uint64_t, 3>>(
      5, 500,
      [](std::mt19937_64& rng) {
        const std::uint64_t a = rng() % 80;
        const std::uint64_t b = a == 0 ? 0 : rng() % (a + 1);
        const std::uint64_t c = b == 0 ? 0 : rng() % (b + 1);
        return std::array<std::uint64_t, 3>{a, b, c};
      },
      [](const std::array<std::uint64_t, 3>& v) { return check_binomial_fraction_identity(v[0], v[1], v[2]); },
      [](const std::array<std::uint64_t, 3>& v) {
        return std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]);
      });
}

TEST_CASE("exponential quotient") {
  const ExponentialQuotientReport r = check_exponential_quotient(100, 2);
  CHECK(r.t == 18);
  CHECK(r.holds);
  CHECK(check_exponential_quotient(3, 2).t == 0);
  CHECK(check_exponential_quotient(3, 2).holds);
  for (std::uint64_t c = 2; c <= 10; ++c)
    for (std::uint64_t n = 50; n <= 1000; n += 50) REQUIRE(check_exponential_quotient(n, c).holds);
}

TEST_CASE("Pascal step used by the adversary recursion") {
  for (std::uint64_t d = 2; d <= 40; ++d)
    for (std::uint64_t k = 1; k <= d; ++k) REQUIRE(binomial(d - 1, k) - binomial(d - 2, k - 1) == binomial(d - 2, k));
}
