#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include <doctest.h>

#include "asg/bitstring.hpp"
#include "asg/rational.hpp"

namespace asg_test {

/// Runs `check` on `cases` generated values. The first failing value is
/// reported with its case number and the seed, which is enough to replay it.
template <class T>
void for_all(std::uint64_t seed, int cases, const std::function<T(std::mt19937_64&)>& generate,
             const std::function<bool(const T&)>& check, const std::function<std::string(const T&)>& show) {
  std::mt19937_64 rng(seed);
  for (int k = 0; k < cases; ++k) {
    const T value = generate(rng);
    if (!check(value)) {
      FAIL("property failed on case " << k << " (seed " << seed << "): " << show(value));
      return;
    }
  }
}

inline asg::BitString random_bits(std::mt19937_64& rng, std::size_t n) {
  asg::BitString x(n);
  for (std::size_t i = 1; i <= n; ++i) x.set(i, rng() & 1u);
  return x;
}

/// A ratio p/q in [lo, hi) with q <= 12.
inline asg::Rational random_ratio(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % 12);
  const std::int64_t span = (hi - lo) * q;
  return asg::Rational(lo * q + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(span)), q);
}

}  // namespace asg_test
