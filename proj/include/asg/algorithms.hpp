#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>

#include "asg/designs.hpp"
#include "asg/engine.hpp"
#include "asg/problems.hpp"
#include "asg/rational.hpp"

namespace asg::algorithms {

/// ceil(n / c) for c >= 1.
std::size_t residue_period(std::size_t n, const Rational& c);

/// One OR-bit per residue class modulo p = ceil(n/c), after p itself.
/// Strictly ceil(c)-competitive for MINASG; needs c >= 1.
AdvicePair trivial_min(const Rational& c);

/// Copies the leftmost block (of ceil(c) consecutive blocks of length
/// ceil(n/c)) with the most zeros, answers 1 elsewhere. Strictly
/// ceil(c)-competitive for MAXASG; needs c >= 1.
AdvicePair trivial_max(const Rational& c);

/// Width of the weight field that follows the self-delimited n.
std::size_t weight_field_width(std::size_t n);

/// The block of an (n, floor(ct), t) design that contains the 1s of x, where
/// t = |x|_1. Cost is exactly floor(ct) whenever 0 < floor(ct) < n.
/// Strictly c-competitive for MINASG; needs c > 1.
AdvicePair covering_min(const Rational& c,
                        const designs::SearchLimits& limits = designs::SearchLimits::from_environment());

/// The block of an (n, n - ceil(u/c), n - u) design that contains the 1s of
/// x, where u = |x|_0. Leaves exactly ceil(u/c) zeros when 0 < u < n.
/// Strictly c-competitive for MAXASG; needs c > 1.
AdvicePair covering_max(const Rational& c,
                        const designs::SearchLimits& limits = designs::SearchLimits::from_environment());

/// Parameters (v, k, t) of the design covering_min / covering_max use for
/// weight w (t = w for min, u = w for max). nullopt when no index is sent.
std::optional<std::array<std::size_t, 3>> covering_min_parameters(std::size_t n, const Rational& c,
                                                                  std::size_t ones);
std::optional<std::array<std::size_t, 3>> covering_max_parameters(std::size_t n, const Rational& c,
                                                                  std::size_t zeros);

// ----------------------------------------------------------------------------
// Algorithms for the online problems

/// Finds an optimal output x of the instance offline and sends it through
/// covering_min / covering_max; the online side replays the ASG algorithm and
/// ignores the requests.
problems::ProblemPair aoc_generic(problems::Problem problem, const Rational& c,
                                  const designs::SearchLimits& limits = designs::SearchLimits::from_environment());

/// Sends m = |OPT| self-delimited; accepts an item iff its weight is at most
/// 2/m and it still fits.
problems::ProblemPair knapsack_two_competitive();

/// The online solver of knapsack_two_competitive. It is copyable and its
/// whole state is exposed, so exhaustive checks can merge equal histories.
class KnapsackThreshold final : public problems::OnlineSolver {
 public:
  bool decide(const problems::Request& request, AdviceTape& tape) override;

  bool started() const { return started_; }
  std::uint64_t optimum_count() const { return m_; }
  const Rational& load() const { return load_; }
  std::size_t accepted() const { return accepted_; }

 private:
  bool started_ = false;
  std::uint64_t m_ = 0;
  Rational load_;
  std::size_t accepted_ = 0;
};

/// Accepts an edge iff it shares no endpoint with an accepted edge.
problems::ProblemPair greedy_matching();

}  // namespace asg::algorithms
