#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "asg/advice_tape.hpp"
#include "asg/bitstring.hpp"
#include "asg/rational.hpp"
#include "asg/score.hpp"

namespace asg {

enum class History { known, unknown };

struct AsgVariant {
  Objective objective = Objective::minimize;
  History history = History::unknown;

  friend bool operator==(const AsgVariant&, const AsgVariant&) = default;
};

inline constexpr AsgVariant kMinUnknown{Objective::minimize, History::unknown};
inline constexpr AsgVariant kMinKnown{Objective::minimize, History::known};
inline constexpr AsgVariant kMaxUnknown{Objective::maximize, History::unknown};
inline constexpr AsgVariant kMaxKnown{Objective::maximize, History::known};

std::string to_string(AsgVariant variant);
/// "min-unknown", "max-known", ...
AsgVariant parse_variant(const std::string& text);

/// +inf / -inf if y misses a 1 of x; otherwise |y|_1 (min) or |y|_0 (max).
Score asg_score(AsgVariant variant, const BitString& x, const BitString& y);

/// |x|_1 for minimization, |x|_0 for maximization: the score of y = x.
Score asg_optimum(AsgVariant variant, const BitString& x);

/// An online ASG algorithm for a single run. It never sees n.
class Guesser {
 public:
  virtual ~Guesser() = default;

  /// Answer for round `round` (1-based).
  virtual bool guess(std::size_t round, AdviceTape& tape) = 0;
  /// Known history only: x_{i-1}, delivered at the start of round i >= 2.
  virtual void learn(bool /*previous*/) {}
  /// The final dummy request. Carries x_n under known history.
  virtual void end_of_input(std::optional<bool> /*last*/) {}
};

using GuesserFactory = std::function<std::unique_ptr<Guesser>()>;

/// An oracle together with the algorithm that reads its advice.
struct AdvicePair {
  std::string name;
  std::function<Bits(const BitString&)> oracle;
  GuesserFactory algorithm;
  /// Upper bound on bits read for inputs of length n.
  std::function<std::uint64_t(std::size_t)> declared_budget;
};

struct RunResult {
  BitString y;
  Score score = Score::finite(0);
  std::size_t advice_bits_read = 0;
};

/// Drives n rounds of `variant` with the given tape.
RunResult run_asg(AsgVariant variant, Guesser& algorithm, AdviceTape& tape, const BitString& x);
/// Lets the oracle write the tape for x, then runs a fresh algorithm on it.
RunResult run_asg(AsgVariant variant, const AdvicePair& pair, const BitString& x);

// ----------------------------------------------------------------------------
// Competitiveness

/// cost(ALG) <= c*cost(OPT) + alpha (min) or profit(OPT) <= c*profit(ALG) + alpha (max).
/// Any infinite ALG score fails.
bool satisfies_ratio(Objective objective, const Score& alg, const Score& opt, const Rational& c,
                     std::uint64_t alpha);

struct CompetitiveVerdict {
  Rational ratio;
  std::uint64_t additive = 0;
  bool strict = true;
  bool holds = true;
  std::size_t instances_checked = 0;
  /// The first failing instance, when !holds.
  std::optional<std::string> witness;
  std::optional<Score> witness_alg;
  std::optional<Score> witness_opt;
};

struct Trial {
  std::string label;
  Score alg;
  Score opt;
};

/// Checks every trial produced by `next` until it returns nullopt.
CompetitiveVerdict verify_competitive(Objective objective, const Rational& c, std::uint64_t alpha,
                                      const std::function<std::optional<Trial>()>& next);

/// Exhaustive check of `pair` over all x in {0,1}^n.
CompetitiveVerdict verify_asg_pair(AsgVariant variant, const AdvicePair& pair, const Rational& c,
                                   std::uint64_t alpha, std::size_t n);

}  // namespace asg
