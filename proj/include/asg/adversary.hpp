#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "asg/bigint.hpp"
#include "asg/bitstring.hpp"
#include "asg/engine.hpp"
#include "asg/rational.hpp"

namespace asg::adversary {

/// min { q : m <= binom(q, h) }, the least cost any algorithm can be forced
/// to pay on m strings with h ones each. forced_cost_bound(1, 0) = 0.
std::uint64_t forced_cost_bound(std::uint64_t m, std::uint64_t h);

/// Strings of equal length and equal weight still consistent with the
/// revealed prefix.
struct AliveSet {
  std::vector<BitString> strings;
  std::size_t round = 1;  // the next round to be played

  /// Checks distinctness, equal length, equal weight and prefix agreement.
  void validate() const;
  /// Ones each string still has from `round` on.
  std::size_t remaining_ones() const;
};

struct GameTranscript {
  BitString revealed;
  BitString answers;
  std::size_t forced_ones = 0;
  /// The algorithm answered 0 where the revealed bit is 1.
  bool infeasible = false;
  Score cost() const { return infeasible ? Score::plus_infinity() : Score::finite(forced_ones); }
};

/// The adversary's bit for the current round given that the algorithm
/// answered 1 there and some alive string has a 1: reveal 1 iff
/// forced_cost_bound(|S1|, h-1) + 1 >= forced_cost_bound(|S|, h).
bool reveals_one(std::size_t alive, std::size_t with_one, std::size_t ones_left);

/// Plays the known-history lower-bound game against `algorithm`, whose advice
/// is already fixed on `tape`. Rounds where every alive string has a 0 reveal
/// 0 whatever the algorithm answers. An answer of 0 while some alive string
/// has a 1 reveals 1 and ends the game as infeasible.
GameTranscript known_history_adversary(const AliveSet& alive, Guesser& algorithm, AdviceTape& tape);

/// Least cost any deterministic algorithm achieves against
/// known_history_adversary, over every subset of the strings of length n and
/// weight h at once. Values are memoised per (round, subset), so sweeping all
/// subsets costs one pass over the game tree. Requires binom(n,h) <= 20.
class KnownHistoryGame {
 public:
  KnownHistoryGame(std::size_t n, std::size_t h);

  /// All strings of length n and weight h, in increasing mask order.
  const std::vector<BitString>& strings() const { return strings_; }
  /// `subset` selects from strings(); its members must agree before `round`.
  std::uint64_t value(std::uint64_t subset, std::size_t round = 1);
  /// The subset mask for explicit strings.
  std::uint64_t subset_of(const std::vector<BitString>& members) const;

 private:
  std::size_t n_;
  std::size_t h_;
  std::vector<BitString> strings_;
  std::vector<std::uint64_t> ones_at_;  // ones_at_[r]: subset with a 1 in round r
  std::vector<std::vector<std::uint8_t>> suffix_ones_;  // [string][round]
  std::vector<std::vector<std::uint8_t>> memo_;         // [round][subset], 255 = unknown
};

/// KnownHistoryGame value for an explicit alive set.
std::uint64_t known_history_game_value(const AliveSet& alive);

/// Known-history strategies as explicit tables: answer for round i after
/// prefix p (|p| = i-1) is bit (2^{i-1} - 1 + value(p)) of `table`, where
/// value reads p_1 as the most significant bit. There are 2^(2^n - 1) tables.
class TableStrategy final : public Guesser {
 public:
  TableStrategy(std::uint64_t table, std::size_t n) : table_(table), n_(n) {}
  void learn(bool previous) override { prefix_ = (prefix_ << 1) | (previous ? 1u : 0u); }
  bool guess(std::size_t round, AdviceTape&) override;

 private:
  std::uint64_t table_;
  std::size_t n_;
  std::uint64_t prefix_ = 0;
};

struct FirstZeroOutcome {
  BitString x;
  std::vector<BitString> outputs;  // one per strategy
  std::vector<Score> profits;      // MAXASG score of each output on x
};

/// x_i = 1 iff some strategy that answered 1 in every earlier round answers
/// 0 in round i. Strategies learn x_{i-1} before round i and are played with
/// an empty tape. Requires at most n/2 strategies.
FirstZeroOutcome first_zero_adversary(std::vector<std::unique_ptr<Guesser>>& strategies, std::size_t n);

/// Deterministic strategies obtained from `pair`'s algorithm by fixing each
/// of the 2^bits possible advice prefixes (later reads return 0). A prefix the
/// algorithm cannot decode turns it into "answer 1" from that round on.
std::vector<std::unique_ptr<Guesser>> fixed_advice_strategies(const AdvicePair& pair, std::size_t bits);

/// Minimum number of outputs an unknown-history algorithm needs so that every
/// x has a c-competitive y with x ⊑ y, by exact set cover over {0,1}^n. When
/// the search budget runs out, [lower, upper] brackets the minimum.
struct BruteAdvice {
  std::size_t n = 0;
  Rational c;
  Objective objective = Objective::minimize;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  bool exact = false;
  /// ceil(log2) of lower and upper; the advice is determined when equal.
  std::uint64_t bits_lower = 0;
  std::uint64_t bits_upper = 0;
  std::vector<BitString> family;  // a family of size `upper`
  std::uint64_t nodes = 0;
  bool bits_determined() const { return bits_lower == bits_upper; }
};

BruteAdvice brute_min_advice(std::size_t n, const Rational& c, Objective objective,
                                     std::uint64_t node_budget = 1'000'000, std::size_t max_n = 8);

/// Whether y serves x within ratio c: x ⊑ y and |y|_1 <= floor(c |x|_1)
/// (min) or |y|_0 >= ceil(|x|_0 / c) (max).
bool serves(Objective objective, const Rational& c, const BitString& x, const BitString& y);

/// Per-weight design parameters across all weights: max and sum of the
/// covering numbers used by the covering algorithms, from exact search.
struct DesignSandwich {
  BigInt max_size;
  BigInt sum_size;
  std::uint64_t bits_lower = 0;  // ceil(log2 max_size)
  std::uint64_t bits_upper = 0;  // ceil(log2 sum_size)
};

DesignSandwich design_sandwich(std::size_t n, const Rational& c, Objective objective);

}  // namespace asg::adversary
