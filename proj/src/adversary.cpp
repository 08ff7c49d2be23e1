#include "asg/adversary.hpp"

#include <algorithm>
#include <set>

#include "asg/algorithms.hpp"
#include "asg/designs.hpp"
#include "asg/errors.hpp"
#include "asg/setcover.hpp"

namespace asg::adversary {

std::uint64_t forced_cost_bound(std::uint64_t m, std::uint64_t h) {
  if (m == 0) throw ContractViolation("forced_cost_bound needs m >= 1");
  if (h == 0) {
    if (m > 1) throw ContractViolation("distinct strings cannot all have no ones left");
    return 0;
  }
  std::uint64_t q = h;
  BigInt row = 1;  // binom(q, h)
  while (row < m) {
    ++q;
    row = row * q / (q - h);
  }
  return q;
}

void AliveSet::validate() const {
  if (strings.empty()) throw ContractViolation("alive set is empty");
  const std::size_t n = strings.front().size();
  const std::size_t w = strings.front().ones();
  std::set<BitString> seen;
  for (const BitString& s : strings) {
    if (s.size() != n) throw ContractViolation("alive strings differ in length");
    if (s.ones() != w) throw ContractViolation("alive strings differ in weight");
    if (!seen.insert(s).second) throw ContractViolation("alive strings repeat");
    for (std::size_t i = 1; i < round && i <= n; ++i) {
      if (s.at(i) != strings.front().at(i)) throw ContractViolation("alive strings disagree on the revealed prefix");
    }
  }
  if (round < 1 || round > n + 1) throw ContractViolation("alive set round out of range");
}

std::size_t AliveSet::remaining_ones() const {
  std::size_t h = 0;
  for (std::size_t i = round; i <= strings.front().size(); ++i) h += strings.front().at(i) ? 1 : 0;
  return h;
}

bool reveals_one(std::size_t alive, std::size_t with_one, std::size_t ones_left) {
  if (with_one == 0) return false;
  if (with_one == alive) return true;
  const std::uint64_t d_start = forced_cost_bound(alive, ones_left);
  const std::uint64_t d_one = forced_cost_bound(with_one, ones_left - 1);
  return d_one + 1 >= d_start;
}

GameTranscript known_history_adversary(const AliveSet& alive, Guesser& algorithm, AdviceTape& tape) {
  alive.validate();
  const std::size_t n = alive.strings.front().size();
  std::vector<BitString> current = alive.strings;
  GameTranscript game;
  game.revealed = BitString(n);
  game.answers = BitString(n);
  for (std::size_t r = 1; r <= n; ++r) {
    if (r >= 2) algorithm.learn(game.revealed.at(r - 1));
    const bool answer = algorithm.guess(r, tape);
    game.answers.set(r, answer);
    if (answer) ++game.forced_ones;

    std::size_t ones_left = 0;
    for (std::size_t i = r; i <= n; ++i) ones_left += current.front().at(i) ? 1 : 0;
    const auto with_one = static_cast<std::size_t>(
        std::count_if(current.begin(), current.end(), [r](const BitString& s) { return s.at(r); }));
    bool bit = false;
    if (with_one > 0 && !answer) {
      bit = true;
      game.infeasible = true;
    } else {
      bit = reveals_one(current.size(), with_one, ones_left);
    }
    game.revealed.set(r, bit);
    std::erase_if(current, [r, bit](const BitString& s) { return s.at(r) != bit; });
  }
  algorithm.end_of_input(n > 0 ? std::optional<bool>(game.revealed.at(n)) : std::nullopt);
  return game;
}

KnownHistoryGame::KnownHistoryGame(std::size_t n, std::size_t h) : n_(n), h_(h) {
  if (h > n || n > 20) throw ContractViolation("KnownHistoryGame needs h <= n <= 20");
  for (const BitString& s : all_strings(n)) {
    if (s.ones() == h) strings_.push_back(s);
  }
  if (strings_.size() > 20) throw ResourceLimitExceeded("KnownHistoryGame limited to 20 strings");
  ones_at_.assign(n + 2, 0);
  suffix_ones_.assign(strings_.size(), std::vector<std::uint8_t>(n + 2, 0));
  for (std::size_t k = 0; k < strings_.size(); ++k) {
    for (std::size_t r = n; r >= 1; --r) {
      suffix_ones_[k][r] = static_cast<std::uint8_t>(suffix_ones_[k][r + 1] + (strings_[k].at(r) ? 1 : 0));
      if (strings_[k].at(r)) ones_at_[r] |= std::uint64_t{1} << k;
    }
  }
  memo_.resize(n + 2);
}

std::uint64_t KnownHistoryGame::subset_of(const std::vector<BitString>& members) const {
  std::uint64_t mask = 0;
  for (const BitString& s : members) {
    auto it = std::lower_bound(strings_.begin(), strings_.end(), s,
                               [](const BitString& a, const BitString& b) { return a.to_mask() < b.to_mask(); });
    if (it == strings_.end() || *it != s) throw ContractViolation("string not of this game's length and weight");
    mask |= std::uint64_t{1} << (it - strings_.begin());
  }
  return mask;
}

std::uint64_t KnownHistoryGame::value(std::uint64_t subset, std::size_t round) {
  if (subset == 0) throw ContractViolation("empty alive subset");
  if (round > n_) return 0;
  auto& table = memo_[round];
  if (table.empty()) table.assign(std::size_t{1} << strings_.size(), 255);
  if (table[subset] != 255) return table[subset];
  const std::uint64_t with_one = subset & ones_at_[round];
  std::uint64_t result = 0;
  if (with_one == 0) {
    result = value(subset, round + 1);
  } else {
    const std::size_t first = static_cast<std::size_t>(__builtin_ctzll(subset));
    const bool one = reveals_one(static_cast<std::size_t>(__builtin_popcountll(subset)),
                                 static_cast<std::size_t>(__builtin_popcountll(with_one)),
                                 suffix_ones_[first][round]);
    result = 1 + value(one ? with_one : (subset & ~with_one), round + 1);
  }
  table[subset] = static_cast<std::uint8_t>(result);
  return result;
}

std::uint64_t known_history_game_value(const AliveSet& alive) {
  alive.validate();
  KnownHistoryGame game(alive.strings.front().size(), alive.strings.front().ones());
  return game.value(game.subset_of(alive.strings), alive.round);
}

bool TableStrategy::guess(std::size_t round, AdviceTape&) {
  if (round < 1 || round > n_) throw ContractViolation("table strategy asked for a round past n");
  const std::uint64_t index = (std::uint64_t{1} << (round - 1)) - 1 + prefix_;
  return (table_ >> index) & 1u;
}

// ----------------------------------------------------------------------------

namespace {

class FixedTapeGuesser final : public Guesser {
 public:
  FixedTapeGuesser(std::unique_ptr<Guesser> inner, Bits advice) : inner_(std::move(inner)), tape_(std::move(advice)) {}
  bool guess(std::size_t round, AdviceTape&) override {
    if (undecodable_) return true;
    try {
      return inner_->guess(round, tape_);
    } catch (const MalformedAdvice&) {
      undecodable_ = true;
      return true;
    }
  }
  void learn(bool previous) override {
    if (!undecodable_) inner_->learn(previous);
  }
  void end_of_input(std::optional<bool> last) override {
    if (!undecodable_) inner_->end_of_input(last);
  }

 private:
  std::unique_ptr<Guesser> inner_;
  AdviceTape tape_;
  bool undecodable_ = false;
};

}  // namespace

std::vector<std::unique_ptr<Guesser>> fixed_advice_strategies(const AdvicePair& pair, std::size_t bits) {
  if (bits > 20) throw ResourceLimitExceeded("fixed_advice_strategies limited to 20 bits");
  std::vector<std::unique_ptr<Guesser>> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << bits); ++v) {
    Bits advice;
    append_fixed(advice, v, bits);
    out.push_back(std::make_unique<FixedTapeGuesser>(pair.algorithm(), std::move(advice)));
  }
  return out;
}

FirstZeroOutcome first_zero_adversary(std::vector<std::unique_ptr<Guesser>>& strategies, std::size_t n) {
  if (2 * strategies.size() > n) throw ContractViolation("first_zero_adversary needs at most n/2 strategies");
  FirstZeroOutcome out;
  out.x = BitString(n);
  out.outputs.assign(strategies.size(), BitString(n));
  std::vector<bool> only_ones(strategies.size(), true);
  AdviceTape empty;
  for (std::size_t i = 1; i <= n; ++i) {
    bool bit = false;
    for (std::size_t k = 0; k < strategies.size(); ++k) {
      if (i >= 2) strategies[k]->learn(out.x.at(i - 1));
      const bool answer = strategies[k]->guess(i, empty);
      out.outputs[k].set(i, answer);
      if (only_ones[k] && !answer) bit = true;
      only_ones[k] = only_ones[k] && answer;
    }
    out.x.set(i, bit);
  }
  for (std::size_t k = 0; k < strategies.size(); ++k) {
    strategies[k]->end_of_input(n > 0 ? std::optional<bool>(out.x.at(n)) : std::nullopt);
    out.profits.push_back(asg_score(kMaxKnown, out.x, out.outputs[k]));
  }
  return out;
}

// ----------------------------------------------------------------------------

bool serves(Objective objective, const Rational& c, const BitString& x, const BitString& y) {
  if (!dominates(x, y)) return false;
  const __int128 num = c.num();
  const __int128 den = c.den();
  if (objective == Objective::minimize) return __int128(y.ones()) * den <= num * __int128(x.ones());
  return __int128(y.zeros()) * num >= __int128(x.zeros()) * den;
}

BruteAdvice brute_min_advice(std::size_t n, const Rational& c, Objective objective, std::uint64_t node_budget,
                             std::size_t max_n) {
  if (c < Rational(1)) throw DomainError("c must be at least 1");
  if (n > max_n) throw ResourceLimitExceeded("brute_min_advice limited to n <= " + std::to_string(max_n));
  const std::vector<BitString> strings = all_strings(n);
  setcover::Problem problem;
  problem.elements = strings.size();
  for (const BitString& y : strings) {
    std::vector<std::uint32_t> served;
    for (std::size_t k = 0; k < strings.size(); ++k) {
      if (serves(objective, c, strings[k], y)) served.push_back(static_cast<std::uint32_t>(k));
    }
    problem.sets.push_back(std::move(served));
  }
  const setcover::Solution solution = setcover::solve(problem, node_budget);
  BruteAdvice out;
  out.n = n;
  out.c = c;
  out.objective = objective;
  out.lower = solution.lower;
  out.upper = solution.upper;
  out.exact = solution.exact;
  out.bits_lower = ceil_log2(solution.lower);
  out.bits_upper = ceil_log2(solution.upper);
  out.nodes = solution.nodes;
  for (std::size_t k : solution.chosen) out.family.push_back(strings[k]);
  return out;
}

DesignSandwich design_sandwich(std::size_t n, const Rational& c, Objective objective) {
  DesignSandwich out;
  out.max_size = 0;
  out.sum_size = 0;
  for (std::size_t w = 0; w <= n; ++w) {
    const auto params = objective == Objective::minimize ? algorithms::covering_min_parameters(n, c, w)
                                                         : algorithms::covering_max_parameters(n, c, w);
    BigInt size = 1;
    if (params) {
      const auto& shared = designs::shared_design((*params)[0], (*params)[1], (*params)[2]);
      if (shared.source != designs::DesignSource::exact) {
        throw ResourceLimitExceeded("exact covering number unavailable for the sandwich");
      }
      size = shared.design.size();
    }
    out.max_size = std::max(out.max_size, size);
    out.sum_size += size;
  }
  out.bits_lower = asg::ceil_log2(out.max_size);
  out.bits_upper = asg::ceil_log2(out.sum_size);
  return out;
}

}  // namespace asg::adversary
