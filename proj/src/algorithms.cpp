#include "asg/algorithms.hpp"

#include <algorithm>

#include "asg/errors.hpp"

namespace asg::algorithms {

namespace {

void require_at_least_one(const Rational& c) {
  if (c < Rational(1)) throw DomainError("c must be at least 1, got " + c.to_string());
}

void require_above_one(const Rational& c) {
  if (c <= Rational(1)) throw DomainError("c must exceed 1, got " + c.to_string());
}

/// Answers from a table filled on the first round.
class TableGuesser : public Guesser {
 public:
  bool guess(std::size_t round, AdviceTape& tape) final {
    if (!ready_) {
      answers_ = prepare(tape);
      ready_ = true;
    }
    return lookup(round);
  }

 protected:
  /// answers[i-1] is the answer for round i; rounds past the end answer `tail`.
  virtual std::vector<bool> prepare(AdviceTape& tape) = 0;
  bool tail = true;

 private:
  bool lookup(std::size_t round) const {
    if (round >= 1 && round <= answers_.size()) return answers_[round - 1];
    return tail;
  }

  bool ready_ = false;
  std::vector<bool> answers_;
};

// ---------------------------------------------------------------------------

class TrivialMinGuesser final : public Guesser {
 public:
  bool guess(std::size_t round, AdviceTape& tape) override {
    if (!ready_) {
      const std::uint64_t p = tape.read_self_delimiting();
      if (p == 0) throw MalformedAdvice("residue period 0 with a nonempty input");
      for (std::uint64_t j = 0; j < p; ++j) bits_.push_back(tape.read());
      ready_ = true;
    }
    return bits_[round % bits_.size()];
  }

 private:
  bool ready_ = false;
  std::vector<bool> bits_;
};

class TrivialMaxGuesser final : public TableGuesser {
 protected:
  std::vector<bool> prepare(AdviceTape& tape) override {
    const std::uint64_t from = tape.read_self_delimiting();
    const std::uint64_t to = tape.read_self_delimiting();
    if (from < 1 || to < from) throw MalformedAdvice("invalid block boundaries");
    std::vector<bool> answers(to, true);
    for (std::uint64_t i = from; i <= to; ++i) answers[i - 1] = tape.read();
    return answers;
  }
};

// ---------------------------------------------------------------------------

using Parameters = std::optional<std::array<std::size_t, 3>>;
using ParameterRule = Parameters (*)(std::size_t, const Rational&, std::size_t);

struct CoveringRule {
  Objective objective;
  ParameterRule parameters;
};

/// The weight sent after n: |x|_1 for min, |x|_0 for max.
std::size_t sent_weight(Objective objective, const BitString& x) {
  return objective == Objective::minimize ? x.ones() : x.zeros();
}

/// Output when no design index is sent.
bool constant_answer(Objective objective, std::size_t n, std::size_t weight) {
  if (objective == Objective::minimize) return weight != 0;
  return weight != n;
}

class CoveringGuesser final : public TableGuesser {
 public:
  CoveringGuesser(CoveringRule rule, Rational c, designs::SearchLimits limits)
      : rule_(rule), c_(c), limits_(limits) {}

 protected:
  std::vector<bool> prepare(AdviceTape& tape) override {
    const std::uint64_t n = tape.read_self_delimiting();
    const std::uint64_t weight = tape.read_fixed(weight_field_width(n));
    if (weight > n) throw MalformedAdvice("weight field exceeds n");
    const Parameters params = rule_.parameters(n, c_, weight);
    if (!params) {
      tail = constant_answer(rule_.objective, n, weight);
      return std::vector<bool>(n, tail);
    }
    const auto& shared = designs::shared_design((*params)[0], (*params)[1], (*params)[2], limits_);
    const std::uint64_t index = tape.read_fixed(ceil_log2(shared.design.size()));
    if (index >= shared.design.size()) throw MalformedAdvice("design index out of range");
    std::vector<bool> answers(n, false);
    for (std::uint32_t e : shared.design.blocks[index]) answers[e - 1] = true;
    return answers;
  }

 private:
  CoveringRule rule_;
  Rational c_;
  designs::SearchLimits limits_;
};

AdvicePair covering_pair(const std::string& name, CoveringRule rule, const Rational& c,
                         const designs::SearchLimits& limits) {
  require_above_one(c);
  AdvicePair pair;
  pair.name = name + "(" + c.to_string() + ")";
  pair.oracle = [rule, c, limits](const BitString& x) {
    const std::size_t n = x.size();
    const std::size_t weight = sent_weight(rule.objective, x);
    Bits out;
    append_self_delimiting(out, n);
    append_fixed(out, weight, weight_field_width(n));
    if (const Parameters params = rule.parameters(n, c, weight)) {
      const auto& shared = designs::shared_design((*params)[0], (*params)[1], (*params)[2], limits);
      std::vector<std::uint32_t> ones;
      for (std::size_t i : x.support()) ones.push_back(static_cast<std::uint32_t>(i));
      const auto index = designs::first_block_containing(shared.design, ones);
      if (!index) throw ContractViolation("covering design misses the input's support");
      append_fixed(out, *index, ceil_log2(shared.design.size()));
    }
    return out;
  };
  pair.algorithm = [rule, c, limits]() -> std::unique_ptr<Guesser> {
    return std::make_unique<CoveringGuesser>(rule, c, limits);
  };
  pair.declared_budget = [rule, c, limits](std::size_t n) -> std::uint64_t {
    std::uint64_t index_bits = 0;
    for (std::size_t w = 0; w <= n; ++w) {
      if (const Parameters params = rule.parameters(n, c, w)) {
        const auto& shared = designs::shared_design((*params)[0], (*params)[1], (*params)[2], limits);
        index_bits = std::max<std::uint64_t>(index_bits, ceil_log2(shared.design.size()));
      }
    }
    return self_delimiting_length(n) + weight_field_width(n) + index_bits;
  };
  return pair;
}

}  // namespace

std::size_t residue_period(std::size_t n, const Rational& c) {
  require_at_least_one(c);
  if (n == 0) return 0;
  return static_cast<std::size_t>(c.ceil_divide(static_cast<std::int64_t>(n)));
}

AdvicePair trivial_min(const Rational& c) {
  require_at_least_one(c);
  AdvicePair pair;
  pair.name = "trivial-min(" + c.to_string() + ")";
  pair.oracle = [c](const BitString& x) {
    Bits out;
    const std::size_t p = residue_period(x.size(), c);
    if (p == 0) return out;
    append_self_delimiting(out, p);
    for (std::size_t j = 0; j < p; ++j) {
      bool any = false;
      for (std::size_t i = (j == 0 ? p : j); i <= x.size(); i += p) any = any || x.at(i);
      out.push_back(any);
    }
    return out;
  };
  pair.algorithm = []() -> std::unique_ptr<Guesser> { return std::make_unique<TrivialMinGuesser>(); };
  pair.declared_budget = [c](std::size_t n) -> std::uint64_t {
    const std::size_t p = residue_period(n, c);
    return p == 0 ? 0 : p + self_delimiting_length(p);
  };
  return pair;
}

AdvicePair trivial_max(const Rational& c) {
  require_at_least_one(c);
  AdvicePair pair;
  pair.name = "trivial-max(" + c.to_string() + ")";
  pair.oracle = [c](const BitString& x) {
    Bits out;
    const std::size_t n = x.size();
    const std::size_t p = residue_period(n, c);
    if (p == 0) return out;
    std::size_t best_from = 1;
    std::size_t best_zeros = 0;
    bool have = false;
    for (std::size_t from = 1; from <= n; from += p) {
      const std::size_t to = std::min(from + p - 1, n);
      std::size_t zeros = 0;
      for (std::size_t i = from; i <= to; ++i) zeros += x.at(i) ? 0 : 1;
      if (!have || zeros > best_zeros) {
        best_from = from;
        best_zeros = zeros;
        have = true;
      }
    }
    const std::size_t best_to = std::min(best_from + p - 1, n);
    append_self_delimiting(out, best_from);
    append_self_delimiting(out, best_to);
    for (std::size_t i = best_from; i <= best_to; ++i) out.push_back(x.at(i));
    return out;
  };
  pair.algorithm = []() -> std::unique_ptr<Guesser> { return std::make_unique<TrivialMaxGuesser>(); };
  pair.declared_budget = [c](std::size_t n) -> std::uint64_t {
    const std::size_t p = residue_period(n, c);
    return p == 0 ? 0 : p + 2 * self_delimiting_length(n);
  };
  return pair;
}

std::size_t weight_field_width(std::size_t n) { return ceil_log2(static_cast<std::uint64_t>(n) + 1); }

std::optional<std::array<std::size_t, 3>> covering_min_parameters(std::size_t n, const Rational& c,
                                                                  std::size_t ones) {
  require_above_one(c);
  if (ones == 0 || ones > n) return std::nullopt;
  const auto k = static_cast<std::size_t>(c.floor_times(static_cast<std::int64_t>(ones)));
  if (k >= n) return std::nullopt;
  return std::array<std::size_t, 3>{n, k, ones};
}

std::optional<std::array<std::size_t, 3>> covering_max_parameters(std::size_t n, const Rational& c,
                                                                  std::size_t zeros) {
  require_above_one(c);
  if (zeros == 0 || zeros >= n) return std::nullopt;
  const auto kept = static_cast<std::size_t>(c.ceil_divide(static_cast<std::int64_t>(zeros)));
  return std::array<std::size_t, 3>{n, n - kept, n - zeros};
}

AdvicePair covering_min(const Rational& c, const designs::SearchLimits& limits) {
  return covering_pair("cover-min", CoveringRule{Objective::minimize, &covering_min_parameters}, c, limits);
}

AdvicePair covering_max(const Rational& c, const designs::SearchLimits& limits) {
  return covering_pair("cover-max", CoveringRule{Objective::maximize, &covering_max_parameters}, c, limits);
}

// ----------------------------------------------------------------------------

namespace {

class ReplaySolver final : public problems::OnlineSolver {
 public:
  explicit ReplaySolver(std::unique_ptr<Guesser> guesser) : guesser_(std::move(guesser)) {}
  bool decide(const problems::Request& request, AdviceTape& tape) override {
    return guesser_->guess(problems::request_index(request), tape);
  }

 private:
  std::unique_ptr<Guesser> guesser_;
};

class GreedyMatchingSolver final : public problems::OnlineSolver {
 public:
  bool decide(const problems::Request& request, AdviceTape&) override {
    const auto* edge = std::get_if<problems::EdgeRequest>(&request);
    if (!edge) throw ContractViolation("greedy matching expects edge requests");
    const std::size_t top = std::max(edge->a, edge->b);
    if (matched_.size() <= top) matched_.resize(top + 1, false);
    if (edge->a == edge->b || matched_[edge->a] || matched_[edge->b]) return true;
    matched_[edge->a] = matched_[edge->b] = true;
    return false;
  }

 private:
  std::vector<bool> matched_;
};

}  // namespace

problems::ProblemPair aoc_generic(problems::Problem problem, const Rational& c, const designs::SearchLimits& limits) {
  const AdvicePair inner = problems::objective(problem) == Objective::minimize ? covering_min(c, limits)
                                                                              : covering_max(c, limits);
  problems::ProblemPair pair;
  pair.name = "aoc-" + problems::to_string(problem) + "(" + c.to_string() + ")";
  pair.problem = problem;
  pair.oracle = [problem, inner](const problems::Instance& instance) {
    return inner.oracle(problems::optimum(problem, instance).y);
  };
  pair.algorithm = [inner]() -> std::unique_ptr<problems::OnlineSolver> {
    return std::make_unique<ReplaySolver>(inner.algorithm());
  };
  pair.declared_budget = inner.declared_budget;
  return pair;
}

bool KnapsackThreshold::decide(const problems::Request& request, AdviceTape& tape) {
  const auto* item = std::get_if<problems::ItemRequest>(&request);
  if (!item) throw ContractViolation("knapsack expects item requests");
  if (!started_) {
    m_ = tape.read_self_delimiting();
    started_ = true;
  }
  if (m_ == 0) return true;
  const bool small = item->weight * Rational(static_cast<std::int64_t>(m_)) <= Rational(2);
  if (!small || load_ + item->weight > Rational(1)) return true;
  load_ = load_ + item->weight;
  ++accepted_;
  return false;
}

problems::ProblemPair knapsack_two_competitive() {
  problems::ProblemPair pair;
  pair.name = "knapsack-threshold";
  pair.problem = problems::Problem::uniform_knapsack;
  pair.oracle = [](const problems::Instance& instance) {
    const auto& ks = std::get<problems::KnapsackInstance>(instance);
    for (const Rational& w : ks.weights) {
      if (w < Rational(0) || w > Rational(1)) throw DomainError("knapsack weights must lie in [0,1]");
    }
    return encode_self_delimiting(problems::knapsack_optimum_count(ks));
  };
  pair.algorithm = []() -> std::unique_ptr<problems::OnlineSolver> { return std::make_unique<KnapsackThreshold>(); };
  pair.declared_budget = [](std::size_t n) -> std::uint64_t { return self_delimiting_length(n); };
  return pair;
}

problems::ProblemPair greedy_matching() {
  problems::ProblemPair pair;
  pair.name = "greedy-matching";
  pair.problem = problems::Problem::matching;
  pair.oracle = [](const problems::Instance&) { return Bits{}; };
  pair.algorithm = []() -> std::unique_ptr<problems::OnlineSolver> {
    return std::make_unique<GreedyMatchingSolver>();
  };
  pair.declared_budget = [](std::size_t) -> std::uint64_t { return 0; };
  return pair;
}

}  // namespace asg::algorithms
