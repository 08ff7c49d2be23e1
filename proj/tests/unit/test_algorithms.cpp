#include <doctest.h>

#include <algorithm>

#include "asg/algorithms.hpp"
#include "asg/errors.hpp"
#include "asg/reductions.hpp"
#include "property.hpp"

using namespace asg;
using namespace asg::algorithms;
namespace pr = asg::problems;

namespace {

/// Exhaustive feasibility, strictness and budget honesty over {0,1}^n.
void check_pair_exhaustively(AsgVariant variant, const AdvicePair& pair, const Rational& ratio, std::size_t n) {
  for (const BitString& x : all_strings(n)) {
    const RunResult r = run_asg(variant, pair, x);
    CAPTURE(x.to_string());
    REQUIRE(r.score.is_finite());
    REQUIRE(satisfies_ratio(variant.objective, r.score, asg_optimum(variant, x), ratio, 0));
    REQUIRE(r.advice_bits_read <= pair.declared_budget(n));
  }
}

Rational ceil_of(const Rational& c) { return Rational(c.ceil()); }

}  // namespace

TEST_CASE("trivial_min examples") {
  const AdvicePair pair = trivial_min(Rational(2));
  const RunResult r = run_asg(kMinUnknown, pair, BitString::parse("011010"));
  CHECK(r.y.to_string() == "011011");
  CHECK(r.score == Score::finite(4));
  CHECK(run_asg(kMinUnknown, pair, BitString::parse("000000")).y.to_string() == "000000");

  const RunResult ones = run_asg(kMinUnknown, trivial_min(Rational(1)), BitString::parse("11111"));
  CHECK(ones.y.to_string() == "11111");
  CHECK(ones.advice_bits_read == 5 + self_delimiting_length(5));
  CHECK(residue_period(6, Rational(2)) == 3);
  CHECK(residue_period(7, Rational(3, 2)) == 5);
  CHECK_THROWS_AS(trivial_min(Rational(1, 2)), DomainError);
}

TEST_CASE("trivial_max examples") {
  const AdvicePair pair = trivial_max(Rational(2));
  const RunResult r = run_asg(kMaxUnknown, pair, BitString::parse("011010"));
  CHECK(r.y.to_string() == "111010");
  CHECK(r.score == Score::finite(2));
  CHECK(run_asg(kMaxUnknown, pair, BitString::parse("1111")).score == Score::finite(0));
  const RunResult zeros = run_asg(kMaxUnknown, trivial_max(Rational(1)), BitString::parse("00000"));
  CHECK(zeros.y.to_string() == "00000");
  CHECK(zeros.score == Score::finite(5));
  // ties go to the leftmost block
  CHECK(run_asg(kMaxUnknown, pair, BitString::parse("0110")).y.to_string() == "0111");
}

TEST_CASE("trivial algorithms are strictly ceil(c)-competitive within budget for n <= 9") {
  for (const Rational& c : {Rational(1), Rational(3, 2), Rational(2), Rational(5, 2), Rational(4)}) {
    CAPTURE(c.to_string());
    const AdvicePair lo = trivial_min(c);
    const AdvicePair hi = trivial_max(c);
    for (std::size_t n = 0; n <= 9; ++n) {
      check_pair_exhaustively(kMinUnknown, lo, ceil_of(c), n);
      check_pair_exhaustively(kMaxUnknown, hi, ceil_of(c), n);
      const std::size_t p = residue_period(n, c);
      CHECK(lo.declared_budget(n) == (p == 0 ? 0 : p + self_delimiting_length(p)));
    }
  }
}

TEST_CASE("covering_min examples") {
  const AdvicePair pair = covering_min(Rational(2));
  for (const BitString& x : all_strings(6)) {
    if (x.ones() != 2) continue;
    const RunResult r = run_asg(kMinUnknown, pair, x);
    CHECK(dominates(x, r.y));
    CHECK(r.score == Score::finite(4));
  }
  CHECK(covering_min_parameters(6, Rational(2), 2) == std::array<std::size_t, 3>{6, 4, 2});
  CHECK(run_asg(kMinUnknown, pair, BitString::parse("000000")).y.to_string() == "000000");
  const RunResult full = run_asg(kMinUnknown, pair, BitString::parse("010110"));
  CHECK(full.y.to_string() == "111111");
  CHECK_FALSE(covering_min_parameters(6, Rational(2), 3).has_value());
  CHECK_THROWS_AS(covering_min(Rational(1)), DomainError);
}

TEST_CASE("covering_max examples") {
  const AdvicePair pair = covering_max(Rational(2));
  for (const BitString& x : all_strings(6)) {
    if (x.zeros() != 4) continue;
    const RunResult r = run_asg(kMaxUnknown, pair, x);
    CHECK(dominates(x, r.y));
    CHECK(r.score == Score::finite(2));
  }
  CHECK(covering_max_parameters(6, Rational(2), 4) == std::array<std::size_t, 3>{6, 4, 2});
  CHECK(run_asg(kMaxUnknown, pair, BitString::parse("000000")).y.to_string() == "000000");
  CHECK(run_asg(kMaxUnknown, pair, BitString::parse("111111")).y.to_string() == "111111");
}

TEST_CASE("covering algorithms hit their thresholds exactly for n <= 7") {
  for (const Rational& c : {Rational(3, 2), Rational(2), Rational(3)}) {
    CAPTURE(c.to_string());
    const AdvicePair lo = covering_min(c);
    const AdvicePair hi = covering_max(c);
    for (std::size_t n = 1; n <= 7; ++n) {
      check_pair_exhaustively(kMinUnknown, lo, c, n);
      check_pair_exhaustively(kMaxUnknown, hi, c, n);
      for (const BitString& x : all_strings(n)) {
        const std::int64_t cost = c.floor_times(static_cast<std::int64_t>(x.ones()));
        if (cost > 0 && cost < static_cast<std::int64_t>(n))
          REQUIRE(run_asg(kMinUnknown, lo, x).score == Score::finite(cost));
        if (x.zeros() > 0 && x.zeros() < n) {
          REQUIRE(run_asg(kMaxUnknown, hi, x).score ==
                  Score::finite(c.ceil_divide(static_cast<std::int64_t>(x.zeros()))));
        }
      }
    }
  }
}

TEST_CASE("covering advice is n, then a weight field, then a block index") {
  CHECK(weight_field_width(1) == 1);
  CHECK(weight_field_width(6) == 3);
  CHECK(weight_field_width(7) == 3);
  CHECK(weight_field_width(8) == 4);
  const AdvicePair pair = covering_min(Rational(2));
  const BitString x = BitString::parse("010010");
  const Bits advice = pair.oracle(x);
  std::size_t pos = 0;
  CHECK(decode_self_delimiting(advice, pos) == 6);
  AdviceTape tape(advice);
  tape.read_self_delimiting();
  CHECK(tape.read_fixed(weight_field_width(6)) == 2);
  const auto& shared = designs::shared_design(6, 4, 2);
  CHECK(advice.size() == pos + weight_field_width(6) + ceil_log2(shared.design.size()));
}

TEST_CASE("aoc_generic on vertex cover, independent set and dominating set") {
  const Rational two(2);
  const pr::Instance gx = reductions::build_clique_graph(BitString::parse("011010"));
  const pr::ProblemRun vc = pr::run_problem(aoc_generic(pr::Problem::vertex_cover, two), gx);
  CHECK(pr::is_vertex_cover(std::get<pr::OnlineGraph>(gx), vc.y));
  CHECK(vc.score <= Score::finite(2 * 3));

  const pr::Instance edgeless = pr::OnlineGraph(6);
  const pr::ProblemRun is = pr::run_problem(aoc_generic(pr::Problem::independent_set, two), edgeless);
  CHECK(is.score >= Score::finite(3));

  const pr::Instance kx = reductions::build_star_graph(BitString::parse("01010"));
  const pr::ProblemRun ds = pr::run_problem(aoc_generic(pr::Problem::dominating_set, two), kx);
  CHECK(pr::is_dominating_set(std::get<pr::OnlineGraph>(kx), ds.y));
  CHECK(ds.score <= Score::finite(4));
}

TEST_CASE("aoc_generic output depends only on the tape") {
  const pr::ProblemPair pair = aoc_generic(pr::Problem::vertex_cover, Rational(3, 2));
  asg_test::for_all<std::pair<BitString, BitString>>(
      13, 200,
      [](std::mt19937_64& rng) {
        const std::size_t n = 1 + rng() % 7;
        return std::make_pair(asg_test::random_bits(rng, n), asg_test::random_bits(rng, n));
      },
      [&](const std::pair<BitString, BitString>& xs) {
        const pr::Instance a = reductions::build_clique_graph(xs.first);
        const pr::Instance b = reductions::build_clique_graph(xs.second);
        const Bits advice = pair.oracle(a);
        AdviceTape ta(advice);
        AdviceTape tb(advice);
        auto sa = pair.algorithm();
        auto sb = pair.algorithm();
        return pr::run_solver(pair.problem, *sa, ta, a).y == pr::run_solver(pair.problem, *sb, tb, b).y;
      },
      [](const std::pair<BitString, BitString>& xs) { return xs.first.to_string() + " / " + xs.second.to_string(); });
}

TEST_CASE("knapsack examples") {
  const pr::ProblemPair pair = knapsack_two_competitive();
  const pr::KnapsackInstance three{{Rational(3, 5), Rational(1, 2), Rational(1, 2)}};
  const pr::ProblemRun r = pr::run_problem(pair, three);
  CHECK(r.y.to_string() == "011");
  CHECK(r.score == Score::finite(1));
  CHECK(pr::knapsack_optimum_count(three) == 2);

  pr::KnapsackInstance tiny;
  for (int i = 0; i < 7; ++i) tiny.weights.push_back(Rational(1, 7));
  CHECK(pr::run_problem(pair, tiny).score == Score::finite(7));

  CHECK(pr::run_problem(pair, pr::KnapsackInstance{}).score == Score::finite(0));
}

TEST_CASE("knapsack is strictly 2-competitive on random instances") {
  const pr::ProblemPair pair = knapsack_two_competitive();
  asg_test::for_all<pr::KnapsackInstance>(
      17, 3000,
      [](std::mt19937_64& rng) {
        pr::KnapsackInstance ks;
        const std::size_t n = rng() % 12;
        for (std::size_t i = 0; i < n; ++i) ks.weights.push_back(Rational(static_cast<std::int64_t>(rng() % 13), 12));
        return ks;
      },
      [&](const pr::KnapsackInstance& ks) {
        const pr::ProblemRun r = pr::run_problem(pair, ks);
        const std::size_t opt = pr::knapsack_optimum_count(ks);
        return r.score.is_finite() && opt <= 2 * r.score.value() &&
               r.advice_bits_read <= pair.declared_budget(ks.weights.size());
      },
      [](const pr::KnapsackInstance& ks) {
        std::string s;
        for (const auto& w : ks.weights) s += w.to_string() + " ";
        return s;
      });
}

TEST_CASE("greedy matching examples") {
  const pr::ProblemPair pair = greedy_matching();
  const pr::MatchingInstance path{4, {{2, 3}, {1, 2}, {3, 4}}};
  const pr::ProblemRun r = pr::run_problem(pair, path);
  CHECK(r.y.to_string() == "011");
  CHECK(r.score == Score::finite(1));
  CHECK(pr::maximum_matching_size(path) == 2);
  CHECK(pr::run_problem(pair, pr::MatchingInstance{2, {{1, 2}}}).score == Score::finite(1));
  CHECK(pr::run_problem(pair, pr::MatchingInstance{3, {}}).score == Score::finite(0));
  CHECK(r.advice_bits_read == 0);
}
