#include <doctest.h>

#include <set>

#include "asg/advice_tape.hpp"
#include "asg/algorithms.hpp"
#include "asg/bitstring.hpp"
#include "asg/engine.hpp"
#include "asg/errors.hpp"
#include "asg/io.hpp"
#include "asg/rational.hpp"
#include "asg/score.hpp"
#include "property.hpp"

using namespace asg;

namespace {

std::string bits_text(const Bits& bits) {
  std::string s;
  for (bool b : bits) s += b ? '1' : '0';
  return s;
}

class ConstantGuesser final : public Guesser {
 public:
  explicit ConstantGuesser(bool answer) : answer_(answer) {}
  bool guess(std::size_t, AdviceTape&) override { return answer_; }

 private:
  bool answer_;
};

/// Copies advice bits straight into the answers: one bit per round.
class EchoGuesser final : public Guesser {
 public:
  bool guess(std::size_t, AdviceTape& tape) override { return tape.read(); }
};

AdvicePair constant_pair(bool answer) {
  AdvicePair p;
  p.name = answer ? "ones" : "zeros";
  p.oracle = [](const BitString&) { return Bits{}; };
  p.algorithm = [answer]() -> std::unique_ptr<Guesser> { return std::make_unique<ConstantGuesser>(answer); };
  p.declared_budget = [](std::size_t) { return 0; };
  return p;
}

}  // namespace

TEST_CASE("bit strings are 1-based and count their weights") {
  const BitString x = BitString::parse("011010");
  CHECK(x.size() == 6);
  CHECK_FALSE(x.at(1));
  CHECK(x.at(2));
  CHECK(x.ones() == 3);
  CHECK(x.zeros() == 3);
  CHECK(x.support() == std::vector<std::size_t>{2, 3, 5});
  CHECK(BitString::from_mask(x.to_mask(), 6) == x);
  CHECK_THROWS_AS(BitString::parse("01a"), ContractViolation);
  CHECK_THROWS_AS(x.at(0), ContractViolation);
  CHECK_THROWS_AS(x.at(7), ContractViolation);
}

TEST_CASE("domination examples") {
  CHECK(dominates(BitString::parse("011010"), BitString::parse("011110")));
  CHECK(dominates(BitString::parse("011010"), BitString::parse("011010")));
  CHECK_FALSE(dominates(BitString::parse("0110"), BitString::parse("0100")));
  CHECK_THROWS_AS(dominates(BitString::parse("01"), BitString::parse("011")), ContractViolation);
}

TEST_CASE("asg scores") {
  const BitString x = BitString::parse("011010");
  CHECK(asg_score(kMinUnknown, x, BitString::parse("011110")) == Score::finite(4));
  CHECK(asg_score(kMinUnknown, x, BitString::parse("010110")) == Score::plus_infinity());
  CHECK(asg_score(kMaxUnknown, x, BitString::parse("011110")) == Score::finite(2));
  CHECK(asg_score(kMaxKnown, x, BitString::parse("010110")) == Score::minus_infinity());
  CHECK_THROWS_AS(asg_score(kMinKnown, x, BitString::parse("01")), ContractViolation);
}

TEST_CASE("feasibility is domination and y = x is optimal for every x up to n = 10") {
  for (std::size_t n = 0; n <= 10; ++n) {
    const auto strings = all_strings(n);
    for (const BitString& x : strings) {
      std::uint64_t best_min = UINT64_MAX;
      std::uint64_t best_max = 0;
      for (const BitString& y : strings) {
        const Score lo = asg_score(kMinUnknown, x, y);
        const Score hi = asg_score(kMaxUnknown, x, y);
        REQUIRE(lo.is_finite() == dominates(x, y));
        REQUIRE(hi.is_finite() == lo.is_finite());
        if (lo.is_finite()) {
          best_min = std::min(best_min, lo.value());
          best_max = std::max(best_max, hi.value());
        }
      }
      REQUIRE(asg_score(kMinUnknown, x, x) == Score::finite(x.ones()));
      REQUIRE(best_min == x.ones());
      REQUIRE(best_max == x.zeros());
    }
  }
}

TEST_CASE("scores order with absorbing infinities and parse their text form") {
  CHECK(Score::plus_infinity() > Score::finite(1'000'000));
  CHECK(Score::minus_infinity() < Score::finite(0));
  CHECK(Score::parse("+inf") == Score::plus_infinity());
  CHECK(Score::parse("-inf") == Score::minus_infinity());
  CHECK(Score::parse("17") == Score::finite(17));
  CHECK(Score::finite(3).to_string() == "3");
  CHECK_THROWS(Score::parse("1.5"));
}

TEST_CASE("self-delimiting code") {
  CHECK(bits_text(encode_self_delimiting(0)) == "0");
  CHECK(bits_text(encode_self_delimiting(5)) == "1110101");
  for (std::uint64_t m = 0; m <= (std::uint64_t{1} << 20); ++m) {
    const Bits code = encode_self_delimiting(m);
    REQUIRE(code.size() == 2 * ceil_log2(m + 1) + 1);
    REQUIRE(code.size() == self_delimiting_length(m));
    std::size_t pos = 0;
    REQUIRE(decode_self_delimiting(code, pos) == m);
    REQUIRE(pos == code.size());
  }
}

TEST_CASE("self-delimiting codes are prefix-free") {
  std::vector<std::string> codes;
  for (std::uint64_t m = 0; m <= 300; ++m) codes.push_back(bits_text(encode_self_delimiting(m)));
  for (std::size_t a = 0; a < codes.size(); ++a) {
    for (std::size_t b = 0; b < codes.size(); ++b) {
      if (a != b) REQUIRE(codes[b].rfind(codes[a], 0) != 0);
    }
  }
}

TEST_CASE("decoding rejects a unary part with no terminating zero") {
  std::size_t pos = 0;
  CHECK_THROWS_AS(decode_self_delimiting(Bits{true, true, true}, pos), MalformedAdvice);
  pos = 0;
  CHECK_THROWS_AS(decode_self_delimiting(Bits{true, true, false, true}, pos), MalformedAdvice);
}

TEST_CASE("the tape reads zeros past its written prefix and counts those reads") {
  AdviceTape tape(Bits{true, false, true});
  CHECK(tape.read());
  CHECK_FALSE(tape.read());
  CHECK(tape.read());
  CHECK_FALSE(tape.read());
  CHECK_FALSE(tape.read());
  CHECK(tape.bits_read() == 5);
  CHECK(tape.read_fixed(0) == 0);
  CHECK(tape.bits_read() == 5);
  AdviceTape fixed(Bits{true, false, true});
  CHECK(fixed.read_fixed(3) == 5);
  AdviceTape blank;
  CHECK(blank.read_self_delimiting() == 0);
  CHECK(blank.bits_read() == 1);
}

TEST_CASE("run_asg examples") {
  const BitString x = BitString::parse("0101");
  const RunResult ones_min = run_asg(kMinUnknown, constant_pair(true), x);
  CHECK(ones_min.y.to_string() == "1111");
  CHECK(ones_min.score == Score::finite(4));
  const RunResult ones_max = run_asg(kMaxUnknown, constant_pair(true), x);
  CHECK(ones_max.score == Score::finite(0));

  const RunResult trivial = run_asg(kMinUnknown, algorithms::trivial_min(Rational(2)), BitString::parse("011010"));
  CHECK(trivial.y.to_string() == "011011");
  CHECK(trivial.score == Score::finite(4));
}

TEST_CASE("known history delivers the previous bit and the last bit at the end") {
  class Recorder final : public Guesser {
   public:
    bool guess(std::size_t round, AdviceTape&) override {
      rounds.push_back(round);
      return true;
    }
    void learn(bool previous) override { learned.push_back(previous); }
    void end_of_input(std::optional<bool> last) override { final_bit = last; }
    std::vector<std::size_t> rounds;
    std::vector<bool> learned;
    std::optional<bool> final_bit;
  };
  const BitString x = BitString::parse("1101");
  Recorder known;
  AdviceTape tape;
  run_asg(kMinKnown, known, tape, x);
  CHECK(known.rounds == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(known.learned == std::vector<bool>{true, true, false});
  REQUIRE(known.final_bit.has_value());
  CHECK(*known.final_bit);

  Recorder unknown;
  AdviceTape tape2;
  run_asg(kMinUnknown, unknown, tape2, x);
  CHECK(unknown.learned.empty());
  CHECK_FALSE(unknown.final_bit.has_value());
}

TEST_CASE("unknown-history output and bits read depend only on the tape") {
  asg_test::for_all<std::pair<BitString, BitString>>(
      7, 300,
      [](std::mt19937_64& rng) {
        const std::size_t n = 1 + rng() % 12;
        return std::make_pair(asg_test::random_bits(rng, n), asg_test::random_bits(rng, n));
      },
      [](const std::pair<BitString, BitString>& xs) {
        Bits advice;
        for (std::size_t i = 1; i <= xs.first.size(); ++i) advice.push_back((i * 7) % 3 == 0);
        EchoGuesser a;
        EchoGuesser b;
        AdviceTape ta(advice);
        AdviceTape tb(advice);
        const RunResult ra = run_asg(kMinUnknown, a, ta, xs.first);
        const RunResult rb = run_asg(kMinUnknown, b, tb, xs.second);
        designs::SearchLimits quick;
        quick.max_nodes = 20000;
        const AdvicePair cover = algorithms::covering_min(Rational(2), quick);
        AdviceTape tc(cover.oracle(xs.first));
        AdviceTape td(cover.oracle(xs.first));
        auto gc = cover.algorithm();
        auto gd = cover.algorithm();
        const RunResult rc = run_asg(kMinUnknown, *gc, tc, xs.first);
        const RunResult rd = run_asg(kMinUnknown, *gd, td, xs.second);
        return ra.y == rb.y && ra.advice_bits_read == rb.advice_bits_read && rc.y == rd.y &&
               rc.advice_bits_read == rd.advice_bits_read;
      },
      [](const std::pair<BitString, BitString>& xs) { return xs.first.to_string() + " / " + xs.second.to_string(); });
}

TEST_CASE("verify_competitive examples") {
  const CompetitiveVerdict trivial = verify_asg_pair(kMinUnknown, algorithms::trivial_min(Rational(2)), Rational(2), 0, 6);
  CHECK(trivial.holds);
  CHECK(trivial.instances_checked == 64);
  CHECK(trivial.strict);

  const CompetitiveVerdict ones = verify_asg_pair(kMinUnknown, constant_pair(true), Rational(4), 0, 4);
  CHECK_FALSE(ones.holds);
  REQUIRE(ones.witness.has_value());
  CHECK(*ones.witness == "0000");
  CHECK(*ones.witness_alg == Score::finite(4));
  CHECK(*ones.witness_opt == Score::finite(0));

  const CompetitiveVerdict vacuous = verify_asg_pair(kMinUnknown, constant_pair(true), Rational(1), 5, 5);
  CHECK(vacuous.holds);
  CHECK_FALSE(vacuous.strict);

  const CompetitiveVerdict zeros = verify_asg_pair(kMinUnknown, constant_pair(false), Rational(100), 100, 3);
  CHECK_FALSE(zeros.holds);
}

TEST_CASE("satisfies_ratio for maximization and infinite scores") {
  CHECK(satisfies_ratio(Objective::maximize, Score::finite(2), Score::finite(3), Rational(3, 2), 0));
  CHECK_FALSE(satisfies_ratio(Objective::maximize, Score::finite(1), Score::finite(3), Rational(2), 0));
  CHECK(satisfies_ratio(Objective::maximize, Score::finite(1), Score::finite(3), Rational(2), 1));
  CHECK_FALSE(satisfies_ratio(Objective::maximize, Score::minus_infinity(), Score::finite(0), Rational(100), 100));
  CHECK_FALSE(satisfies_ratio(Objective::minimize, Score::plus_infinity(), Score::finite(9), Rational(100), 100));
}

TEST_CASE("rationals are exact and floats are rejected") {
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("2") == Rational(2));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(3, 2).floor_times(3) == 4);
  CHECK(Rational(3, 2).ceil_divide(4) == 3);
  CHECK_THROWS_AS(Rational::parse("1.5"), DomainError);
  CHECK_THROWS_AS(Rational::parse("3/"), DomainError);
  CHECK_THROWS_AS(Rational::parse("1e3"), DomainError);
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("floor and ceiling thresholds match integer arithmetic") {
  asg_test::for_all<std::pair<Rational, std::int64_t>>(
      11, 2000,
      [](std::mt19937_64& rng) {
        return std::make_pair(asg_test::random_ratio(rng, 1, 20), static_cast<std::int64_t>(rng() % 200));
      },
      [](const std::pair<Rational, std::int64_t>& v) {
        const auto& [c, k] = v;
        const std::int64_t ft = c.floor_times(k);
        const bool floor_ok = ft * c.den() <= c.num() * k && (ft + 1) * c.den() > c.num() * k;
        if (k == 0) return floor_ok && c.ceil_divide(k) == 0;
        const std::int64_t cd = c.ceil_divide(k);
        const bool ceil_ok = cd * c.num() >= k * c.den() && (cd - 1) * c.num() < k * c.den();
        return floor_ok && ceil_ok;
      },
      [](const std::pair<Rational, std::int64_t>& v) { return v.first.to_string() + " k=" + std::to_string(v.second); });
}

TEST_CASE("run results serialize as y, score and bits") {
  RunResult r{BitString::parse("0110"), Score::plus_infinity(), 5};
  const auto j = io::to_json(r);
  CHECK(j.at("y") == "0110");
  CHECK(j.at("score") == "+inf");
  CHECK(j.at("bits") == 5);
  r.score = Score::finite(2);
  CHECK(io::to_json(r).at("score") == 2);
}

TEST_CASE("variant names round trip") {
  for (AsgVariant v : {kMinUnknown, kMinKnown, kMaxUnknown, kMaxKnown}) CHECK(parse_variant(to_string(v)) == v);
  CHECK(parse_variant("min") == kMinUnknown);
  CHECK(parse_variant("max") == kMaxUnknown);
  CHECK_THROWS(parse_variant("minimize"));
}
