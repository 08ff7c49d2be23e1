#include "asg/engine.hpp"

#include "asg/errors.hpp"

namespace asg {

std::string to_string(AsgVariant variant) {
  std::string out = variant.objective == Objective::minimize ? "min" : "max";
  out += variant.history == History::known ? "-known" : "-unknown";
  return out;
}

AsgVariant parse_variant(const std::string& text) {
  if (text == "min-unknown" || text == "min") return kMinUnknown;
  if (text == "min-known") return kMinKnown;
  if (text == "max-unknown" || text == "max") return kMaxUnknown;
  if (text == "max-known") return kMaxKnown;
  throw ContractViolation("unknown ASG variant '" + text + "'");
}

Score asg_score(AsgVariant variant, const BitString& x, const BitString& y) {
  if (x.size() != y.size()) throw ContractViolation("asg_score: length mismatch");
  if (!dominates(x, y)) return Score::infeasible(variant.objective);
  return Score::finite(variant.objective == Objective::minimize ? y.ones() : y.zeros());
}

Score asg_optimum(AsgVariant variant, const BitString& x) { return asg_score(variant, x, x); }

RunResult run_asg(AsgVariant variant, Guesser& algorithm, AdviceTape& tape, const BitString& x) {
  const std::size_t n = x.size();
  BitString y(n);
  for (std::size_t i = 1; i <= n; ++i) {
    if (variant.history == History::known && i >= 2) algorithm.learn(x.at(i - 1));
    y.set(i, algorithm.guess(i, tape));
  }
  if (variant.history == History::known && n > 0) {
    algorithm.end_of_input(x.at(n));
  } else {
    algorithm.end_of_input(std::nullopt);
  }
  RunResult result;
  result.score = asg_score(variant, x, y);
  result.y = std::move(y);
  result.advice_bits_read = tape.bits_read();
  return result;
}

RunResult run_asg(AsgVariant variant, const AdvicePair& pair, const BitString& x) {
  AdviceTape tape(pair.oracle(x));
  auto algorithm = pair.algorithm();
  return run_asg(variant, *algorithm, tape, x);
}

bool satisfies_ratio(Objective objective, const Score& alg, const Score& opt, const Rational& c,
                     std::uint64_t alpha) {
  if (!alg.is_finite()) return false;
  if (!opt.is_finite()) throw ContractViolation("optimum must be finite");
  const __int128 num = c.num();
  const __int128 den = c.den();
  const __int128 a = alg.value();
  const __int128 o = opt.value();
  if (objective == Objective::minimize) return a * den <= num * o + __int128(alpha) * den;
  return o * den <= num * a + __int128(alpha) * den;
}

CompetitiveVerdict verify_competitive(Objective objective, const Rational& c, std::uint64_t alpha,
                                      const std::function<std::optional<Trial>()>& next) {
  CompetitiveVerdict verdict;
  verdict.ratio = c;
  verdict.additive = alpha;
  verdict.strict = alpha == 0;
  while (auto trial = next()) {
    ++verdict.instances_checked;
    if (verdict.holds && !satisfies_ratio(objective, trial->alg, trial->opt, c, alpha)) {
      verdict.holds = false;
      verdict.witness = trial->label;
      verdict.witness_alg = trial->alg;
      verdict.witness_opt = trial->opt;
    }
  }
  return verdict;
}

CompetitiveVerdict verify_asg_pair(AsgVariant variant, const AdvicePair& pair, const Rational& c,
                                   std::uint64_t alpha, std::size_t n) {
  if (n > 20) throw ResourceLimitExceeded("verify_asg_pair: n > 20");
  std::uint64_t mask = 0;
  const std::uint64_t end = std::uint64_t{1} << n;
  return verify_competitive(variant.objective, c, alpha, [&]() -> std::optional<Trial> {
    if (mask == end) return std::nullopt;
    BitString x = BitString::from_mask(mask++, n);
    RunResult r = run_asg(variant, pair, x);
    return Trial{x.to_string(), r.score, asg_optimum(variant, x)};
  });
}

}  // namespace asg
