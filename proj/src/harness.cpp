#include "asg/harness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "asg/algorithms.hpp"
#include "asg/bounds.hpp"
#include "asg/errors.hpp"
#include "asg/reductions.hpp"

namespace asg::harness {

namespace {

double to_double(const Real& r) { return r.convert_to<double>(); }

std::string decimal(double v, int digits = 12) {
  std::ostringstream out;
  out << std::setprecision(digits) << v;
  return out.str();
}

std::string objective_name(Objective objective) { return objective == Objective::minimize ? "min" : "max"; }

std::vector<std::string> ratio_strings(const std::vector<Rational>& cs) {
  std::vector<std::string> out;
  for (const Rational& c : cs) out.push_back(c.to_string());
  return out;
}

Rational ratio_from_json(const json& j) {
  if (!j.is_string()) throw DomainError("ratios must be written as \"P/Q\" strings, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

std::vector<Rational> ratios_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("expected a list of \"P/Q\" ratios");
  std::vector<Rational> out;
  for (const json& item : j) out.push_back(ratio_from_json(item));
  return out;
}

/// Answers 0 exactly in the listed rounds.
class ZeroAtGuesser final : public Guesser {
 public:
  explicit ZeroAtGuesser(std::set<std::size_t> rounds) : rounds_(std::move(rounds)) {}
  bool guess(std::size_t round, AdviceTape&) override { return rounds_.count(round) == 0; }

 private:
  std::set<std::size_t> rounds_;
};

bool is_nonpositive_profit(const Score& s) {
  return s.kind() == Score::Kind::minus_infinity || (s.is_finite() && s.value() == 0);
}

std::vector<BitString> members_of(const std::vector<BitString>& strings, std::uint64_t subset) {
  std::vector<BitString> out;
  for (std::size_t k = 0; k < strings.size(); ++k) {
    if ((subset >> k) & 1u) out.push_back(strings[k]);
  }
  return out;
}

}  // namespace

// ----------------------------------------------------------------------------
// Curves

double sg_bits_per_request(const Rational& c) {
  if (c <= Rational(1) || Rational(2) < c) throw DomainError("the string guessing curve is defined for 1 < c <= 2");
  const Real cr = to_real(c);
  const Real value = (cr - 1) * asg::log2(cr - 1) - cr * asg::log2(cr / 2);
  // (c-1) log(c-1) is 0 in the limit c -> 1, and c > 1 here.
  return to_double(value / cr);
}

std::vector<CurvePoint> emit_curve(const Rational& c_min, const Rational& c_max, std::size_t steps,
                                   std::uint64_t n) {
  if (c_min <= Rational(1)) throw DomainError("curve needs c_min > 1");
  if (c_max < c_min) throw DomainError("curve needs c_min <= c_max");
  if (steps == 0 && c_min != c_max) throw DomainError("curve needs at least one step");
  if (n == 0) throw DomainError("curve needs n >= 1");
  std::vector<CurvePoint> out;
  const Rational width = c_max - c_min;
  for (std::size_t k = 0; k <= steps; ++k) {
    const Rational c = steps == 0 ? c_min : c_min + width * Rational(static_cast<std::int64_t>(k),
                                                                     static_cast<std::int64_t>(steps));
    CurvePoint p;
    p.c = c;
    const Real nr(n);
    p.asg_bits_per_request = to_double(bounds::advice_bound(n, c) / nr);
    p.envelope_hi = to_double(bounds::upper_envelope(n, c) / nr);
    p.envelope_lo = to_double(bounds::lower_envelope(n, c) / nr);
    if (!(Rational(2) < c)) p.sg_bits_per_request = sg_bits_per_request(c);
    out.push_back(p);
  }
  return out;
}

std::string curve_csv(const std::vector<CurvePoint>& points) {
  std::ostringstream out;
  out << "c,c_decimal,asg_bits_per_request,envelope_hi,envelope_lo,sg_bits_per_request\n";
  for (const CurvePoint& p : points) {
    out << p.c.to_string() << ',' << decimal(to_double(to_real(p.c))) << ',' << decimal(p.asg_bits_per_request)
        << ',' << decimal(p.envelope_hi) << ',' << decimal(p.envelope_lo) << ',';
    if (p.sg_bits_per_request) out << decimal(*p.sg_bits_per_request);
    out << '\n';
  }
  return out.str();
}

json curve_json(const std::vector<CurvePoint>& points) {
  json rows = json::array();
  for (const CurvePoint& p : points) {
    rows.push_back(json{{"c", p.c.to_string()},
                        {"c_decimal", to_double(to_real(p.c))},
                        {"asg_bits_per_request", p.asg_bits_per_request},
                        {"envelope_hi", p.envelope_hi},
                        {"envelope_lo", p.envelope_lo},
                        {"sg_bits_per_request", p.sg_bits_per_request ? json(*p.sg_bits_per_request) : json()}});
  }
  return rows;
}

// ----------------------------------------------------------------------------
// Named algorithms

AdvicePair asg_pair_by_name(const std::string& name, const Rational& c, const designs::SearchLimits& limits) {
  if (name == "trivial-min") return algorithms::trivial_min(c);
  if (name == "trivial-max") return algorithms::trivial_max(c);
  if (name == "cover-min") return algorithms::covering_min(c, limits);
  if (name == "cover-max") return algorithms::covering_max(c, limits);
  throw ContractViolation("unknown ASG algorithm '" + name + "'");
}

AsgVariant asg_pair_variant(const std::string& name) {
  if (name == "trivial-min" || name == "cover-min") return kMinUnknown;
  if (name == "trivial-max" || name == "cover-max") return kMaxUnknown;
  throw ContractViolation("unknown ASG algorithm '" + name + "'");
}

problems::ProblemPair problem_pair_by_name(const std::string& name, problems::Problem problem, const Rational& c,
                                           const designs::SearchLimits& limits) {
  if (name == "aoc") return algorithms::aoc_generic(problem, c, limits);
  if (name == "knapsack") return algorithms::knapsack_two_competitive();
  if (name == "matching") return algorithms::greedy_matching();
  throw ContractViolation("unknown problem algorithm '" + name + "'");
}

std::vector<std::unique_ptr<Guesser>> strategies_from_json(const json& spec) {
  const json& list = spec.is_object() && spec.contains("strategies") ? spec.at("strategies") : spec;
  if (!list.is_array()) throw ContractViolation("expected a list of strategies");
  std::vector<std::unique_ptr<Guesser>> out;
  for (const json& item : list) {
    const std::string kind = item.value("kind", "");
    if (kind == "always-one") {
      out.push_back(std::make_unique<ZeroAtGuesser>(std::set<std::size_t>{}));
    } else if (kind == "zero-at") {
      const auto rounds = item.at("rounds").get<std::vector<std::size_t>>();
      out.push_back(std::make_unique<ZeroAtGuesser>(std::set<std::size_t>(rounds.begin(), rounds.end())));
    } else if (kind == "fixed-advice") {
      const AdvicePair pair = asg_pair_by_name(item.at("algo").get<std::string>(), ratio_from_json(item.at("c")));
      for (auto& g : adversary::fixed_advice_strategies(pair, item.at("bits").get<std::size_t>())) {
        out.push_back(std::move(g));
      }
    } else {
      throw ContractViolation("unknown strategy kind '" + kind + "'");
    }
  }
  return out;
}

bool CautiousGuesser::guess(std::size_t round, AdviceTape&) {
  return std::any_of(alive_.begin(), alive_.end(), [round](const BitString& s) { return s.at(round); });
}

void CautiousGuesser::learn(bool previous) {
  const std::size_t r = round_++;
  std::erase_if(alive_, [r, previous](const BitString& s) { return s.at(r) != previous; });
}

// ----------------------------------------------------------------------------
// Config

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  if (!j.is_object()) throw ContractViolation("config must be a JSON object");
  ExperimentConfig cfg;
  for (const auto& [key, value] : j.items()) {
    auto unsigned_value = [&, key = key, value = value]() {
      if (!value.is_number_unsigned()) throw ContractViolation("'" + key + "' must be a non-negative integer");
      return value.get<std::uint64_t>();
    };
    if (key == "seed") cfg.seed = unsigned_value();
    else if (key == "batteries") cfg.batteries = value.get<std::vector<int>>();
    else if (key == "tolerance") cfg.tolerance = value.get<double>();
    else if (key == "envelope_n") cfg.envelope_n = unsigned_value();
    else if (key == "envelope_cs") cfg.envelope_cs = ratios_from_json(value);
    else if (key == "trivial_n_max") cfg.trivial_n_max = unsigned_value();
    else if (key == "trivial_cs") cfg.trivial_cs = ratios_from_json(value);
    else if (key == "covering_n_max") cfg.covering_n_max = unsigned_value();
    else if (key == "covering_cs") cfg.covering_cs = ratios_from_json(value);
    else if (key == "sandwich_n_max") cfg.sandwich_n_max = unsigned_value();
    else if (key == "sandwich_cs") cfg.sandwich_cs = ratios_from_json(value);
    else if (key == "brute_node_budget") cfg.brute_node_budget = unsigned_value();
    else if (key == "slack_n_max") cfg.slack_n_max = unsigned_value();
    else if (key == "slack_cs") cfg.slack_cs = ratios_from_json(value);
    else if (key == "adversary_n_max") cfg.adversary_n_max = unsigned_value();
    else if (key == "adversary_m_max") cfg.adversary_m_max = unsigned_value();
    else if (key == "table_n_max") cfg.table_n_max = unsigned_value();
    else if (key == "sublog_n") cfg.sublog_n = unsigned_value();
    else if (key == "exponential_c_max") cfg.exponential_c_max = unsigned_value();
    else if (key == "exponential_n_max") cfg.exponential_n_max = unsigned_value();
    else if (key == "reduction_n_max") cfg.reduction_n_max = unsigned_value();
    else if (key == "reduction_cs") cfg.reduction_cs = ratios_from_json(value);
    else if (key == "knapsack_n_max") cfg.knapsack_n_max = unsigned_value();
    else if (key == "knapsack_grid") cfg.knapsack_grid = unsigned_value();
    else if (key == "knapsack_full_runs_n_max") cfg.knapsack_full_runs_n_max = unsigned_value();
    else if (key == "matching_n_max") cfg.matching_n_max = unsigned_value();
    else if (key == "matching_all_orders_n_max") cfg.matching_all_orders_n_max = unsigned_value();
    else if (key == "curve_c_min") cfg.curve_c_min = ratio_from_json(value);
    else if (key == "curve_c_max") cfg.curve_c_max = ratio_from_json(value);
    else if (key == "curve_steps") cfg.curve_steps = unsigned_value();
    else if (key == "curve_n") cfg.curve_n = unsigned_value();
    else if (key == "design_max_t_subsets") cfg.design_limits.max_t_subsets = unsigned_value();
    else if (key == "design_max_candidate_blocks") cfg.design_limits.max_candidate_blocks = unsigned_value();
    else if (key == "design_max_nodes") cfg.design_limits.max_nodes = unsigned_value();
    else throw ContractViolation("unknown config key '" + key + "'");
  }
  return cfg;
}

json ExperimentConfig::to_json() const {
  return json{{"seed", seed},
              {"batteries", batteries},
              {"tolerance", tolerance},
              {"envelope_n", envelope_n},
              {"envelope_cs", ratio_strings(envelope_cs)},
              {"trivial_n_max", trivial_n_max},
              {"trivial_cs", ratio_strings(trivial_cs)},
              {"covering_n_max", covering_n_max},
              {"covering_cs", ratio_strings(covering_cs)},
              {"sandwich_n_max", sandwich_n_max},
              {"sandwich_cs", ratio_strings(sandwich_cs)},
              {"brute_node_budget", brute_node_budget},
              {"slack_n_max", slack_n_max},
              {"slack_cs", ratio_strings(slack_cs)},
              {"adversary_n_max", adversary_n_max},
              {"adversary_m_max", adversary_m_max},
              {"table_n_max", table_n_max},
              {"sublog_n", sublog_n},
              {"exponential_c_max", exponential_c_max},
              {"exponential_n_max", exponential_n_max},
              {"reduction_n_max", reduction_n_max},
              {"reduction_cs", ratio_strings(reduction_cs)},
              {"knapsack_n_max", knapsack_n_max},
              {"knapsack_grid", knapsack_grid},
              {"knapsack_full_runs_n_max", knapsack_full_runs_n_max},
              {"matching_n_max", matching_n_max},
              {"matching_all_orders_n_max", matching_all_orders_n_max},
              {"curve_c_min", curve_c_min.to_string()},
              {"curve_c_max", curve_c_max.to_string()},
              {"curve_steps", curve_steps},
              {"curve_n", curve_n},
              {"design_max_t_subsets", design_limits.max_t_subsets},
              {"design_max_candidate_blocks", design_limits.max_candidate_blocks},
              {"design_max_nodes", design_limits.max_nodes}};
}

void ExperimentConfig::validate() const {
  auto above_one = [](const std::vector<Rational>& cs, const std::string& what) {
    for (const Rational& c : cs) {
      if (c <= Rational(1)) throw DomainError(what + " needs c > 1, got " + c.to_string());
    }
  };
  auto at_least_one = [](const std::vector<Rational>& cs, const std::string& what) {
    for (const Rational& c : cs) {
      if (c < Rational(1)) throw DomainError(what + " needs c >= 1, got " + c.to_string());
    }
  };
  above_one(envelope_cs, "the envelope check");
  at_least_one(trivial_cs, "the trivial algorithms");
  above_one(covering_cs, "covering_min / covering_max");
  above_one(sandwich_cs, "the lower-bound sandwich");
  above_one(slack_cs, "the quotient slack check");
  above_one(reduction_cs, "aoc_generic");
  if (curve_c_min <= Rational(1)) throw DomainError("the curve needs c_min > 1");
  if (curve_c_max < curve_c_min) throw DomainError("the curve needs c_min <= c_max");
  for (int id : batteries) {
    if (id < 1 || id > 9) throw ContractViolation("battery ids run from 1 to 9, got " + std::to_string(id));
  }
  if (!(tolerance > 0)) throw ContractViolation("tolerance must be positive");
  if (envelope_n == 0 || brute_node_budget == 0 || knapsack_grid == 0 || curve_n == 0 || curve_steps == 0 ||
      design_limits.max_t_subsets == 0 || design_limits.max_candidate_blocks == 0 || design_limits.max_nodes == 0 ||
      adversary_m_max == 0 || exponential_n_max == 0) {
    throw ContractViolation("limits must be positive");
  }
  if (sublog_n < 2) throw ContractViolation("sublog_n must be at least 2");
  if (exponential_c_max < 2) throw ContractViolation("exponential_c_max must be at least 2");
}

// ----------------------------------------------------------------------------
// Reports

void BatteryResult::fail(const std::string& message) {
  passed = false;
  if (failures.size() < 10) failures.push_back(message);
}

json BatteryResult::to_json() const {
  return json{{"id", id}, {"name", name}, {"passed", passed}, {"cases", cases}, {"failures", failures},
              {"details", details}};
}

bool SuiteReport::passed() const {
  return std::all_of(batteries.begin(), batteries.end(), [](const BatteryResult& b) { return b.passed; });
}

json SuiteReport::to_json() const {
  json list = json::array();
  for (const BatteryResult& b : batteries) list.push_back(b.to_json());
  return json{{"passed", passed()}, {"batteries", list}};
}

std::string battery_name(int id) {
  switch (id) {
    case 1: return "envelope-sandwich";
    case 2: return "trivial-algorithms";
    case 3: return "covering-design-algorithms";
    case 4: return "lower-bound-sandwich";
    case 5: return "known-history-adversary";
    case 6: return "sub-logarithmic-advice";
    case 7: return "reductions";
    case 8: return "knapsack-and-matching";
    case 9: return "curve-reproduction";
    default: throw ContractViolation("no battery " + std::to_string(id));
  }
}

namespace {
BatteryResult started_battery(int id) {
  BatteryResult r;
  r.id = id;
  r.name = battery_name(id);
  return r;
}
}  // namespace

// ----------------------------------------------------------------------------
// 1

BatteryResult battery_envelope(const ExperimentConfig& config) {
  BatteryResult r = started_battery(1);
  json rows = json::array();
  for (const Rational& c : config.envelope_cs) {
    const bounds::BoundReport b = bounds::bound_report(config.envelope_n, c, config.tolerance);
    ++r.cases;
    rows.push_back(json{{"c", c.to_string()},
                        {"lower", to_double(b.lower_envelope)},
                        {"bound", to_double(b.bound)},
                        {"upper", to_double(b.upper_envelope)}});
    if (!b.sandwich_holds) {
      r.fail("c=" + c.to_string() + ": bound " + decimal(to_double(b.bound)) + " outside [" +
             decimal(to_double(b.lower_envelope)) + ", " + decimal(to_double(b.upper_envelope)) + "]");
    }
  }
  r.details["n"] = config.envelope_n;
  r.details["rows"] = rows;
  return r;
}

// ----------------------------------------------------------------------------
// 2

BatteryResult battery_trivial(const ExperimentConfig& config) {
  BatteryResult r = started_battery(2);
  json rows = json::array();
  for (const Rational& c : config.trivial_cs) {
    const Rational ceil_c(c.ceil());
    for (Objective objective : {Objective::minimize, Objective::maximize}) {
      const AdvicePair pair =
          objective == Objective::minimize ? algorithms::trivial_min(c) : algorithms::trivial_max(c);
      for (History history : {History::unknown, History::known}) {
        const AsgVariant variant{objective, history};
        for (std::size_t n = 0; n <= config.trivial_n_max; ++n) {
          const std::size_t p = algorithms::residue_period(n, c);
          const std::uint64_t limit = objective == Objective::minimize
                                          ? (p == 0 ? 0 : p + self_delimiting_length(p))
                                          : (p == 0 ? 0 : p + 2 * self_delimiting_length(n));
          std::size_t max_bits = 0;
          for (const BitString& x : all_strings(n)) {
            const RunResult run = run_asg(variant, pair, x);
            ++r.cases;
            max_bits = std::max(max_bits, run.advice_bits_read);
            const std::string where = pair.name + " " + to_string(variant) + " x=" + x.to_string();
            if (!run.score.is_finite()) {
              r.fail(where + ": infeasible output " + run.y.to_string());
            } else if (!satisfies_ratio(objective, run.score, asg_optimum(variant, x), ceil_c, 0)) {
              r.fail(where + ": score " + run.score.to_string() + " not within ceil(c) of " +
                     asg_optimum(variant, x).to_string());
            }
            if (run.advice_bits_read > limit || run.advice_bits_read > pair.declared_budget(n)) {
              r.fail(where + ": read " + std::to_string(run.advice_bits_read) + " bits, limit " +
                     std::to_string(limit));
            }
          }
          if (history == History::unknown) {
            rows.push_back(json{{"algo", pair.name}, {"n", n}, {"max_bits", max_bits}, {"limit", limit}});
          }
        }
      }
    }
  }
  r.details["rows"] = rows;
  return r;
}

// ----------------------------------------------------------------------------
// 3

BatteryResult battery_covering(const ExperimentConfig& config) {
  BatteryResult r = started_battery(3);
  json rows = json::array();
  for (const Rational& c : config.covering_cs) {
    for (Objective objective : {Objective::minimize, Objective::maximize}) {
      const bool is_min = objective == Objective::minimize;
      const AdvicePair pair = is_min ? algorithms::covering_min(c, config.design_limits)
                                     : algorithms::covering_max(c, config.design_limits);
      const AsgVariant variant{objective, History::unknown};
      for (std::size_t n = 1; n <= config.covering_n_max; ++n) {
        const std::size_t header = self_delimiting_length(n) + algorithms::weight_field_width(n);
        std::size_t max_bits = 0;
        for (const BitString& x : all_strings(n)) {
          const RunResult run = run_asg(variant, pair, x);
          ++r.cases;
          max_bits = std::max(max_bits, run.advice_bits_read);
          const std::string where = pair.name + " x=" + x.to_string();
          if (!satisfies_ratio(objective, run.score, asg_optimum(variant, x), c, 0)) {
            r.fail(where + ": score " + run.score.to_string() + " not strictly c-competitive");
            continue;
          }
          const std::size_t weight = is_min ? x.ones() : x.zeros();
          const auto params = is_min ? algorithms::covering_min_parameters(n, c, weight)
                                     : algorithms::covering_max_parameters(n, c, weight);
          if (!params) {
            if (run.advice_bits_read > header) r.fail(where + ": constant case read past the header");
            continue;
          }
          const std::size_t k = (*params)[1];
          if (is_min && run.y.ones() != k) {
            r.fail(where + ": cost " + std::to_string(run.y.ones()) + " != floor(ct) = " + std::to_string(k));
          }
          if (!is_min && run.y.zeros() != n - k) {
            r.fail(where + ": zeros " + std::to_string(run.y.zeros()) + " != ceil(u/c) = " + std::to_string(n - k));
          }
          const auto& shared = designs::shared_design((*params)[0], (*params)[1], (*params)[2], config.design_limits);
          if (shared.source != designs::DesignSource::exact) {
            r.fail(where + ": exact design size unavailable for (" + std::to_string(n) + "," + std::to_string(k) +
                   "," + std::to_string((*params)[2]) + ")");
          } else if (run.advice_bits_read - header > ceil_log2(shared.design.size())) {
            r.fail(where + ": index used " + std::to_string(run.advice_bits_read - header) + " bits for a design of " +
                   std::to_string(shared.design.size()) + " blocks");
          }
          if (run.advice_bits_read > pair.declared_budget(n)) r.fail(where + ": exceeded declared budget");
        }
        rows.push_back(json{{"algo", pair.name}, {"n", n}, {"max_bits", max_bits}});
      }
    }
  }
  r.details["rows"] = rows;
  return r;
}

// ----------------------------------------------------------------------------
// 4

BatteryResult battery_sandwich(const ExperimentConfig& config) {
  BatteryResult r = started_battery(4);
  json rows = json::array();
  for (const Rational& c : config.sandwich_cs) {
    for (Objective objective : {Objective::minimize, Objective::maximize}) {
      for (std::size_t n = 1; n <= config.sandwich_n_max; ++n) {
        const adversary::DesignSandwich ds = adversary::design_sandwich(n, c, objective);
        const adversary::BruteAdvice b =
            adversary::brute_min_advice(n, c, objective, config.brute_node_budget, config.sandwich_n_max);
        ++r.cases;
        const std::string where = "n=" + std::to_string(n) + " c=" + c.to_string() + " " + objective_name(objective);
        for (const BitString& x : all_strings(n)) {
          const bool served = std::any_of(b.family.begin(), b.family.end(), [&](const BitString& y) {
            return adversary::serves(objective, c, x, y);
          });
          if (!served) {
            r.fail(where + ": family leaves x=" + x.to_string() + " unserved");
            break;
          }
        }
        if (b.family.size() != b.upper) r.fail(where + ": family size differs from the upper bound");
        if (b.bits_lower < ds.bits_lower || b.bits_upper > ds.bits_upper) {
          r.fail(where + ": advice bits [" + std::to_string(b.bits_lower) + "," + std::to_string(b.bits_upper) +
                 "] outside [" + std::to_string(ds.bits_lower) + "," + std::to_string(ds.bits_upper) + "]");
        }
        rows.push_back(json{{"n", n},
                            {"c", c.to_string()},
                            {"objective", objective_name(objective)},
                            {"family_lower", b.lower},
                            {"family_upper", b.upper},
                            {"exact", b.exact},
                            {"bits_lower", b.bits_lower},
                            {"bits_upper", b.bits_upper},
                            {"design_max", ds.max_size.str()},
                            {"design_sum", ds.sum_size.str()},
                            {"sandwich", json::array({ds.bits_lower, ds.bits_upper})}});
      }
    }
  }
  std::uint64_t slack_points = 0;
  for (const Rational& c : config.slack_cs) {
    for (std::uint64_t n = 3; n <= config.slack_n_max; ++n) {
      for (bool min_form : {true, false}) {
        const bounds::QuotientSlackReport q =
            min_form ? bounds::check_min_quotient_slack(n, c) : bounds::check_max_quotient_slack(n, c);
        ++slack_points;
        if (!q.holds()) {
          r.fail(std::string(min_form ? "min" : "max") + " quotient slack fails at n=" + std::to_string(n) +
                 " c=" + c.to_string() + ": log max " + decimal(to_double(q.log_max)) + ", bound " +
                 decimal(to_double(q.bound)));
        }
      }
    }
  }
  r.cases += slack_points;
  r.details["rows"] = rows;
  r.details["slack_points"] = slack_points;
  return r;
}

// ----------------------------------------------------------------------------
// 5

BatteryResult battery_known_history(const ExperimentConfig& config) {
  BatteryResult r = started_battery(5);
  std::uint64_t table_games = 0;
  std::uint64_t subsets_checked = 0;

  // Every deterministic algorithm as an explicit table, for small n.
  for (std::size_t n = 1; n <= std::min(config.table_n_max, config.adversary_n_max); ++n) {
    const std::uint64_t tables = std::uint64_t{1} << ((std::size_t{1} << n) - 1);
    for (std::size_t h = 0; h <= n; ++h) {
      adversary::KnownHistoryGame game(n, h);
      const auto& strings = game.strings();
      for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << strings.size()); ++subset) {
        const auto m = static_cast<std::size_t>(std::popcount(subset));
        if (m > config.adversary_m_max) continue;
        const std::vector<BitString> members = members_of(strings, subset);
        const std::uint64_t bound = adversary::forced_cost_bound(m, h);
        std::uint64_t best = UINT64_MAX;
        for (std::uint64_t table = 0; table < tables; ++table) {
          adversary::TableStrategy strategy(table, n);
          AdviceTape tape;
          const adversary::GameTranscript t =
              adversary::known_history_adversary(adversary::AliveSet{members, 1}, strategy, tape);
          ++table_games;
          if (std::find(members.begin(), members.end(), t.revealed) == members.end()) {
            r.fail("revealed string " + t.revealed.to_string() + " left the alive set");
          }
          if (t.infeasible) continue;
          best = std::min<std::uint64_t>(best, t.forced_ones);
          if (t.forced_ones < bound) {
            r.fail("n=" + std::to_string(n) + " h=" + std::to_string(h) + " m=" + std::to_string(m) + " table " +
                   std::to_string(table) + ": cost " + std::to_string(t.forced_ones) + " < " + std::to_string(bound));
          }
        }
        if (best != game.value(subset)) {
          r.fail("n=" + std::to_string(n) + " subset " + std::to_string(subset) + ": best table cost " +
                 std::to_string(best) + " differs from the game value " + std::to_string(game.value(subset)));
        }
      }
    }
  }

  // Beyond that the game value is the best any algorithm can do; confirm it with
  // the cautious algorithm on every alive set.
  for (std::size_t n = 1; n <= config.adversary_n_max; ++n) {
    for (std::size_t h = 0; h <= n; ++h) {
      adversary::KnownHistoryGame game(n, h);
      const auto& strings = game.strings();
      for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << strings.size()); ++subset) {
        const auto m = static_cast<std::size_t>(std::popcount(subset));
        if (m > config.adversary_m_max) continue;
        ++subsets_checked;
        const std::uint64_t value = game.value(subset);
        const std::uint64_t bound = adversary::forced_cost_bound(m, h);
        const std::string where = "n=" + std::to_string(n) + " h=" + std::to_string(h) + " subset " +
                                  std::to_string(subset);
        if (value < bound) {
          r.fail(where + ": game value " + std::to_string(value) + " < bound " + std::to_string(bound));
        }
        const std::vector<BitString> members = members_of(strings, subset);
        CautiousGuesser cautious(members);
        AdviceTape tape;
        const adversary::GameTranscript t =
            adversary::known_history_adversary(adversary::AliveSet{members, 1}, cautious, tape);
        if (t.infeasible || t.forced_ones != value) {
          r.fail(where + ": cautious algorithm paid " + t.cost().to_string() + ", game value " +
                 std::to_string(value));
        }
      }
    }
  }

  // Equality cases.
  const std::size_t n = config.adversary_n_max;
  json equalities = json::array();
  for (std::size_t m = 1; m <= n && m <= config.adversary_m_max; ++m) {
    std::vector<BitString> unit;
    for (std::size_t i = 1; i <= m; ++i) {
      BitString s(n);
      s.set(i, true);
      unit.push_back(s);
    }
    const std::uint64_t value = adversary::known_history_game_value(adversary::AliveSet{unit, 1});
    const std::uint64_t bound = adversary::forced_cost_bound(m, 1);
    equalities.push_back(json{{"m", m}, {"h", 1}, {"value", value}, {"bound", bound}});
    if (value != bound || bound != m) r.fail("(m,1) equality fails at m=" + std::to_string(m));
  }
  for (std::size_t h = 0; h <= n; ++h) {
    BitString s(n);
    for (std::size_t i = 1; i <= h; ++i) s.set(i, true);
    const std::uint64_t value = adversary::known_history_game_value(adversary::AliveSet{{s}, 1});
    equalities.push_back(json{{"m", 1}, {"h", h}, {"value", value}, {"bound", adversary::forced_cost_bound(1, h)}});
    if (value != h || adversary::forced_cost_bound(1, h) != h) r.fail("(1,h) equality fails at h=" + std::to_string(h));
  }

  r.cases = table_games + subsets_checked;
  r.details["table_games"] = table_games;
  r.details["alive_sets"] = subsets_checked;
  r.details["equalities"] = equalities;
  return r;
}

// ----------------------------------------------------------------------------
// 6

BatteryResult battery_sublogarithmic(const ExperimentConfig& config) {
  BatteryResult r = started_battery(6);
  const std::size_t n = config.sublog_n;
  const std::size_t bits = std::bit_width(n) - 2;  // floor(log n) - 1
  const std::size_t m = std::size_t{1} << bits;
  json families = json::array();

  std::vector<std::pair<std::string, std::vector<std::unique_ptr<Guesser>>>> lists;
  lists.emplace_back("trivial-max(2)", adversary::fixed_advice_strategies(algorithms::trivial_max(Rational(2)), bits));
  lists.emplace_back("cover-max(2)", adversary::fixed_advice_strategies(
                                         algorithms::covering_max(Rational(2), config.design_limits), bits));
  {
    std::mt19937_64 rng(config.seed);
    std::vector<std::unique_ptr<Guesser>> mixed;
    mixed.push_back(std::make_unique<ZeroAtGuesser>(std::set<std::size_t>{}));
    while (mixed.size() < m) {
      std::set<std::size_t> rounds;
      const std::size_t count = 1 + rng() % 3;
      for (std::size_t k = 0; k < count; ++k) rounds.insert(1 + rng() % n);
      mixed.push_back(std::make_unique<ZeroAtGuesser>(std::move(rounds)));
    }
    lists.emplace_back("seeded zero-at mix", std::move(mixed));
  }

  for (auto& [label, strategies] : lists) {
    ++r.cases;
    const adversary::FirstZeroOutcome out = adversary::first_zero_adversary(strategies, n);
    const std::size_t opt = out.x.zeros();
    if (2 * opt < n) r.fail(label + ": OPT " + std::to_string(opt) + " < n/2");
    if (out.x.ones() > strategies.size()) r.fail(label + ": more ones than strategies");
    json profits = json::array();
    for (std::size_t k = 0; k < out.profits.size(); ++k) {
      profits.push_back(out.profits[k].to_string());
      if (!is_nonpositive_profit(out.profits[k])) {
        r.fail(label + ": strategy " + std::to_string(k) + " scored " + out.profits[k].to_string());
      }
    }
    families.push_back(json{{"strategies", label}, {"x", out.x.to_string()}, {"opt", opt}, {"profits", profits}});
  }

  std::uint64_t quotient_points = 0;
  for (std::uint64_t c = 2; c <= config.exponential_c_max; ++c) {
    for (std::uint64_t nn = 1; nn <= config.exponential_n_max; ++nn) {
      const bounds::ExponentialQuotientReport q = bounds::check_exponential_quotient(nn, c, config.tolerance);
      ++quotient_points;
      if (!q.holds) {
        r.fail("exponential quotient fails at n=" + std::to_string(nn) + " c=" + std::to_string(c) + " t=" +
               std::to_string(q.t));
      }
    }
  }
  r.cases += quotient_points;
  r.details["n"] = n;
  r.details["strategies_per_family"] = m;
  r.details["families"] = families;
  r.details["quotient_points"] = quotient_points;
  return r;
}

// ----------------------------------------------------------------------------
// 7

BatteryResult battery_reductions(const ExperimentConfig& config) {
  using reductions::Reduction;
  BatteryResult r = started_battery(7);
  json rows = json::array();
  const Reduction all[] = {Reduction::vc, Reduction::cf, Reduction::ds, Reduction::sc, Reduction::is, Reduction::dpa};
  for (Reduction red : all) {
    const problems::Problem target = reductions::target_problem(red);
    const AsgVariant variant = reductions::lifted_variant(red);
    for (std::size_t n = 1; n <= config.reduction_n_max; ++n) {
      const std::vector<BitString> xs = all_strings(n);
      const std::uint64_t extra_limit = 2 + 3 * self_delimiting_length(n);

      std::vector<problems::Instance> instances;
      for (const BitString& x : xs) {
        if (!reductions::instance_defined(red, x)) continue;
        instances.push_back(reductions::build_instance(red, x));
        const Score opt = problems::optimum(target, instances.back()).value;
        if (opt != reductions::closed_form_optimum(red, x)) {
          r.fail(reductions::to_string(red) + " x=" + x.to_string() + ": optimum " + opt.to_string() +
                 " differs from the closed form " + reductions::closed_form_optimum(red, x).to_string());
        }
      }
      std::size_t next = 0;
      const reductions::MembershipReport membership =
          reductions::aoc_membership_check(target, [&]() -> std::optional<problems::Instance> {
            if (next == instances.size()) return std::nullopt;
            return instances[next++];
          });
      r.cases += membership.instances;
      for (const std::string& v : membership.violations) r.fail(reductions::to_string(red) + ": " + v);

      for (const Rational& c : config.reduction_cs) {
        const problems::ProblemPair inner = algorithms::aoc_generic(target, c, config.design_limits);
        const AdvicePair lifted = reductions::lift_to_asg(inner, red);
        std::uint64_t max_extra = 0;
        for (const BitString& x : xs) {
          ++r.cases;
          const std::string where = reductions::to_string(red) + " c=" + c.to_string() + " x=" + x.to_string();
          std::size_t inner_bits = 0;
          if (reductions::instance_defined(red, x)) {
            const problems::Instance inst = reductions::build_instance(red, x);
            const problems::ProblemRun run = problems::run_problem(inner, inst);
            inner_bits = run.advice_bits_read;
            const Score opt = reductions::closed_form_optimum(red, x);
            if (!satisfies_ratio(problems::objective(target), run.score, opt, c, 0)) {
              r.fail(where + ": aoc_generic scored " + run.score.to_string() + " against " + opt.to_string());
            }
            if (run.advice_bits_read > inner.declared_budget(problems::request_count(inst))) {
              r.fail(where + ": aoc_generic exceeded its declared budget");
            }
          }
          const RunResult lifted_run = run_asg(variant, lifted, x);
          if (!satisfies_ratio(variant.objective, lifted_run.score, asg_optimum(variant, x), c, 0)) {
            r.fail(where + ": lifted pair scored " + lifted_run.score.to_string() + " against " +
                   asg_optimum(variant, x).to_string());
          }
          const std::uint64_t extra =
              lifted_run.advice_bits_read > inner_bits ? lifted_run.advice_bits_read - inner_bits : 0;
          max_extra = std::max(max_extra, extra);
          if (extra > extra_limit) {
            r.fail(where + ": lifting added " + std::to_string(extra) + " bits, limit " + std::to_string(extra_limit));
          }
          if (lifted_run.advice_bits_read > lifted.declared_budget(n)) {
            r.fail(where + ": lifted pair exceeded its declared budget");
          }
        }
        rows.push_back(json{{"reduction", reductions::to_string(red)},
                            {"n", n},
                            {"c", c.to_string()},
                            {"max_added_bits", max_extra},
                            {"limit", extra_limit}});
      }
    }
  }
  r.details["rows"] = rows;
  return r;
}

// ----------------------------------------------------------------------------
// 8

namespace {

/// Every weight sequence over {0, 1/g, ..., 1} of length n, for every advised
/// m, checked by depth-first search. Two prefixes with the same multiset of
/// weights and the same solver state have the same futures, so each such
/// state is expanded once.
void knapsack_exhaustive(std::size_t n, std::uint64_t grid, BatteryResult& r, json& rows) {
  const std::size_t values = grid + 1;
  const algorithms::KnapsackThreshold fresh;
  std::uint64_t leaves = 0;
  std::uint64_t states = 0;
  for (std::uint64_t m = 0; m <= n; ++m) {
    std::vector<std::unordered_set<std::string>> seen(n + 1);
    std::vector<std::uint8_t> counts(values, 0);
    AdviceTape root_tape(encode_self_delimiting(m));

    std::function<void(std::size_t, const algorithms::KnapsackThreshold&, AdviceTape&)> dfs =
        [&](std::size_t depth, const algorithms::KnapsackThreshold& solver, AdviceTape& tape) {
          std::string key(counts.begin(), counts.end());
          key += static_cast<char>((solver.load() * Rational(static_cast<std::int64_t>(grid))).floor());
          key += static_cast<char>(solver.accepted());
          if (!seen[depth].insert(key).second) return;
          ++states;
          if (depth == n) {
            ++leaves;
            std::uint64_t opt = 0;
            std::uint64_t room = grid;
            for (std::size_t v = 0; v < values; ++v) {
              for (std::uint8_t k = 0; k < counts[v]; ++k) {
                if (v <= room) {
                  room -= v;
                  ++opt;
                }
              }
            }
            if (opt != m) return;
            if (opt > 2 * solver.accepted()) {
              std::string multiset;
              for (std::size_t v = 0; v < values; ++v) multiset += std::to_string(counts[v]) + " ";
              r.fail("knapsack n=" + std::to_string(n) + " counts [" + multiset + "]: accepted " +
                     std::to_string(solver.accepted()) + " of optimum " + std::to_string(opt));
            }
            if (tape.bits_read() > self_delimiting_length(n)) r.fail("knapsack read more than O(log n) bits");
            return;
          }
          for (std::size_t v = 0; v < values; ++v) {
            algorithms::KnapsackThreshold next = solver;
            AdviceTape next_tape = tape;
            const problems::ItemRequest item{depth + 1, Rational(static_cast<std::int64_t>(v),
                                                                 static_cast<std::int64_t>(grid))};
            next.decide(item, next_tape);
            ++counts[v];
            dfs(depth + 1, next, next_tape);
            --counts[v];
          }
        };
    dfs(0, fresh, root_tape);
  }
  r.cases += leaves;
  rows.push_back(json{{"n", n}, {"leaf_states", leaves}, {"states", states}});
}

void check_knapsack_run(const problems::ProblemPair& pair, const problems::KnapsackInstance& ks, BatteryResult& r) {
  const problems::Instance inst = ks;
  const problems::ProblemRun run = problems::run_problem(pair, inst);
  const std::size_t opt = problems::knapsack_optimum_count(ks);
  ++r.cases;
  std::string label;
  for (const Rational& w : ks.weights) label += w.to_string() + " ";
  if (!run.score.is_finite() || opt > 2 * run.score.value()) {
    r.fail("knapsack [" + label + "]: profit " + run.score.to_string() + " against optimum " + std::to_string(opt));
  }
  if (run.advice_bits_read > pair.declared_budget(ks.weights.size())) {
    r.fail("knapsack [" + label + "]: read " + std::to_string(run.advice_bits_read) + " bits");
  }
}

void check_matching(const problems::ProblemPair& pair, const problems::MatchingInstance& m, std::size_t opt,
                    BatteryResult& r) {
  const problems::ProblemRun run = problems::run_problem(pair, problems::Instance(m));
  ++r.cases;
  if (!run.score.is_finite() || opt > 2 * run.score.value()) {
    std::string label;
    for (const auto& [a, b] : m.edges) label += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    r.fail("matching " + label + ": greedy " + run.score.to_string() + " against optimum " + std::to_string(opt));
  }
}

}  // namespace

BatteryResult battery_knapsack_matching(const ExperimentConfig& config) {
  BatteryResult r = started_battery(8);
  json knapsack_rows = json::array();
  const std::uint64_t grid = config.knapsack_grid;
  for (std::size_t n = 0; n <= config.knapsack_n_max; ++n) knapsack_exhaustive(n, grid, r, knapsack_rows);

  // The real oracle and algorithm end to end: every sequence up to a length,
  // then a seeded sample up to the full length.
  const problems::ProblemPair knapsack = algorithms::knapsack_two_competitive();
  std::uint64_t full_runs = 0;
  for (std::size_t n = 0; n <= config.knapsack_full_runs_n_max; ++n) {
    std::vector<std::size_t> digits(n, 0);
    while (true) {
      problems::KnapsackInstance ks;
      for (std::size_t d : digits) ks.weights.emplace_back(static_cast<std::int64_t>(d), static_cast<std::int64_t>(grid));
      check_knapsack_run(knapsack, ks, r);
      if (n <= 4) {
        const std::size_t brute = problems::optimum(problems::Problem::uniform_knapsack, ks).value.value();
        if (brute != problems::knapsack_optimum_count(ks)) r.fail("knapsack optimum count disagrees with brute force");
      }
      ++full_runs;
      std::size_t pos = 0;
      while (pos < n && digits[pos] == grid) digits[pos++] = 0;
      if (pos == n) break;
      ++digits[pos];
    }
  }
  std::mt19937_64 rng(config.seed);
  for (int sample = 0; sample < 5000; ++sample) {
    const std::size_t n = rng() % (config.knapsack_n_max + 1);
    problems::KnapsackInstance ks;
    for (std::size_t i = 0; i < n; ++i) {
      ks.weights.emplace_back(static_cast<std::int64_t>(rng() % (grid + 1)), static_cast<std::int64_t>(grid));
    }
    check_knapsack_run(knapsack, ks, r);
    ++full_runs;
  }

  // Matching: every edge order on small vertex sets, then every labelled graph
  // in ascending, descending and a seeded shuffled order.
  const problems::ProblemPair greedy = algorithms::greedy_matching();
  std::uint64_t graphs = 0;
  std::uint64_t orders = 0;
  for (std::size_t v = 0; v <= config.matching_n_max; ++v) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
    for (std::uint32_t a = 1; a <= v; ++a) {
      for (std::uint32_t b = a + 1; b <= v; ++b) slots.emplace_back(a, b);
    }
    if (slots.size() > 40) throw ResourceLimitExceeded("matching graphs limited to 9 vertices");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      problems::MatchingInstance m;
      m.vertices = v;
      for (std::size_t k = 0; k < slots.size(); ++k) {
        if ((mask >> k) & 1u) m.edges.push_back(slots[k]);
      }
      const std::size_t opt = problems::maximum_matching_size(m);
      ++graphs;
      if (v <= config.matching_all_orders_n_max) {
        do {
          check_matching(greedy, m, opt, r);
          ++orders;
        } while (std::next_permutation(m.edges.begin(), m.edges.end()));
      } else {
        check_matching(greedy, m, opt, r);
        std::reverse(m.edges.begin(), m.edges.end());
        check_matching(greedy, m, opt, r);
        std::shuffle(m.edges.begin(), m.edges.end(), rng);
        check_matching(greedy, m, opt, r);
        orders += 3;
      }
    }
  }
  problems::MatchingInstance path;
  path.vertices = 4;
  path.edges = {{2, 3}, {1, 2}, {3, 4}};
  const problems::ProblemRun witness = problems::run_problem(greedy, problems::Instance(path));
  const std::size_t path_opt = problems::maximum_matching_size(path);
  if (!witness.score.is_finite() || witness.score.value() != 1 || path_opt != 2) {
    r.fail("path witness: greedy " + witness.score.to_string() + ", optimum " + std::to_string(path_opt));
  }
  r.details["knapsack"] = knapsack_rows;
  r.details["knapsack_end_to_end_runs"] = full_runs;
  r.details["matching_graphs"] = graphs;
  r.details["matching_orders"] = orders;
  r.details["path_witness"] = json{{"greedy", witness.score.to_string()}, {"optimum", path_opt}};
  return r;
}

// ----------------------------------------------------------------------------
// 9

BatteryResult battery_curve(const ExperimentConfig& config) {
  BatteryResult r = started_battery(9);
  const std::vector<CurvePoint> points =
      emit_curve(config.curve_c_min, config.curve_c_max, config.curve_steps, config.curve_n);
  const std::string csv = curve_csv(points);

  // Read the c = 2 row back from the emitted text.
  std::optional<double> at_two;
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    if (line.rfind("2,", 0) == 0) {
      std::istringstream fields(line);
      std::string field;
      for (int k = 0; k < 3; ++k) std::getline(fields, field, ',');
      at_two = std::stod(field);
    }
  }
  const double expected = std::log2(1.25);
  if (!at_two) {
    r.fail("the curve grid does not contain c = 2");
  } else if (std::abs(*at_two - expected) > 5e-6) {
    r.fail("c = 2 gives " + decimal(*at_two) + " bits per request, expected " + decimal(expected));
  }
  for (std::size_t k = 0; k < points.size(); ++k) {
    const CurvePoint& p = points[k];
    ++r.cases;
    const double slack = config.tolerance * p.envelope_hi;
    if (p.asg_bits_per_request < p.envelope_lo - slack || p.asg_bits_per_request > p.envelope_hi + slack) {
      r.fail("envelope violated at c=" + p.c.to_string());
    }
    if (k > 0 && !(p.asg_bits_per_request < points[k - 1].asg_bits_per_request)) {
      r.fail("curve not decreasing at c=" + p.c.to_string());
    }
    const bool sg_expected = !(Rational(2) < p.c);
    if (sg_expected != p.sg_bits_per_request.has_value()) {
      r.fail("string guessing column present outside 1 < c <= 2 or missing inside, c=" + p.c.to_string());
    }
    if (p.sg_bits_per_request && !(*p.sg_bits_per_request < p.asg_bits_per_request)) {
      r.fail("string guessing curve not below the asymmetric one at c=" + p.c.to_string());
    }
  }
  r.details["points"] = points.size();
  r.details["asg_at_2"] = at_two ? json(*at_two) : json();
  return r;
}

// ----------------------------------------------------------------------------

BatteryResult run_battery(int id, const ExperimentConfig& config) {
  switch (id) {
    case 1: return battery_envelope(config);
    case 2: return battery_trivial(config);
    case 3: return battery_covering(config);
    case 4: return battery_sandwich(config);
    case 5: return battery_known_history(config);
    case 6: return battery_sublogarithmic(config);
    case 7: return battery_reductions(config);
    case 8: return battery_knapsack_matching(config);
    case 9: return battery_curve(config);
    default: throw ContractViolation("no battery " + std::to_string(id));
  }
}

SuiteReport run_suite(const ExperimentConfig& config) {
  config.validate();
  SuiteReport report;
  for (int id : config.batteries) {
    try {
      report.batteries.push_back(run_battery(id, config));
    } catch (const ResourceLimitExceeded& e) {
      BatteryResult failed = started_battery(id);
      failed.fail(std::string("resource guard: ") + e.what());
      report.batteries.push_back(std::move(failed));
    } catch (const std::exception& e) {
      BatteryResult failed = started_battery(id);
      failed.fail(std::string("error: ") + e.what());
      report.batteries.push_back(std::move(failed));
    }
  }
  return report;
}

}  // namespace asg::harness
