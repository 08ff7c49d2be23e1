#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "asg/adversary.hpp"
#include "asg/designs.hpp"
#include "asg/engine.hpp"
#include "asg/problems.hpp"
#include "asg/rational.hpp"

namespace asg::harness {

using nlohmann::json;

// ----------------------------------------------------------------------------
// Advice-per-request curves

struct CurvePoint {
  Rational c;
  double asg_bits_per_request = 0;  // advice_bound(n, c) / n
  double envelope_hi = 0;           // 1 / c
  double envelope_lo = 0;           // 1 / (e ln2 c)
  /// The original binary string guessing problem, 1 - H(1/c); only for 1 < c <= 2.
  std::optional<double> sg_bits_per_request;
};

/// log2((c-1)^{c-1} / (c/2)^c) / c. Requires 1 < c <= 2.
double sg_bits_per_request(const Rational& c);

/// steps + 1 evenly spaced ratios c_min, ..., c_max (exact rationals).
/// Requires 1 < c_min <= c_max and steps >= 1 (steps may be 0 when c_min == c_max).
std::vector<CurvePoint> emit_curve(const Rational& c_min, const Rational& c_max, std::size_t steps,
                                   std::uint64_t n);

/// Columns: c, c_decimal, asg_bits_per_request, envelope_hi, envelope_lo,
/// sg_bits_per_request (empty outside 1 < c <= 2).
std::string curve_csv(const std::vector<CurvePoint>& points);
/// An array of records with the CSV's column names; sg is null when absent.
json curve_json(const std::vector<CurvePoint>& points);

// ----------------------------------------------------------------------------
// Named algorithms

/// trivial-min, trivial-max, cover-min, cover-max.
AdvicePair asg_pair_by_name(const std::string& name, const Rational& c,
                            const designs::SearchLimits& limits = designs::SearchLimits::from_environment());
/// The ASG variant a named pair is meant for (unknown history).
AsgVariant asg_pair_variant(const std::string& name);

/// aoc (needs the problem), knapsack, matching.
problems::ProblemPair problem_pair_by_name(const std::string& name, problems::Problem problem, const Rational& c,
                                           const designs::SearchLimits& limits =
                                               designs::SearchLimits::from_environment());

/// Deterministic no-advice maximization strategies, described in JSON:
///   {"kind": "always-one"}
///   {"kind": "zero-at", "rounds": [3, 5]}        answers 0 exactly there
///   {"kind": "fixed-advice", "algo": "trivial-max", "c": "2", "bits": 3}
///                                                 one strategy per advice value
std::vector<std::unique_ptr<Guesser>> strategies_from_json(const json& spec);

/// Known-history algorithm that answers 1 exactly when some string of `alive`
/// consistent with the revealed prefix has a 1 in the current round.
class CautiousGuesser final : public Guesser {
 public:
  explicit CautiousGuesser(std::vector<BitString> alive) : alive_(std::move(alive)) {}
  bool guess(std::size_t round, AdviceTape& tape) override;
  void learn(bool previous) override;

 private:
  std::vector<BitString> alive_;
  std::size_t round_ = 1;
};

// ----------------------------------------------------------------------------
// Experiment batteries

struct ExperimentConfig {
  std::uint64_t seed = 20140617;
  std::vector<int> batteries{1, 2, 3, 4, 5, 6, 7, 8, 9};
  double tolerance = 1e-9;

  std::uint64_t envelope_n = 1'000'000;
  std::vector<Rational> envelope_cs{{101, 100}, {11, 10}, {3, 2}, {2, 1}, {3, 1}, {5, 1}, {10, 1}, {100, 1}};

  std::size_t trivial_n_max = 10;
  std::vector<Rational> trivial_cs{{3, 2}, {2, 1}, {3, 1}};

  std::size_t covering_n_max = 8;
  std::vector<Rational> covering_cs{{3, 2}, {2, 1}, {3, 1}};

  std::size_t sandwich_n_max = 8;
  std::vector<Rational> sandwich_cs{{3, 2}, {2, 1}};
  std::uint64_t brute_node_budget = 1'000'000;
  std::uint64_t slack_n_max = 2000;
  std::vector<Rational> slack_cs{{3, 2}, {2, 1}, {3, 1}, {5, 1}};

  std::size_t adversary_n_max = 6;
  std::size_t adversary_m_max = 20;
  std::size_t table_n_max = 4;  // explicit enumeration of every strategy table

  std::size_t sublog_n = 16;
  std::uint64_t exponential_c_max = 10;
  std::uint64_t exponential_n_max = 10'000;

  std::size_t reduction_n_max = 8;
  std::vector<Rational> reduction_cs{{3, 2}, {2, 1}, {3, 1}};

  std::size_t knapsack_n_max = 10;
  std::uint64_t knapsack_grid = 8;      // weights are multiples of 1/grid
  std::size_t knapsack_full_runs_n_max = 5;
  std::size_t matching_n_max = 7;
  std::size_t matching_all_orders_n_max = 5;

  Rational curve_c_min{11, 10};
  Rational curve_c_max{10, 1};
  std::size_t curve_steps = 89;
  std::uint64_t curve_n = 1000;

  designs::SearchLimits design_limits = designs::SearchLimits::from_environment();

  /// Overrides the defaults with the keys present in `j` (same names as the
  /// fields; ratios as "P/Q" strings). Unknown keys are rejected.
  static ExperimentConfig from_json(const json& j);
  json to_json() const;
  /// Throws DomainError when a ratio is out of range for its battery (for
  /// example c <= 1 for the covering algorithms) and ContractViolation for
  /// non-positive limits.
  void validate() const;
};

struct BatteryResult {
  int id = 0;
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::vector<std::string> failures;  // the first few, with witnesses
  json details = json::object();

  void fail(const std::string& message);
  json to_json() const;
};

struct SuiteReport {
  std::vector<BatteryResult> batteries;
  bool passed() const;
  json to_json() const;
};

/// Short names of batteries 1..9.
std::string battery_name(int id);

BatteryResult battery_envelope(const ExperimentConfig& config);
BatteryResult battery_trivial(const ExperimentConfig& config);
BatteryResult battery_covering(const ExperimentConfig& config);
BatteryResult battery_sandwich(const ExperimentConfig& config);
BatteryResult battery_known_history(const ExperimentConfig& config);
BatteryResult battery_sublogarithmic(const ExperimentConfig& config);
BatteryResult battery_reductions(const ExperimentConfig& config);
BatteryResult battery_knapsack_matching(const ExperimentConfig& config);
BatteryResult battery_curve(const ExperimentConfig& config);

BatteryResult run_battery(int id, const ExperimentConfig& config);
/// Validates the config, then runs the selected batteries in order. Resource
/// guard breaches are recorded as failures of the battery that hit them.
SuiteReport run_suite(const ExperimentConfig& config);

}  // namespace asg::harness
