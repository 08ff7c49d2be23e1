#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "asg/adversary.hpp"
#include "asg/algorithms.hpp"
#include "asg/bounds.hpp"
#include "asg/designs.hpp"
#include "asg/errors.hpp"
#include "asg/harness.hpp"
#include "asg/io.hpp"
#include "asg/reductions.hpp"

using nlohmann::json;
using namespace asg;

namespace {

std::string decimal(const Real& r) {
  std::ostringstream out;
  out.precision(15);
  out << r.convert_to<double>();
  return out.str();
}

/// Flat records become CSV with the keys of the first record as header.
std::string records_csv(const json& rows) {
  std::ostringstream out;
  if (rows.empty()) return "";
  bool first = true;
  for (const auto& [key, value] : rows.front().items()) {
    out << (first ? "" : ",") << key;
    first = false;
  }
  out << "\n";
  for (const json& row : rows) {
    first = true;
    for (const auto& [key, value] : row.items()) {
      out << (first ? "" : ",");
      first = false;
      if (value.is_string()) {
        out << value.get<std::string>();
      } else if (!value.is_null()) {
        out << value.dump();
      }
    }
    out << "\n";
  }
  return out.str();
}

struct Output {
  std::string path;
  std::string format = "json";

  void add_to(CLI::App* app) {
    app->add_option("--out", path, "Output file (stdout when omitted)");
    app->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  }
  void emit(const json& payload, const std::string& csv = "") const {
    if (format == "csv" && !csv.empty()) {
      io::write_text(path, csv);
    } else {
      io::write_text(path, payload.dump(2) + "\n");
    }
  }
};

Objective parse_objective(const std::string& text) {
  if (text == "min") return Objective::minimize;
  if (text == "max") return Objective::maximize;
  throw ContractViolation("variant must be min or max, got '" + text + "'");
}

json string_list(const std::vector<BitString>& strings) {
  json out = json::array();
  for (const BitString& s : strings) out.push_back(s.to_string());
  return out;
}

json bound_json(std::uint64_t n, const Rational& c) {
  const bounds::BoundReport r = bounds::bound_report(n, c);
  const bounds::ExponentMaximizer m = bounds::exponent_maximizer(n, c);
  return json{{"n", n},
              {"c", c.to_string()},
              {"bound", decimal(r.bound)},
              {"lower_envelope", decimal(r.lower_envelope)},
              {"upper_envelope", decimal(r.upper_envelope)},
              {"sandwich_holds", r.sandwich_holds},
              {"maximizing_n_over_t", decimal(m.n_over_t)},
              {"maximizing_t", decimal(m.t_star)}};
}

json design_bounds_json(std::size_t v, std::size_t k, std::size_t t) {
  const designs::CoverNumberBounds b = designs::cover_number_bounds(v, k, t);
  json j{{"v", v},
         {"k", k},
         {"t", t},
         {"lower", b.lower.str()},
         {"schonheim", designs::schonheim_bound(v, k, t).str()},
         {"upper", b.upper.str()}};
  if (b.exact) j["exact"] = *b.exact;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asymmetric string guessing with advice: bounds, algorithms, adversaries and reductions"};
  app.require_subcommand(1);
  std::function<int()> action;

  Rational c{2};
  auto add_ratio = [&c](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option_function<std::string>(
        "--c", [&c](const std::string& text) { c = Rational::parse(text); }, "Competitive ratio as P/Q");
    if (required) opt->required();
  };

  // bounds
  std::uint64_t bounds_n = 0;
  Output bounds_out;
  {
    auto* sub = app.add_subcommand("bounds", "Advice bound and its envelopes");
    sub->add_option("--n", bounds_n, "Input length")->required();
    add_ratio(sub);
    bounds_out.add_to(sub);
    sub->callback([&] {
      action = [&] {
        const json j = bound_json(bounds_n, c);
        bounds_out.emit(j, records_csv(json::array({j})));
        return 0;
      };
    });
  }

  // curve
  std::string curve_min = "11/10", curve_max = "10";
  std::size_t curve_steps = 89;
  std::uint64_t curve_n = 1000;
  Output curve_out;
  curve_out.format = "csv";
  {
    auto* sub = app.add_subcommand("curve", "Advice bits per request against c");
    sub->add_option("--c-min", curve_min, "Smallest ratio, P/Q");
    sub->add_option("--c-max", curve_max, "Largest ratio, P/Q");
    sub->add_option("--steps", curve_steps, "Number of intervals");
    sub->add_option("--n", curve_n, "Input length used for the bound");
    curve_out.add_to(sub);
    sub->callback([&] {
      action = [&] {
        const auto points =
            harness::emit_curve(Rational::parse(curve_min), Rational::parse(curve_max), curve_steps, curve_n);
        curve_out.emit(harness::curve_json(points), harness::curve_csv(points));
        return 0;
      };
    });
  }

  // design
  std::size_t dv = 0, dk = 0, dt = 0;
  Output design_out;
  {
    auto* sub = app.add_subcommand("design", "Covering designs");
    sub->require_subcommand(1);
    for (const char* mode : {"exact", "greedy", "bounds"}) {
      auto* m = sub->add_subcommand(mode, std::string(mode) + " (v, k, t)");
      m->add_option("v", dv)->required();
      m->add_option("k", dk)->required();
      m->add_option("t", dt)->required();
      design_out.add_to(m);
      const std::string name = mode;
      m->callback([&, name] {
        action = [&, name] {
          json j;
          if (name == "exact") {
            const designs::ExactCover e = designs::exact_cover_number(dv, dk, dt);
            j = io::to_json(e.witness);
            j["size"] = e.size;
            j["nodes"] = e.nodes;
          } else if (name == "greedy") {
            const designs::CoveringDesign g = designs::greedy_cover(dv, dk, dt);
            j = io::to_json(g);
            j["size"] = g.size();
          } else {
            j = design_bounds_json(dv, dk, dt);
          }
          design_out.emit(j);
          return 0;
        };
      });
    }
  }

  // simulate
  std::string sim_algo, sim_x, sim_instance;
  bool sim_known = false;
  Output sim_out;
  {
    auto* sub = app.add_subcommand("simulate", "Run one algorithm on one input");
    sub->add_option("--algo", sim_algo,
                    "trivial-min, trivial-max, cover-min, cover-max, aoc, knapsack or matching")
        ->required();
    add_ratio(sub, false);
    auto* x = sub->add_option("--x", sim_x, "Input bits for the ASG algorithms");
    auto* inst = sub->add_option("--instance", sim_instance, "Instance file for the problem algorithms");
    x->excludes(inst);
    sub->add_flag("--known-history", sim_known, "Deliver each revealed bit to the algorithm");
    sim_out.add_to(sub);
    sub->callback([&] {
      action = [&] {
        if (!sim_x.empty()) {
          const BitString bits = BitString::parse(sim_x);
          AsgVariant variant = harness::asg_pair_variant(sim_algo);
          if (sim_known) variant.history = History::known;
          const RunResult r = run_asg(variant, harness::asg_pair_by_name(sim_algo, c), bits);
          json j = io::to_json(r);
          j["opt"] = io::score_to_json(asg_optimum(variant, bits));
          j["variant"] = to_string(variant);
          sim_out.emit(j);
          return 0;
        }
        if (sim_instance.empty()) throw ContractViolation("simulate needs --x or --instance");
        const auto [problem, instance] = io::instance_from_json(io::read_json_file(sim_instance));
        const problems::ProblemRun r =
            problems::run_problem(harness::problem_pair_by_name(sim_algo, problem, c), instance);
        json j = io::to_json(r);
        j["problem"] = problems::to_string(problem);
        if (problems::request_count(instance) <= 16) {
          j["opt"] = io::score_to_json(problems::optimum(problem, instance).value);
        }
        sim_out.emit(j);
        return 0;
      };
    });
  }

  // verify
  std::string ver_algo;
  std::size_t ver_n = 0;
  std::uint64_t ver_alpha = 0;
  std::string ver_ratio;
  Output ver_out;
  {
    auto* sub = app.add_subcommand("verify", "Exhaustive competitiveness check over {0,1}^n");
    sub->add_option("--algo", ver_algo, "trivial-min, trivial-max, cover-min or cover-max")->required();
    add_ratio(sub);
    sub->add_option("--n", ver_n, "Input length")->required();
    sub->add_option("--ratio", ver_ratio, "Ratio to check, P/Q (default: ceil(c) for trivial, c otherwise)");
    sub->add_option("--alpha", ver_alpha, "Additive constant");
    ver_out.add_to(sub);
    sub->callback([&] {
      action = [&] {
        Rational ratio = c;
        if (!ver_ratio.empty()) {
          ratio = Rational::parse(ver_ratio);
        } else if (ver_algo.rfind("trivial", 0) == 0) {
          ratio = Rational(c.ceil());
        }
        const AdvicePair pair = harness::asg_pair_by_name(ver_algo, c);
        const CompetitiveVerdict v = verify_asg_pair(harness::asg_pair_variant(ver_algo), pair, ratio, ver_alpha, ver_n);
        std::uint64_t worst = 0;
        for (const BitString& x : all_strings(ver_n)) {
          worst = std::max<std::uint64_t>(worst, run_asg(harness::asg_pair_variant(ver_algo), pair, x).advice_bits_read);
        }
        json j = io::to_json(v);
        j["max_bits_read"] = worst;
        j["declared_budget"] = pair.declared_budget(ver_n);
        ver_out.emit(j);
        return v.holds ? 0 : 1;
      };
    });
  }

  // adversary
  std::string adv_strings, adv_algos;
  std::size_t adv_n = 0;
  Output adv_out;
  {
    auto* sub = app.add_subcommand("adversary", "Lower-bound adversaries");
    sub->require_subcommand(1);
    auto* kh = sub->add_subcommand("known-history", "Forced cost against an alive set of strings");
    kh->alias("minsk");
    kh->add_option("--strings", adv_strings, "JSON file with a list of bit strings")->required();
    adv_out.add_to(kh);
    kh->callback([&] {
      action = [&] {
        const json file = io::read_json_file(adv_strings);
        adversary::AliveSet alive;
        for (const json& s : file) alive.strings.push_back(BitString::parse(s.get<std::string>()));
        alive.validate();
        const std::size_t h = alive.remaining_ones();
        const std::uint64_t value = adversary::known_history_game_value(alive);
        harness::CautiousGuesser cautious(alive.strings);
        AdviceTape tape;
        const adversary::GameTranscript g = adversary::known_history_adversary(alive, cautious, tape);
        adv_out.emit(json{{"strings", alive.strings.size()},
                          {"ones", h},
                          {"forced_cost_bound", adversary::forced_cost_bound(alive.strings.size(), h)},
                          {"game_value", value},
                          {"cautious_revealed", g.revealed.to_string()},
                          {"cautious_answers", g.answers.to_string()},
                          {"cautious_cost", io::score_to_json(g.cost())}});
        return 0;
      };
    });
    auto* fz = sub->add_subcommand("first-zero", "Defeat no-advice maximization strategies");
    fz->alias("maxs");
    fz->add_option("--n", adv_n, "Input length")->required();
    fz->add_option("--algos", adv_algos, "JSON file describing the strategies")->required();
    adv_out.add_to(fz);
    fz->callback([&] {
      action = [&] {
        auto strategies = harness::strategies_from_json(io::read_json_file(adv_algos));
        const adversary::FirstZeroOutcome o = adversary::first_zero_adversary(strategies, adv_n);
        json profits = json::array();
        for (const Score& p : o.profits) profits.push_back(io::score_to_json(p));
        adv_out.emit(json{{"x", o.x.to_string()},
                          {"opt", o.x.zeros()},
                          {"outputs", string_list(o.outputs)},
                          {"profits", profits}});
        return 0;
      };
    });
  }

  // brute
  std::size_t brute_n = 0;
  std::string brute_variant = "min";
  std::uint64_t brute_budget = 1'000'000;
  Output brute_out;
  {
    auto* sub = app.add_subcommand("brute", "Minimum advice for unknown history by exact set cover");
    sub->add_option("--n", brute_n, "Input length (at most 8)")->required();
    add_ratio(sub);
    sub->add_option("--variant", brute_variant, "min or max")->check(CLI::IsMember({"min", "max"}));
    sub->add_option("--node-budget", brute_budget, "Branch-and-bound node budget");
    brute_out.add_to(sub);
    sub->callback([&] {
      action = [&] {
        const Objective o = parse_objective(brute_variant);
        const adversary::BruteAdvice b = adversary::brute_min_advice(brute_n, c, o, brute_budget);
        const adversary::DesignSandwich s = adversary::design_sandwich(brute_n, c, o);
        brute_out.emit(json{{"n", b.n},
                            {"c", c.to_string()},
                            {"variant", brute_variant},
                            {"exact", b.exact},
                            {"family_lower", b.lower},
                            {"family_upper", b.upper},
                            {"bits_lower", b.bits_lower},
                            {"bits_upper", b.bits_upper},
                            {"sandwich_bits_lower", s.bits_lower},
                            {"sandwich_bits_upper", s.bits_upper},
                            {"family", string_list(b.family)},
                            {"nodes", b.nodes}});
        return 0;
      };
    });
  }

  // reduce
  std::string red_from, red_to;
  Output red_out;
  {
    auto* sub = app.add_subcommand("reduce", "Build the hard instance for a bit string");
    sub->add_option("--from", red_from, "Bit string x")->required();
    sub->add_option("--to", red_to, "vc, cf, ds, sc, is or dpa")->required();
    red_out.add_to(sub);
    sub->callback([&] {
      action = [&] {
        const reductions::Reduction r = reductions::parse_reduction(red_to);
        const BitString x = BitString::parse(red_from);
        json j = io::instance_to_json(reductions::target_problem(r), reductions::build_instance(r, x));
        j["closed_form_optimum"] = io::score_to_json(reductions::closed_form_optimum(r, x));
        red_out.emit(j);
        return 0;
      };
    });
  }

  // lift
  std::string lift_from, lift_via;
  Output lift_out;
  {
    auto* sub = app.add_subcommand("lift", "Run aoc through a reduction and back to string guessing");
    sub->add_option("--from", lift_from, "Bit string x")->required();
    sub->add_option("--via", lift_via, "vc, cf, ds, sc, is or dpa")->required();
    add_ratio(sub);
    lift_out.add_to(sub);
    sub->callback([&] {
      action = [&] {
        const reductions::Reduction r = reductions::parse_reduction(lift_via);
        const BitString x = BitString::parse(lift_from);
        const problems::ProblemPair inner = algorithms::aoc_generic(reductions::target_problem(r), c);
        const AdvicePair lifted = reductions::lift_to_asg(inner, r);
        const AsgVariant variant = reductions::lifted_variant(r);
        const RunResult run = run_asg(variant, lifted, x);
        json j = io::to_json(run);
        j["variant"] = to_string(variant);
        j["opt"] = io::score_to_json(asg_optimum(variant, x));
        j["declared_budget"] = lifted.declared_budget(x.size());
        lift_out.emit(j);
        return 0;
      };
    });
  }

  // suite
  std::string suite_config;
  std::vector<int> suite_batteries;
  Output suite_out;
  {
    auto* sub = app.add_subcommand("suite", "Run the experiment batteries");
    sub->add_option("--config", suite_config, "JSON experiment config");
    sub->add_option("--battery", suite_batteries, "Battery ids to run (default: all)");
    suite_out.add_to(sub);
    sub->callback([&] {
      action = [&] {
        harness::ExperimentConfig cfg;
        if (!suite_config.empty()) cfg = harness::ExperimentConfig::from_json(io::read_json_file(suite_config));
        if (!suite_batteries.empty()) cfg.batteries = suite_batteries;
        const harness::SuiteReport report = harness::run_suite(cfg);
        json j = report.to_json();
        j["config"] = cfg.to_json();
        suite_out.emit(j);
        for (const auto& b : report.batteries)
          std::fprintf(stderr, "%s %d %s\n", b.passed ? "PASS" : "FAIL", b.id, b.name.c_str());
        return report.passed() ? 0 : 1;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    return action();
  } catch (const ResourceLimitExceeded& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
