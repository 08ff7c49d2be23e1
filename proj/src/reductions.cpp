#include "asg/reductions.hpp"

#include <algorithm>

#include "asg/errors.hpp"

namespace asg::reductions {

using problems::OnlineGraph;

std::size_t last_one(const BitString& x) {
  for (std::size_t i = x.size(); i >= 1; --i) {
    if (x.at(i)) return i;
  }
  return 0;
}

std::size_t first_one(const BitString& x) {
  for (std::size_t i = 1; i <= x.size(); ++i) {
    if (x.at(i)) return i;
  }
  return 0;
}

namespace {

void require_a_one(const BitString& x, const char* what) {
  if (x.ones() == 0) throw DomainError(std::string(what) + " needs at least one 1 in x");
}

BigInt power_of_two(std::size_t k) { return BigInt(1) << static_cast<unsigned>(k); }

std::vector<std::uint32_t> earlier_ones(const std::vector<bool>& prefix) {
  std::vector<std::uint32_t> out;
  for (std::size_t j = 0; j < prefix.size(); ++j) {
    if (prefix[j]) out.push_back(static_cast<std::uint32_t>(j + 1));
  }
  return out;
}

}  // namespace

OnlineGraph build_clique_graph(const BitString& x) {
  OnlineGraph g(x.size());
  for (std::size_t i = 1; i <= x.size(); ++i) {
    if (!x.at(i)) continue;
    for (std::size_t j = i + 1; j <= x.size(); ++j) {
      g.add_edge(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    }
  }
  return g;
}

OnlineGraph build_chain_graph(const BitString& x) {
  require_a_one(x, "the chain graph");
  OnlineGraph g(x.size());
  std::size_t previous = 0;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    if (previous != 0) g.add_edge(static_cast<std::uint32_t>(previous), static_cast<std::uint32_t>(i));
    if (x.at(i)) previous = i;
  }
  const std::size_t lo = first_one(x);
  const std::size_t hi = last_one(x);
  if (lo != hi) g.add_edge(static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi));
  return g;
}

OnlineGraph build_star_graph(const BitString& x) {
  require_a_one(x, "the star graph");
  const std::size_t hub = last_one(x);
  OnlineGraph g(x.size());
  for (std::size_t i = 1; i <= x.size(); ++i) {
    if (x.at(i)) continue;
    g.add_edge(static_cast<std::uint32_t>(std::min(i, hub)), static_cast<std::uint32_t>(std::max(i, hub)));
  }
  return g;
}

problems::SetCoverInstance build_set_cover(const BitString& x) {
  require_a_one(x, "the set cover instance");
  const std::size_t hub = last_one(x);
  problems::SetCoverInstance sc;
  sc.universe = x.size();
  for (std::size_t i = 1; i <= x.size(); ++i) {
    std::vector<std::uint32_t> set{static_cast<std::uint32_t>(i)};
    if (i == hub) {
      for (std::size_t j = 1; j <= x.size(); ++j) {
        if (!x.at(j)) set.push_back(static_cast<std::uint32_t>(j));
      }
      std::sort(set.begin(), set.end());
    }
    sc.requests.push_back(std::move(set));
  }
  return sc;
}

problems::DpaInstance build_nested_paths(const BitString& x, std::size_t max_n) {
  const std::size_t n = x.size();
  if (n < 1) throw DomainError("nested paths need n >= 1");
  if (n > max_n) throw ResourceLimitExceeded("nested paths limited to n <= " + std::to_string(max_n));
  problems::DpaInstance dpa;
  dpa.length = power_of_two(n);
  BigInt u = 0;
  BigInt v = power_of_two(n - 1);
  dpa.requests.emplace_back(u, v);
  for (std::size_t i = 2; i <= n; ++i) {
    if (!x.at(i - 1)) u = v;
    v = u + power_of_two(n - i);
    dpa.requests.emplace_back(u, v);
  }
  return dpa;
}

// ----------------------------------------------------------------------------

std::string to_string(Reduction reduction) {
  switch (reduction) {
    case Reduction::vc: return "vc";
    case Reduction::cf: return "cf";
    case Reduction::ds: return "ds";
    case Reduction::sc: return "sc";
    case Reduction::is: return "is";
    case Reduction::dpa: return "dpa";
  }
  return "?";
}

Reduction parse_reduction(const std::string& text) {
  for (Reduction r : {Reduction::vc, Reduction::cf, Reduction::ds, Reduction::sc, Reduction::is, Reduction::dpa}) {
    if (to_string(r) == text) return r;
  }
  throw ContractViolation("unknown reduction '" + text + "'");
}

problems::Problem target_problem(Reduction reduction) {
  switch (reduction) {
    case Reduction::vc: return problems::Problem::vertex_cover;
    case Reduction::cf: return problems::Problem::cycle_finding;
    case Reduction::ds: return problems::Problem::dominating_set;
    case Reduction::sc: return problems::Problem::set_cover;
    case Reduction::is: return problems::Problem::independent_set;
    case Reduction::dpa: return problems::Problem::disjoint_path_allocation;
  }
  return problems::Problem::vertex_cover;
}

AsgVariant lifted_variant(Reduction reduction) {
  switch (reduction) {
    case Reduction::vc:
    case Reduction::cf: return kMinKnown;
    case Reduction::ds:
    case Reduction::sc: return kMinUnknown;
    case Reduction::is:
    case Reduction::dpa: return kMaxKnown;
  }
  return kMinKnown;
}

bool instance_defined(Reduction reduction, const BitString& x) {
  switch (reduction) {
    case Reduction::vc:
    case Reduction::is: return true;
    case Reduction::cf: return x.ones() >= 3;
    case Reduction::ds:
    case Reduction::sc: return x.ones() >= 1;
    case Reduction::dpa: return x.size() >= 1;
  }
  return false;
}

problems::Instance build_instance(Reduction reduction, const BitString& x) {
  if (!instance_defined(reduction, x)) {
    throw DomainError("no " + to_string(reduction) + " instance for x = " + x.to_string());
  }
  switch (reduction) {
    case Reduction::vc:
    case Reduction::is: return build_clique_graph(x);
    case Reduction::cf: return build_chain_graph(x);
    case Reduction::ds: return build_star_graph(x);
    case Reduction::sc: return build_set_cover(x);
    case Reduction::dpa: return build_nested_paths(x);
  }
  throw ContractViolation("unreachable");
}

Score closed_form_optimum(Reduction reduction, const BitString& x) {
  if (!instance_defined(reduction, x)) throw DomainError("no instance for x = " + x.to_string());
  const bool last = !x.empty() && x.at(x.size());
  switch (reduction) {
    case Reduction::vc: return Score::finite(x.ones() - (last ? 1 : 0));
    case Reduction::cf:
    case Reduction::ds:
    case Reduction::sc: return Score::finite(x.ones());
    case Reduction::is:
    case Reduction::dpa: return Score::finite(x.zeros() + (last ? 1 : 0));
  }
  throw ContractViolation("unreachable");
}

// ----------------------------------------------------------------------------

MembershipReport aoc_membership_check(problems::Problem problem,
                                      const std::function<std::optional<problems::Instance>()>& next,
                                      std::size_t max_violations) {
  MembershipReport report;
  const Objective obj = problems::objective(problem);
  auto violation = [&](std::string text) {
    if (report.violations.size() < max_violations) report.violations.push_back(std::move(text));
  };
  while (auto instance = next()) {
    ++report.instances;
    const std::size_t n = problems::request_count(*instance);
    if (n > 16) throw ResourceLimitExceeded("membership check limited to 16 requests");
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<BitString> outputs;
    std::vector<Score> scores;
    outputs.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      outputs.push_back(BitString::from_mask(mask, n));
      scores.push_back(problems::evaluate(problem, *instance, outputs.back()));
    }
    std::optional<Score> best;
    for (const Score& s : scores) {
      if (!s.is_finite()) continue;
      if (!best || (obj == Objective::minimize ? s < *best : s > *best)) best = s;
    }
    if (!best) {
      violation("instance " + std::to_string(report.instances) + " has no feasible output");
      continue;
    }
    std::vector<std::size_t> optimal;
    for (std::size_t k = 0; k < outputs.size(); ++k) {
      if (scores[k] == *best) optimal.push_back(k);
    }
    for (std::size_t k = 0; k < outputs.size(); ++k) {
      ++report.outputs_checked;
      const BitString& y = outputs[k];
      if (scores[k].is_finite()) {
        std::size_t accepted = 0;
        for (std::size_t i = 1; i <= n; ++i) accepted += y.at(i) == problems::accepted_bit(problem) ? 1 : 0;
        const std::size_t expected = obj == Objective::minimize ? y.ones() : y.zeros();
        if (scores[k].value() != accepted || accepted != expected) {
          violation("instance " + std::to_string(report.instances) + ": score of " + y.to_string() +
                    " is not its count");
        }
        continue;
      }
      for (std::size_t o : optimal) {
        if (dominates(outputs[o], y)) {
          violation("instance " + std::to_string(report.instances) + ": " + y.to_string() +
                    " dominates optimum " + outputs[o].to_string() + " but is infeasible");
          break;
        }
      }
    }
  }
  return report;
}

// ----------------------------------------------------------------------------

std::uint64_t header_budget(Reduction reduction, std::size_t n) {
  const std::uint64_t index = self_delimiting_length(n);
  switch (reduction) {
    case Reduction::vc:
    case Reduction::is:
    case Reduction::ds: return 2 + 2 * index;
    case Reduction::dpa: return 2 + 3 * index;
    case Reduction::cf:
    case Reduction::sc: return 1 + 2 * index;
  }
  return 0;
}

namespace {

using problems::SolverFactory;

void append_bits(Bits& out, const Bits& more) { out.insert(out.end(), more.begin(), more.end()); }

/// Shared by the clique-graph and nested-path reductions: two case bits,
/// then (for paths) n, then up to two rounds whose answers are overridden,
/// the first forced to 1 and the second to 0.
class ExceptionGuesser final : public Guesser {
 public:
  ExceptionGuesser(SolverFactory factory, Reduction reduction)
      : factory_(std::move(factory)), reduction_(reduction) {}

  void learn(bool previous) override { prefix_.push_back(previous); }

  bool guess(std::size_t round, AdviceTape& tape) override {
    if (!solver_) start(tape);
    bool bit = false;
    if (reduction_ == Reduction::dpa) {
      advance_path(round);
      bit = solver_->decide(problems::PathRequest{round, length_, from_, to_}, tape);
    } else {
      bit = solver_->decide(problems::VertexRequest{round, earlier_ones(prefix_)}, tape);
    }
    if (round == force_one_) return true;
    if (round == force_zero_) return false;
    return bit;
  }

 private:
  void start(AdviceTape& tape) {
    const bool first = tape.read();
    const bool second = tape.read();
    if (first && second) throw MalformedAdvice("reserved case bits 11");
    if (reduction_ == Reduction::dpa) {
      n_ = tape.read_self_delimiting();
      if (n_ == 0) throw MalformedAdvice("path reduction with n = 0");
      length_ = power_of_two(n_);
    }
    if (second) {
      force_one_ = tape.read_self_delimiting();
      force_zero_ = tape.read_self_delimiting();
    } else if (first) {
      force_one_ = tape.read_self_delimiting();
    }
    solver_ = factory_();
  }

  void advance_path(std::size_t round) {
    if (round > n_) throw MalformedAdvice("more rounds than the advertised n");
    if (round == 1) {
      from_ = 0;
    } else if (!prefix_.at(round - 2)) {
      from_ = to_;
    }
    to_ = from_ + power_of_two(n_ - round);
  }

  SolverFactory factory_;
  Reduction reduction_;
  std::unique_ptr<problems::OnlineSolver> solver_;
  std::vector<bool> prefix_;
  std::uint64_t force_one_ = 0;
  std::uint64_t force_zero_ = 0;
  std::uint64_t n_ = 0;
  BigInt length_, from_, to_;
};

class ChainGuesser final : public Guesser {
 public:
  explicit ChainGuesser(SolverFactory factory) : factory_(std::move(factory)) {}

  void learn(bool previous) override {
    ++seen_;
    if (previous) {
      if (first_ == 0) first_ = seen_;
      last_ = seen_;
    }
  }

  bool guess(std::size_t round, AdviceTape& tape) override {
    if (!started_) start(tape);
    if (explicit_) return round == one_a_ || round == one_b_;
    std::vector<std::uint32_t> neighbors;
    if (last_ != 0) neighbors.push_back(static_cast<std::uint32_t>(last_));
    if (round == hub_ && first_ != 0 && first_ != last_) neighbors.push_back(static_cast<std::uint32_t>(first_));
    std::sort(neighbors.begin(), neighbors.end());
    return solver_->decide(problems::VertexRequest{round, neighbors}, tape);
  }

 private:
  void start(AdviceTape& tape) {
    started_ = true;
    explicit_ = tape.read();
    if (explicit_) {
      one_a_ = tape.read_self_delimiting();
      one_b_ = tape.read_self_delimiting();
      return;
    }
    hub_ = tape.read_self_delimiting();
    solver_ = factory_();
  }

  SolverFactory factory_;
  std::unique_ptr<problems::OnlineSolver> solver_;
  bool started_ = false;
  bool explicit_ = false;
  std::uint64_t one_a_ = 0, one_b_ = 0, hub_ = 0;
  std::size_t seen_ = 0, first_ = 0, last_ = 0;
};

/// Star and set-cover reductions: the rounds before the last 1 carry no
/// information about x, so history is never consulted.
class HubGuesser final : public Guesser {
 public:
  HubGuesser(SolverFactory factory, Reduction reduction) : factory_(std::move(factory)), reduction_(reduction) {}

  bool guess(std::size_t round, AdviceTape& tape) override {
    if (!started_) start(tape);
    if (all_zero_ || round > hub_) return false;
    if (round == hub_) return true;
    bool bit = false;
    if (reduction_ == Reduction::sc) {
      bit = solver_->decide(problems::SetRequest{round, universe_, {static_cast<std::uint32_t>(round)}}, tape);
    } else {
      bit = solver_->decide(problems::VertexRequest{round, {}}, tape);
    }
    return round == force_zero_ ? false : bit;
  }

 private:
  void start(AdviceTape& tape) {
    started_ = true;
    all_zero_ = tape.read();
    if (all_zero_) return;
    bool exception = false;
    if (reduction_ == Reduction::ds) {
      exception = tape.read();
    } else {
      universe_ = tape.read_self_delimiting();
    }
    hub_ = tape.read_self_delimiting();
    if (exception) force_zero_ = tape.read_self_delimiting();
    solver_ = factory_();
  }

  SolverFactory factory_;
  Reduction reduction_;
  std::unique_ptr<problems::OnlineSolver> solver_;
  bool started_ = false;
  bool all_zero_ = false;
  std::uint64_t universe_ = 0, hub_ = 0, force_zero_ = 0;
};

std::size_t first_where(const BitString& x, const BitString& y, bool x_bit, bool y_bit) {
  for (std::size_t i = 1; i <= x.size(); ++i) {
    if (x.at(i) == x_bit && y.at(i) == y_bit) return i;
  }
  return 0;
}

Bits exception_header(const BitString& x, const BitString& alg, Reduction reduction) {
  // Vertex cover must accept the 1s; independent set and paths gain from the
  // 0s, and accept with y = 0. Either way the exceptions are a 1 of x the
  // algorithm answered 0 on, and then a 0 of x it answered 1 on.
  const std::size_t force_one = first_where(x, alg, true, false);
  const std::size_t force_zero = force_one != 0 ? first_where(x, alg, false, true) : 0;
  Bits out;
  out.push_back(force_one != 0 && force_zero == 0);
  out.push_back(force_one != 0 && force_zero != 0);
  if (reduction == Reduction::dpa) append_self_delimiting(out, x.size());
  if (force_one != 0) append_self_delimiting(out, force_one);
  if (force_zero != 0) append_self_delimiting(out, force_zero);
  return out;
}

}  // namespace

AdvicePair lift_to_asg(const problems::ProblemPair& pair, Reduction reduction) {
  if (pair.problem != target_problem(reduction)) {
    throw ContractViolation("pair solves " + problems::to_string(pair.problem) + ", reduction needs " +
                            problems::to_string(target_problem(reduction)));
  }
  AdvicePair lifted;
  lifted.name = "lift-" + to_string(reduction) + "[" + pair.name + "]";
  lifted.oracle = [pair, reduction](const BitString& x) {
    Bits out;
    if (x.empty()) return out;
    const std::size_t ones = x.ones();
    if (reduction == Reduction::cf && ones <= 2) {
      const auto support = x.support();
      out.push_back(true);
      append_self_delimiting(out, support.size() > 0 ? support[0] : 0);
      append_self_delimiting(out, support.size() > 1 ? support[1] : 0);
      return out;
    }
    if ((reduction == Reduction::ds || reduction == Reduction::sc) && ones == 0) {
      out.push_back(true);
      return out;
    }
    const problems::ProblemRun run = problems::run_problem(pair, build_instance(reduction, x));
    switch (reduction) {
      case Reduction::vc:
      case Reduction::is:
      case Reduction::dpa: out = exception_header(x, run.y, reduction); break;
      case Reduction::cf:
        out.push_back(false);
        append_self_delimiting(out, last_one(x));
        break;
      case Reduction::ds: {
        const std::size_t hub = last_one(x);
        const std::size_t accepted_zero = run.y.at(hub) ? 0 : first_where(x, run.y, false, true);
        out.push_back(false);
        out.push_back(accepted_zero != 0);
        append_self_delimiting(out, hub);
        if (accepted_zero != 0) append_self_delimiting(out, accepted_zero);
        break;
      }
      case Reduction::sc:
        out.push_back(false);
        append_self_delimiting(out, x.size());
        append_self_delimiting(out, last_one(x));
        break;
    }
    append_bits(out, run.advice);
    return out;
  };
  const SolverFactory factory = pair.algorithm;
  lifted.algorithm = [factory, reduction]() -> std::unique_ptr<Guesser> {
    switch (reduction) {
      case Reduction::vc:
      case Reduction::is:
      case Reduction::dpa: return std::make_unique<ExceptionGuesser>(factory, reduction);
      case Reduction::cf: return std::make_unique<ChainGuesser>(factory);
      case Reduction::ds:
      case Reduction::sc: return std::make_unique<HubGuesser>(factory, reduction);
    }
    throw ContractViolation("unreachable");
  };
  const auto inner_budget = pair.declared_budget;
  lifted.declared_budget = [inner_budget, reduction](std::size_t n) -> std::uint64_t {
    return header_budget(reduction, n) + (inner_budget ? inner_budget(n) : 0);
  };
  return lifted;
}

}  // namespace asg::reductions
