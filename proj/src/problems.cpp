#include "asg/problems.hpp"

#include <algorithm>
#include <numeric>

#include "asg/errors.hpp"

namespace asg::problems {

std::string to_string(Problem problem) {
  switch (problem) {
    case Problem::vertex_cover: return "vc";
    case Problem::cycle_finding: return "cf";
    case Problem::dominating_set: return "ds";
    case Problem::set_cover: return "sc";
    case Problem::independent_set: return "is";
    case Problem::disjoint_path_allocation: return "dpa";
    case Problem::uniform_knapsack: return "knapsack";
    case Problem::matching: return "matching";
  }
  return "?";
}

Problem parse_problem(const std::string& text) {
  for (Problem p : {Problem::vertex_cover, Problem::cycle_finding, Problem::dominating_set, Problem::set_cover,
                    Problem::independent_set, Problem::disjoint_path_allocation, Problem::uniform_knapsack,
                    Problem::matching}) {
    if (to_string(p) == text) return p;
  }
  throw ContractViolation("unknown problem '" + text + "'");
}

Objective objective(Problem problem) {
  switch (problem) {
    case Problem::vertex_cover:
    case Problem::cycle_finding:
    case Problem::dominating_set:
    case Problem::set_cover: return Objective::minimize;
    default: return Objective::maximize;
  }
}

bool accepted_bit(Problem problem) { return objective(problem) == Objective::minimize; }

// ----------------------------------------------------------------------------

OnlineGraph OnlineGraph::from_edges(std::size_t n,
                                    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  OnlineGraph g(n);
  for (auto [a, b] : edges) {
    if (a == b) throw ContractViolation("self-loop in graph");
    g.add_edge(std::min(a, b), std::max(a, b));
  }
  return g;
}

void OnlineGraph::add_edge(std::uint32_t j, std::uint32_t i) {
  if (!(j >= 1 && j < i && i <= size())) {
    throw ContractViolation("edge (" + std::to_string(j) + "," + std::to_string(i) + ") must point to an earlier vertex");
  }
  auto& list = back_edges_[i - 1];
  auto it = std::lower_bound(list.begin(), list.end(), j);
  if (it == list.end() || *it != j) list.insert(it, j);
}

const std::vector<std::uint32_t>& OnlineGraph::earlier_neighbors(std::size_t i) const {
  if (i < 1 || i > size()) throw ContractViolation("vertex index out of range");
  return back_edges_[i - 1];
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> OnlineGraph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::size_t i = 1; i <= size(); ++i) {
    for (std::uint32_t j : back_edges_[i - 1]) out.emplace_back(j, static_cast<std::uint32_t>(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool OnlineGraph::adjacent(std::uint32_t a, std::uint32_t b) const {
  if (a == b) return false;
  const auto& list = earlier_neighbors(std::max(a, b));
  return std::binary_search(list.begin(), list.end(), std::min(a, b));
}

// ----------------------------------------------------------------------------

void check_instance(Problem problem, const Instance& instance) {
  bool ok = false;
  switch (problem) {
    case Problem::vertex_cover:
    case Problem::cycle_finding:
    case Problem::dominating_set:
    case Problem::independent_set: ok = std::holds_alternative<OnlineGraph>(instance); break;
    case Problem::set_cover: ok = std::holds_alternative<SetCoverInstance>(instance); break;
    case Problem::disjoint_path_allocation: ok = std::holds_alternative<DpaInstance>(instance); break;
    case Problem::uniform_knapsack: ok = std::holds_alternative<KnapsackInstance>(instance); break;
    case Problem::matching: ok = std::holds_alternative<MatchingInstance>(instance); break;
  }
  if (!ok) throw ContractViolation("instance type does not match problem " + to_string(problem));
}

std::size_t request_count(const Instance& instance) {
  struct Visitor {
    std::size_t operator()(const OnlineGraph& g) const { return g.size(); }
    std::size_t operator()(const SetCoverInstance& s) const { return s.requests.size(); }
    std::size_t operator()(const DpaInstance& d) const { return d.requests.size(); }
    std::size_t operator()(const KnapsackInstance& k) const { return k.weights.size(); }
    std::size_t operator()(const MatchingInstance& m) const { return m.edges.size(); }
  };
  return std::visit(Visitor{}, instance);
}

std::size_t request_index(const Request& request) {
  return std::visit([](const auto& r) { return r.index; }, request);
}

Request request_at(const Instance& instance, std::size_t i) {
  if (i < 1 || i > request_count(instance)) throw ContractViolation("request index out of range");
  struct Visitor {
    std::size_t i;
    Request operator()(const OnlineGraph& g) const { return VertexRequest{i, g.earlier_neighbors(i)}; }
    Request operator()(const SetCoverInstance& s) const { return SetRequest{i, s.universe, s.requests[i - 1]}; }
    Request operator()(const DpaInstance& d) const {
      return PathRequest{i, d.length, d.requests[i - 1].first, d.requests[i - 1].second};
    }
    Request operator()(const KnapsackInstance& k) const { return ItemRequest{i, k.weights[i - 1]}; }
    Request operator()(const MatchingInstance& m) const {
      return EdgeRequest{i, m.edges[i - 1].first, m.edges[i - 1].second};
    }
  };
  return std::visit(Visitor{i}, instance);
}

ProblemRun run_solver(Problem problem, OnlineSolver& solver, AdviceTape& tape, const Instance& instance) {
  check_instance(problem, instance);
  const std::size_t n = request_count(instance);
  ProblemRun run;
  run.y = BitString(n);
  for (std::size_t i = 1; i <= n; ++i) run.y.set(i, solver.decide(request_at(instance, i), tape));
  run.score = evaluate(problem, instance, run.y);
  run.advice_bits_read = tape.bits_read();
  run.advice = tape.written();
  return run;
}

ProblemRun run_problem(const ProblemPair& pair, const Instance& instance) {
  check_instance(pair.problem, instance);
  AdviceTape tape(pair.oracle(instance));
  auto solver = pair.algorithm();
  return run_solver(pair.problem, *solver, tape, instance);
}

// ----------------------------------------------------------------------------

namespace {

void require_length(std::size_t expected, const BitString& y) {
  if (y.size() != expected) throw ContractViolation("selection length does not match the instance");
}

}  // namespace

bool is_vertex_cover(const OnlineGraph& g, const BitString& y) {
  require_length(g.size(), y);
  for (std::size_t i = 1; i <= g.size(); ++i) {
    if (y.at(i)) continue;
    for (std::uint32_t j : g.earlier_neighbors(i)) {
      if (!y.at(j)) return false;
    }
  }
  return true;
}

bool is_independent_set(const OnlineGraph& g, const BitString& y) {
  // The rejected vertices (the 1s) must cover every edge.
  return is_vertex_cover(g, y);
}

bool is_dominating_set(const OnlineGraph& g, const BitString& y) {
  require_length(g.size(), y);
  std::vector<bool> dominated(g.size() + 1, false);
  for (std::size_t i = 1; i <= g.size(); ++i) {
    if (y.at(i)) dominated[i] = true;
    for (std::uint32_t j : g.earlier_neighbors(i)) {
      if (y.at(i)) dominated[j] = true;
      if (y.at(j)) dominated[i] = true;
    }
  }
  return std::all_of(dominated.begin() + 1, dominated.end(), [](bool d) { return d; });
}

bool contains_cycle(const OnlineGraph& g, const BitString& y) {
  require_length(g.size(), y);
  std::vector<std::uint32_t> parent(g.size() + 1);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 1; i <= g.size(); ++i) {
    if (!y.at(i)) continue;
    for (std::uint32_t j : g.earlier_neighbors(i)) {
      if (!y.at(j)) continue;
      const std::uint32_t a = find(j);
      const std::uint32_t b = find(static_cast<std::uint32_t>(i));
      if (a == b) return true;
      parent[a] = b;
    }
  }
  return false;
}

bool is_set_cover(const SetCoverInstance& sc, const BitString& y) {
  require_length(sc.requests.size(), y);
  std::vector<bool> covered(sc.universe + 1, false);
  for (std::size_t i = 1; i <= sc.requests.size(); ++i) {
    if (!y.at(i)) continue;
    for (std::uint32_t e : sc.requests[i - 1]) {
      if (e >= 1 && e <= sc.universe) covered[e] = true;
    }
  }
  return std::all_of(covered.begin() + 1, covered.end(), [](bool c) { return c; });
}

bool paths_edge_disjoint(const DpaInstance& dpa, const BitString& y) {
  require_length(dpa.requests.size(), y);
  std::vector<std::pair<BigInt, BigInt>> taken;
  for (std::size_t i = 1; i <= dpa.requests.size(); ++i) {
    if (!y.at(i)) taken.push_back(dpa.requests[i - 1]);
  }
  std::sort(taken.begin(), taken.end());
  for (std::size_t i = 1; i < taken.size(); ++i) {
    if (taken[i].first < taken[i - 1].second) return false;
  }
  return true;
}

bool fits_knapsack(const KnapsackInstance& ks, const BitString& y) {
  require_length(ks.weights.size(), y);
  Rational load;
  for (std::size_t i = 1; i <= ks.weights.size(); ++i) {
    if (!y.at(i)) load = load + ks.weights[i - 1];
  }
  return load <= Rational(1);
}

bool is_matching(const MatchingInstance& m, const BitString& y) {
  require_length(m.edges.size(), y);
  std::vector<bool> used(m.vertices + 1, false);
  for (std::size_t i = 1; i <= m.edges.size(); ++i) {
    if (y.at(i)) continue;
    auto [a, b] = m.edges[i - 1];
    if (used[a] || used[b]) return false;
    used[a] = used[b] = true;
  }
  return true;
}

bool feasible(Problem problem, const Instance& instance, const BitString& y) {
  check_instance(problem, instance);
  switch (problem) {
    case Problem::vertex_cover: return is_vertex_cover(std::get<OnlineGraph>(instance), y);
    case Problem::cycle_finding: return contains_cycle(std::get<OnlineGraph>(instance), y);
    case Problem::dominating_set: return is_dominating_set(std::get<OnlineGraph>(instance), y);
    case Problem::independent_set: return is_independent_set(std::get<OnlineGraph>(instance), y);
    case Problem::set_cover: return is_set_cover(std::get<SetCoverInstance>(instance), y);
    case Problem::disjoint_path_allocation: return paths_edge_disjoint(std::get<DpaInstance>(instance), y);
    case Problem::uniform_knapsack: return fits_knapsack(std::get<KnapsackInstance>(instance), y);
    case Problem::matching: return is_matching(std::get<MatchingInstance>(instance), y);
  }
  return false;
}

Score evaluate(Problem problem, const Instance& instance, const BitString& y) {
  const Objective obj = objective(problem);
  if (!feasible(problem, instance, y)) return Score::infeasible(obj);
  return Score::finite(obj == Objective::minimize ? y.ones() : y.zeros());
}

Optimum optimum(Problem problem, const Instance& instance, std::size_t max_requests) {
  check_instance(problem, instance);
  const std::size_t n = request_count(instance);
  if (n > max_requests || n > 30) {
    throw ResourceLimitExceeded("brute-force optimum limited to " + std::to_string(max_requests) + " requests");
  }
  const Objective obj = objective(problem);
  bool have = false;
  Optimum best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    BitString y = BitString::from_mask(mask, n);
    Score s = evaluate(problem, instance, y);
    if (!s.is_finite()) continue;
    const bool better = !have || (obj == Objective::minimize ? s < best.value : s > best.value) ||
                        (s == best.value && y < best.y);
    if (better) {
      best.value = s;
      best.y = std::move(y);
      have = true;
    }
  }
  if (!have) throw DomainError("instance has no feasible output");
  return best;
}

std::size_t knapsack_optimum_count(const KnapsackInstance& ks) {
  std::vector<Rational> w = ks.weights;
  std::sort(w.begin(), w.end());
  Rational load;
  std::size_t count = 0;
  for (const Rational& a : w) {
    if (load + a > Rational(1)) break;
    load = load + a;
    ++count;
  }
  return count;
}

std::size_t maximum_matching_size(const MatchingInstance& m) {
  if (m.vertices > 20) throw ResourceLimitExceeded("maximum_matching_size limited to 20 vertices");
  std::vector<std::uint32_t> adj(m.vertices, 0);
  for (auto [a, b] : m.edges) {
    if (a == b || a < 1 || b < 1 || a > m.vertices || b > m.vertices) throw ContractViolation("bad matching edge");
    adj[a - 1] |= 1u << (b - 1);
    adj[b - 1] |= 1u << (a - 1);
  }
  // best[mask] = maximum matching using only vertices in mask
  const std::uint32_t full = (m.vertices == 32) ? ~0u : ((1u << m.vertices) - 1);
  std::vector<std::uint8_t> best(std::size_t{1} << m.vertices, 0);
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    const int v = __builtin_ctz(mask);
    const std::uint32_t rest = mask & ~(1u << v);
    std::uint8_t value = best[rest];
    std::uint32_t partners = adj[v] & rest;
    while (partners) {
      const int u = __builtin_ctz(partners);
      partners &= partners - 1;
      value = std::max<std::uint8_t>(value, 1 + best[rest & ~(1u << u)]);
    }
    best[mask] = value;
    if (mask == full) break;
  }
  return best[full];
}

}  // namespace asg::problems
