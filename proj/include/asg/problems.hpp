#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "asg/advice_tape.hpp"
#include "asg/bigint.hpp"
#include "asg/bitstring.hpp"
#include "asg/rational.hpp"
#include "asg/score.hpp"

namespace asg::problems {

enum class Problem {
  vertex_cover,
  cycle_finding,
  dominating_set,
  set_cover,
  independent_set,
  disjoint_path_allocation,
  uniform_knapsack,
  matching,
};

/// "vc", "cf", "ds", "sc", "is", "dpa", "knapsack", "matching".
std::string to_string(Problem problem);
Problem parse_problem(const std::string& text);
Objective objective(Problem problem);

/// Minimization problems accept request i when y_i = 1, maximization
/// problems when y_i = 0, so the score is always |y|_1 or |y|_0.
bool accepted_bit(Problem problem);

/// Vertex-arrival graph on v_1..v_n. back_edges[i-1] lists the earlier
/// neighbours of v_i, ascending.
class OnlineGraph {
 public:
  OnlineGraph() = default;
  explicit OnlineGraph(std::size_t n) : back_edges_(n) {}
  /// Edges as unordered pairs over [n]; duplicates are merged.
  static OnlineGraph from_edges(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

  std::size_t size() const { return back_edges_.size(); }
  /// Requires 1 <= j < i <= n.
  void add_edge(std::uint32_t j, std::uint32_t i);
  const std::vector<std::uint32_t>& earlier_neighbors(std::size_t i) const;
  /// All edges (j, i) with j < i, sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;
  bool adjacent(std::uint32_t a, std::uint32_t b) const;

  friend bool operator==(const OnlineGraph&, const OnlineGraph&) = default;

 private:
  std::vector<std::vector<std::uint32_t>> back_edges_;
};

/// Sets over the universe [universe] arriving one at a time.
struct SetCoverInstance {
  std::size_t universe = 0;
  std::vector<std::vector<std::uint32_t>> requests;  // each sorted
  friend bool operator==(const SetCoverInstance&, const SetCoverInstance&) = default;
};

/// Subpaths (from, to) of a path with vertices 0..length.
struct DpaInstance {
  BigInt length;
  std::vector<std::pair<BigInt, BigInt>> requests;
  friend bool operator==(const DpaInstance&, const DpaInstance&) = default;
};

/// Unit-value items with weights in [0, 1] and one knapsack of capacity 1.
struct KnapsackInstance {
  std::vector<Rational> weights;
  friend bool operator==(const KnapsackInstance&, const KnapsackInstance&) = default;
};

/// Edge-arrival graph on vertices 1..vertices.
struct MatchingInstance {
  std::size_t vertices = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  friend bool operator==(const MatchingInstance&, const MatchingInstance&) = default;
};

using Instance = std::variant<OnlineGraph, SetCoverInstance, DpaInstance, KnapsackInstance, MatchingInstance>;

/// Throws ContractViolation when the instance type does not fit the problem.
void check_instance(Problem problem, const Instance& instance);
std::size_t request_count(const Instance& instance);

// ----------------------------------------------------------------------------
// Requests as an online algorithm sees them

struct VertexRequest {
  std::size_t index = 0;
  std::vector<std::uint32_t> earlier_neighbors;
};
struct SetRequest {
  std::size_t index = 0;
  std::size_t universe = 0;
  std::vector<std::uint32_t> elements;
};
struct PathRequest {
  std::size_t index = 0;
  BigInt length;
  BigInt from;
  BigInt to;
};
struct ItemRequest {
  std::size_t index = 0;
  Rational weight;
};
struct EdgeRequest {
  std::size_t index = 0;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
};

using Request = std::variant<VertexRequest, SetRequest, PathRequest, ItemRequest, EdgeRequest>;

std::size_t request_index(const Request& request);
/// Request i (1-based) of the instance.
Request request_at(const Instance& instance, std::size_t i);

/// A deterministic online algorithm for one of the problems. It answers the
/// raw output bit; accepted_bit() says which value means "accept".
class OnlineSolver {
 public:
  virtual ~OnlineSolver() = default;
  virtual bool decide(const Request& request, AdviceTape& tape) = 0;
};

using SolverFactory = std::function<std::unique_ptr<OnlineSolver>()>;

struct ProblemPair {
  std::string name;
  Problem problem = Problem::vertex_cover;
  std::function<Bits(const Instance&)> oracle;
  SolverFactory algorithm;
  /// Upper bound on bits read for instances with n requests.
  std::function<std::uint64_t(std::size_t)> declared_budget;
};

struct ProblemRun {
  BitString y;
  Score score = Score::finite(0);
  std::size_t advice_bits_read = 0;
  Bits advice;  // everything the oracle wrote
};

ProblemRun run_problem(const ProblemPair& pair, const Instance& instance);
/// Runs `solver` on a prepared tape.
ProblemRun run_solver(Problem problem, OnlineSolver& solver, AdviceTape& tape, const Instance& instance);

// ----------------------------------------------------------------------------
// Feasibility and scoring. y has one bit per request; the score is the number
// of accepted requests when feasible and +inf / -inf otherwise.

bool is_vertex_cover(const OnlineGraph& g, const BitString& y);
bool is_independent_set(const OnlineGraph& g, const BitString& y);   // 0 = in the set
bool is_dominating_set(const OnlineGraph& g, const BitString& y);
bool contains_cycle(const OnlineGraph& g, const BitString& y);       // induced on the 1s
bool is_set_cover(const SetCoverInstance& sc, const BitString& y);
bool paths_edge_disjoint(const DpaInstance& dpa, const BitString& y);  // 0 = accepted
bool fits_knapsack(const KnapsackInstance& ks, const BitString& y);    // 0 = accepted
bool is_matching(const MatchingInstance& m, const BitString& y);       // 0 = accepted

bool feasible(Problem problem, const Instance& instance, const BitString& y);
Score evaluate(Problem problem, const Instance& instance, const BitString& y);

struct Optimum {
  Score value = Score::finite(0);
  /// The smallest optimal output in string order.
  BitString y;
};

/// Exhaustive search over all 2^n outputs; n <= 16 unless raised.
/// Throws ResourceLimitExceeded past the guard and DomainError when no
/// output is feasible.
Optimum optimum(Problem problem, const Instance& instance, std::size_t max_requests = 16);

/// Largest number of items that fit: the smallest weights first.
std::size_t knapsack_optimum_count(const KnapsackInstance& ks);
/// Maximum matching size by dynamic programming over vertex subsets
/// (vertices <= 20).
std::size_t maximum_matching_size(const MatchingInstance& m);

}  // namespace asg::problems
