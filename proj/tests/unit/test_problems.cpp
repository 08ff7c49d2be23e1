#include <doctest.h>

#include <algorithm>

#include "asg/errors.hpp"
#include "asg/io.hpp"
#include "asg/problems.hpp"
#include "asg/reductions.hpp"
#include "property.hpp"

using namespace asg;
using namespace asg::problems;
using namespace asg::reductions;
using Edges = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

namespace {

/// Every graph on n vertices, one per subset of the n(n-1)/2 pairs.
std::vector<OnlineGraph> all_graphs(std::size_t n) {
  Edges pairs;
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  std::vector<OnlineGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Edges chosen;
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (mask >> e & 1u) chosen.push_back(pairs[e]);
    out.push_back(OnlineGraph::from_edges(n, chosen));
  }
  return out;
}

std::function<std::optional<Instance>()> enumerate(std::vector<OnlineGraph> graphs) {
  auto shared = std::make_shared<std::vector<OnlineGraph>>(std::move(graphs));
  auto next = std::make_shared<std::size_t>(0);
  return [shared, next]() -> std::optional<Instance> {
    if (*next == shared->size()) return std::nullopt;
    return Instance((*shared)[(*next)++]);
  };
}

/// Largest matching by trying every subset of edges.
std::size_t brute_matching(const MatchingInstance& m) {
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.edges.size()); ++mask) {
    std::vector<int> used(m.vertices + 1, 0);
    bool ok = true;
    for (std::size_t e = 0; e < m.edges.size() && ok; ++e) {
      if (!(mask >> e & 1u)) continue;
      ok = !used[m.edges[e].first]++ && !used[m.edges[e].second]++;
    }
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return best;
}

}  // namespace

TEST_CASE("clique graph example") {
  const OnlineGraph g = build_clique_graph(BitString::parse("011010"));
  CHECK(g.edges() == Edges{{2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {5, 6}});
  CHECK(build_clique_graph(BitString::parse("00000")).edges().empty());
  CHECK(g.earlier_neighbors(5) == std::vector<std::uint32_t>{2, 3});
}

TEST_CASE("chain graph examples") {
  CHECK(build_chain_graph(BitString::parse("0100101")).edges() ==
        Edges{{2, 3}, {2, 4}, {2, 5}, {2, 7}, {5, 6}, {5, 7}});
  CHECK(build_chain_graph(BitString::parse("111")).edges() == Edges{{1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(build_chain_graph(BitString::parse("000")), DomainError);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const BitString& x : all_strings(n)) {
      if (x.ones() == 0) continue;
      const std::size_t linked = n - first_one(x);
      REQUIRE(build_chain_graph(x).edges().size() == linked + (x.ones() >= 3 ? 1 : 0));
    }
  }
}

TEST_CASE("star graph and set cover examples") {
  CHECK(build_star_graph(BitString::parse("01010")).edges() == Edges{{1, 4}, {3, 4}, {4, 5}});
  CHECK(build_star_graph(BitString::parse("1")).edges().empty());
  const SetCoverInstance sc = build_set_cover(BitString::parse("0101"));
  CHECK(sc.universe == 4);
  CHECK(sc.requests == std::vector<std::vector<std::uint32_t>>{{1}, {2}, {3}, {1, 3, 4}});
  CHECK(build_set_cover(BitString::parse("1")).requests == std::vector<std::vector<std::uint32_t>>{{1}});
  CHECK_THROWS_AS(build_set_cover(BitString::parse("00")), DomainError);
}

TEST_CASE("nested path examples") {
  const DpaInstance d = build_nested_paths(BitString::parse("010"));
  CHECK(d.length == 8);
  CHECK(d.requests == std::vector<std::pair<BigInt, BigInt>>{{0, 4}, {4, 6}, {4, 5}});
  const DpaInstance two = build_nested_paths(BitString::parse("00"));
  CHECK(two.requests == std::vector<std::pair<BigInt, BigInt>>{{0, 2}, {2, 3}});
  CHECK(paths_edge_disjoint(two, BitString::parse("00")));
  CHECK_THROWS_AS(build_nested_paths(BitString(31)), ResourceLimitExceeded);
  CHECK_THROWS_AS(build_nested_paths(BitString()), DomainError);
}

TEST_CASE("accepting a bad path request blocks every later request") {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const BitString& x : all_strings(n)) {
      const DpaInstance d = build_nested_paths(x);
      for (std::size_t i = 1; i <= n; ++i) {
        if (!x.at(i)) continue;
        for (std::size_t j = i + 1; j <= n; ++j) {
          const auto& [a, b] = d.requests[i - 1];
          const auto& [c, e] = d.requests[j - 1];
          REQUIRE((a < e && c < b));
        }
      }
    }
  }
}

TEST_CASE("feasibility examples") {
  const OnlineGraph g = build_clique_graph(BitString::parse("011010"));
  CHECK(is_vertex_cover(g, BitString::parse("011010")));
  CHECK(evaluate(Problem::vertex_cover, g, BitString::parse("011010")) == Score::finite(3));
  CHECK(evaluate(Problem::vertex_cover, g, BitString::parse("010010")) == Score::plus_infinity());
  CHECK(is_vertex_cover(g, BitString(6, true)));
  CHECK(is_dominating_set(g, BitString(6, true)));
  const DpaInstance d = build_nested_paths(BitString::parse("010"));
  CHECK(evaluate(Problem::disjoint_path_allocation, d, BitString::parse("001")) == Score::finite(2));
  CHECK(evaluate(Problem::disjoint_path_allocation, d, BitString::parse("000")) == Score::minus_infinity());
  CHECK(contains_cycle(build_chain_graph(BitString::parse("111")), BitString::parse("111")));
  CHECK_FALSE(contains_cycle(build_chain_graph(BitString::parse("111")), BitString::parse("110")));
  CHECK_THROWS_AS(evaluate(Problem::vertex_cover, g, BitString::parse("01")), ContractViolation);
}

TEST_CASE("no vertex cover of a clique graph rejects two of its clique vertices") {
  for (std::size_t n = 2; n <= 8; ++n) {
    for (const BitString& x : all_strings(n)) {
      if (x.ones() < 2) continue;
      const OnlineGraph g = build_clique_graph(x);
      for (const BitString& y : all_strings(n)) {
        std::size_t rejected = 0;
        for (std::size_t i : x.support()) rejected += y.at(i) ? 0 : 1;
        if (rejected >= 2) REQUIRE_FALSE(is_vertex_cover(g, y));
      }
    }
  }
}

TEST_CASE("brute-force optima match the closed forms for n <= 7") {
  for (Reduction r : {Reduction::vc, Reduction::cf, Reduction::ds, Reduction::sc, Reduction::is, Reduction::dpa}) {
    for (std::size_t n = 1; n <= 7; ++n) {
      for (const BitString& x : all_strings(n)) {
        if (!instance_defined(r, x)) continue;
        CAPTURE(to_string(r));
        CAPTURE(x.to_string());
        REQUIRE(optimum(target_problem(r), build_instance(r, x), 16).value == closed_form_optimum(r, x));
      }
    }
  }
  CHECK(optimum(Problem::vertex_cover, build_clique_graph(BitString::parse("011010"))).value == Score::finite(3));
  CHECK(optimum(Problem::independent_set, OnlineGraph(5)).value == Score::finite(5));
  CHECK(optimum(Problem::disjoint_path_allocation, build_nested_paths(BitString::parse("00"))).value ==
        Score::finite(2));
}

TEST_CASE("optimum guards") {
  CHECK_THROWS_AS(optimum(Problem::vertex_cover, OnlineGraph(17)), ResourceLimitExceeded);
  CHECK_THROWS_AS(optimum(Problem::cycle_finding, OnlineGraph(3)), DomainError);
  CHECK_THROWS_AS(optimum(Problem::vertex_cover, SetCoverInstance{1, {{1}}}), ContractViolation);
}

TEST_CASE("graph problems are AOC over every graph with n <= 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (Problem p : {Problem::vertex_cover, Problem::independent_set, Problem::dominating_set}) {
      CAPTURE(to_string(p));
      const MembershipReport r = aoc_membership_check(p, enumerate(all_graphs(n)));
      CHECK(r.instances == (std::size_t{1} << (n * (n - 1) / 2)));
      for (const auto& v : r.violations) FAIL_CHECK(v);
    }
  }
  std::vector<OnlineGraph> with_cycle;
  for (const OnlineGraph& g : all_graphs(5))
    if (contains_cycle(g, BitString(5, true))) with_cycle.push_back(g);
  const MembershipReport cf = aoc_membership_check(Problem::cycle_finding, enumerate(with_cycle));
  for (const auto& v : cf.violations) FAIL_CHECK(v);
}

TEST_CASE("subsets of a feasible knapsack packing stay feasible") {
  asg_test::for_all<KnapsackInstance>(
      29, 300,
      [](std::mt19937_64& rng) {
        KnapsackInstance ks;
        const std::size_t n = rng() % 9;
        for (std::size_t i = 0; i < n; ++i) ks.weights.push_back(Rational(static_cast<std::int64_t>(rng() % 9), 8));
        return ks;
      },
      [](const KnapsackInstance& ks) {
        std::size_t recorded = 0;
        const auto next = [&]() -> std::optional<Instance> {
          if (recorded++) return std::nullopt;
          return Instance(ks);
        };
        return aoc_membership_check(Problem::uniform_knapsack, next).ok();
      },
      [](const KnapsackInstance& ks) { return std::to_string(ks.weights.size()) + " items"; });
}

TEST_CASE("knapsack and matching optima") {
  CHECK(knapsack_optimum_count(KnapsackInstance{{Rational(3, 5), Rational(1, 2), Rational(1, 2)}}) == 2);
  CHECK(knapsack_optimum_count(KnapsackInstance{}) == 0);
  asg_test::for_all<MatchingInstance>(
      31, 400,
      [](std::mt19937_64& rng) {
        MatchingInstance m;
        m.vertices = 2 + rng() % 6;
        const std::size_t edges = rng() % 10;
        for (std::size_t e = 0; e < edges; ++e) {
          const auto a = static_cast<std::uint32_t>(1 + rng() % m.vertices);
          const auto b = static_cast<std::uint32_t>(1 + rng() % m.vertices);
          if (a != b) m.edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        return m;
      },
      [](const MatchingInstance& m) { return maximum_matching_size(m) == brute_matching(m); },
      [](const MatchingInstance& m) { return std::to_string(m.edges.size()) + " edges"; });
}

TEST_CASE("instances round trip through JSON") {
  const std::vector<std::pair<Problem, Instance>> cases{
      {Problem::vertex_cover, build_clique_graph(BitString::parse("0110"))},
      {Problem::set_cover, build_set_cover(BitString::parse("0101"))},
      {Problem::disjoint_path_allocation, build_nested_paths(BitString::parse("0100101"))},
      {Problem::uniform_knapsack, KnapsackInstance{{Rational(3, 5), Rational(0), Rational(1)}}},
      {Problem::matching, MatchingInstance{4, {{2, 3}, {1, 2}, {3, 4}}}},
  };
  for (const auto& [problem, instance] : cases) {
    const auto [p, back] = io::instance_from_json(io::instance_to_json(problem, instance));
    CHECK(p == problem);
    CHECK(back == instance);
  }
}

TEST_CASE("malformed instance records are rejected") {
  using nlohmann::json;
  CHECK_THROWS(io::instance_from_json(json{{"problem", "vc"}, {"vertices", 2}, {"back_edges", {json::array(), {2}}}}));
  CHECK_THROWS(io::instance_from_json(json{{"problem", "sc"}, {"universe", 2}, {"sets", {{1}, {3}}}}));
  CHECK_THROWS(
      io::instance_from_json(json{{"problem", "dpa"}, {"length", "4"}, {"requests", {{"2", "1"}}}}));
  CHECK_THROWS(io::instance_from_json(json{{"problem", "knapsack"}, {"weights", {"3/2"}}}));
  CHECK_THROWS(io::instance_from_json(json{{"problem", "knapsack"}, {"weights", {"0.5"}}}));
  CHECK_THROWS(io::instance_from_json(json{{"problem", "matching"}, {"vertices", 2}, {"edges", {{1, 1}}}}));
  CHECK_THROWS(io::instance_from_json(json{{"problem", "tsp"}}));
}

TEST_CASE("problem names round trip") {
  for (Problem p : {Problem::vertex_cover, Problem::cycle_finding, Problem::dominating_set, Problem::set_cover,
                    Problem::independent_set, Problem::disjoint_path_allocation, Problem::uniform_knapsack,
                    Problem::matching})
    CHECK(parse_problem(to_string(p)) == p);
  CHECK(objective(Problem::independent_set) == Objective::maximize);
  CHECK(accepted_bit(Problem::vertex_cover));
  CHECK_FALSE(accepted_bit(Problem::matching));
}
