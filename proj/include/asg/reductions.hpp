#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "asg/bitstring.hpp"
#include "asg/engine.hpp"
#include "asg/problems.hpp"

namespace asg::reductions {

/// v_i adjacent to every later v_j whenever x_i = 1: the 1s form a clique,
/// the 0s an independent set.
problems::OnlineGraph build_clique_graph(const BitString& x);

/// Each 1 linked to the previous 1 and each 0 to the last 1 before it, plus an
/// edge from the first 1 to the last 1. With at least three 1s those form the
/// only cycle. Requires |x|_1 >= 1.
problems::OnlineGraph build_chain_graph(const BitString& x);

/// Star joining every 0 to the last 1. Requires |x|_1 >= 1.
problems::OnlineGraph build_star_graph(const BitString& x);

/// Singletons {i}, except that request MAX (the last 1) is {MAX} together with every 0
/// position. Requires |x|_1 >= 1.
problems::SetCoverInstance build_set_cover(const BitString& x);

/// Nested halving subpaths of a path of length 2^n: the request after a 0
/// starts where it ended, the request after a 1 starts where it started.
/// Requires 1 <= n <= max_n.
problems::DpaInstance build_nested_paths(const BitString& x, std::size_t max_n = 30);

/// Index of the last / first 1, or 0 if there is none.
std::size_t last_one(const BitString& x);
std::size_t first_one(const BitString& x);

enum class Reduction { vc, cf, ds, sc, is, dpa };

std::string to_string(Reduction reduction);
Reduction parse_reduction(const std::string& text);
problems::Problem target_problem(Reduction reduction);
/// The ASG variant the lifted algorithm solves.
AsgVariant lifted_variant(Reduction reduction);
/// Whether the construction is defined for x (chain graphs need three 1s,
/// stars and set cover one).
bool instance_defined(Reduction reduction, const BitString& x);
/// The instance for x; throws DomainError when !instance_defined.
problems::Instance build_instance(Reduction reduction, const BitString& x);

/// The optimum of the constructed instance in closed form.
Score closed_form_optimum(Reduction reduction, const BitString& x);

// ----------------------------------------------------------------------------

struct MembershipReport {
  std::size_t instances = 0;
  std::size_t outputs_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// For every instance and every output y: a feasible y scores |y|_1 (min) or
/// |y|_0 (max), and y is feasible whenever y' ⊑ y for some optimal y'.
MembershipReport aoc_membership_check(problems::Problem problem,
                                      const std::function<std::optional<problems::Instance>()>& next,
                                      std::size_t max_violations = 20);

/// Extra advice bits the lifted algorithm reads on top of the problem
/// algorithm, at most.
std::uint64_t header_budget(Reduction reduction, std::size_t n);

/// Turns an algorithm for the target problem into one for the matching ASG
/// variant: the oracle simulates the problem pair on the constructed instance
/// and prefixes its advice with a short header naming the exceptional rounds.
AdvicePair lift_to_asg(const problems::ProblemPair& pair, Reduction reduction);

}  // namespace asg::reductions
