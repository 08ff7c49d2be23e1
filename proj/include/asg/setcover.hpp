#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace asg::setcover {

/// Cover elements 0..elements-1 with as few of `sets` as possible.
struct Problem {
  std::size_t elements = 0;
  std::vector<std::vector<std::uint32_t>> sets;
};

struct Solution {
  /// Proven bounds on the optimum; lower == upper when `exact`.
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  bool exact = false;
  /// Indices into Problem::sets of a cover of size `upper`, ascending.
  std::vector<std::size_t> chosen;
  std::uint64_t nodes = 0;
};

/// Branch and bound on the element with the fewest remaining candidates,
/// with dominated sets removed, forbidden earlier siblings, and disjoint-element
/// and fractional packing bounds. When `node_budget` runs out the result is
/// the best cover found together with a certified LP lower bound.
/// Throws ContractViolation if some element lies in no set.
Solution solve(const Problem& problem, std::uint64_t node_budget);

/// ceil of a certified lower bound from the LP relaxation: an exactly
/// feasible fractional packing of elements is derived from a floating-point
/// simplex solution and summed in integer arithmetic.
std::uint64_t lp_lower_bound(const Problem& problem);

}  // namespace asg::setcover
