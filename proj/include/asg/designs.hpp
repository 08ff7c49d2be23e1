#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asg/bigint.hpp"

namespace asg::designs {

using Block = std::vector<std::uint32_t>;  // sorted, elements in [1, v]

/// A family of k-subsets (blocks) of [v] meant to contain every t-subset.
struct CoveringDesign {
  std::size_t v = 0;
  std::size_t k = 0;
  std::size_t t = 0;
  std::vector<Block> blocks;

  std::size_t size() const { return blocks.size(); }
  friend bool operator==(const CoveringDesign&, const CoveringDesign&) = default;
};

/// Families compare by size, then by their block sequences; blocks compare
/// by their sorted element tuples.
bool family_less(const std::vector<Block>& a, const std::vector<Block>& b);

struct SearchLimits {
  /// Refuse any search whose t-subset count binom(v,t) exceeds this.
  std::uint64_t max_t_subsets = 100000;
  /// Refuse exact search when binom(v,k) candidate blocks exceed this.
  std::uint64_t max_candidate_blocks = 5000;
  /// Branch-and-bound nodes per exact search before giving up.
  std::uint64_t max_nodes = 50'000'000;

  /// Defaults overridden by ASG_DESIGN_MAX_T_SUBSETS / ASG_DESIGN_MAX_NODES.
  static SearchLimits from_environment();
};

/// Throws ContractViolation on malformed designs (wrong parameters, block
/// of wrong size, element out of range, unsorted or repeated elements).
void validate_structure(const CoveringDesign& design);
bool is_covering_design(const CoveringDesign& design);

struct ExactCover {
  std::size_t size = 0;
  CoveringDesign witness;  // the lexicographically first family of that size
  std::uint64_t nodes = 0;
};

/// Minimum design size with its lexicographically first witness.
/// Throws ResourceLimitExceeded when a guard is hit.
ExactCover exact_cover_number(std::size_t v, std::size_t k, std::size_t t,
                              const SearchLimits& limits = SearchLimits::from_environment());

/// Greedy: repeatedly add the block covering the most uncovered t-subsets,
/// ties to the smallest block.
CoveringDesign greedy_cover(std::size_t v, std::size_t k, std::size_t t,
                            const SearchLimits& limits = SearchLimits::from_environment());

/// binom(v,t) / binom(k,t).
BigRational binom_quotient(std::size_t v, std::size_t k, std::size_t t);

/// ceil(v/k * L(v-1, k-1, t-1)), L(v,k,0) = 1: a valid lower bound no weaker
/// than the binomial quotient.
BigInt schonheim_bound(std::size_t v, std::size_t k, std::size_t t);

struct CoverNumberBounds {
  BigInt lower;  // ceil of the binomial quotient
  BigInt upper;  // floor(quotient * (1 + ln binom(k,t)))
  std::optional<std::size_t> exact;
};

CoverNumberBounds cover_number_bounds(std::size_t v, std::size_t k, std::size_t t);

enum class DesignSource { exact, greedy };

struct SharedDesign {
  CoveringDesign design;
  DesignSource source = DesignSource::exact;
};

/// The design an oracle and its algorithm agree on: the exact lex-first
/// design when the search finishes within `limits`, the greedy one otherwise.
/// Results are memoized per parameter triple; safe to call concurrently.
const SharedDesign& shared_design(std::size_t v, std::size_t k, std::size_t t,
                                  const SearchLimits& limits = SearchLimits::from_environment());

/// Index of the first block containing every element of `required`, if any.
std::optional<std::size_t> first_block_containing(const CoveringDesign& design,
                                                  const std::vector<std::uint32_t>& required);

std::string to_string(DesignSource source);

}  // namespace asg::designs
