#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "asg/designs.hpp"
#include "asg/errors.hpp"
#include "asg/io.hpp"

using namespace asg;
using namespace asg::designs;

namespace {

std::vector<Block> subsets_of_size(std::size_t v, std::size_t k) {
  std::vector<Block> out;
  for (std::uint32_t mask = 0; mask < (1u << v); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    Block b;
    for (std::uint32_t e = 0; e < v; ++e)
      if (mask >> e & 1u) b.push_back(e + 1);
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t mask_of(const Block& b) {
  std::uint32_t m = 0;
  for (auto e : b) m |= 1u << (e - 1);
  return m;
}

/// Tries every family of each size in lexicographic order of block sequences.
CoveringDesign brute_minimum(std::size_t v, std::size_t k, std::size_t t) {
  const auto blocks = subsets_of_size(v, k);
  const auto targets = subsets_of_size(v, t);
  std::vector<std::uint32_t> block_masks;
  for (const auto& b : blocks) block_masks.push_back(mask_of(b));
  for (std::size_t size = 1; size <= blocks.size(); ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      bool covers = true;
      for (const auto& target : targets) {
        const std::uint32_t tm = mask_of(target);
        bool hit = false;
        for (auto i : pick) hit = hit || (block_masks[i] & tm) == tm;
        if (!hit) {
          covers = false;
          break;
        }
      }
      if (covers) {
        CoveringDesign d{v, k, t, {}};
        for (auto i : pick) d.blocks.push_back(blocks[i]);
        return d;
      }
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == blocks.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return CoveringDesign{v, k, t, {}};
}

}  // namespace

TEST_CASE("is_covering_design examples") {
  CHECK(is_covering_design({4, 2, 1, {{1, 2}, {3, 4}}}));
  CHECK_FALSE(is_covering_design({4, 2, 1, {{1, 2}}}));
  for (std::size_t t = 0; t <= 5; ++t) CHECK(is_covering_design({5, 5, t, {{1, 2, 3, 4, 5}}}));
  CHECK_THROWS_AS(is_covering_design({4, 2, 1, {{1, 2, 3}}}), ContractViolation);
  CHECK_THROWS_AS(is_covering_design({4, 2, 1, {{1, 5}}}), ContractViolation);
  CHECK_THROWS_AS(is_covering_design({4, 2, 1, {{2, 1}}}), ContractViolation);
  CHECK_THROWS_AS(is_covering_design({3, 4, 1, {}}), ContractViolation);
}

TEST_CASE("exact cover numbers") {
  CHECK(exact_cover_number(4, 3, 2).size == 3);
  CHECK(exact_cover_number(4, 2, 1).size == 2);
  for (std::size_t v = 1; v <= 6; ++v)
    for (std::size_t t = 0; t <= v; ++t) CHECK(exact_cover_number(v, v, t).size == 1);
  CHECK(exact_cover_number(7, 3, 2).size == 7);
}

TEST_CASE("exact search returns the minimum and the lexicographically first witness, up to v = 5") {
  for (std::size_t v = 1; v <= 5; ++v) {
    for (std::size_t k = 1; k <= v; ++k) {
      for (std::size_t t = 1; t <= k; ++t) {
        CAPTURE(v);
        CAPTURE(k);
        CAPTURE(t);
        const CoveringDesign oracle = brute_minimum(v, k, t);
        const ExactCover found = exact_cover_number(v, k, t);
        REQUIRE(found.size == oracle.size());
        REQUIRE(found.witness == oracle);
      }
    }
  }
}

TEST_CASE("bounds order ceil(quotient) <= exact <= greedy <= the logarithmic bound, up to v = 8") {
  for (std::size_t v = 1; v <= 8; ++v) {
    for (std::size_t k = 1; k <= v; ++k) {
      for (std::size_t t = 1; t <= k; ++t) {
        CAPTURE(v);
        CAPTURE(k);
        CAPTURE(t);
        const CoverNumberBounds b = cover_number_bounds(v, k, t);
        const CoveringDesign greedy = greedy_cover(v, k, t);
        REQUIRE(is_covering_design(greedy));
        REQUIRE(b.lower <= BigInt(greedy.size()));
        REQUIRE(BigInt(greedy.size()) <= b.upper);
        REQUIRE(schonheim_bound(v, k, t) >= b.lower);
        ExactCover exact;
        try {
          exact = exact_cover_number(v, k, t);
        } catch (const ResourceLimitExceeded&) {
          continue;
        }
        REQUIRE(b.lower <= BigInt(exact.size));
        REQUIRE(schonheim_bound(v, k, t) <= BigInt(exact.size));
        REQUIRE(exact.size <= greedy.size());
        REQUIRE(is_covering_design(exact.witness));
      }
    }
  }
}

TEST_CASE("exact cover numbers are monotone in k and t") {
  for (std::size_t v = 2; v <= 6; ++v) {
    for (std::size_t k = 1; k <= v; ++k) {
      for (std::size_t t = 1; t <= k; ++t) {
        const std::size_t here = exact_cover_number(v, k, t).size;
        if (k + 1 <= v) CHECK(exact_cover_number(v, k + 1, t).size <= here);
        if (t + 1 <= k) CHECK(exact_cover_number(v, k, t + 1).size >= here);
      }
    }
  }
}

TEST_CASE("greedy examples") {
  const CoveringDesign g = greedy_cover(6, 3, 2);
  CHECK(is_covering_design(g));
  CHECK(g.size() <= 10);
  CHECK(static_cast<double>(g.size()) <= 5.0 * (1.0 + std::log(3.0)));
  CHECK(greedy_cover(4, 3, 2).size() >= 2);
  CHECK(greedy_cover(5, 5, 3).size() == 1);
  CHECK(greedy_cover(6, 3, 2) == g);
}

TEST_CASE("binomial quotients") {
  CHECK(binom_quotient(6, 4, 2) == BigRational(5, 2));
  CHECK(binom_quotient(9, 4, 0) == BigRational(1));
  CHECK(binom_quotient(4, 3, 2) == BigRational(2));
  CHECK(schonheim_bound(4, 3, 2) == 3);
}

TEST_CASE("search guards raise instead of answering") {
  SearchLimits tight;
  tight.max_t_subsets = 10;
  CHECK_THROWS_AS(exact_cover_number(8, 4, 3, tight), ResourceLimitExceeded);
  SearchLimits few_nodes;
  few_nodes.max_nodes = 3;
  CHECK_THROWS_AS(exact_cover_number(8, 4, 2, few_nodes), ResourceLimitExceeded);
}

TEST_CASE("shared designs are deterministic and fall back to greedy") {
  const SharedDesign& a = shared_design(6, 4, 2);
  const SharedDesign& b = shared_design(6, 4, 2);
  CHECK(a.design == b.design);
  CHECK(a.source == DesignSource::exact);
  CHECK(a.design.size() == exact_cover_number(6, 4, 2).size);

  SearchLimits few_nodes;
  few_nodes.max_nodes = 3;
  few_nodes.max_candidate_blocks = 4999;
  const SharedDesign& fallback = shared_design(9, 5, 3, few_nodes);
  CHECK(fallback.source == DesignSource::greedy);
  CHECK(is_covering_design(fallback.design));
}

TEST_CASE("first_block_containing") {
  const CoveringDesign d{4, 2, 1, {{1, 2}, {3, 4}}};
  CHECK(first_block_containing(d, {3}) == 1);
  CHECK(first_block_containing(d, {}) == 0);
  CHECK_FALSE(first_block_containing(d, {2, 3}).has_value());
}

TEST_CASE("family order compares size first") {
  CHECK(family_less({{3, 4}}, {{1, 2}, {3, 4}}));
  CHECK(family_less({{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}));
  CHECK_FALSE(family_less({{1, 3}}, {{1, 2}}));
}

TEST_CASE("designs round trip through JSON and malformed ones are rejected") {
  const CoveringDesign d = exact_cover_number(5, 3, 2).witness;
  CHECK(io::design_from_json(io::to_json(d)) == d);
  auto bad = io::to_json(d);
  bad["blocks"][0] = {1, 1, 2};
  CHECK_THROWS_AS(io::design_from_json(bad), ContractViolation);
}
