#include "asg/designs.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <unordered_map>

#include "asg/errors.hpp"

namespace asg::designs {

namespace {

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return fallback;
  return v;
}

void check_parameters(std::size_t v, std::size_t k, std::size_t t) {
  if (!(v >= k && k >= t)) {
    throw ContractViolation("covering design needs v >= k >= t, got (" + std::to_string(v) + "," +
                            std::to_string(k) + "," + std::to_string(t) + ")");
  }
  if (v > 64) throw ContractViolation("covering designs are limited to v <= 64");
}

BigInt binom_or_throw(std::size_t n, std::size_t k) { return binomial(n, k); }

/// All k-subsets of [v] as bit masks (bit i-1 for element i), in lex order of tuples.
std::vector<std::uint64_t> lex_subsets(std::size_t v, std::size_t k) {
  std::vector<std::uint64_t> out;
  std::vector<std::uint32_t> tuple(k);
  for (std::size_t i = 0; i < k; ++i) tuple[i] = static_cast<std::uint32_t>(i + 1);
  for (;;) {
    std::uint64_t mask = 0;
    for (auto e : tuple) mask |= std::uint64_t{1} << (e - 1);
    out.push_back(mask);
    std::size_t i = k;
    while (i > 0 && tuple[i - 1] == v - k + i) --i;
    if (i == 0) break;
    ++tuple[i - 1];
    for (std::size_t j = i; j < k; ++j) tuple[j] = tuple[j - 1] + 1;
  }
  return out;
}

Block mask_to_block(std::uint64_t mask) {
  Block b;
  while (mask != 0) {
    b.push_back(static_cast<std::uint32_t>(std::countr_zero(mask) + 1));
    mask &= mask - 1;
  }
  return b;
}

using Words = std::vector<std::uint64_t>;

/// The incidence structure between candidate blocks and t-subsets.
struct Universe {
  std::size_t v, k, t;
  std::vector<std::uint64_t> tsubsets;
  std::vector<std::uint64_t> blocks;
  std::vector<Words> block_cover;
  std::vector<std::vector<std::uint32_t>> containers;  // ascending block indices per t-subset
  std::size_t words = 0;
  std::size_t per_block = 0;  // binom(k,t)

  Universe(std::size_t v_, std::size_t k_, std::size_t t_, const SearchLimits& limits,
           std::uint64_t max_blocks)
      : v(v_), k(k_), t(t_) {
    const BigInt n_t = binom_or_throw(v, t);
    const BigInt n_b = binom_or_throw(v, k);
    const BigInt inner = binom_or_throw(k, t);
    if (n_t > limits.max_t_subsets) {
      throw ResourceLimitExceeded("design (" + std::to_string(v) + "," + std::to_string(k) + "," +
                                  std::to_string(t) + ") has " + n_t.str() +
                                  " t-subsets, above the guard of " +
                                  std::to_string(limits.max_t_subsets));
    }
    if (n_b > max_blocks || n_b * inner > 20'000'000) {
      throw ResourceLimitExceeded("design (" + std::to_string(v) + "," + std::to_string(k) + "," +
                                  std::to_string(t) + ") has " + n_b.str() +
                                  " candidate blocks, above the guard");
    }
    tsubsets = lex_subsets(v, t);
    blocks = lex_subsets(v, k);
    per_block = static_cast<std::size_t>(inner);
    words = (tsubsets.size() + 63) / 64;
    std::unordered_map<std::uint64_t, std::uint32_t> rank;
    rank.reserve(tsubsets.size() * 2);
    for (std::size_t i = 0; i < tsubsets.size(); ++i) rank.emplace(tsubsets[i], static_cast<std::uint32_t>(i));
    containers.assign(tsubsets.size(), {});
    block_cover.assign(blocks.size(), Words(words, 0));
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      // Enumerate the t-subsets of block b by choosing t of its k bits.
      const Block elems = mask_to_block(blocks[b]);
      std::vector<std::size_t> pick(t);
      for (std::size_t i = 0; i < t; ++i) pick[i] = i;
      for (;;) {
        std::uint64_t m = 0;
        for (auto p : pick) m |= std::uint64_t{1} << (elems[p] - 1);
        std::uint32_t r = rank.at(m);
        block_cover[b][r / 64] |= std::uint64_t{1} << (r % 64);
        containers[r].push_back(static_cast<std::uint32_t>(b));
        std::size_t i = t;
        while (i > 0 && pick[i - 1] == k - t + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < t; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }

  Words full_uncovered() const {
    Words u(words, ~std::uint64_t{0});
    if (tsubsets.size() % 64 != 0) u.back() = (std::uint64_t{1} << (tsubsets.size() % 64)) - 1;
    return u;
  }
};

std::size_t popcount(const Words& w) {
  std::size_t c = 0;
  for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

std::size_t gain(const Words& uncovered, const Words& cover) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < uncovered.size(); ++i) c += static_cast<std::size_t>(std::popcount(uncovered[i] & cover[i]));
  return c;
}

Words minus(const Words& uncovered, const Words& cover) {
  Words out(uncovered.size());
  for (std::size_t i = 0; i < uncovered.size(); ++i) out[i] = uncovered[i] & ~cover[i];
  return out;
}

/// Branch and bound: can `uncovered` be covered with at most `remaining`
/// blocks of index >= lo? Branches on the most constrained uncovered t-subset
/// and forbids earlier siblings in later branches.
class Completion {
 public:
  Completion(const Universe& u, std::uint64_t max_nodes) : u_(u), max_nodes_(max_nodes), forbidden_(u.blocks.size(), 0) {}

  bool feasible(const Words& uncovered, std::size_t remaining, std::size_t lo) {
    return search(uncovered, popcount(uncovered), remaining, lo);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool search(const Words& uncovered, std::size_t open, std::size_t remaining, std::size_t lo) {
    if (open == 0) return true;
    if (remaining == 0) return false;
    if (++nodes_ > max_nodes_) {
      throw ResourceLimitExceeded("exact covering design search exceeded its node budget of " +
                                  std::to_string(max_nodes_));
    }
    if (open > remaining * u_.per_block) return false;

    // Pick the uncovered t-subset with the fewest usable containers.
    std::size_t best_t = SIZE_MAX;
    std::size_t best_count = SIZE_MAX;
    for (std::size_t w = 0; w < uncovered.size(); ++w) {
      for (std::uint64_t bits = uncovered[w]; bits != 0; bits &= bits - 1) {
        std::size_t ti = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        std::size_t count = 0;
        for (auto b : u_.containers[ti]) {
          if (b >= lo && !forbidden_[b]) ++count;
        }
        if (count < best_count) {
          best_count = count;
          best_t = ti;
          if (count == 0) return false;
        }
      }
    }

    // Fractional bound: no block can cover more than the best current gain.
    std::size_t max_gain = 0;
    for (std::size_t b = lo; b < u_.blocks.size(); ++b) {
      if (!forbidden_[b]) max_gain = std::max(max_gain, gain(uncovered, u_.block_cover[b]));
    }
    if (open > remaining * max_gain) return false;

    std::vector<std::uint32_t> tried;
    bool found = false;
    for (auto b : u_.containers[best_t]) {
      if (b < lo || forbidden_[b]) continue;
      Words next = minus(uncovered, u_.block_cover[b]);
      std::size_t next_open = open - gain(uncovered, u_.block_cover[b]);
      if (search(next, next_open, remaining - 1, lo)) {
        found = true;
        break;
      }
      forbidden_[b] = 1;
      tried.push_back(b);
    }
    for (auto b : tried) forbidden_[b] = 0;
    return found;
  }

  const Universe& u_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<char> forbidden_;
};

CoveringDesign to_design(const Universe& u, const std::vector<std::size_t>& chosen) {
  CoveringDesign d{u.v, u.k, u.t, {}};
  for (auto b : chosen) d.blocks.push_back(mask_to_block(u.blocks[b]));
  return d;
}

std::vector<std::size_t> greedy_indices(const Universe& u) {
  std::vector<std::size_t> gains(u.blocks.size(), u.per_block);
  std::vector<char> covered(u.tsubsets.size(), 0);
  std::size_t open = u.tsubsets.size();
  std::vector<std::size_t> chosen;
  while (open > 0) {
    std::size_t best = 0;
    for (std::size_t b = 1; b < gains.size(); ++b) {
      if (gains[b] > gains[best]) best = b;
    }
    chosen.push_back(best);
    for (std::size_t w = 0; w < u.words; ++w) {
      for (std::uint64_t bits = u.block_cover[best][w]; bits != 0; bits &= bits - 1) {
        std::size_t ti = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (covered[ti]) continue;
        covered[ti] = 1;
        --open;
        for (auto b : u.containers[ti]) --gains[b];
      }
    }
  }
  return chosen;
}

}  // namespace

SearchLimits SearchLimits::from_environment() {
  SearchLimits limits;
  limits.max_t_subsets = env_or("ASG_DESIGN_MAX_T_SUBSETS", limits.max_t_subsets);
  limits.max_nodes = env_or("ASG_DESIGN_MAX_NODES", limits.max_nodes);
  return limits;
}

bool family_less(const std::vector<Block>& a, const std::vector<Block>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void validate_structure(const CoveringDesign& design) {
  check_parameters(design.v, design.k, design.t);
  for (const auto& block : design.blocks) {
    if (block.size() != design.k) throw ContractViolation("block has the wrong number of elements");
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (block[i] < 1 || block[i] > design.v) throw ContractViolation("block element out of range");
      if (i > 0 && block[i] <= block[i - 1]) throw ContractViolation("block elements must be strictly increasing");
    }
  }
}

bool is_covering_design(const CoveringDesign& design) {
  validate_structure(design);
  std::vector<std::uint64_t> masks;
  for (const auto& block : design.blocks) {
    std::uint64_t m = 0;
    for (auto e : block) m |= std::uint64_t{1} << (e - 1);
    masks.push_back(m);
  }
  for (std::uint64_t ts : lex_subsets(design.v, design.t)) {
    bool hit = std::any_of(masks.begin(), masks.end(), [&](std::uint64_t m) { return (m & ts) == ts; });
    if (!hit) return false;
  }
  return true;
}

BigRational binom_quotient(std::size_t v, std::size_t k, std::size_t t) {
  check_parameters(v, k, t);
  return BigRational(binomial(v, t), binomial(k, t));
}

BigInt schonheim_bound(std::size_t v, std::size_t k, std::size_t t) {
  check_parameters(v, k, t);
  if (t == 0) return 1;
  if (k == 0) return 1;
  BigInt inner = schonheim_bound(v - 1, k - 1, t - 1);
  BigInt num = BigInt(v) * inner;
  return (num + k - 1) / k;
}

CoverNumberBounds cover_number_bounds(std::size_t v, std::size_t k, std::size_t t) {
  BigRational q = binom_quotient(v, k, t);
  CoverNumberBounds out;
  out.lower = ceil(q);
  Real upper = to_real(q) * (Real(1) + log(Real(binomial(k, t))));
  out.upper = BigInt(boost::multiprecision::floor(upper));
  return out;
}

CoveringDesign greedy_cover(std::size_t v, std::size_t k, std::size_t t, const SearchLimits& limits) {
  check_parameters(v, k, t);
  Universe u(v, k, t, limits, 2'000'000);
  return to_design(u, greedy_indices(u));
}

ExactCover exact_cover_number(std::size_t v, std::size_t k, std::size_t t, const SearchLimits& limits) {
  check_parameters(v, k, t);
  Universe u(v, k, t, limits, limits.max_candidate_blocks);
  const std::size_t greedy_size = greedy_indices(u).size();
  std::size_t lower = static_cast<std::size_t>(std::max(schonheim_bound(v, k, t), ceil(binom_quotient(v, k, t))));
  std::uint64_t nodes = 0;

  std::size_t size = greedy_size;
  const Words all = u.full_uncovered();
  for (std::size_t s = lower; s < greedy_size; ++s) {
    Completion probe(u, limits.max_nodes - std::min(nodes, limits.max_nodes - 1));
    bool ok = probe.feasible(all, s, 0);
    nodes += probe.nodes();
    if (ok) {
      size = s;
      break;
    }
  }

  // Extend the block sequence one block at a time with the smallest block
  // that still admits a completion of the right size.
  std::vector<std::size_t> chosen;
  Words uncovered = all;
  std::size_t lo = 0;
  while (chosen.size() < size) {
    const std::size_t left = size - chosen.size() - 1;
    bool placed = false;
    for (std::size_t b = lo; b < u.blocks.size(); ++b) {
      Words next = minus(uncovered, u.block_cover[b]);
      Completion probe(u, limits.max_nodes - std::min(nodes, limits.max_nodes - 1));
      bool ok = probe.feasible(next, left, b + 1);
      nodes += probe.nodes();
      if (ok) {
        chosen.push_back(b);
        uncovered = std::move(next);
        lo = b + 1;
        placed = true;
        break;
      }
    }
    if (!placed) throw ContractViolation("exact design search lost its completion");
  }
  return ExactCover{size, to_design(u, chosen), nodes};
}

std::optional<std::size_t> first_block_containing(const CoveringDesign& design,
                                                  const std::vector<std::uint32_t>& required) {
  for (std::size_t i = 0; i < design.blocks.size(); ++i) {
    const auto& b = design.blocks[i];
    if (std::includes(b.begin(), b.end(), required.begin(), required.end())) return i;
  }
  return std::nullopt;
}

const SharedDesign& shared_design(std::size_t v, std::size_t k, std::size_t t, const SearchLimits& limits) {
  static std::mutex mutex;
  static std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::uint64_t, std::uint64_t>,
                  std::unique_ptr<SharedDesign>>
      cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_tuple(v, k, t, limits.max_t_subsets, limits.max_nodes);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto entry = std::make_unique<SharedDesign>();
  try {
    entry->design = exact_cover_number(v, k, t, limits).witness;
    entry->source = DesignSource::exact;
  } catch (const ResourceLimitExceeded&) {
    entry->design = greedy_cover(v, k, t, limits);
    entry->source = DesignSource::greedy;
  }
  return *cache.emplace(key, std::move(entry)).first->second;
}

std::string to_string(DesignSource source) { return source == DesignSource::exact ? "exact" : "greedy"; }

}  // namespace asg::designs
