#include "asg/setcover.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "asg/errors.hpp"

namespace asg::setcover {

namespace {

using Words = std::vector<std::uint64_t>;

struct Reduced {
  std::size_t elements = 0;
  std::size_t words = 0;
  std::vector<Words> cover;
  std::vector<std::size_t> original;  // reduced set index -> Problem::sets index
  std::vector<std::vector<std::uint32_t>> candidates;  // per element, ascending
};

bool subset_of(const Words& a, const Words& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

Reduced reduce(const Problem& problem) {
  Reduced r;
  r.elements = problem.elements;
  r.words = (problem.elements + 63) / 64;
  std::vector<Words> all(problem.sets.size(), Words(r.words, 0));
  for (std::size_t s = 0; s < problem.sets.size(); ++s) {
    for (auto e : problem.sets[s]) {
      if (e >= problem.elements) throw ContractViolation("set cover: element out of range");
      all[s][e / 64] |= std::uint64_t{1} << (e % 64);
    }
  }
  for (std::size_t a = 0; a < all.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < all.size() && !dominated; ++b) {
      if (a == b || !subset_of(all[a], all[b])) continue;
      // Among identical sets keep the first.
      dominated = all[a] != all[b] || b < a;
    }
    if (!dominated) {
      r.cover.push_back(all[a]);
      r.original.push_back(a);
    }
  }
  r.candidates.assign(r.elements, {});
  for (std::size_t s = 0; s < r.cover.size(); ++s) {
    for (std::size_t w = 0; w < r.words; ++w) {
      for (std::uint64_t bits = r.cover[s][w]; bits != 0; bits &= bits - 1) {
        r.candidates[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))].push_back(
            static_cast<std::uint32_t>(s));
      }
    }
  }
  for (std::size_t e = 0; e < r.elements; ++e) {
    if (r.candidates[e].empty()) {
      throw ContractViolation("set cover: element " + std::to_string(e) + " lies in no set");
    }
  }
  return r;
}

std::size_t popcount(const Words& w) {
  std::size_t c = 0;
  for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

std::size_t overlap(const Words& a, const Words& b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

Words all_elements(const Reduced& r) {
  Words u(r.words, ~std::uint64_t{0});
  if (r.elements % 64 != 0) u.back() = (std::uint64_t{1} << (r.elements % 64)) - 1;
  if (r.elements == 0) u.clear();
  return u;
}

std::vector<std::size_t> greedy(const Reduced& r) {
  Words open = all_elements(r);
  std::vector<std::size_t> chosen;
  while (popcount(open) > 0) {
    std::size_t best = 0;
    std::size_t best_gain = 0;
    for (std::size_t s = 0; s < r.cover.size(); ++s) {
      std::size_t g = overlap(open, r.cover[s]);
      if (g > best_gain) {
        best_gain = g;
        best = s;
      }
    }
    chosen.push_back(best);
    for (std::size_t w = 0; w < r.words; ++w) open[w] &= ~r.cover[best][w];
  }
  return chosen;
}

class Search {
 public:
  Search(const Reduced& r, std::uint64_t budget) : r_(r), budget_(budget), forbidden_(r.cover.size(), 0) {}

  void run(std::vector<std::size_t> incumbent) {
    best_ = std::move(incumbent);
    Words open = all_elements(r_);
    root_bound_ = bound_and_branch(open, nullptr);
    dfs(open);
  }

  bool complete() const { return !out_of_budget_; }
  std::uint64_t nodes() const { return nodes_; }
  std::size_t root_bound() const { return root_bound_; }
  const std::vector<std::size_t>& best() const { return best_; }

 private:
  /// Lower bound on sets still needed; writes the branching element.
  std::size_t bound_and_branch(const Words& open, std::size_t* branch) {
    std::vector<std::size_t> gains(r_.cover.size(), 0);
    std::size_t max_gain = 0;
    for (std::size_t s = 0; s < r_.cover.size(); ++s) {
      if (forbidden_[s]) continue;
      gains[s] = overlap(open, r_.cover[s]);
      max_gain = std::max(max_gain, gains[s]);
    }
    std::vector<std::pair<std::size_t, std::size_t>> by_choice;  // (candidate count, element)
    double packing = 0;
    std::size_t best_count = SIZE_MAX;
    for (std::size_t w = 0; w < r_.words; ++w) {
      for (std::uint64_t bits = open[w]; bits != 0; bits &= bits - 1) {
        std::size_t e = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        std::size_t count = 0;
        std::size_t widest = 0;
        for (auto s : r_.candidates[e]) {
          if (forbidden_[s]) continue;
          ++count;
          widest = std::max(widest, gains[s]);
        }
        if (count == 0) return SIZE_MAX;
        if (count < best_count) {
          best_count = count;
          if (branch) *branch = e;
        }
        // Each element e gets weight 1/widest: feasible for the dual packing LP.
        packing += 1.0 / static_cast<double>(widest);
        by_choice.emplace_back(count, e);
      }
    }
    if (by_choice.empty()) return 0;
    std::size_t lb = (by_choice.size() + max_gain - 1) / max_gain;
    lb = std::max(lb, static_cast<std::size_t>(std::ceil(packing - 1e-9)));
    // Elements with pairwise disjoint candidate lists each need their own set.
    std::sort(by_choice.begin(), by_choice.end());
    std::vector<char> used(r_.cover.size(), 0);
    std::size_t disjoint = 0;
    for (auto [count, e] : by_choice) {
      bool clash = false;
      for (auto s : r_.candidates[e]) {
        if (!forbidden_[s] && used[s]) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      ++disjoint;
      for (auto s : r_.candidates[e]) used[s] = 1;
    }
    return std::max(lb, disjoint);
  }

  void dfs(const Words& open) {
    if (out_of_budget_) return;
    if (++nodes_ > budget_) {
      out_of_budget_ = true;
      return;
    }
    if (popcount(open) == 0) {
      if (current_.size() < best_.size()) best_ = current_;
      return;
    }
    if (current_.size() + 1 >= best_.size()) return;
    std::size_t branch = SIZE_MAX;
    std::size_t lb = bound_and_branch(open, &branch);
    if (lb == SIZE_MAX || current_.size() + lb >= best_.size()) return;

    std::vector<std::pair<std::size_t, std::uint32_t>> order;
    for (auto s : r_.candidates[branch]) {
      if (!forbidden_[s]) order.emplace_back(overlap(open, r_.cover[s]), s);
    }
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    std::vector<std::uint32_t> tried;
    for (auto [gain, s] : order) {
      Words next(open.size());
      for (std::size_t w = 0; w < open.size(); ++w) next[w] = open[w] & ~r_.cover[s][w];
      current_.push_back(s);
      dfs(next);
      current_.pop_back();
      forbidden_[s] = 1;
      tried.push_back(s);
      if (out_of_budget_) break;
    }
    for (auto s : tried) forbidden_[s] = 0;
  }

  const Reduced& r_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::size_t root_bound_ = 0;
  std::vector<char> forbidden_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

/// Maximize sum p_e subject to sum_{e in S} p_e <= 1 for every set S, p >= 0.
std::vector<double> solve_packing_lp(const Reduced& r) {
  const std::size_t m = r.cover.size();
  const std::size_t n = r.elements;
  const std::size_t cols = n + m + 1;
  std::vector<double> tab(m * cols, 0.0);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return tab[i * cols + j]; };
  std::vector<double> obj(cols, 0.0);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t w = 0; w < r.words; ++w) {
      for (std::uint64_t bits = r.cover[i][w]; bits != 0; bits &= bits - 1) {
        at(i, w * 64 + static_cast<std::size_t>(std::countr_zero(bits))) = 1.0;
      }
    }
    at(i, n + i) = 1.0;
    at(i, cols - 1) = 1.0;
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) obj[j] = 1.0;

  const double eps = 1e-10;
  const std::size_t dantzig_iterations = 20 * (n + m);
  for (std::size_t iter = 0; iter < 200 * (n + m); ++iter) {
    std::size_t enter = cols;
    if (iter < dantzig_iterations) {
      double best = eps;
      for (std::size_t j = 0; j + 1 < cols; ++j) {
        if (obj[j] > best) {
          best = obj[j];
          enter = j;
        }
      }
    } else {
      for (std::size_t j = 0; j + 1 < cols; ++j) {
        if (obj[j] > eps) {
          enter = j;
          break;
        }
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    double ratio = 0;
    for (std::size_t i = 0; i < m; ++i) {
      double a = at(i, enter);
      if (a <= eps) continue;
      double q = at(i, cols - 1) / a;
      if (leave == m || q < ratio - eps || (q <= ratio + eps && basis[i] < basis[leave])) {
        leave = i;
        ratio = q;
      }
    }
    if (leave == m) break;  // unbounded cannot happen: every element lies in a set
    double pivot = at(leave, enter);
    for (std::size_t j = 0; j < cols; ++j) at(leave, j) /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      double f = at(i, enter);
      if (std::abs(f) <= 1e-15) continue;
      for (std::size_t j = 0; j < cols; ++j) at(i, j) -= f * at(leave, j);
    }
    double f = obj[enter];
    for (std::size_t j = 0; j < cols; ++j) obj[j] -= f * at(leave, j);
    basis[leave] = enter;
  }
  std::vector<double> p(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) p[basis[i]] = std::max(0.0, at(i, cols - 1));
  }
  return p;
}

std::uint64_t certified_bound(const Reduced& r) {
  if (r.elements == 0) return 0;
  std::vector<double> p = solve_packing_lp(r);
  std::vector<std::uint64_t> q(p.size());
  for (std::size_t e = 0; e < p.size(); ++e) q[e] = static_cast<std::uint64_t>(std::floor(p[e] * 1073741824.0));
  std::uint64_t widest = 0;
  for (const auto& cover : r.cover) {
    std::uint64_t sum = 0;
    for (std::size_t w = 0; w < r.words; ++w) {
      for (std::uint64_t bits = cover[w]; bits != 0; bits &= bits - 1) {
        sum += q[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
      }
    }
    widest = std::max(widest, sum);
  }
  if (widest == 0) return 1;
  std::uint64_t total = std::accumulate(q.begin(), q.end(), std::uint64_t{0});
  // q / widest is exactly feasible for the packing LP, so its value bounds the optimum.
  return (total + widest - 1) / widest;
}

}  // namespace

std::uint64_t lp_lower_bound(const Problem& problem) { return certified_bound(reduce(problem)); }

Solution solve(const Problem& problem, std::uint64_t node_budget) {
  Reduced r = reduce(problem);
  Search search(r, node_budget);
  search.run(greedy(r));
  Solution out;
  out.nodes = search.nodes();
  for (auto s : search.best()) out.chosen.push_back(r.original[s]);
  std::sort(out.chosen.begin(), out.chosen.end());
  out.upper = out.chosen.size();
  if (search.complete()) {
    out.exact = true;
    out.lower = out.upper;
  } else {
    out.lower = std::max<std::uint64_t>(search.root_bound(), certified_bound(r));
    out.lower = std::min(out.lower, out.upper);
    out.exact = out.lower == out.upper;
  }
  return out;
}

}  // namespace asg::setcover
