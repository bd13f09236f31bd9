// Copyright 2026 The auctiondet Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "auctiondet/solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <string>

namespace auctiondet {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void CheckK(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1, got " + std::to_string(k));
}

std::string InfeasibleMessage(int k, int w, std::size_t n_bids) {
  return "no allocation of " + std::to_string(k) +
         " non-overlapping placements exists (W=" + std::to_string(w) + ", " +
         std::to_string(n_bids) + " anchors)";
}

bool ConflictsWithAny(std::span<const Bid> partial, Location loc, int w) {
  for (const Bid& b : partial) {
    if (Conflicts(b.loc, loc, w)) return true;
  }
  return false;
}

std::optional<double> AccumulateSurvivors(std::span<const Bid> order,
                                          std::size_t from,
                                          std::span<const Bid> partial, int w,
                                          int slots, double base) {
  double sum = base;
  int found = 0;
  for (std::size_t j = from; j < order.size(); ++j) {
    if (ConflictsWithAny(partial, order[j].loc, w)) continue;
    sum += order[j].price;
    if (++found == slots) return sum;
  }
  return std::nullopt;
}

struct GreedyOutcome {
  Allocation allocation;
  std::uint64_t inspected = 0;
};

GreedyOutcome GreedyWalk(const SortedBids& bids, int k) {
  CheckK(k);
  GreedyOutcome out{Allocation(bids.template_width), 0};
  for (const Bid& b : bids.bids) {
    ++out.inspected;
    if (!out.allocation.CanAdd(b.loc)) continue;
    out.allocation.Add(b);
    if (static_cast<int>(out.allocation.size()) == k) return out;
  }
  throw InfeasibleError("greedy walk found only " +
                        std::to_string(out.allocation.size()) + " of " +
                        std::to_string(k) + " non-overlapping placements");
}

// Depth-first include/exclude search. Node d of the implicit tree decides
// bid d of `order_`. The exclude chain below a node is iterated rather than
// recursed, so the recursion depth never exceeds k.
class BranchAndBound {
 public:
  BranchAndBound(std::span<const Bid> order, int w, int k, bool sorted,
                 const SolveOptions& options)
      : order_(order), w_(w), k_(k), sorted_(sorted), options_(options) {
    partial_.reserve(static_cast<std::size_t>(k));
  }

  SolveReport Run() {
    start_ = Clock::now();
    Explore(0);
    if (!best_) throw InfeasibleError(InfeasibleMessage(k_, w_, order_.size()));
    report_.allocation = Allocation(w_, best_->bids());
    report_.objective = best_->revenue();
    report_.wall_time = SecondsSince(start_);
    return std::move(report_);
  }

 private:
  void Explore(std::size_t from) {
    const int slots = k_ - static_cast<int>(partial_.size());
    for (std::size_t i = from; i < order_.size(); ++i) {
      ++report_.nodes_explored;
      if ((report_.nodes_explored & 0x3ff) == 0) CheckLimits();

      if (order_.size() - i < static_cast<std::size_t>(slots)) {
        ++report_.prunes_feasibility;
        return;
      }
      const std::optional<double> optimistic = OptimisticRevenue(i, slots);
      if (!optimistic) {
        ++report_.prunes_feasibility;
        return;
      }
      if (options_.prune_bound && *optimistic < best_revenue_) {
        ++report_.prunes_bound;
        return;
      }

      const Bid& bid = order_[i];
      if (ConflictsWithAny(partial_, bid.loc, w_)) continue;

      const double saved = partial_revenue_;
      partial_.push_back(bid);
      partial_revenue_ += bid.price;
      if (slots == 1) {
        RecordLeaf();
      } else {
        Explore(i + 1);
      }
      partial_.pop_back();
      partial_revenue_ = saved;
    }
  }

  void RecordLeaf() {
    if (!report_.first_leaf) report_.first_leaf = Allocation(w_, partial_);
    if (partial_revenue_ > best_revenue_) {
      best_revenue_ = partial_revenue_;
      best_ = Allocation(w_, partial_);
      ++report_.incumbent_updates;
    }
  }

  // p(partial) + h(partial). In sorted mode the survivors are added onto the
  // partial revenue in the same order a leaf accumulates its bids, and the
  // j-th bid of any reachable leaf is no larger than the j-th survivor, so
  // monotone rounding keeps this an upper bound on every leaf revenue.
  std::optional<double> OptimisticRevenue(std::size_t from, int slots) {
    if (sorted_) {
      return AccumulateSurvivors(order_, from, partial_, w_, slots,
                                 partial_revenue_);
    }
    // Unsorted order: the best `slots` survivors can sit anywhere in the
    // remainder, so keep a running top list.
    top_.clear();
    for (std::size_t j = from; j < order_.size(); ++j) {
      const Bid& b = order_[j];
      if (ConflictsWithAny(partial_, b.loc, w_)) continue;
      if (static_cast<int>(top_.size()) == slots && b.price <= top_.back()) continue;
      auto pos = std::upper_bound(top_.begin(), top_.end(), b.price,
                                  std::greater<double>());
      top_.insert(pos, b.price);
      if (static_cast<int>(top_.size()) > slots) top_.pop_back();
    }
    if (static_cast<int>(top_.size()) < slots) return std::nullopt;
    double sum = 0.0;
    for (double p : top_) sum += p;
    return partial_revenue_ + sum;
  }

  void CheckLimits() const {
    if (options_.node_limit != 0 && report_.nodes_explored > options_.node_limit) {
      throw SearchLimitError("node limit reached", report_.nodes_explored);
    }
    if (options_.time_limit_seconds > 0.0 &&
        SecondsSince(start_) > options_.time_limit_seconds) {
      throw SearchLimitError("time limit reached", report_.nodes_explored);
    }
  }

  std::span<const Bid> order_;
  int w_;
  int k_;
  bool sorted_;
  SolveOptions options_;

  std::vector<Bid> partial_;
  double partial_revenue_ = 0.0;
  double best_revenue_ = -std::numeric_limits<double>::infinity();
  std::optional<Allocation> best_;
  std::vector<double> top_;
  SolveReport report_;
  Clock::time_point start_;
};

// C(n, k), saturating at max uint64.
std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(c);
}

}  // namespace

SortedBids SortBids(const Grid& prices, int w) {
  if (w < 1) throw std::invalid_argument("template width must be >= 1");
  SortedBids out;
  out.template_width = w;
  out.bids.reserve(prices.size());
  for (std::size_t i = 0; i < prices.rows(); ++i) {
    for (std::size_t j = 0; j < prices.cols(); ++j) {
      out.bids.push_back(
          Bid{Location{static_cast<int>(i), static_cast<int>(j)}, prices(i, j)});
    }
  }
  std::sort(out.bids.begin(), out.bids.end(), [](const Bid& a, const Bid& b) {
    if (a.price != b.price) return a.price > b.price;
    return a.loc < b.loc;
  });
  return out;
}

Allocation GreedyDetect(const SortedBids& bids, int k) {
  return GreedyWalk(bids, k).allocation;
}

std::optional<double> UpperBoundH(std::span<const Bid> allowed, int slots) {
  if (slots < 1) throw std::invalid_argument("slots must be >= 1");
  if (allowed.size() < static_cast<std::size_t>(slots)) return std::nullopt;
  std::vector<double> prices;
  prices.reserve(allowed.size());
  for (const Bid& b : allowed) prices.push_back(b.price);
  std::partial_sort(prices.begin(), prices.begin() + slots, prices.end(),
                    std::greater<double>());
  double sum = 0.0;
  for (int i = 0; i < slots; ++i) sum += prices[static_cast<std::size_t>(i)];
  return sum;
}

std::optional<double> RemainderBound(std::span<const Bid> order,
                                     std::size_t from,
                                     std::span<const Bid> partial, int w,
                                     int slots) {
  if (slots < 1) throw std::invalid_argument("slots must be >= 1");
  return AccumulateSurvivors(order, from, partial, w, slots, 0.0);
}

SolveReport WdpSolve(const SortedBids& bids, int k, const SolveOptions& options) {
  CheckK(k);
  return BranchAndBound(bids.bids, bids.template_width, k, /*sorted=*/true,
                        options)
      .Run();
}

SolveReport SolveInOrder(std::span<const Bid> order, int w, int k,
                         const SolveOptions& options) {
  CheckK(k);
  if (w < 1) throw std::invalid_argument("template width must be >= 1");
  const bool sorted = std::is_sorted(
      order.begin(), order.end(),
      [](const Bid& a, const Bid& b) { return a.price > b.price; });
  return BranchAndBound(order, w, k, sorted, options).Run();
}

SolveReport BruteForceSolve(const SortedBids& bids, int k, std::uint64_t budget) {
  CheckK(k);
  const auto start = Clock::now();
  const std::size_t n = bids.bids.size();
  const int w = bids.template_width;
  const std::uint64_t subsets = Binomial(n, static_cast<std::uint64_t>(k));
  if (subsets > budget) {
    throw BudgetExceededError("enumeration of C(" + std::to_string(n) + "," +
                              std::to_string(k) + ") subsets exceeds budget " +
                              std::to_string(budget));
  }
  if (subsets == 0) throw InfeasibleError(InfeasibleMessage(k, w, n));

  SolveReport report;
  std::vector<std::size_t> idx(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::optional<std::vector<std::size_t>> best;
  double best_revenue = -std::numeric_limits<double>::infinity();

  while (true) {
    ++report.nodes_explored;
    bool feasible = true;
    for (std::size_t a = 0; a < idx.size() && feasible; ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        if (Conflicts(bids.bids[idx[a]].loc, bids.bids[idx[b]].loc, w)) {
          feasible = false;
          break;
        }
      }
    }
    if (feasible) {
      double revenue = 0.0;
      for (std::size_t i : idx) revenue += bids.bids[i].price;
      if (!best || revenue > best_revenue) {
        best_revenue = revenue;
        best = idx;
        ++report.incumbent_updates;
      }
    }
    // Advance to the next combination in lexicographic order.
    std::size_t pos = idx.size();
    while (pos > 0 && idx[pos - 1] == n - idx.size() + (pos - 1)) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < idx.size(); ++i) idx[i] = idx[i - 1] + 1;
  }

  if (!best) throw InfeasibleError(InfeasibleMessage(k, w, n));
  Allocation alloc(w);
  for (std::size_t i : *best) alloc.Add(bids.bids[i]);
  report.objective = alloc.revenue();
  report.allocation = std::move(alloc);
  report.wall_time = SecondsSince(start);
  return report;
}

std::string_view SolverName(SolverKind kind) {
  switch (kind) {
    case SolverKind::kExact:
      return "exact";
    case SolverKind::kGreedy:
      return "greedy";
    case SolverKind::kBrute:
      return "brute";
  }
  return "unknown";
}

SolverKind ParseSolverKind(std::string_view name) {
  if (name == "exact") return SolverKind::kExact;
  if (name == "greedy") return SolverKind::kGreedy;
  if (name == "brute") return SolverKind::kBrute;
  throw std::invalid_argument("unknown solver '" + std::string(name) + "'");
}

SolveReport RunSolver(SolverKind kind, const SortedBids& bids, int k,
                      const SolveOptions& options) {
  switch (kind) {
    case SolverKind::kExact:
      return WdpSolve(bids, k, options);
    case SolverKind::kBrute:
      return BruteForceSolve(bids, k);
    case SolverKind::kGreedy:
      break;
  }
  const auto start = Clock::now();
  GreedyOutcome g = GreedyWalk(bids, k);
  SolveReport report;
  report.objective = g.allocation.revenue();
  report.nodes_explored = g.inspected;
  report.first_leaf = g.allocation;
  report.allocation = std::move(g.allocation);
  report.wall_time = SecondsSince(start);
  return report;
}

}  // namespace auctiondet
