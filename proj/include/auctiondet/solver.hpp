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

#ifndef AUCTIONDET_SOLVER_HPP_
#define AUCTIONDET_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "auctiondet/allocation.hpp"
#include "auctiondet/grid.hpp"

namespace auctiondet {

// No allocation of exactly k mutually non-conflicting bids exists (or, for
// the greedy walk, none was found along the sorted order).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The brute-force enumeration would exceed its configured subset budget.
class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A time or node limit stopped the search before it could prove optimality.
class SearchLimitError : public std::runtime_error {
 public:
  SearchLimitError(const std::string& what, std::uint64_t nodes_explored)
      : std::runtime_error(what), nodes_explored_(nodes_explored) {}
  std::uint64_t nodes_explored() const { return nodes_explored_; }

 private:
  std::uint64_t nodes_explored_;
};

// Every valid anchor of a price map, ordered by price descending with ties
// broken by (n, m) ascending.
struct SortedBids {
  std::vector<Bid> bids;
  int template_width = 1;
};

// `prices` is the (N-W+1) x (M-W+1) correlation map for template width `w`.
SortedBids SortBids(const Grid& prices, int w);

struct SolveOptions {
  // Cut subtrees whose optimistic revenue falls strictly below the incumbent.
  bool prune_bound = true;
  // 0 disables the limit.
  double time_limit_seconds = 0.0;
  std::uint64_t node_limit = 0;
};

struct SolveReport {
  Allocation allocation{1};
  double objective = 0.0;
  std::uint64_t nodes_explored = 0;
  std::uint64_t prunes_bound = 0;
  std::uint64_t prunes_feasibility = 0;
  std::uint64_t incumbent_updates = 0;
  double wall_time = 0.0;
  // First complete allocation reached by the depth-first walk.
  std::optional<Allocation> first_leaf;
};

// Sequential maximum picking: walk the sorted list once and accept every bid
// that does not conflict with those already accepted, stopping at k.
// Throws InfeasibleError if the walk ends with fewer than k bids.
Allocation GreedyDetect(const SortedBids& bids, int k);

// Sum of the `slots` largest prices in `allowed`, or nullopt when fewer than
// `slots` bids are available (the subtree cannot be completed).
std::optional<double> UpperBoundH(std::span<const Bid> allowed, int slots);

// The same bound evaluated lazily inside the search: scans the price-sorted
// `order` from index `from`, skips bids conflicting with `partial`, and sums
// the first `slots` survivors.
std::optional<double> RemainderBound(std::span<const Bid> order,
                                     std::size_t from,
                                     std::span<const Bid> partial, int w,
                                     int slots);

// Exact winner determination with exactly k bids: depth-first branch and
// bound over the implicit include/exclude binary tree on the sorted list.
// Among equal-revenue optima the first one reached is returned.
// Throws InfeasibleError if no feasible k-allocation exists and
// SearchLimitError if a configured limit is hit.
SolveReport WdpSolve(const SortedBids& bids, int k,
                     const SolveOptions& options = {});

// Branch and bound over an arbitrary bid order (not necessarily sorted).
// Same result as WdpSolve in objective; used to study the effect of ordering.
SolveReport SolveInOrder(std::span<const Bid> order, int w, int k,
                         const SolveOptions& options = {});

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// Exhaustive enumeration of every k-subset of the sorted list in
// lexicographic index order. Ties go to the first subset enumerated.
// Throws BudgetExceededError when C(B, k) > budget, InfeasibleError when no
// subset is feasible.
SolveReport BruteForceSolve(const SortedBids& bids, int k,
                            std::uint64_t budget = kDefaultEnumerationBudget);

enum class SolverKind { kExact, kGreedy, kBrute };

std::string_view SolverName(SolverKind kind);
// Accepts "exact", "greedy", "brute"; throws std::invalid_argument otherwise.
SolverKind ParseSolverKind(std::string_view name);

// Dispatches to WdpSolve, GreedyDetect or BruteForceSolve. The greedy report
// counts every bid it inspected as an explored node.
SolveReport RunSolver(SolverKind kind, const SortedBids& bids, int k,
                      const SolveOptions& options = {});

}  // namespace auctiondet

#endif  // AUCTIONDET_SOLVER_HPP_
