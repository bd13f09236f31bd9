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

#include <algorithm>
#include <limits>
#include <random>

#include "auctiondet/correlate.hpp"
#include "auctiondet/sim.hpp"
#include "auctiondet/solver.hpp"
#include "auctiondet/templates.hpp"
#include "doctest.h"
#include "test_util.hpp"

namespace auctiondet {
namespace {

using testing::RandomGrid;

const Grid kSmallPrices = Grid::FromRows({{3, 1}, {2, 2}});

// Sequential maximum rule written directly on the price grid: repeatedly take
// the largest remaining anchor (first in row-major order on ties) that keeps
// the separation condition.
std::vector<Location> ReferenceGreedy(const Grid& prices, int w, int k) {
  std::vector<Location> picked;
  std::vector<bool> used(prices.size(), false);
  while (static_cast<int>(picked.size()) < k) {
    double best = -std::numeric_limits<double>::infinity();
    std::size_t best_index = prices.size();
    for (std::size_t idx = 0; idx < prices.size(); ++idx) {
      if (used[idx]) continue;
      const Location loc{static_cast<int>(idx / prices.cols()),
                         static_cast<int>(idx % prices.cols())};
      bool ok = true;
      for (const Location& p : picked) ok = ok && !Conflicts(p, loc, w);
      if (!ok) continue;
      if (prices.values()[idx] > best) {
        best = prices.values()[idx];
        best_index = idx;
      }
    }
    if (best_index == prices.size()) break;
    used[best_index] = true;
    picked.push_back({static_cast<int>(best_index / prices.cols()),
                      static_cast<int>(best_index % prices.cols())});
  }
  return picked;
}

TEST_CASE("sort_bids: examples") {
  const SortedBids sorted = SortBids(kSmallPrices, 1);
  REQUIRE(sorted.bids.size() == 4);
  CHECK(sorted.bids[0] == Bid{{0, 0}, 3});
  CHECK(sorted.bids[1] == Bid{{1, 0}, 2});
  CHECK(sorted.bids[2] == Bid{{1, 1}, 2});
  CHECK(sorted.bids[3] == Bid{{0, 1}, 1});

  const SortedBids flat = SortBids(Grid(3, 2, 5.0), 2);
  for (std::size_t i = 0; i < flat.bids.size(); ++i) {
    CHECK(flat.bids[i].loc == Location{static_cast<int>(i / 2), static_cast<int>(i % 2)});
  }
}

TEST_CASE("sort_bids agrees with a reference stable sort") {
  // Quantized prices force plenty of ties.
  Grid prices = RandomGrid(5, 5, 31);
  for (double& v : prices.values()) v = std::round(v * 2.0) / 2.0;
  std::vector<Bid> reference;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      reference.push_back({{static_cast<int>(i), static_cast<int>(j)}, prices(i, j)});
  std::stable_sort(reference.begin(), reference.end(),
                   [](const Bid& a, const Bid& b) { return a.price > b.price; });
  const SortedBids sorted = SortBids(prices, 2);
  CHECK(sorted.bids == reference);
  CHECK(sorted.template_width == 2);
}

TEST_CASE("greedy_detect: examples") {
  const Allocation a = GreedyDetect(SortBids(kSmallPrices, 1), 2);
  CHECK(a.locations() == std::vector<Location>{{0, 0}, {1, 0}});
  CHECK(a.revenue() == 5);

  const Grid all_conflict = Grid::FromRows({{5, 4}, {3, 2}});
  CHECK_THROWS_AS(GreedyDetect(SortBids(all_conflict, 2), 2), InfeasibleError);
  CHECK_THROWS_AS(GreedyDetect(SortBids(all_conflict, 2), 0), std::invalid_argument);
}

TEST_CASE("greedy_detect matches the reference sequential-max rule") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Grid prices = RandomGrid(6, 6, seed + 500);
    for (int k = 1; k <= 3; ++k) {
      const Allocation a = GreedyDetect(SortBids(prices, 3), k);
      CHECK(a.locations() == ReferenceGreedy(prices, 3, k));
    }
  }
}

TEST_CASE("upper_bound_h: examples") {
  const Bid three[] = {{{0, 0}, 5}, {{0, 1}, 4}, {{0, 2}, 1}};
  CHECK(UpperBoundH(three, 2) == 9.0);
  const Bid negative[] = {{{0, 0}, -1}, {{0, 1}, -2}};
  CHECK(UpperBoundH(negative, 2) == -3.0);
  const Bid one[] = {{{0, 0}, 5}};
  CHECK_FALSE(UpperBoundH(one, 2).has_value());
}

TEST_CASE("lazy remainder bound equals h over the explicitly filtered set") {
  std::mt19937_64 rng(77);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int w = 1 + static_cast<int>(seed % 3);
    const SortedBids sorted = SortBids(RandomGrid(7, 7, seed), w);
    const Allocation greedy = GreedyDetect(sorted, 2);
    const auto& partial = greedy.bids();
    std::uniform_int_distribution<std::size_t> pick(0, sorted.bids.size() - 1);
    const std::size_t from = pick(rng);
    std::vector<Bid> allowed;
    for (std::size_t j = from; j < sorted.bids.size(); ++j) {
      bool ok = true;
      for (const Bid& p : partial) ok = ok && !Conflicts(p.loc, sorted.bids[j].loc, w);
      if (ok) allowed.push_back(sorted.bids[j]);
    }
    for (int slots = 1; slots <= 4; ++slots) {
      CHECK(RemainderBound(sorted.bids, from, partial, w, slots) ==
            UpperBoundH(allowed, slots));
    }
  }
}

TEST_CASE("wdp_solve: examples") {
  CHECK(WdpSolve(SortBids(kSmallPrices, 1), 2).objective == 5);

  const Grid prices = Grid::FromRows({{9, 1, 8}, {1, 1, 1}, {8, 1, 7}});
  const SortedBids sorted = SortBids(prices, 2);
  CHECK(GreedyDetect(sorted, 2).revenue() == 17);
  const SolveReport exact = WdpSolve(sorted, 2);
  const SolveReport brute = BruteForceSolve(sorted, 2);
  CHECK(brute.objective == 17);
  CHECK(exact.objective == 17);
  CHECK(exact.allocation.locations() == std::vector<Location>{{0, 0}, {0, 2}});
}

TEST_CASE("wdp_solve: greedy is beaten when a dense pair hides behind a bridge") {
  // The bridging anchor (0,1) outbids both true peaks but blocks them.
  const Grid prices = Grid::FromRows({{8, 10, 8, 0}});
  const SortedBids sorted = SortBids(prices, 2);
  CHECK(GreedyDetect(sorted, 2).revenue() == 10);
  const SolveReport r = WdpSolve(sorted, 2);
  CHECK(r.objective == 16);
  CHECK(r.allocation.locations() == std::vector<Location>{{0, 0}, {0, 2}});
  REQUIRE(r.first_leaf.has_value());
  CHECK(r.first_leaf->locations() == std::vector<Location>{{0, 1}, {0, 3}});
  CHECK(r.incumbent_updates == 2);
}

TEST_CASE("wdp_solve handles all-negative prices") {
  // A zero-initialized incumbent would prune every subtree here.
  Grid prices = RandomGrid(4, 4, 5);
  for (double& v : prices.values()) v = -std::abs(v) - 1.0;
  const SortedBids sorted = SortBids(prices, 2);
  const SolveReport exact = WdpSolve(sorted, 3);
  CHECK(exact.objective < 0);
  CHECK(exact.objective == BruteForceSolve(sorted, 3).objective);
}

TEST_CASE("wdp_solve: infeasible and invalid k") {
  const SortedBids sorted = SortBids(Grid::FromRows({{5, 4}, {3, 2}}), 2);
  CHECK_THROWS_AS(WdpSolve(sorted, 2), InfeasibleError);
  CHECK_THROWS_AS(BruteForceSolve(sorted, 2), InfeasibleError);
  CHECK_THROWS_AS(WdpSolve(sorted, 0), std::invalid_argument);
  CHECK_THROWS_AS(WdpSolve(sorted, 5), InfeasibleError);
}

TEST_CASE("brute_force_solve refuses oversized enumerations") {
  const SortedBids big = SortBids(Grid(30, 30), 1);
  CHECK_THROWS_AS(BruteForceSolve(big, 5), BudgetExceededError);
  CHECK_THROWS_AS(BruteForceSolve(SortBids(Grid(6, 6), 1), 3, 100), BudgetExceededError);
  CHECK(BruteForceSolve(SortBids(kSmallPrices, 1), 2).objective == 5);
}

TEST_CASE("exact equals brute force on small instances") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t side = 2 + seed % 3;  // up to 4x4 anchors
    const int w = 1 + static_cast<int>(seed % 2);
    const SortedBids sorted = SortBids(RandomGrid(side, side, seed + 900), w);
    for (int k = 1; k <= 3; ++k) {
      try {
        const SolveReport brute = BruteForceSolve(sorted, k);
        const SolveReport exact = WdpSolve(sorted, k);
        CHECK(exact.objective == brute.objective);
        ++checked;
      } catch (const InfeasibleError&) {
        CHECK_THROWS_AS(WdpSolve(sorted, k), InfeasibleError);
      }
    }
  }
  CHECK(checked > 60);
}

TEST_CASE("brute force cross-check: 4x4 anchors, W=2, k=2") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SortedBids sorted = SortBids(RandomGrid(4, 4, seed + 40), 2);
    CHECK(WdpSolve(sorted, 2).objective == BruteForceSolve(sorted, 2).objective);
  }
}

TEST_CASE("disabling the bound test changes nothing but the node count") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const SortedBids sorted = SortBids(RandomGrid(6, 6, seed + 60), 2);
    for (int k = 1; k <= 4; ++k) {
      const SolveReport pruned = WdpSolve(sorted, k);
      SolveOptions off;
      off.prune_bound = false;
      const SolveReport full = WdpSolve(sorted, k, off);
      CHECK(pruned.objective == full.objective);
      CHECK(pruned.allocation == full.allocation);
      CHECK(pruned.nodes_explored <= full.nodes_explored);
      CHECK(full.prunes_bound == 0);
    }
  }
}

TEST_CASE("first leaf is the greedy allocation; greedy never beats exact") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const SortedBids sorted = SortBids(RandomGrid(8, 8, seed + 300), 3);
    for (int k = 1; k <= 4; ++k) {
      const Allocation greedy = GreedyDetect(sorted, k);
      const SolveReport exact = WdpSolve(sorted, k);
      REQUIRE(exact.first_leaf.has_value());
      CHECK(*exact.first_leaf == greedy);
      CHECK(greedy.revenue() <= exact.objective);
      CHECK(exact.objective == AllocationRevenue(exact.allocation));
      CHECK(static_cast<int>(exact.allocation.size()) == k);
      CHECK(PairwiseSeparated(exact.allocation.locations(), 3));
    }
  }
}

TEST_CASE("arbitrary bid order reaches the same optimum") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SortedBids sorted = SortBids(RandomGrid(6, 6, seed + 700), 2);
    std::vector<Bid> shuffled = sorted.bids;
    std::mt19937_64 rng(seed);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (int k = 1; k <= 3; ++k) {
      CHECK(SolveInOrder(shuffled, 2, k).objective ==
            doctest::Approx(WdpSolve(sorted, k).objective).epsilon(1e-12));
    }
  }
}

TEST_CASE("search limits raise SearchLimitError") {
  const SortedBids sorted = SortBids(RandomGrid(12, 12, 3), 1);
  SolveOptions opts;
  opts.prune_bound = false;
  opts.node_limit = 2000;
  CHECK_THROWS_AS(WdpSolve(sorted, 4, opts), SearchLimitError);
}

TEST_CASE("solver dispatch and names") {
  const SortedBids sorted = SortBids(kSmallPrices, 1);
  for (auto kind : {SolverKind::kExact, SolverKind::kGreedy, SolverKind::kBrute}) {
    CHECK(ParseSolverKind(SolverName(kind)) == kind);
    CHECK(RunSolver(kind, sorted, 2).objective == 5);
  }
  CHECK(RunSolver(SolverKind::kGreedy, sorted, 2).nodes_explored == 2);
  CHECK_THROWS_AS(ParseSolverKind("fast"), std::invalid_argument);
}

TEST_CASE("exact recovers a dense pair that greedy splits") {
  // Two occurrences side by side at distance exactly W on clean data: the
  // bridging anchors tie with the true ones, and with a bias toward the
  // bridge greedy cannot take both.
  Grid y(9, 12);
  const Grid s = MakeSquareTemplate(3);
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 6; ++v) y(static_cast<std::size_t>(3 + u), static_cast<std::size_t>(3 + v)) = 1.0;
  y(4, 5) += 0.5;  // bridge anchors (3,4) and (3,5) now see 9.5
  y(4, 6) += 0.5;
  const SortedBids sorted = SortBids(Correlate(y, s), 3);
  const SolveReport exact = WdpSolve(sorted, 2);
  CHECK(exact.allocation.locations() == std::vector<Location>{{3, 3}, {3, 6}});
  const Allocation greedy = GreedyDetect(sorted, 2);
  CHECK(greedy.revenue() < exact.objective);
}

}  // namespace
}  // namespace auctiondet
