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

#ifndef AUCTIONDET_SELECT_HPP_
#define AUCTIONDET_SELECT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "auctiondet/correlate.hpp"
#include "auctiondet/grid.hpp"
#include "auctiondet/solver.hpp"

namespace auctiondet {

// Which solver produces the per-K revenues. Exact is the faithful choice; the
// greedy walk is a much cheaper approximation.
enum class RevenueSolver { kExact, kGreedy };

struct GapOptions {
  int k_max = 1;
  int reps = 50;
  std::uint64_t seed = 0;
  RevenueSolver null_solver = RevenueSolver::kExact;
  RevenueSolver observed_solver = RevenueSolver::kExact;
  // Workers for the null repetitions (0 = hardware concurrency).
  unsigned threads = 1;
  SolveOptions solve;
  CorrelationMethod correlation = CorrelationMethod::kAuto;
  // Test hook: use the measurement itself as every null reference.
  bool identity_null = false;
};

struct GapProfile {
  std::vector<int> k_values;
  std::vector<double> observed_revenue;
  std::vector<double> null_mean;
  std::vector<double> gap;
  int k_hat = 0;
  // One entry per candidate K dropped because an inner solve was infeasible.
  std::vector<std::string> warnings;
};

// Fisher-Yates shuffle of all pixels; same shape, same value multiset.
Grid PermuteMeasurement(const Grid& y, std::uint64_t seed);

// min(20, floor(anchors / W^2)), at least 1.
int DefaultKMax(std::size_t rows, std::size_t cols, std::size_t w);

// Gap statistic over K = 1..k_max:
//   gap(K) = revenue(K) - mean_r revenue_r(K)
// where revenue_r is computed on the r-th pixel permutation of y. k_hat is the
// arg max with ties resolved toward the smaller K. Candidates whose inner
// solve is infeasible are dropped with a warning; throws InfeasibleError if
// none remain.
GapProfile EstimateK(const Grid& y, const Grid& templ, const GapOptions& options);

}  // namespace auctiondet

#endif  // AUCTIONDET_SELECT_HPP_
