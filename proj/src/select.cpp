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

#include "auctiondet/select.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "auctiondet/parallel.hpp"
#include "auctiondet/seed.hpp"

namespace auctiondet {
namespace {

// Optimal (or greedy) revenue for K = 1..k_max on one price map; nullopt
// marks an infeasible K. Infeasibility is monotone in K, so the scan stops
// at the first failure.
std::vector<std::optional<double>> RevenueCurve(const SortedBids& bids,
                                                int k_max,
                                                RevenueSolver solver,
                                                const SolveOptions& options) {
  std::vector<std::optional<double>> out(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    try {
      out[static_cast<std::size_t>(k - 1)] =
          solver == RevenueSolver::kExact
              ? WdpSolve(bids, k, options).objective
              : GreedyDetect(bids, k).revenue();
    } catch (const InfeasibleError&) {
      break;
    }
  }
  return out;
}

}  // namespace

Grid PermuteMeasurement(const Grid& y, std::uint64_t seed) {
  Grid out = y;
  auto v = out.values();
  std::mt19937_64 rng(seed);
  for (std::size_t i = v.size(); i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(v[i - 1], v[pick(rng)]);
  }
  return out;
}

int DefaultKMax(std::size_t rows, std::size_t cols, std::size_t w) {
  if (w == 0 || w > rows || w > cols) return 1;
  const std::size_t anchors = (rows - w + 1) * (cols - w + 1);
  const std::size_t cap = anchors / (w * w);
  return static_cast<int>(std::clamp<std::size_t>(cap, 1, 20));
}

GapProfile EstimateK(const Grid& y, const Grid& templ, const GapOptions& options) {
  if (options.k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  if (options.reps < 1) throw std::invalid_argument("reps must be >= 1");
  const int w = static_cast<int>(templ.rows());
  const auto k_max = static_cast<std::size_t>(options.k_max);

  const SortedBids observed_bids = SortBids(Correlate(y, templ, options.correlation), w);
  const auto observed = RevenueCurve(observed_bids, options.k_max,
                                     options.observed_solver, options.solve);

  std::vector<std::vector<std::optional<double>>> null_curves(
      static_cast<std::size_t>(options.reps));
  ParallelFor(null_curves.size(), options.threads, [&](std::size_t r) {
    const Grid reference =
        options.identity_null ? y : PermuteMeasurement(y, DeriveSeed(options.seed, {r}));
    const SortedBids bids = SortBids(Correlate(reference, templ, options.correlation), w);
    null_curves[r] =
        RevenueCurve(bids, options.k_max, options.null_solver, options.solve);
  });

  GapProfile profile;
  double best_gap = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < k_max; ++i) {
    const int k = static_cast<int>(i + 1);
    if (!observed[i]) {
      profile.warnings.push_back("K=" + std::to_string(k) +
                                 " dropped: observed solve infeasible");
      continue;
    }
    double null_sum = 0.0;
    bool null_ok = true;
    for (const auto& curve : null_curves) {
      if (!curve[i]) {
        null_ok = false;
        break;
      }
      null_sum += *curve[i];
    }
    if (!null_ok) {
      profile.warnings.push_back("K=" + std::to_string(k) +
                                 " dropped: null-reference solve infeasible");
      continue;
    }
    const double null_mean = null_sum / static_cast<double>(options.reps);
    const double gap = *observed[i] - null_mean;
    profile.k_values.push_back(k);
    profile.observed_revenue.push_back(*observed[i]);
    profile.null_mean.push_back(null_mean);
    profile.gap.push_back(gap);
    if (gap > best_gap) {
      best_gap = gap;
      profile.k_hat = k;
    }
  }
  if (profile.k_values.empty()) {
    throw InfeasibleError("every candidate K in 1.." + std::to_string(options.k_max) +
                          " was infeasible");
  }
  return profile;
}

}  // namespace auctiondet
