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
#include <cmath>

#include "auctiondet/select.hpp"
#include "auctiondet/sim.hpp"
#include "auctiondet/templates.hpp"
#include "doctest.h"
#include "test_util.hpp"

namespace auctiondet {
namespace {

using testing::RandomGrid;

std::vector<double> Sorted(std::span<const double> v) {
  std::vector<double> out(v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

TEST_CASE("permutation: trivial grid and value multiset") {
  const Grid one = Grid::FromRows({{7.0}});
  CHECK(PermuteMeasurement(one, 3) == one);

  const Grid y = RandomGrid(9, 11, 4);
  const Grid p = PermuteMeasurement(y, 12);
  CHECK(p.rows() == 9);
  CHECK(p.cols() == 11);
  CHECK(Sorted(p.values()) == Sorted(y.values()));
  CHECK(p != y);
  CHECK(PermuteMeasurement(y, 12) == p);
  CHECK(PermuteMeasurement(y, 13) != p);
}

TEST_CASE("default k_max") {
  CHECK(DefaultKMax(40, 40, 3) == 20);
  CHECK(DefaultKMax(10, 10, 3) == 7);  // 64 anchors / 9
  CHECK(DefaultKMax(3, 3, 3) == 1);
}

TEST_CASE("identity null gives zero gaps and k_hat = 1") {
  GapOptions opts;
  opts.k_max = 4;
  opts.reps = 3;
  opts.identity_null = true;
  const GapProfile prof = EstimateK(RandomGrid(12, 12, 8), MakeSquareTemplate(3), opts);
  REQUIRE(prof.gap.size() == 4);
  for (double g : prof.gap) CHECK(g == 0.0);
  CHECK(prof.k_hat == 1);
  CHECK(prof.k_values == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("single clean occurrence is estimated as K = 1") {
  Grid y(12, 12);
  for (std::size_t u = 0; u < 3; ++u)
    for (std::size_t v = 0; v < 3; ++v) y(4 + u, 5 + v) = 1.0;
  GapOptions opts;
  opts.k_max = 3;
  opts.reps = 20;
  opts.seed = 2;
  const GapProfile prof = EstimateK(y, MakeSquareTemplate(3), opts);
  CHECK(prof.k_hat == 1);
  CHECK(prof.observed_revenue[0] == doctest::Approx(9.0));
}

TEST_CASE("k_hat is the first arg max of the gap curve") {
  SimSpec spec;
  spec.templ = MakeDiskTemplate(3, 1.0);
  spec.k = 3;
  spec.n_rows = spec.n_cols = 24;
  spec.snr_db = 0.0;
  spec.rng_seed = 6;
  const SimInstance inst = Generate(spec);
  for (auto solver : {RevenueSolver::kExact, RevenueSolver::kGreedy}) {
    GapOptions opts;
    opts.k_max = 5;
    opts.reps = 8;
    opts.seed = 1;
    opts.null_solver = solver;
    opts.observed_solver = solver;
    const GapProfile prof = EstimateK(inst.noisy, spec.templ, opts);
    REQUIRE(prof.gap.size() == 5);
    const auto best = std::max_element(prof.gap.begin(), prof.gap.end());
    CHECK(prof.k_hat == prof.k_values[static_cast<std::size_t>(best - prof.gap.begin())]);
    for (std::size_t i = 0; i < prof.gap.size(); ++i) {
      CHECK(prof.gap[i] == doctest::Approx(prof.observed_revenue[i] - prof.null_mean[i]));
    }
    CHECK(std::is_sorted(prof.k_values.begin(), prof.k_values.end()));
  }
}

TEST_CASE("thread count does not change the profile") {
  const Grid y = RandomGrid(16, 16, 21);
  GapOptions opts;
  opts.k_max = 4;
  opts.reps = 9;
  opts.seed = 5;
  const GapProfile seq = EstimateK(y, MakeSquareTemplate(3), opts);
  opts.threads = 4;
  const GapProfile par = EstimateK(y, MakeSquareTemplate(3), opts);
  CHECK(seq.gap == par.gap);
  CHECK(seq.null_mean == par.null_mean);
  CHECK(seq.k_hat == par.k_hat);
}

TEST_CASE("candidates that cannot be placed are dropped with a warning") {
  // 5x5 anchors with W = 3 fit at most four separated placements.
  GapOptions opts;
  opts.k_max = 6;
  opts.reps = 2;
  const GapProfile prof = EstimateK(RandomGrid(7, 7, 1), MakeSquareTemplate(3), opts);
  CHECK(prof.k_values == std::vector<int>{1, 2, 3, 4});
  CHECK(prof.warnings.size() == 2);

  opts.k_max = 0;
  CHECK_THROWS_AS(EstimateK(RandomGrid(7, 7, 1), MakeSquareTemplate(3), opts),
                  std::invalid_argument);
}

}  // namespace
}  // namespace auctiondet
