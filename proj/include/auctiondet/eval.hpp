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

#ifndef AUCTIONDET_EVAL_HPP_
#define AUCTIONDET_EVAL_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "auctiondet/geometry.hpp"
#include "auctiondet/grid.hpp"
#include "auctiondet/select.hpp"
#include "auctiondet/sim.hpp"
#include "auctiondet/solver.hpp"

namespace auctiondet {

struct MatchResult {
  int true_positives = 0;
  int false_positives = 0;
  int false_negatives = 0;
  // (true location, detected location)
  std::vector<std::pair<Location, Location>> matched_pairs;
};

// One-to-one matching, greedy by ascending Chebyshev distance over all
// truth x detection pairs (ties by truth index, then detection index). A pair
// is eligible when its distance is at most w / 2.
MatchResult MatchDetections(std::span<const Location> truth,
                            std::span<const Location> detected, int w);

struct Scores {
  double precision = 0.0;
  double tpr = 0.0;
  double f1 = 0.0;
};

Scores Score(const MatchResult& match, std::size_t n_detections,
             std::size_t n_truth);

enum class KMode { kKnown, kGapEstimate };

struct BenchmarkConfig {
  std::vector<double> snr_db;
  int trials = 100;
  int n_rows = 40;
  int n_cols = 40;
  Grid templ;
  int k = 4;
  Separation separation = Separation::kDense;
  bool tight_pair = true;
  std::vector<SolverKind> solvers{SolverKind::kExact, SolverKind::kGreedy};
  KMode k_mode = KMode::kKnown;
  std::uint64_t base_seed = 0;
  // Gap-estimate mode.
  int k_max = 0;  // 0 = DefaultKMax
  int null_reps = 50;
  RevenueSolver null_solver = RevenueSolver::kExact;
  // Per-solve limit; a trial that hits it is recorded as failed.
  double time_limit_seconds = 0.0;
  unsigned threads = 1;
};

struct TrialRecord {
  std::size_t snr_index = 0;
  double snr_db = 0.0;
  int trial = 0;
  std::uint64_t seed = 0;
  SolverKind solver = SolverKind::kExact;
  int k_true = 0;
  int k_input = 0;
  std::optional<int> k_hat;
  std::vector<Location> truth;
  std::vector<Location> detections;
  double objective = 0.0;
  Scores scores;
  std::uint64_t nodes_explored = 0;
  double solve_seconds = 0.0;
  double estimate_seconds = 0.0;
  std::optional<std::string> error;
};

struct AggregateRow {
  SolverKind solver = SolverKind::kExact;
  double snr_db = 0.0;
  int trials = 0;  // successful trials averaged
  double mean_f1 = 0.0;
  double mean_precision = 0.0;
  double mean_tpr = 0.0;
  std::optional<double> k_accuracy;
  double mean_nodes = 0.0;
  double mean_seconds = 0.0;
};

struct BenchmarkResult {
  std::vector<TrialRecord> records;  // ordered by (snr, trial, solver)
  std::vector<AggregateRow> rows;    // ordered by (solver, snr)
};

BenchmarkResult RunBenchmark(const BenchmarkConfig& config);

// Aggregates over non-failed records, grouped by (solver, snr index).
std::vector<AggregateRow> Aggregate(const BenchmarkConfig& config,
                                    std::span<const TrialRecord> records);

inline constexpr const char* kAggregateCsvHeader =
    "solver,snr_db,trials,mean_f1,mean_precision,mean_tpr,k_accuracy,"
    "mean_nodes,mean_seconds";

void WriteAggregateCsv(std::ostream& out, std::span<const AggregateRow> rows);
void WriteTrialJsonl(std::ostream& out, std::span<const TrialRecord> records);

}  // namespace auctiondet

#endif  // AUCTIONDET_EVAL_HPP_
