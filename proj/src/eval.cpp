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

#include "auctiondet/eval.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <tuple>

#include "auctiondet/correlate.hpp"
#include "auctiondet/parallel.hpp"
#include "auctiondet/seed.hpp"
#include "json.hpp"

namespace auctiondet {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string FormatNumber(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

nlohmann::ordered_json LocationsJson(const std::vector<Location>& locs) {
  auto arr = nlohmann::ordered_json::array();
  for (const Location& l : locs) arr.push_back({l.n, l.m});
  return arr;
}

}  // namespace

MatchResult MatchDetections(std::span<const Location> truth,
                            std::span<const Location> detected, int w) {
  struct Candidate {
    int distance;
    std::size_t truth_index;
    std::size_t detection_index;
  };
  const double threshold = static_cast<double>(w) / 2.0;
  std::vector<Candidate> candidates;
  for (std::size_t t = 0; t < truth.size(); ++t) {
    for (std::size_t d = 0; d < detected.size(); ++d) {
      const int dist = Chebyshev(truth[t], detected[d]);
      if (static_cast<double>(dist) <= threshold) candidates.push_back({dist, t, d});
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              return std::tie(a.distance, a.truth_index, a.detection_index) <
                     std::tie(b.distance, b.truth_index, b.detection_index);
            });

  MatchResult result;
  std::vector<bool> truth_used(truth.size(), false);
  std::vector<bool> detection_used(detected.size(), false);
  for (const Candidate& c : candidates) {
    if (truth_used[c.truth_index] || detection_used[c.detection_index]) continue;
    truth_used[c.truth_index] = true;
    detection_used[c.detection_index] = true;
    result.matched_pairs.emplace_back(truth[c.truth_index], detected[c.detection_index]);
  }
  result.true_positives = static_cast<int>(result.matched_pairs.size());
  result.false_positives =
      static_cast<int>(detected.size()) - result.true_positives;
  result.false_negatives = static_cast<int>(truth.size()) - result.true_positives;
  return result;
}

Scores Score(const MatchResult& match, std::size_t n_detections,
             std::size_t n_truth) {
  Scores s;
  const auto tp = static_cast<double>(match.true_positives);
  s.precision = n_detections > 0 ? tp / static_cast<double>(n_detections) : 0.0;
  s.tpr = n_truth > 0 ? tp / static_cast<double>(n_truth) : 0.0;
  const double denom = s.precision + s.tpr;
  s.f1 = denom > 0.0 ? 2.0 * s.precision * s.tpr / denom : 0.0;
  return s;
}

BenchmarkResult RunBenchmark(const BenchmarkConfig& config) {
  if (config.trials < 0) throw std::invalid_argument("trials must be >= 0");
  if (config.solvers.empty()) throw std::invalid_argument("no solvers requested");
  const std::size_t n_snr = config.snr_db.size();
  const auto n_trials = static_cast<std::size_t>(config.trials);
  const std::size_t n_solvers = config.solvers.size();
  const int w = static_cast<int>(config.templ.rows());

  BenchmarkResult result;
  result.records.resize(n_snr * n_trials * n_solvers);

  SolveOptions solve_options;
  solve_options.time_limit_seconds = config.time_limit_seconds;

  ParallelFor(n_snr * n_trials, config.threads, [&](std::size_t cell) {
    const std::size_t s = cell / n_trials;
    const std::size_t t = cell % n_trials;
    const std::uint64_t seed = DeriveSeed(config.base_seed, {s, t});

    TrialRecord base;
    base.snr_index = s;
    base.snr_db = config.snr_db[s];
    base.trial = static_cast<int>(t);
    base.seed = seed;
    base.k_true = config.k;

    std::optional<SimInstance> inst;
    std::optional<SortedBids> bids;
    std::string setup_error;
    try {
      SimSpec spec;
      spec.n_rows = config.n_rows;
      spec.n_cols = config.n_cols;
      spec.templ = config.templ;
      spec.k = config.k;
      spec.separation = config.separation;
      spec.snr_db = config.snr_db[s];
      spec.rng_seed = seed;
      spec.require_tight_pair = config.tight_pair;
      inst = Generate(spec);
      base.truth = inst->true_locations;
      bids = SortBids(Correlate(inst->noisy, config.templ), w);
    } catch (const std::exception& e) {
      setup_error = e.what();
    }

    for (std::size_t j = 0; j < n_solvers; ++j) {
      TrialRecord rec = base;
      rec.solver = config.solvers[j];
      rec.k_input = config.k;
      if (!inst || !bids) {
        rec.error = setup_error;
        result.records[cell * n_solvers + j] = std::move(rec);
        continue;
      }
      try {
        if (config.k_mode == KMode::kGapEstimate) {
          const bool greedy = rec.solver == SolverKind::kGreedy;
          GapOptions gap;
          gap.k_max = config.k_max > 0
                          ? config.k_max
                          : DefaultKMax(inst->noisy.rows(), inst->noisy.cols(),
                                        config.templ.rows());
          gap.reps = config.null_reps;
          gap.seed = DeriveSeed(seed, {1});
          gap.observed_solver = greedy ? RevenueSolver::kGreedy : RevenueSolver::kExact;
          gap.null_solver = greedy ? RevenueSolver::kGreedy : config.null_solver;
          gap.solve = solve_options;
          const auto start = Clock::now();
          const GapProfile profile = EstimateK(inst->noisy, config.templ, gap);
          rec.estimate_seconds = SecondsSince(start);
          rec.k_hat = profile.k_hat;
          rec.k_input = profile.k_hat;
        }
        const SolveReport report = RunSolver(rec.solver, *bids, rec.k_input, solve_options);
        rec.detections = report.allocation.locations();
        rec.objective = report.objective;
        rec.nodes_explored = report.nodes_explored;
        rec.solve_seconds = report.wall_time;
        const MatchResult match = MatchDetections(rec.truth, rec.detections, w);
        rec.scores = Score(match, rec.detections.size(), rec.truth.size());
      } catch (const std::exception& e) {
        rec.error = e.what();
      }
      result.records[cell * n_solvers + j] = std::move(rec);
    }
  });

  result.rows = Aggregate(config, result.records);
  return result;
}

std::vector<AggregateRow> Aggregate(const BenchmarkConfig& config,
                                    std::span<const TrialRecord> records) {
  std::vector<AggregateRow> rows;
  if (config.trials <= 0) return rows;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (SolverKind solver : config.solvers) {
    for (std::size_t s = 0; s < config.snr_db.size(); ++s) {
      AggregateRow row;
      row.solver = solver;
      row.snr_db = config.snr_db[s];
      double f1 = 0, precision = 0, tpr = 0, nodes = 0, seconds = 0;
      int k_hits = 0;
      for (const TrialRecord& r : records) {
        if (r.solver != solver || r.snr_index != s || r.error) continue;
        ++row.trials;
        f1 += r.scores.f1;
        precision += r.scores.precision;
        tpr += r.scores.tpr;
        nodes += static_cast<double>(r.nodes_explored);
        seconds += r.solve_seconds + r.estimate_seconds;
        if (r.k_hat && *r.k_hat == r.k_true) ++k_hits;
      }
      const double n = row.trials > 0 ? static_cast<double>(row.trials) : nan;
      row.mean_f1 = f1 / n;
      row.mean_precision = precision / n;
      row.mean_tpr = tpr / n;
      row.mean_nodes = nodes / n;
      row.mean_seconds = seconds / n;
      if (config.k_mode == KMode::kGapEstimate) row.k_accuracy = k_hits / n;
      rows.push_back(row);
    }
  }
  return rows;
}

void WriteAggregateCsv(std::ostream& out, std::span<const AggregateRow> rows) {
  out << kAggregateCsvHeader << '\n';
  for (const AggregateRow& r : rows) {
    out << SolverName(r.solver) << ',' << FormatNumber(r.snr_db) << ',' << r.trials
        << ',' << FormatNumber(r.mean_f1) << ',' << FormatNumber(r.mean_precision)
        << ',' << FormatNumber(r.mean_tpr) << ','
        << (r.k_accuracy ? FormatNumber(*r.k_accuracy) : std::string()) << ','
        << FormatNumber(r.mean_nodes) << ',' << FormatNumber(r.mean_seconds) << '\n';
  }
}

void WriteTrialJsonl(std::ostream& out, std::span<const TrialRecord> records) {
  for (const TrialRecord& r : records) {
    nlohmann::ordered_json j;
    j["snr_index"] = r.snr_index;
    j["snr_db"] = r.snr_db;
    j["trial"] = r.trial;
    j["seed"] = r.seed;
    j["solver"] = SolverName(r.solver);
    j["k_true"] = r.k_true;
    j["k_input"] = r.k_input;
    j["k_hat"] = r.k_hat ? nlohmann::ordered_json(*r.k_hat) : nlohmann::ordered_json();
    j["truth"] = LocationsJson(r.truth);
    j["detections"] = LocationsJson(r.detections);
    j["objective"] = r.error ? nlohmann::ordered_json() : nlohmann::ordered_json(r.objective);
    j["precision"] = r.scores.precision;
    j["tpr"] = r.scores.tpr;
    j["f1"] = r.scores.f1;
    j["nodes_explored"] = r.nodes_explored;
    j["solve_seconds"] = r.solve_seconds;
    j["estimate_seconds"] = r.estimate_seconds;
    j["error"] = r.error ? nlohmann::ordered_json(*r.error) : nlohmann::ordered_json();
    out << j.dump() << '\n';
  }
}

}  // namespace auctiondet
