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

#include "auctiondet/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "auctiondet/correlate.hpp"
#include "auctiondet/eval.hpp"
#include "auctiondet/grid_io.hpp"
#include "auctiondet/select.hpp"
#include "auctiondet/sim.hpp"
#include "auctiondet/solver.hpp"
#include "auctiondet/templates.hpp"
#include "json.hpp"

namespace auctiondet {
namespace {

using Json = nlohmann::ordered_json;

// Raised for flag combinations CLI11 cannot express; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double ParseReal(const std::string& text, const char* flag) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": not a number: '" + text + "'");
  }
}

RevenueSolver ParseRevenueSolver(const std::string& name) {
  if (name == "exact") return RevenueSolver::kExact;
  if (name == "greedy") return RevenueSolver::kGreedy;
  throw UsageError("unknown null solver '" + name + "'");
}

Json LocationsJson(const std::vector<Location>& locs) {
  auto arr = Json::array();
  for (const Location& l : locs) arr.push_back({l.n, l.m});
  return arr;
}

std::string FormatNumber(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Template from --template FILE, else an all-ones square of side --w.
Grid LoadTemplate(const std::string& path, int w) {
  if (!path.empty()) return ReadGridCsv(std::filesystem::path(path));
  if (w < 1) throw UsageError("either --template FILE or --w >= 1 is required");
  return MakeSquareTemplate(static_cast<std::size_t>(w));
}

struct SimulateArgs {
  int rows = 40;
  int cols = 40;
  int w = 3;
  std::string template_path;
  int k = 0;
  std::string snr_db;
  std::string separation = "dense";
  bool tight_pair = false;
  std::uint64_t seed = 0;
  std::string out_dir;
};

struct DetectArgs {
  std::string measurement;
  std::string template_path;
  std::optional<int> k;
  bool estimate_k = false;
  int k_max = 0;
  int null_reps = 50;
  std::string null_solver = "exact";
  std::string solver = "exact";
  std::uint64_t seed = 0;
  double time_limit = 0.0;
  std::uint64_t budget = kDefaultEnumerationBudget;
  unsigned threads = 1;
};

struct EstimateArgs {
  std::string measurement;
  std::string template_path;
  int k_max = 0;
  int null_reps = 50;
  std::string null_solver = "exact";
  std::uint64_t seed = 0;
  double time_limit = 0.0;
  unsigned threads = 1;
};

struct BenchArgs {
  std::vector<std::string> snr_list;
  int trials = 100;
  std::string k_mode = "known";
  std::vector<std::string> solvers{"exact", "greedy"};
  int rows = 40;
  int cols = 40;
  int w = 3;
  std::string template_path;
  int k = 4;
  std::string separation = "dense";
  bool tight_pair = false;
  std::uint64_t seed = 0;
  std::string out_dir;
  int k_max = 0;
  int null_reps = 50;
  std::string null_solver = "exact";
  double time_limit = 0.0;
  unsigned threads = 1;
};

struct TemplateArgs {
  int w = 0;
  double radius = 0.0;
  double inside = 1.0;
  double outside = 0.0;
  std::string out;
};

struct OracleArgs {
  std::string measurement;
  std::string template_path;
  int k = 0;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

int CmdSimulate(const SimulateArgs& a, std::ostream& out) {
  SimSpec spec;
  spec.n_rows = a.rows;
  spec.n_cols = a.cols;
  spec.templ = LoadTemplate(a.template_path, a.w);
  spec.k = a.k;
  spec.separation = ParseSeparation(a.separation);
  spec.snr_db = ParseReal(a.snr_db, "--snr-db");
  spec.rng_seed = a.seed;
  spec.require_tight_pair = a.tight_pair;
  const SimInstance inst = Generate(spec);
  WriteInstance(a.out_dir, inst);
  out << FormatNumber(inst.sigma) << '\n';
  return kExitOk;
}

int CmdDetect(const DetectArgs& a, std::ostream& out) {
  if (a.k.has_value() == a.estimate_k) {
    throw UsageError("exactly one of --k or --estimate-k is required");
  }
  const Grid y = ReadGridCsv(std::filesystem::path(a.measurement));
  const Grid s = ReadGridCsv(std::filesystem::path(a.template_path));
  const SolverKind solver = ParseSolverKind(a.solver);
  SolveOptions options;
  options.time_limit_seconds = a.time_limit;

  std::optional<int> k_hat;
  int k = a.k.value_or(0);
  if (a.estimate_k) {
    GapOptions gap;
    gap.k_max = a.k_max > 0 ? a.k_max : DefaultKMax(y.rows(), y.cols(), s.rows());
    gap.reps = a.null_reps;
    gap.seed = a.seed;
    gap.null_solver = ParseRevenueSolver(a.null_solver);
    gap.solve = options;
    gap.threads = a.threads;
    k_hat = EstimateK(y, s, gap).k_hat;
    k = *k_hat;
  }

  const SortedBids bids = SortBids(Correlate(y, s), static_cast<int>(s.rows()));
  const SolveReport report = solver == SolverKind::kBrute
                                 ? BruteForceSolve(bids, k, a.budget)
                                 : RunSolver(solver, bids, k, options);
  Json j;
  j["locations"] = LocationsJson(report.allocation.locations());
  j["objective"] = report.objective;
  j["solver"] = SolverName(solver);
  j["k"] = k;
  j["k_hat"] = k_hat ? Json(*k_hat) : Json();
  j["nodes_explored"] = report.nodes_explored;
  j["prunes_bound"] = report.prunes_bound;
  j["prunes_feasibility"] = report.prunes_feasibility;
  j["seconds"] = report.wall_time;
  out << j.dump(2) << '\n';
  return kExitOk;
}

int CmdEstimate(const EstimateArgs& a, std::ostream& out) {
  const Grid y = ReadGridCsv(std::filesystem::path(a.measurement));
  const Grid s = ReadGridCsv(std::filesystem::path(a.template_path));
  GapOptions gap;
  gap.k_max = a.k_max > 0 ? a.k_max : DefaultKMax(y.rows(), y.cols(), s.rows());
  gap.reps = a.null_reps;
  gap.seed = a.seed;
  gap.null_solver = ParseRevenueSolver(a.null_solver);
  gap.solve.time_limit_seconds = a.time_limit;
  gap.threads = a.threads;
  const GapProfile p = EstimateK(y, s, gap);
  Json j;
  j["k_hat"] = p.k_hat;
  j["k_values"] = p.k_values;
  j["observed_revenue"] = p.observed_revenue;
  j["null_mean"] = p.null_mean;
  j["gap"] = p.gap;
  j["warnings"] = p.warnings;
  out << j.dump(2) << '\n';
  return kExitOk;
}

int CmdBench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  BenchmarkConfig config;
  for (const std::string& v : a.snr_list) config.snr_db.push_back(ParseReal(v, "--snr-list"));
  config.trials = a.trials;
  config.n_rows = a.rows;
  config.n_cols = a.cols;
  config.templ = LoadTemplate(a.template_path, a.w);
  config.k = a.k;
  config.separation = ParseSeparation(a.separation);
  config.tight_pair = a.tight_pair;
  config.solvers.clear();
  for (const std::string& s : a.solvers) config.solvers.push_back(ParseSolverKind(s));
  if (a.k_mode == "known") {
    config.k_mode = KMode::kKnown;
  } else if (a.k_mode == "gap") {
    config.k_mode = KMode::kGapEstimate;
  } else {
    throw UsageError("--k-mode must be 'known' or 'gap'");
  }
  config.base_seed = a.seed;
  config.k_max = a.k_max;
  config.null_reps = a.null_reps;
  config.null_solver = ParseRevenueSolver(a.null_solver);
  config.time_limit_seconds = a.time_limit;
  config.threads = a.threads;

  const BenchmarkResult result = RunBenchmark(config);

  const std::filesystem::path dir(a.out_dir);
  std::filesystem::create_directories(dir);
  {
    std::ofstream csv(dir / "summary.csv", std::ios::binary);
    WriteAggregateCsv(csv, result.rows);
    std::ofstream jsonl(dir / "trials.jsonl", std::ios::binary);
    WriteTrialJsonl(jsonl, result.records);
    if (!csv || !jsonl) throw std::runtime_error("cannot write outputs in " + dir.string());
  }

  std::size_t failed = 0;
  for (const TrialRecord& r : result.records) {
    if (r.error) {
      ++failed;
      err << "trial " << r.trial << " snr=" << FormatNumber(r.snr_db) << " "
          << SolverName(r.solver) << " failed: " << *r.error << '\n';
    }
  }
  for (const AggregateRow& row : result.rows) {
    out << SolverName(row.solver) << " snr_db=" << FormatNumber(row.snr_db)
        << " trials=" << row.trials << " mean_f1=" << FormatNumber(row.mean_f1);
    if (row.k_accuracy) out << " k_accuracy=" << FormatNumber(*row.k_accuracy);
    out << '\n';
  }
  if (!result.records.empty() && failed == result.records.size()) {
    err << "every trial failed\n";
    return kExitFailure;
  }
  return kExitOk;
}

int CmdTemplate(const TemplateArgs& a, std::ostream& out) {
  const Grid g = MakeDiskTemplate(static_cast<std::size_t>(a.w), a.radius,
                                  a.inside, a.outside);
  if (a.out.empty()) {
    WriteGridCsv(out, g);
  } else {
    WriteGridCsv(std::filesystem::path(a.out), g);
  }
  return kExitOk;
}

int CmdOracle(const OracleArgs& a, std::ostream& out, std::ostream& err) {
  const Grid y = ReadGridCsv(std::filesystem::path(a.measurement));
  const Grid s = ReadGridCsv(std::filesystem::path(a.template_path));
  const SortedBids bids = SortBids(Correlate(y, s), static_cast<int>(s.rows()));
  const SolveReport exact = WdpSolve(bids, a.k);
  const SolveReport brute = BruteForceSolve(bids, a.k, a.budget);
  const bool agree = exact.objective == brute.objective;
  Json j;
  j["k"] = a.k;
  j["exact_objective"] = exact.objective;
  j["brute_objective"] = brute.objective;
  j["exact_locations"] = LocationsJson(exact.allocation.locations());
  j["brute_locations"] = LocationsJson(brute.allocation.locations());
  j["agree"] = agree;
  out << j.dump(2) << '\n';
  if (!agree) {
    err << "exact and brute-force objectives differ\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact detection of non-overlapping template occurrences"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Generate a synthetic measurement");
  simulate->add_option("--rows", sim.rows, "Measurement rows N")->check(CLI::PositiveNumber);
  simulate->add_option("--cols", sim.cols, "Measurement columns M")->check(CLI::PositiveNumber);
  simulate->add_option("--w", sim.w, "All-ones template width W")->check(CLI::PositiveNumber);
  simulate->add_option("--template", sim.template_path, "Template CSV (overrides --w)");
  simulate->add_option("--k", sim.k, "Number of occurrences")->required()->check(CLI::PositiveNumber);
  simulate->add_option("--snr-db", sim.snr_db, "SNR in dB ('inf' for no noise)")->required();
  simulate->add_option("--separation", sim.separation, "dense | well")
      ->check(CLI::IsMember({"dense", "well", "well_separated"}));
  simulate->add_flag("--tight-pair", sim.tight_pair, "Force a pair at distance exactly W");
  simulate->add_option("--seed", sim.seed, "RNG seed");
  simulate->add_option("--out", sim.out_dir, "Output directory")->required();

  DetectArgs det;
  std::optional<int> det_k;
  auto* detect = app.add_subcommand("detect", "Locate template occurrences");
  detect->add_option("--measurement", det.measurement, "Measurement CSV")->required();
  detect->add_option("--template", det.template_path, "Template CSV")->required();
  auto* k_opt = detect->add_option("--k", det_k, "Number of occurrences")
                    ->check(CLI::PositiveNumber);
  auto* est_flag = detect->add_flag("--estimate-k", det.estimate_k,
                                    "Estimate K with the gap statistic");
  k_opt->excludes(est_flag);
  detect->add_option("--k-max", det.k_max, "Largest K considered (default: packing cap)");
  detect->add_option("--null-reps", det.null_reps, "Null permutations R")->check(CLI::PositiveNumber);
  detect->add_option("--null-solver", det.null_solver, "exact | greedy")
      ->check(CLI::IsMember({"exact", "greedy"}));
  detect->add_option("--solver", det.solver, "exact | greedy | brute")
      ->check(CLI::IsMember({"exact", "greedy", "brute"}));
  detect->add_option("--seed", det.seed, "RNG seed for the null permutations");
  detect->add_option("--time-limit", det.time_limit, "Seconds per exact solve (0 = none)");
  detect->add_option("--budget", det.budget, "Subset budget for --solver brute");
  detect->add_option("--threads", det.threads, "Worker threads for null permutations");

  EstimateArgs est;
  auto* estimate = app.add_subcommand("estimate-k", "Gap-statistic estimate of K");
  estimate->add_option("--measurement", est.measurement, "Measurement CSV")->required();
  estimate->add_option("--template", est.template_path, "Template CSV")->required();
  estimate->add_option("--k-max", est.k_max, "Largest K considered");
  estimate->add_option("--null-reps", est.null_reps, "Null permutations R")->check(CLI::PositiveNumber);
  estimate->add_option("--null-solver", est.null_solver, "exact | greedy")
      ->check(CLI::IsMember({"exact", "greedy"}));
  estimate->add_option("--seed", est.seed, "RNG seed");
  estimate->add_option("--time-limit", est.time_limit, "Seconds per exact solve (0 = none)");
  estimate->add_option("--threads", est.threads, "Worker threads");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "F1-vs-SNR benchmark sweep");
  bench_cmd->add_option("--snr-list", bench.snr_list, "Comma-separated SNR values (dB)")
      ->required()->delimiter(',');
  bench_cmd->add_option("--trials", bench.trials, "Trials per SNR")->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--k-mode", bench.k_mode, "known | gap")
      ->check(CLI::IsMember({"known", "gap"}));
  bench_cmd->add_option("--solvers", bench.solvers, "Comma-separated solvers")->delimiter(',');
  bench_cmd->add_option("--rows", bench.rows, "Measurement rows N")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--cols", bench.cols, "Measurement columns M")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--w", bench.w, "All-ones template width W")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--template", bench.template_path, "Template CSV (overrides --w)");
  bench_cmd->add_option("--k", bench.k, "Number of occurrences")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--separation", bench.separation, "dense | well")
      ->check(CLI::IsMember({"dense", "well", "well_separated"}));
  bench_cmd->add_flag("--tight-pair", bench.tight_pair, "Force a pair at distance exactly W");
  bench_cmd->add_option("--seed", bench.seed, "Base RNG seed");
  bench_cmd->add_option("--out", bench.out_dir, "Output directory")->required();
  bench_cmd->add_option("--k-max", bench.k_max, "Largest K for gap mode");
  bench_cmd->add_option("--null-reps", bench.null_reps, "Null permutations R")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--null-solver", bench.null_solver, "exact | greedy")
      ->check(CLI::IsMember({"exact", "greedy"}));
  bench_cmd->add_option("--time-limit", bench.time_limit, "Seconds per solve (0 = none)");
  bench_cmd->add_option("--threads", bench.threads, "Worker threads (0 = all cores)");

  TemplateArgs tmpl;
  auto* template_cmd = app.add_subcommand("template", "Write a disk template as CSV");
  template_cmd->add_option("--w", tmpl.w, "Side length")->required()->check(CLI::PositiveNumber);
  template_cmd->add_option("--radius", tmpl.radius, "Disk radius in pixels")
      ->required()->check(CLI::NonNegativeNumber);
  template_cmd->add_option("--inside", tmpl.inside, "Value inside the disk");
  template_cmd->add_option("--outside", tmpl.outside, "Value outside the disk");
  template_cmd->add_option("--out", tmpl.out, "Output CSV (default: stdout)");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle-check",
                                        "Compare branch and bound with brute force");
  oracle_cmd->add_option("--measurement", oracle.measurement, "Measurement CSV")->required();
  oracle_cmd->add_option("--template", oracle.template_path, "Template CSV")->required();
  oracle_cmd->add_option("--k", oracle.k, "Number of occurrences")
      ->required()->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--budget", oracle.budget, "Subset budget");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  det.k = det_k;

  try {
    if (*simulate) return CmdSimulate(sim, out);
    if (*detect) return CmdDetect(det, out);
    if (*estimate) return CmdEstimate(est, out);
    if (*bench_cmd) return CmdBench(bench, out, err);
    if (*template_cmd) return CmdTemplate(tmpl, out);
    if (*oracle_cmd) return CmdOracle(oracle, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace auctiondet
