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

#include "auctiondet/sim.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <string>

#include "auctiondet/grid_io.hpp"
#include "json.hpp"

namespace auctiondet {
namespace {

void Validate(const SimSpec& spec) {
  if (spec.templ.empty() || spec.templ.rows() != spec.templ.cols()) {
    throw std::invalid_argument("template must be a non-empty square grid");
  }
  const int w = static_cast<int>(spec.templ.rows());
  if (spec.n_rows < w || spec.n_cols < w) {
    throw std::invalid_argument("template does not fit in the measurement");
  }
  if (spec.k < 1) throw std::invalid_argument("k must be >= 1");
  if (static_cast<long long>(spec.k) * w * w >
      static_cast<long long>(spec.n_rows) * spec.n_cols) {
    throw std::invalid_argument("k * W^2 exceeds the measurement area");
  }
  if (std::isnan(spec.snr_db)) throw std::invalid_argument("snr_db is NaN");
  if (spec.require_tight_pair && spec.separation == Separation::kDense &&
      spec.k < 2) {
    throw std::invalid_argument("a tight pair needs k >= 2");
  }
}

}  // namespace

std::string_view SeparationName(Separation s) {
  return s == Separation::kDense ? "dense" : "well_separated";
}

Separation ParseSeparation(std::string_view name) {
  if (name == "dense") return Separation::kDense;
  if (name == "well" || name == "well_separated") return Separation::kWellSeparated;
  throw std::invalid_argument("unknown separation '" + std::string(name) + "'");
}

int MinSeparation(Separation s, int w) {
  return s == Separation::kDense ? w : 2 * w;
}

double SigmaForSnr(double snr_db, int k, int w, int n, int m) {
  if (k < 1 || w < 1 || n < 1 || m < 1) {
    throw std::invalid_argument("SNR counts must be positive");
  }
  const double signal = static_cast<double>(k) * w * w;
  const double area = static_cast<double>(n) * m;
  return std::sqrt(signal / (area * std::pow(10.0, snr_db / 10.0)));
}

double SnrDb(double sigma, int k, int w, int n, int m) {
  if (k < 1 || w < 1 || n < 1 || m < 1) {
    throw std::invalid_argument("SNR counts must be positive");
  }
  const double signal = static_cast<double>(k) * w * w;
  const double area = static_cast<double>(n) * m;
  return 10.0 * std::log10(signal / (sigma * sigma * area));
}

SimInstance Generate(const SimSpec& spec) {
  Validate(spec);
  const int w = static_cast<int>(spec.templ.rows());
  const int min_sep = MinSeparation(spec.separation, w);
  const bool want_tight =
      spec.require_tight_pair && spec.separation == Separation::kDense;

  std::mt19937_64 rng(spec.rng_seed);
  std::uniform_int_distribution<int> row_dist(0, spec.n_rows - w);
  std::uniform_int_distribution<int> col_dist(0, spec.n_cols - w);

  std::vector<Location> locs;
  std::uint64_t draws = 0;
  while (true) {
    locs.clear();
    while (static_cast<int>(locs.size()) < spec.k) {
      if (++draws > spec.max_draws) {
        throw GenerationError("placement budget of " +
                              std::to_string(spec.max_draws) +
                              " draws exhausted; placement density too high");
      }
      const Location cand{row_dist(rng), col_dist(rng)};
      bool ok = true;
      for (const Location& l : locs) {
        if (Chebyshev(l, cand) < min_sep) {
          ok = false;
          break;
        }
      }
      if (ok) locs.push_back(cand);
    }
    if (!want_tight || MinPairwiseChebyshev(locs) == w) break;
  }

  SimInstance inst;
  inst.spec = spec;
  inst.true_locations = locs;
  inst.clean = Grid(static_cast<std::size_t>(spec.n_rows),
                    static_cast<std::size_t>(spec.n_cols));
  for (const Location& l : locs) {
    for (int u = 0; u < w; ++u) {
      for (int v = 0; v < w; ++v) {
        inst.clean(static_cast<std::size_t>(l.n + u),
                   static_cast<std::size_t>(l.m + v)) +=
            spec.templ(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
      }
    }
  }
  inst.sigma = SigmaForSnr(spec.snr_db, spec.k, w, spec.n_rows, spec.n_cols);
  inst.noisy = inst.clean;
  if (inst.sigma > 0.0) {
    std::normal_distribution<double> noise(0.0, inst.sigma);
    for (double& v : inst.noisy.values()) v += noise(rng);
  }
  return inst;
}

void WriteInstance(const std::filesystem::path& dir, const SimInstance& inst) {
  std::filesystem::create_directories(dir);
  WriteGridCsv(dir / "clean.csv", inst.clean);
  WriteGridCsv(dir / "noisy.csv", inst.noisy);

  nlohmann::ordered_json truth;
  truth["n_rows"] = inst.spec.n_rows;
  truth["n_cols"] = inst.spec.n_cols;
  truth["w"] = inst.spec.templ.rows();
  truth["k"] = inst.spec.k;
  truth["separation"] = SeparationName(inst.spec.separation);
  truth["snr_db"] = inst.spec.snr_db;  // +inf serializes as null
  truth["rng_seed"] = inst.spec.rng_seed;
  truth["tight_pair"] = inst.spec.require_tight_pair;
  truth["sigma"] = inst.sigma;
  auto& locations = truth["locations"] = nlohmann::ordered_json::array();
  for (const Location& l : inst.true_locations) locations.push_back({l.n, l.m});

  std::ofstream out(dir / "truth.json", std::ios::binary);
  if (!out) throw std::runtime_error("cannot write truth.json in " + dir.string());
  out << truth.dump(2) << '\n';
}

}  // namespace auctiondet
