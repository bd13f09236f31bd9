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

#ifndef AUCTIONDET_SIM_HPP_
#define AUCTIONDET_SIM_HPP_

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "auctiondet/geometry.hpp"
#include "auctiondet/grid.hpp"

namespace auctiondet {

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Separation {
  kDense,          // Chebyshev distance >= W
  kWellSeparated,  // Chebyshev distance >= 2W
};

std::string_view SeparationName(Separation s);
// Accepts "dense", "well", "well_separated".
Separation ParseSeparation(std::string_view name);
int MinSeparation(Separation s, int w);

struct SimSpec {
  int n_rows = 40;
  int n_cols = 40;
  Grid templ;  // W x W
  int k = 1;
  Separation separation = Separation::kDense;
  // +infinity disables the noise.
  double snr_db = 0.0;
  std::uint64_t rng_seed = 0;
  // Dense mode only: regenerate until some pair sits at distance exactly W.
  bool require_tight_pair = false;
  std::uint64_t max_draws = 1'000'000;
};

struct SimInstance {
  Grid clean;
  Grid noisy;
  std::vector<Location> true_locations;
  double sigma = 0.0;
  SimSpec spec;
};

// Noise standard deviation for SNR[dB] = 10 log10(K W^2 / (sigma^2 N M)).
double SigmaForSnr(double snr_db, int k, int w, int n, int m);
double SnrDb(double sigma, int k, int w, int n, int m);

// Sequential rejection sampling of k anchors, superposition of the template,
// then i.i.d. Gaussian noise. Throws GenerationError when the draw budget is
// exhausted and std::invalid_argument for inconsistent specs.
SimInstance Generate(const SimSpec& spec);

// Writes clean.csv, noisy.csv and truth.json into `dir` (created if needed).
void WriteInstance(const std::filesystem::path& dir, const SimInstance& inst);

}  // namespace auctiondet

#endif  // AUCTIONDET_SIM_HPP_
