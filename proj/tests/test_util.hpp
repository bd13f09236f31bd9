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

// Shared helpers for the unit and acceptance suites.
#ifndef AUCTIONDET_TESTS_TEST_UTIL_HPP_
#define AUCTIONDET_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "auctiondet/cli.hpp"
#include "auctiondet/grid.hpp"

namespace auctiondet::testing {

inline Grid RandomGrid(std::size_t rows, std::size_t cols, std::uint64_t seed,
                       double stddev = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, stddev);
  std::vector<double> v(rows * cols);
  for (double& x : v) x = dist(rng);
  return Grid(rows, cols, std::move(v));
}

// max |a - b| / max |reference|, both grids the same shape.
inline double RelativeError(const Grid& a, const Grid& reference) {
  double diff = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff = std::max(diff, std::abs(a.values()[i] - reference.values()[i]));
    scale = std::max(scale, std::abs(reference.values()[i]));
  }
  return scale > 0.0 ? diff / scale : diff;
}

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

inline CliRun RunCommand(std::initializer_list<std::string> args) {
  std::vector<std::string> argv{"auctiondet"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(argv, out, err);
  return {code, out.str(), err.str()};
}

inline std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Fresh empty scratch directory under the system temp dir.
inline std::filesystem::path ScratchDir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("auctiondet_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace auctiondet::testing

#endif  // AUCTIONDET_TESTS_TEST_UTIL_HPP_
