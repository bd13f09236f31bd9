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

#include "auctiondet/grid.hpp"

#include <cmath>
#include <numeric>
#include <utility>

namespace auctiondet {
namespace {

void CheckShape(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("grid extents must be positive, got " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  }
}

}  // namespace

Grid::Grid(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols) {
  CheckShape(rows, cols);
  if (!std::isfinite(fill)) throw std::invalid_argument("non-finite fill value");
  values_.assign(rows * cols, fill);
}

Grid::Grid(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  CheckShape(rows, cols);
  if (values_.size() != rows * cols) {
    throw DimensionError("grid expects " + std::to_string(rows * cols) +
                         " values, got " + std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite grid value");
  }
}

Grid Grid::FromRows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw DimensionError("grid needs at least one row");
  const std::size_t cols = rows.front().size();
  std::vector<double> values;
  values.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionError("ragged rows");
    values.insert(values.end(), r.begin(), r.end());
  }
  return Grid(rows.size(), cols, std::move(values));
}

double Energy(const Grid& g) {
  const auto v = g.values();
  return std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
}

}  // namespace auctiondet
