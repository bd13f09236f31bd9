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

#ifndef AUCTIONDET_GRID_HPP_
#define AUCTIONDET_GRID_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace auctiondet {

// Thrown when grid shapes are incompatible with an operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Dense row-major 2D array of finite doubles. Holds measurements, templates
// and correlation (price) maps alike.
class Grid {
 public:
  Grid() = default;

  // Zero-filled rows x cols grid. Both extents must be positive.
  Grid(std::size_t rows, std::size_t cols, double fill = 0.0);

  // Takes ownership of `values`, which must hold rows * cols finite numbers.
  Grid(std::size_t rows, std::size_t cols, std::vector<double> values);

  // Convenience for tests and small literals: {{1, 2}, {3, 4}}.
  static Grid FromRows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  double operator()(std::size_t r, std::size_t c) const {
    return values_[r * cols_ + c];
  }
  double& operator()(std::size_t r, std::size_t c) {
    return values_[r * cols_ + c];
  }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(values_).subspan(r * cols_, cols_);
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

// Sum of squared entries, <g, g>.
double Energy(const Grid& g);

}  // namespace auctiondet

#endif  // AUCTIONDET_GRID_HPP_
