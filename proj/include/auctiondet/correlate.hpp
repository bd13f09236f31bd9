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

#ifndef AUCTIONDET_CORRELATE_HPP_
#define AUCTIONDET_CORRELATE_HPP_

#include <cstddef>

#include "auctiondet/grid.hpp"

namespace auctiondet {

enum class CorrelationMethod {
  kAuto,    // direct for small templates, FFT otherwise
  kDirect,  // explicit W*W summation per output cell
  kFft,     // zero-padded real FFT product
};

// Templates up to this width use direct summation under kAuto.
inline constexpr std::size_t kDirectCorrelationMaxWidth = 8;

// Valid-mode cross-correlation: out(i, j) = sum_{u,v} y(i+u, j+v) * s(u, v),
// with output extent (y.rows - W + 1) x (y.cols - W + 1). The template must be
// square and no larger than the measurement in either dimension.
Grid Correlate(const Grid& measurement, const Grid& templ,
               CorrelationMethod method = CorrelationMethod::kAuto);

}  // namespace auctiondet

#endif  // AUCTIONDET_CORRELATE_HPP_
