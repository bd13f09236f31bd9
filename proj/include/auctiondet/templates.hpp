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

#ifndef AUCTIONDET_TEMPLATES_HPP_
#define AUCTIONDET_TEMPLATES_HPP_

#include <cstddef>

#include "auctiondet/grid.hpp"

namespace auctiondet {

// w x w grid whose cell (u, v) takes `inside` when the cell center
// (u + 0.5, v + 0.5) lies within `radius` of the grid center (w/2, w/2).
Grid MakeDiskTemplate(std::size_t w, double radius, double inside = 1.0,
                      double outside = 0.0);

// w x w grid of ones.
Grid MakeSquareTemplate(std::size_t w);

}  // namespace auctiondet

#endif  // AUCTIONDET_TEMPLATES_HPP_
