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

#include "auctiondet/templates.hpp"

#include <cmath>

namespace auctiondet {

Grid MakeDiskTemplate(std::size_t w, double radius, double inside,
                      double outside) {
  if (w == 0) throw DimensionError("template width must be positive");
  if (!(radius >= 0.0)) throw std::invalid_argument("radius must be >= 0");
  Grid g(w, w, outside);
  const double center = static_cast<double>(w) / 2.0;
  for (std::size_t u = 0; u < w; ++u) {
    for (std::size_t v = 0; v < w; ++v) {
      const double du = static_cast<double>(u) + 0.5 - center;
      const double dv = static_cast<double>(v) + 0.5 - center;
      if (std::hypot(du, dv) <= radius) g(u, v) = inside;
    }
  }
  return g;
}

Grid MakeSquareTemplate(std::size_t w) { return Grid(w, w, 1.0); }

}  // namespace auctiondet
