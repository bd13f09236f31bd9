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

#include "auctiondet/geometry.hpp"

namespace auctiondet {

bool PairwiseSeparated(std::span<const Location> locs, int min_distance) {
  for (std::size_t i = 0; i < locs.size(); ++i) {
    for (std::size_t j = i + 1; j < locs.size(); ++j) {
      if (Chebyshev(locs[i], locs[j]) < min_distance) return false;
    }
  }
  return true;
}

int MinPairwiseChebyshev(std::span<const Location> locs) {
  int best = -1;
  for (std::size_t i = 0; i < locs.size(); ++i) {
    for (std::size_t j = i + 1; j < locs.size(); ++j) {
      const int d = Chebyshev(locs[i], locs[j]);
      if (best < 0 || d < best) best = d;
    }
  }
  return best;
}

}  // namespace auctiondet
