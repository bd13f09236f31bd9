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

#ifndef AUCTIONDET_GEOMETRY_HPP_
#define AUCTIONDET_GEOMETRY_HPP_

#include <compare>
#include <cstdlib>
#include <span>

namespace auctiondet {

// Upper-left corner of a template placement, 0-based (row n, column m).
struct Location {
  int n = 0;
  int m = 0;

  friend auto operator<=>(const Location&, const Location&) = default;
};

inline int Chebyshev(Location a, Location b) {
  const int dn = std::abs(a.n - b.n);
  const int dm = std::abs(a.m - b.m);
  return dn > dm ? dn : dm;
}

// True iff the w x w squares anchored at a and b share at least one pixel.
inline bool Conflicts(Location a, Location b, int w) {
  return Chebyshev(a, b) < w;
}

// Every pair in `locs` is at Chebyshev distance >= min_distance.
bool PairwiseSeparated(std::span<const Location> locs, int min_distance);

// Smallest pairwise Chebyshev distance; -1 when fewer than two locations.
int MinPairwiseChebyshev(std::span<const Location> locs);

}  // namespace auctiondet

#endif  // AUCTIONDET_GEOMETRY_HPP_
