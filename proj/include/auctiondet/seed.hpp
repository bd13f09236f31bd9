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

#ifndef AUCTIONDET_SEED_HPP_
#define AUCTIONDET_SEED_HPP_

#include <cstdint>
#include <initializer_list>

namespace auctiondet {

inline std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Child seed for a position in a tree of random streams, e.g.
// DeriveSeed(base, {snr_index, trial_index}). Independent of evaluation order.
inline std::uint64_t DeriveSeed(std::uint64_t base,
                                std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = SplitMix64(base);
  for (std::uint64_t p : path) s = SplitMix64(s ^ SplitMix64(p + 1));
  return s;
}

}  // namespace auctiondet

#endif  // AUCTIONDET_SEED_HPP_
