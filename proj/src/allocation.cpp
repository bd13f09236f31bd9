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

#include "auctiondet/allocation.hpp"

#include <stdexcept>
#include <string>

namespace auctiondet {

Allocation::Allocation(int template_width) : template_width_(template_width) {
  if (template_width < 1) throw std::invalid_argument("template width < 1");
}

Allocation::Allocation(int template_width, std::span<const Bid> bids)
    : Allocation(template_width) {
  bids_.reserve(bids.size());
  for (const Bid& b : bids) Add(b);
}

bool Allocation::CanAdd(Location loc) const {
  for (const Bid& b : bids_) {
    if (Conflicts(b.loc, loc, template_width_)) return false;
  }
  return true;
}

void Allocation::Add(const Bid& bid) {
  if (!CanAdd(bid.loc)) {
    throw std::invalid_argument(
        "bid at (" + std::to_string(bid.loc.n) + "," +
        std::to_string(bid.loc.m) + ") overlaps the allocation");
  }
  bids_.push_back(bid);
  revenue_ += bid.price;
}

std::vector<Location> Allocation::locations() const {
  std::vector<Location> out;
  out.reserve(bids_.size());
  for (const Bid& b : bids_) out.push_back(b.loc);
  return out;
}

double AllocationRevenue(const Allocation& a) {
  double sum = 0.0;
  for (const Bid& b : a.bids()) sum += b.price;
  return sum;
}

}  // namespace auctiondet
