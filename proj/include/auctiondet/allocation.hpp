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

#ifndef AUCTIONDET_ALLOCATION_HPP_
#define AUCTIONDET_ALLOCATION_HPP_

#include <span>
#include <vector>

#include "auctiondet/geometry.hpp"

namespace auctiondet {

// A candidate placement and its price (the correlation score at `loc`).
struct Bid {
  Location loc;
  double price = 0.0;

  friend bool operator==(const Bid&, const Bid&) = default;
};

// Ordered set of mutually non-conflicting bids for template width W. The
// cached revenue is accumulated in insertion order, so two allocations built
// from the same bid sequence carry bit-identical revenues.
class Allocation {
 public:
  explicit Allocation(int template_width);

  // Throws std::invalid_argument if any pair of `bids` conflicts.
  Allocation(int template_width, std::span<const Bid> bids);

  // Throws std::invalid_argument if `bid` conflicts with a member.
  void Add(const Bid& bid);

  bool CanAdd(Location loc) const;

  const std::vector<Bid>& bids() const { return bids_; }
  std::vector<Location> locations() const;
  double revenue() const { return revenue_; }
  int template_width() const { return template_width_; }
  std::size_t size() const { return bids_.size(); }
  bool empty() const { return bids_.empty(); }

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  int template_width_;
  std::vector<Bid> bids_;
  double revenue_ = 0.0;
};

// Sum of member prices in list order.
double AllocationRevenue(const Allocation& a);

}  // namespace auctiondet

#endif  // AUCTIONDET_ALLOCATION_HPP_
