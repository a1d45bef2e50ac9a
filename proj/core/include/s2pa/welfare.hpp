// Copyright 2026 The s2pa-lab Authors
//
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

#pragma once

#include <cstdint>
#include <vector>

#include "s2pa/auction.hpp"
#include "s2pa/rational.hpp"

namespace s2pa {

struct OptOptions {
  /// Largest n^m the search accepts.
  std::uint64_t budget = 10'000'000;
  /// Threads over the first item's assignment; 1 runs inline.
  int workers = 1;
};

struct OptResult {
  Rational opt_value;
  /// Every welfare-maximizing allocation, ordered lexicographically by the
  /// item -> bidder assignment vector.
  std::vector<Allocation> maximizers;
  std::uint64_t explored = 0;
};

/// Depth-first assignment of items to bidders. Prunes with per-item marginal
/// bounds when every valuation is submodular, with singleton values when every
/// valuation is subadditive, and not at all otherwise.
OptResult optimal_allocations(const AuctionInstance& inst, OptOptions options = {});

/// SW(b) / OPT. Throws PreconditionError when OPT is 0.
Rational welfare_ratio(const AuctionInstance& inst, const BidProfile& b);
Rational welfare_ratio(const AuctionInstance& inst, const BidProfile& b, const Rational& opt);

/// n^m with saturation at UINT64_MAX.
std::uint64_t assignment_count(int bidders, int items);

}  // namespace s2pa
