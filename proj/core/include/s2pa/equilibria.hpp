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
#include <optional>
#include <set>
#include <vector>

#include "s2pa/auction.hpp"
#include "s2pa/bid_properties.hpp"
#include "s2pa/distribution.hpp"
#include "s2pa/rational.hpp"

namespace s2pa {

/// The bids {0, step, 2·step, ...} up to and including `max`.
struct BidGrid {
  Rational step;
  Rational max;

  /// Throws InvalidArgument unless step > 0 and max >= 0.
  void validate() const;
  std::vector<Rational> points() const;
  std::size_t size() const;
  /// Largest grid point.
  Rational top() const;
  /// Smallest grid point >= x (strict = false) or > x (strict = true), if any.
  std::optional<Rational> round_up(const Rational& x, bool strict) const;
};

/// step = 1/4 of the smallest nonzero difference between bundle values,
/// max = the largest bundle value.
BidGrid default_grid(const AuctionInstance& inst);

struct BestResponse {
  Rational utility;
  BidRow bids;
  ItemSet target;  // the set the deviation wins
};

/// Exact best response of `bidder` to the other rows of `b` over the grid, by
/// enumerating the item sets it could win at the opponents' prices. Throws
/// GridError when the grid stops below v_i([m]) and PreconditionError for s1pa.
BestResponse best_response(const AuctionInstance& inst, int bidder, const BidProfile& b,
                           const BidGrid& grid);

struct Deviation {
  int bidder = 0;
  int type = -1;  // BNE only
  BidRow bids;
  Rational current;   // (expected) utility of the equilibrium play
  Rational improved;  // (expected) utility of the deviation
};

struct EquilibriumCheck {
  bool holds = true;
  std::optional<Deviation> deviation;
};

EquilibriumCheck verify_pne(const AuctionInstance& inst, const BidProfile& b, const BidGrid& grid);

struct DeviationBudget {
  /// Largest number of candidate rows tried per bidder (and type).
  std::uint64_t max_candidates = 1'000'000;
};

/// Coarse correlated equilibrium over a finite distribution of bid profiles.
/// Candidate deviations per item are 0 and the smallest grid bid winning the
/// item at each support point; their product covers every winning pattern.
EquilibriumCheck verify_cce(const AuctionInstance& inst, const ProfileDistribution& dist,
                            const BidGrid& grid, DeviationBudget budget = {});

/// Bayes-Nash equilibrium over a finite (possibly correlated) type
/// distribution, with mixed strategies allowed.
EquilibriumCheck verify_bne(const BayesianSetting& setting, const StrategyProfile& strategies,
                            const TypeDistribution& dist, const BidGrid& grid,
                            DeviationBudget budget = {});

struct XosPne {
  BidProfile bids;
  /// The optimal allocation the bids realize. It differs from the first
  /// maximizer only when a clause puts 0 on an item and the tie-break hands
  /// that item to another bidder; welfare is optimal either way.
  Allocation allocation;
};

/// Bids the maximizing clause of each bidder on its optimal bundle, 0 elsewhere.
/// Throws PreconditionError if a valuation has no supporting clause.
XosPne construct_xos_pne(const AuctionInstance& inst);

struct PneSearchOptions {
  std::set<Property> filters;
  /// Largest |grid|^(n·m) accepted.
  std::uint64_t budget = 50'000'000;
  int workers = 1;
};

struct FoundPne {
  BidProfile bids;
  Rational ratio;
};

struct PneSearchResult {
  std::vector<FoundPne> equilibria;  // sorted by bid profile
  std::optional<Rational> worst_ratio;
  Rational opt;
  std::uint64_t examined = 0;
};

/// Every grid profile passing the filters and the PNE test.
PneSearchResult enumerate_pne(const AuctionInstance& inst, const BidGrid& grid,
                              const PneSearchOptions& options = {});

struct Dynamics {
  std::vector<BidProfile> trajectory;  // starts with b0, one entry per improving step
  bool converged = false;
  int improving_steps = 0;
};

/// Bidders in `order` switch to a best response whenever it strictly improves
/// their utility. Stops after a full round without change or after max_rounds.
Dynamics best_response_dynamics(const AuctionInstance& inst, const BidProfile& b0,
                                 const std::vector<int>& order, int max_rounds,
                                 const BidGrid& grid);

}  // namespace s2pa
