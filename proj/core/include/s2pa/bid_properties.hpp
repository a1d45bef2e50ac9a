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

#include <optional>
#include <string>
#include <vector>

#include "s2pa/auction.hpp"
#include "s2pa/distribution.hpp"
#include "s2pa/rational.hpp"

namespace s2pa {

enum class Property { nob, strong_nob, inub, snub, snub_expected };

std::string to_string(Property p);
Property parse_property(const std::string& text);

/// One failed inequality: `actual` should have been >= `required` for the
/// underbidding properties, <= for the overbidding ones.
struct Violation {
  int bidder = 0;
  ItemSet items;
  Rational required;
  Rational actual;
  /// Index into the maximizer list the violation was measured against.
  std::optional<int> allocation;
  /// Type index (expected form only).
  std::optional<int> type;
};

struct PropertyReport {
  Property property = Property::nob;
  bool holds = true;
  /// The optimal allocation certifying an existential property.
  std::optional<Allocation> witness_allocation;
  std::optional<int> witness_index;
  /// Per-bidder witnesses (per-bidder mode only).
  std::vector<int> bidder_witnesses;
  std::vector<Violation> violations;
};

/// Weak: Σ_{j∈S_i(b)} b_ij <= v_i(S_i(b)) for every i. Strong: Σ_{j∈S} b_ij <= v_i(S)
/// for every i and every S (requires m <= kMaxTableItems).
PropertyReport check_nob(const AuctionInstance& inst, const BidProfile& b, bool strong = false);

/// Whether one optimal allocation must certify every bidder (the default) or
/// each bidder may use its own.
enum class WitnessMode { shared, per_bidder };

/// Some optimal S* has b_ij >= v_i(j | S_i(b)) for every i and j ∈ S*_i \ S_i(b).
PropertyReport check_inub(const AuctionInstance& inst, const BidProfile& b,
                          const std::vector<Allocation>& maximizers,
                          WitnessMode mode = WitnessMode::shared);

/// Some optimal S* has Σ_{j∈S'} b_ij >= v_i(S' | S_i(b)) with S' = S*_i \ S_i(b).
PropertyReport check_snub(const AuctionInstance& inst, const BidProfile& b,
                          const std::vector<Allocation>& maximizers,
                          WitnessMode mode = WitnessMode::shared);

/// b_ij < v_i(j | S_i(b_{-j})).
bool is_item_underbid(const AuctionInstance& inst, const BidProfile& b, int bidder, int item);

struct DominanceProbe {
  /// Opponent bids on the item, indexed by bidder; the entry for the deviating
  /// bidder is ignored.
  std::vector<Rational> column;
  Rational utility_marginal;  // bidding w
  Rational utility_under;     // bidding b_under
};

struct DominanceReport {
  bool confirmed = true;
  Rational marginal;  // w = v_i(j | S_i(b_{-j}))
  Rational underbid;
  std::vector<DominanceProbe> probes;
  /// A probe where the underbid did strictly better (never expected).
  std::optional<DominanceProbe> counterexample;
  /// The strict witness: a single opponent bids between the underbid and w.
  DominanceProbe strict_witness;
  int strict_opponent = -1;
};

/// Checks that bidding w = v_i(j | S_i(b_{-j})) on item j weakly dominates the
/// underbid over the probe columns, the default breakpoints and a strict
/// witness with one opponent at (b_under + w) / 2. Bids on other items come
/// from `b`. Throws PreconditionError unless b_under < w and n >= 2.
DominanceReport dominance_check(const AuctionInstance& inst, int bidder, int item,
                                const BidProfile& b, const Rational& b_under,
                                const std::vector<std::vector<Rational>>& probes = {});

/// b_ij = v_i(S*_i) / |S*_i| on S*_i, 0 elsewhere. Items whose whole column is
/// zero go to the tie-break favourite, which keeps welfare optimal.
BidProfile construct_flat_optimal_profile(const AuctionInstance& inst, const Allocation& optimal);

/// Expected-form sNUB over a finite type distribution. For every bidder i and
/// type t with positive probability, E[Σ_{j∈S'} b_ij | t] >= E[v_i(S' | S_i(b)) | t],
/// with S* the first maximizer of each type profile and expectations taken
/// over the joint distribution and mixed strategies.
PropertyReport check_snub_expected(const BayesianSetting& setting,
                                   const StrategyProfile& strategies,
                                   const TypeDistribution& dist);

}  // namespace s2pa
