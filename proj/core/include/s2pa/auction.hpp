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

#include <span>
#include <string>
#include <vector>

#include "s2pa/item_set.hpp"
#include "s2pa/rational.hpp"
#include "s2pa/valuation.hpp"

namespace s2pa {

enum class Mechanism { s2pa, s1pa };

std::string to_string(Mechanism mechanism);
Mechanism parse_mechanism(const std::string& text);

/// One bundle per bidder; a partition of [m] when it comes out of an auction.
using Allocation = std::vector<ItemSet>;

/// n bidders with their valuations, m items, the pricing rule and a fixed
/// priority order used to break ties on every item.
class AuctionInstance {
 public:
  /// An empty tie-break means ascending bidder index.
  AuctionInstance(std::vector<ValuationSpec> valuations, Mechanism mechanism = Mechanism::s2pa,
                  std::vector<int> tie_break = {});

  int bidders() const { return static_cast<int>(valuations_.size()); }
  int items() const { return items_; }
  Mechanism mechanism() const { return mechanism_; }
  const std::vector<ValuationSpec>& valuations() const { return valuations_; }
  const ValuationSpec& valuation(int bidder) const { return valuations_.at(bidder); }
  const std::vector<int>& tie_break() const { return tie_break_; }

  /// Position of `bidder` in the tie-break order; lower wins ties.
  int priority(int bidder) const { return rank_[bidder]; }

  /// True iff `a` beats `b` when both bid the same amount.
  bool wins_tie(int a, int b) const { return rank_[a] < rank_[b]; }

  AuctionInstance with_mechanism(Mechanism mechanism) const;
  AuctionInstance with_valuations(std::vector<ValuationSpec> valuations) const;

 private:
  std::vector<ValuationSpec> valuations_;
  int items_ = 0;
  Mechanism mechanism_ = Mechanism::s2pa;
  std::vector<int> tie_break_;
  std::vector<int> rank_;
};

/// n×m matrix of nonnegative bids, row-major.
class BidProfile {
 public:
  BidProfile() = default;
  BidProfile(int bidders, int items);
  explicit BidProfile(const std::vector<std::vector<Rational>>& rows);

  int bidders() const { return bidders_; }
  int items() const { return items_; }

  const Rational& at(int bidder, int item) const { return bids_[index(bidder, item)]; }
  Rational& at(int bidder, int item) { return bids_[index(bidder, item)]; }

  std::span<const Rational> row(int bidder) const;
  std::vector<Rational> row_copy(int bidder) const;
  void set_row(int bidder, std::span<const Rational> bids);

  /// Copy with bidder's row replaced.
  BidProfile with_row(int bidder, std::span<const Rational> bids) const;

  /// Σ_{j∈S} b_ij.
  Rational sum(int bidder, ItemSet s) const;

  bool operator==(const BidProfile&) const = default;
  /// Row-major lexicographic order on same-shaped profiles.
  bool operator<(const BidProfile& other) const { return bids_ < other.bids_; }

 private:
  std::size_t index(int bidder, int item) const;

  int bidders_ = 0;
  int items_ = 0;
  std::vector<Rational> bids_;
};

/// Throws InvalidArgument on dimension mismatch or a negative bid.
void validate_profile(const AuctionInstance& inst, const BidProfile& b);

struct Outcome {
  Allocation allocation;
  std::vector<int> winners;  // per item
  std::vector<Rational> item_prices;
  std::vector<Rational> payments;
  std::vector<Rational> values;  // v_i(S_i)
  std::vector<Rational> utilities;
  Rational welfare;
  Rational revenue;
};

/// Highest bid wins each item (ties by the instance priority). S2PA charges
/// the highest competing bid, S1PA the winner's own bid.
Outcome run_auction(const AuctionInstance& inst, const BidProfile& b);

/// Winner of a single item under the instance tie-break.
int item_winner(const AuctionInstance& inst, const BidProfile& b, int item);

/// S_i(b_{-j}): items other than j that bidder i wins, same tie-break.
ItemSet won_items_excluding(const AuctionInstance& inst, const BidProfile& b, int bidder,
                            int item);

/// Throws InvalidArgument unless `alloc` partitions [m] among the bidders.
void validate_allocation(const AuctionInstance& inst, const Allocation& alloc);

/// Σ_i v_i(S_i).
Rational welfare_of(const AuctionInstance& inst, const Allocation& alloc);

struct LemmaCheck {
  bool holds = true;
  Rational lhs;  // revenue
  Rational rhs;  // Σ_i Σ_{j ∈ S*_i \ S_i(b)} b_ij
  Rational slack;
};

/// revenue(b) >= Σ_i Σ_{j∈S*_i \ S_i(b)} b_ij for S2PA and a welfare maximizer S*.
LemmaCheck check_revenue_bids_lemma(const AuctionInstance& inst, const BidProfile& b,
                                    const Allocation& optimal);

std::string to_string(const BidProfile& b);
std::string to_string(const Allocation& alloc, const std::vector<std::string>& item_names = {});

}  // namespace s2pa
