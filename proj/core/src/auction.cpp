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

#include "s2pa/auction.hpp"

#include <algorithm>
#include <numeric>

#include "s2pa/errors.hpp"

namespace s2pa {

std::string to_string(Mechanism mechanism) {
  return mechanism == Mechanism::s2pa ? "s2pa" : "s1pa";
}

Mechanism parse_mechanism(const std::string& text) {
  if (text == "s2pa") return Mechanism::s2pa;
  if (text == "s1pa") return Mechanism::s1pa;
  throw ParseError("mechanism", "unknown mechanism '" + text + "'");
}

AuctionInstance::AuctionInstance(std::vector<ValuationSpec> valuations, Mechanism mechanism,
                                 std::vector<int> tie_break)
    : valuations_(std::move(valuations)), mechanism_(mechanism), tie_break_(std::move(tie_break)) {
  if (valuations_.empty()) throw InvalidArgument("an auction needs at least one bidder");
  items_ = valuations_.front().items();
  for (const auto& v : valuations_) {
    if (v.items() != items_) throw InvalidArgument("valuations disagree on the item count");
    validate(v);
  }
  const int n = bidders();
  if (tie_break_.empty()) {
    tie_break_.resize(n);
    std::iota(tie_break_.begin(), tie_break_.end(), 0);
  }
  std::vector<int> sorted = tie_break_;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expected(n);
  std::iota(expected.begin(), expected.end(), 0);
  if (sorted != expected) throw InvalidArgument("tie-break must be a permutation of the bidders");
  rank_.assign(n, 0);
  for (int pos = 0; pos < n; ++pos) rank_[tie_break_[pos]] = pos;
}

AuctionInstance AuctionInstance::with_mechanism(Mechanism mechanism) const {
  return AuctionInstance(valuations_, mechanism, tie_break_);
}

AuctionInstance AuctionInstance::with_valuations(std::vector<ValuationSpec> valuations) const {
  return AuctionInstance(std::move(valuations), mechanism_, tie_break_);
}

BidProfile::BidProfile(int bidders, int items)
    : bidders_(bidders), items_(items), bids_(static_cast<std::size_t>(bidders) * items) {
  if (bidders < 0 || items < 0) throw InvalidArgument("negative profile dimensions");
}

BidProfile::BidProfile(const std::vector<std::vector<Rational>>& rows)
    : BidProfile(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
  for (int i = 0; i < bidders_; ++i) {
    if (static_cast<int>(rows[i].size()) != items_) throw InvalidArgument("ragged bid rows");
    set_row(i, rows[i]);
  }
}

std::size_t BidProfile::index(int bidder, int item) const {
  if (bidder < 0 || bidder >= bidders_ || item < 0 || item >= items_) {
    throw InvalidArgument("bid index (" + std::to_string(bidder) + ", " + std::to_string(item) +
                          ") out of range");
  }
  return static_cast<std::size_t>(bidder) * items_ + item;
}

std::span<const Rational> BidProfile::row(int bidder) const {
  return std::span<const Rational>(bids_).subspan(index(bidder, 0), items_);
}

std::vector<Rational> BidProfile::row_copy(int bidder) const {
  auto r = row(bidder);
  return {r.begin(), r.end()};
}

void BidProfile::set_row(int bidder, std::span<const Rational> bids) {
  if (static_cast<int>(bids.size()) != items_) throw InvalidArgument("bid row length mismatch");
  std::copy(bids.begin(), bids.end(), bids_.begin() + index(bidder, 0));
}

BidProfile BidProfile::with_row(int bidder, std::span<const Rational> bids) const {
  BidProfile copy = *this;
  copy.set_row(bidder, bids);
  return copy;
}

Rational BidProfile::sum(int bidder, ItemSet s) const {
  Rational total = 0;
  for (int j : s) total += at(bidder, j);
  return total;
}

void validate_profile(const AuctionInstance& inst, const BidProfile& b) {
  if (b.bidders() != inst.bidders() || b.items() != inst.items()) {
    throw InvalidArgument("bid profile is " + std::to_string(b.bidders()) + "x" +
                          std::to_string(b.items()) + ", instance is " +
                          std::to_string(inst.bidders()) + "x" + std::to_string(inst.items()));
  }
  for (int i = 0; i < b.bidders(); ++i) {
    for (int j = 0; j < b.items(); ++j) {
      if (b.at(i, j) < 0) {
        throw InvalidArgument("negative bid at (" + std::to_string(i) + ", " + std::to_string(j) +
                              ")");
      }
    }
  }
}

int item_winner(const AuctionInstance& inst, const BidProfile& b, int item) {
  int winner = 0;
  for (int i = 1; i < inst.bidders(); ++i) {
    const int order = cmp(b.at(i, item), b.at(winner, item));
    if (order > 0 || (order == 0 && inst.wins_tie(i, winner))) winner = i;
  }
  return winner;
}

Outcome run_auction(const AuctionInstance& inst, const BidProfile& b) {
  validate_profile(inst, b);
  const int n = inst.bidders();
  const int m = inst.items();
  Outcome out;
  out.allocation.assign(n, ItemSet{});
  out.winners.assign(m, 0);
  out.item_prices.assign(m, Rational(0));
  out.payments.assign(n, Rational(0));
  for (int j = 0; j < m; ++j) {
    const int w = item_winner(inst, b, j);
    out.winners[j] = w;
    out.allocation[w] = out.allocation[w].with(j);
    Rational price = 0;
    if (inst.mechanism() == Mechanism::s1pa) {
      price = b.at(w, j);
    } else {
      for (int k = 0; k < n; ++k) {
        if (k != w && b.at(k, j) > price) price = b.at(k, j);
      }
    }
    out.payments[w] += price;
    out.item_prices[j] = std::move(price);
  }
  out.values.resize(n);
  out.utilities.resize(n);
  out.welfare = 0;
  out.revenue = 0;
  for (int i = 0; i < n; ++i) {
    out.values[i] = inst.valuation(i).value(out.allocation[i]);
    out.utilities[i] = out.values[i] - out.payments[i];
    out.welfare += out.values[i];
    out.revenue += out.payments[i];
  }
  return out;
}

ItemSet won_items_excluding(const AuctionInstance& inst, const BidProfile& b, int bidder,
                            int item) {
  validate_profile(inst, b);
  if (bidder < 0 || bidder >= inst.bidders() || item < 0 || item >= inst.items()) {
    throw InvalidArgument("won_items_excluding: index out of range");
  }
  ItemSet won;
  for (int k = 0; k < inst.items(); ++k) {
    if (k != item && item_winner(inst, b, k) == bidder) won = won.with(k);
  }
  return won;
}

void validate_allocation(const AuctionInstance& inst, const Allocation& alloc) {
  if (static_cast<int>(alloc.size()) != inst.bidders()) {
    throw InvalidArgument("allocation has " + std::to_string(alloc.size()) + " bundles for " +
                          std::to_string(inst.bidders()) + " bidders");
  }
  ItemSet seen;
  for (const ItemSet bundle : alloc) {
    if (!(bundle & seen).empty()) throw InvalidArgument("allocation bundles overlap");
    seen = seen | bundle;
  }
  if (seen != ItemSet::full(inst.items())) {
    throw InvalidArgument("allocation does not cover every item exactly once");
  }
}

Rational welfare_of(const AuctionInstance& inst, const Allocation& alloc) {
  Rational total = 0;
  for (int i = 0; i < inst.bidders(); ++i) total += inst.valuation(i).value(alloc.at(i));
  return total;
}

LemmaCheck check_revenue_bids_lemma(const AuctionInstance& inst, const BidProfile& b,
                                    const Allocation& optimal) {
  if (inst.mechanism() != Mechanism::s2pa) {
    throw PreconditionError("the revenue/bids lemma is stated for s2pa");
  }
  validate_allocation(inst, optimal);
  const Outcome out = run_auction(inst, b);
  LemmaCheck check;
  check.lhs = out.revenue;
  check.rhs = 0;
  for (int i = 0; i < inst.bidders(); ++i) check.rhs += b.sum(i, optimal[i] - out.allocation[i]);
  check.slack = check.lhs - check.rhs;
  check.holds = check.slack >= 0;
  return check;
}

std::string to_string(const BidProfile& b) {
  std::string out = "[";
  for (int i = 0; i < b.bidders(); ++i) {
    if (i) out += ' ';
    out += '(';
    for (int j = 0; j < b.items(); ++j) {
      if (j) out += ',';
      out += to_string(b.at(i, j));
    }
    out += ')';
  }
  return out + "]";
}

std::string to_string(const Allocation& alloc, const std::vector<std::string>& item_names) {
  std::string out = "[";
  for (std::size_t i = 0; i < alloc.size(); ++i) {
    if (i) out += ' ';
    out += to_string(alloc[i], item_names);
  }
  return out + "]";
}

}  // namespace s2pa
