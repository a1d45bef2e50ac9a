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

#include "s2pa/distribution.hpp"

namespace s2pa {

BayesianSetting::BayesianSetting(std::vector<std::vector<ValuationSpec>> types,
                                 Mechanism mechanism, std::vector<int> tie_break)
    : types_(std::move(types)), mechanism_(mechanism), tie_break_(std::move(tie_break)) {
  if (types_.empty()) throw InvalidArgument("a Bayesian setting needs at least one bidder");
  for (const auto& list : types_) {
    if (list.empty()) throw InvalidArgument("every bidder needs at least one type");
  }
  items_ = types_.front().front().items();
  for (const auto& list : types_) {
    for (const auto& v : list) {
      if (v.items() != items_) throw InvalidArgument("types disagree on the item count");
      s2pa::validate(v);
    }
  }
  // Constructing one instance checks the tie-break.
  instance(TypeProfile(types_.size(), 0));
}

AuctionInstance BayesianSetting::instance(const TypeProfile& profile) const {
  if (static_cast<int>(profile.size()) != bidders()) {
    throw InvalidArgument("type profile has " + std::to_string(profile.size()) + " entries for " +
                          std::to_string(bidders()) + " bidders");
  }
  std::vector<ValuationSpec> valuations;
  for (int i = 0; i < bidders(); ++i) {
    if (profile[i] < 0 || profile[i] >= type_count(i)) {
      throw InvalidArgument("type index " + std::to_string(profile[i]) + " out of range for bidder " +
                            std::to_string(i));
    }
    valuations.push_back(types_[i][profile[i]]);
  }
  return AuctionInstance(std::move(valuations), mechanism_, tie_break_);
}

void BayesianSetting::validate(const TypeDistribution& dist) const {
  for (const auto& p : dist.support()) instance(p.value);
}

StrategyProfile StrategyProfile::pure(const std::vector<std::vector<BidRow>>& rows) {
  StrategyProfile s;
  for (const auto& per_bidder : rows) {
    std::vector<MixedRow> mixed;
    for (const auto& row : per_bidder) mixed.push_back(MixedRow::point_mass(row));
    s.rows.push_back(std::move(mixed));
  }
  return s;
}

void StrategyProfile::validate(const BayesianSetting& setting) const {
  if (static_cast<int>(rows.size()) != setting.bidders()) {
    throw InvalidArgument("strategy profile covers " + std::to_string(rows.size()) + " of " +
                          std::to_string(setting.bidders()) + " bidders");
  }
  for (int i = 0; i < setting.bidders(); ++i) {
    if (static_cast<int>(rows[i].size()) != setting.type_count(i)) {
      throw InvalidArgument("bidder " + std::to_string(i) + " strategy covers " +
                            std::to_string(rows[i].size()) + " of " +
                            std::to_string(setting.type_count(i)) + " types");
    }
    for (const auto& mixed : rows[i]) {
      for (const auto& p : mixed.support()) {
        if (static_cast<int>(p.value.size()) != setting.items()) {
          throw InvalidArgument("bid row length mismatch in bidder " + std::to_string(i) +
                                " strategy");
        }
        for (const auto& x : p.value) {
          if (x < 0) throw InvalidArgument("negative bid in bidder " + std::to_string(i) + " strategy");
        }
      }
    }
  }
}

void for_each_realization(const BayesianSetting& setting, const StrategyProfile& strategies,
                          const TypeProfile& types,
                          const std::function<void(const BidProfile&, const Rational&)>& f,
                          int fixed_bidder, const BidRow& fixed_row) {
  const int n = setting.bidders();
  BidProfile bids(n, setting.items());
  std::function<void(int, const Rational&)> rec = [&](int i, const Rational& weight) {
    if (i == n) {
      f(bids, weight);
      return;
    }
    if (i == fixed_bidder) {
      bids.set_row(i, fixed_row);
      rec(i + 1, weight);
      return;
    }
    for (const auto& p : strategies.rows.at(i).at(types.at(i)).support()) {
      if (p.probability == 0) continue;
      bids.set_row(i, p.value);
      rec(i + 1, weight * p.probability);
    }
  };
  rec(0, Rational(1));
}

}  // namespace s2pa
