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

#include <cstddef>
#include <functional>
#include <vector>

#include "s2pa/auction.hpp"
#include "s2pa/errors.hpp"
#include "s2pa/rational.hpp"

namespace s2pa {

/// Finite support with exact probabilities summing to 1.
template <typename T>
class FiniteDistribution {
 public:
  struct Point {
    T value;
    Rational probability;
    bool operator==(const Point&) const = default;
  };

  FiniteDistribution() = default;
  explicit FiniteDistribution(std::vector<Point> support) : support_(std::move(support)) {
    if (support_.empty()) throw InvalidArgument("distribution support is empty");
    Rational total = 0;
    for (const auto& p : support_) {
      if (p.probability < 0) throw InvalidArgument("negative probability");
      total += p.probability;
    }
    if (total != 1) throw InvalidArgument("probabilities sum to " + to_string(total) + ", not 1");
  }

  static FiniteDistribution point_mass(T value) {
    return FiniteDistribution({Point{std::move(value), Rational(1)}});
  }

  /// Equal weight on every value.
  static FiniteDistribution uniform(std::vector<T> values) {
    std::vector<Point> support;
    const Rational w(1, static_cast<long>(values.size()));
    for (auto& v : values) support.push_back(Point{std::move(v), w});
    return FiniteDistribution(std::move(support));
  }

  const std::vector<Point>& support() const { return support_; }
  std::size_t size() const { return support_.size(); }
  bool operator==(const FiniteDistribution&) const = default;

 private:
  std::vector<Point> support_;
};

using BidRow = std::vector<Rational>;
using ProfileDistribution = FiniteDistribution<BidProfile>;
/// Entry i of a type profile is the index of bidder i's type.
using TypeProfile = std::vector<int>;
using TypeDistribution = FiniteDistribution<TypeProfile>;
using MixedRow = FiniteDistribution<BidRow>;

/// Per bidder, the finite list of valuations it may have.
class BayesianSetting {
 public:
  BayesianSetting(std::vector<std::vector<ValuationSpec>> types,
                  Mechanism mechanism = Mechanism::s2pa, std::vector<int> tie_break = {});

  int bidders() const { return static_cast<int>(types_.size()); }
  int items() const { return items_; }
  int type_count(int bidder) const { return static_cast<int>(types_.at(bidder).size()); }
  const ValuationSpec& type(int bidder, int index) const { return types_.at(bidder).at(index); }
  Mechanism mechanism() const { return mechanism_; }
  const std::vector<int>& tie_break() const { return tie_break_; }

  /// Complete-information instance for one type profile.
  AuctionInstance instance(const TypeProfile& profile) const;

  /// Throws InvalidArgument unless every support point names valid types.
  void validate(const TypeDistribution& dist) const;

 private:
  std::vector<std::vector<ValuationSpec>> types_;
  int items_ = 0;
  Mechanism mechanism_;
  std::vector<int> tie_break_;
};

/// rows[i][t]: the (possibly mixed) bid row bidder i plays with type t.
struct StrategyProfile {
  std::vector<std::vector<MixedRow>> rows;

  /// Pure strategies: rows[i][t] is played with probability 1.
  static StrategyProfile pure(const std::vector<std::vector<BidRow>>& rows);
  /// Throws InvalidArgument when a bidder or type is missing or a row has the wrong length.
  void validate(const BayesianSetting& setting) const;
};

/// Calls f(bids, weight) for every realization of the mixed rows at a type
/// profile; weights multiply to the joint probability of the realization.
/// When `fixed_bidder` >= 0 its row is replaced by `fixed_row`.
void for_each_realization(const BayesianSetting& setting, const StrategyProfile& strategies,
                          const TypeProfile& types,
                          const std::function<void(const BidProfile&, const Rational&)>& f,
                          int fixed_bidder = -1, const BidRow& fixed_row = {});

}  // namespace s2pa
