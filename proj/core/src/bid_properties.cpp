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

#include "s2pa/bid_properties.hpp"

#include <map>

#include "s2pa/errors.hpp"
#include "s2pa/welfare.hpp"

namespace s2pa {

std::string to_string(Property p) {
  switch (p) {
    case Property::nob: return "nob";
    case Property::strong_nob: return "strong_nob";
    case Property::inub: return "inub";
    case Property::snub: return "snub";
    case Property::snub_expected: return "snub_expected";
  }
  return "?";
}

Property parse_property(const std::string& text) {
  if (text == "nob") return Property::nob;
  if (text == "strong_nob") return Property::strong_nob;
  if (text == "inub") return Property::inub;
  if (text == "snub") return Property::snub;
  if (text == "snub_expected") return Property::snub_expected;
  throw ParseError("property", "unknown property '" + text + "'");
}

PropertyReport check_nob(const AuctionInstance& inst, const BidProfile& b, bool strong) {
  PropertyReport report;
  report.property = strong ? Property::strong_nob : Property::nob;
  const Outcome out = run_auction(inst, b);
  const int m = inst.items();
  if (strong && m > kMaxTableItems) {
    throw BudgetExceeded("strong NOB enumerates 2^m sets; m = " + std::to_string(m));
  }
  for (int i = 0; i < inst.bidders(); ++i) {
    auto test = [&](ItemSet s) {
      Rational bids = b.sum(i, s);
      Rational value = inst.valuation(i).value(s);
      if (bids > value) report.violations.push_back({i, s, value, bids, {}, {}});
    };
    if (strong) {
      for_each_subset(ItemSet::full(m), test);
    } else {
      test(out.allocation[i]);
    }
  }
  report.holds = report.violations.empty();
  return report;
}

namespace {

// Violations of bidder i against one optimal allocation.
std::vector<Violation> underbid_violations(const AuctionInstance& inst, const BidProfile& b,
                                           const Outcome& out, const Allocation& optimal, int i,
                                           bool per_item) {
  std::vector<Violation> found;
  const ItemSet won = out.allocation[i];
  const ItemSet missing = optimal.at(i) - won;
  const ValuationSpec& v = inst.valuation(i);
  if (per_item) {
    for (int j : missing) {
      Rational need = v.marginal(ItemSet::single(j), won);
      if (b.at(i, j) < need) found.push_back({i, ItemSet::single(j), need, b.at(i, j), {}, {}});
    }
  } else if (!missing.empty()) {
    Rational need = v.marginal(missing, won);
    Rational bids = b.sum(i, missing);
    if (bids < need) found.push_back({i, missing, need, bids, {}, {}});
  }
  return found;
}

PropertyReport existential_check(Property property, const AuctionInstance& inst,
                                 const BidProfile& b, const std::vector<Allocation>& maximizers,
                                 WitnessMode mode) {
  if (maximizers.empty()) throw InvalidArgument("empty maximizer list");
  const bool per_item = property == Property::inub;
  const Outcome out = run_auction(inst, b);
  const int n = inst.bidders();
  PropertyReport report;
  report.property = property;

  if (mode == WitnessMode::shared) {
    for (std::size_t k = 0; k < maximizers.size(); ++k) {
      validate_allocation(inst, maximizers[k]);
      std::vector<Violation> found;
      for (int i = 0; i < n; ++i) {
        for (auto& viol : underbid_violations(inst, b, out, maximizers[k], i, per_item)) {
          viol.allocation = static_cast<int>(k);
          found.push_back(std::move(viol));
        }
      }
      if (found.empty()) {
        report.holds = true;
        report.witness_allocation = maximizers[k];
        report.witness_index = static_cast<int>(k);
        report.violations.clear();
        return report;
      }
      report.violations.insert(report.violations.end(), found.begin(), found.end());
    }
    report.holds = false;
    return report;
  }

  report.holds = true;
  for (int i = 0; i < n; ++i) {
    int witness = -1;
    std::vector<Violation> found;
    for (std::size_t k = 0; k < maximizers.size() && witness < 0; ++k) {
      auto viols = underbid_violations(inst, b, out, maximizers[k], i, per_item);
      if (viols.empty()) {
        witness = static_cast<int>(k);
      } else {
        for (auto& viol : viols) {
          viol.allocation = static_cast<int>(k);
          found.push_back(std::move(viol));
        }
      }
    }
    report.bidder_witnesses.push_back(witness);
    if (witness < 0) {
      report.holds = false;
      report.violations.insert(report.violations.end(), found.begin(), found.end());
    }
  }
  return report;
}

Rational utility_with_column(const AuctionInstance& inst, BidProfile b, int bidder, int item,
                             const std::vector<Rational>& column, const Rational& own) {
  for (int k = 0; k < inst.bidders(); ++k) {
    if (k != bidder) b.at(k, item) = column.at(k);
  }
  b.at(bidder, item) = own;
  return run_auction(inst, b).utilities[bidder];
}

}  // namespace

PropertyReport check_inub(const AuctionInstance& inst, const BidProfile& b,
                          const std::vector<Allocation>& maximizers, WitnessMode mode) {
  return existential_check(Property::inub, inst, b, maximizers, mode);
}

PropertyReport check_snub(const AuctionInstance& inst, const BidProfile& b,
                          const std::vector<Allocation>& maximizers, WitnessMode mode) {
  return existential_check(Property::snub, inst, b, maximizers, mode);
}

bool is_item_underbid(const AuctionInstance& inst, const BidProfile& b, int bidder, int item) {
  const ItemSet rest = won_items_excluding(inst, b, bidder, item);
  return b.at(bidder, item) < inst.valuation(bidder).marginal(ItemSet::single(item), rest);
}

DominanceReport dominance_check(const AuctionInstance& inst, int bidder, int item,
                                const BidProfile& b, const Rational& b_under,
                                const std::vector<std::vector<Rational>>& probes) {
  const int n = inst.bidders();
  if (n < 2) throw PreconditionError("dominance needs at least one opponent");
  if (b_under < 0) throw PreconditionError("negative underbid");
  const ItemSet rest = won_items_excluding(inst, b, bidder, item);
  DominanceReport report;
  report.marginal = inst.valuation(bidder).marginal(ItemSet::single(item), rest);
  report.underbid = b_under;
  if (!(b_under < report.marginal)) {
    throw PreconditionError("b_under = " + to_string(b_under) + " is not below the marginal " +
                            to_string(report.marginal));
  }
  const int opponent = bidder == 0 ? 1 : 0;

  auto single = [&](const Rational& x) {
    std::vector<Rational> column(n, Rational(0));
    column[opponent] = x;
    return column;
  };
  auto evaluate = [&](std::vector<Rational> column) {
    if (static_cast<int>(column.size()) != n) throw InvalidArgument("probe column length mismatch");
    DominanceProbe probe;
    probe.utility_marginal = utility_with_column(inst, b, bidder, item, column, report.marginal);
    probe.utility_under = utility_with_column(inst, b, bidder, item, column, b_under);
    probe.column = std::move(column);
    return probe;
  };

  std::vector<std::vector<Rational>> columns = probes;
  const std::vector<Rational> breakpoints{Rational(0), b_under,
                                         Rational((b_under + report.marginal) / 2),
                                         report.marginal, Rational(report.marginal + 1)};
  for (const Rational& x : breakpoints) {
    columns.push_back(single(x));
  }
  for (auto& column : columns) {
    DominanceProbe probe = evaluate(std::move(column));
    if (probe.utility_under > probe.utility_marginal && !report.counterexample) {
      report.confirmed = false;
      report.counterexample = probe;
    }
    report.probes.push_back(std::move(probe));
  }

  // The opponent sits strictly between the underbid and the marginal value.
  report.strict_opponent = opponent;
  report.strict_witness = evaluate(single(Rational(b_under + (report.marginal - b_under) / 2)));
  if (!(report.strict_witness.utility_marginal > report.strict_witness.utility_under)) {
    report.confirmed = false;
  }
  return report;
}

BidProfile construct_flat_optimal_profile(const AuctionInstance& inst, const Allocation& optimal) {
  validate_allocation(inst, optimal);
  BidProfile b(inst.bidders(), inst.items());
  for (int i = 0; i < inst.bidders(); ++i) {
    const ItemSet bundle = optimal[i];
    if (bundle.empty()) continue;
    const Rational share = inst.valuation(i).value(bundle) / bundle.size();
    for (int j : bundle) b.at(i, j) = share;
  }
  return b;
}

PropertyReport check_snub_expected(const BayesianSetting& setting,
                                   const StrategyProfile& strategies,
                                   const TypeDistribution& dist) {
  setting.validate(dist);
  strategies.validate(setting);
  const int n = setting.bidders();
  // Unnormalized conditional sums per (bidder, type): bids and marginals.
  std::vector<std::map<int, std::pair<Rational, Rational>>> sums(n);
  std::vector<std::map<int, Rational>> mass(n);

  for (const auto& point : dist.support()) {
    if (point.probability == 0) continue;
    const AuctionInstance inst = setting.instance(point.value);
    const Allocation optimal = optimal_allocations(inst).maximizers.front();
    for (int i = 0; i < n; ++i) mass[i][point.value[i]] += point.probability;
    for_each_realization(setting, strategies, point.value,
                         [&](const BidProfile& b, const Rational& weight) {
                           const Outcome out = run_auction(inst, b);
                           const Rational w = point.probability * weight;
                           for (int i = 0; i < n; ++i) {
                             const ItemSet missing = optimal[i] - out.allocation[i];
                             auto& cell = sums[i][point.value[i]];
                             cell.first += w * b.sum(i, missing);
                             cell.second += w * inst.valuation(i).marginal(missing, out.allocation[i]);
                           }
                         });
  }

  PropertyReport report;
  report.property = Property::snub_expected;
  for (int i = 0; i < n; ++i) {
    for (const auto& [type, cell] : sums[i]) {
      const Rational& p = mass[i][type];
      if (p == 0) continue;
      if (cell.first < cell.second) {
        report.violations.push_back({i, ItemSet{}, cell.second / p, cell.first / p, {}, type});
      }
    }
  }
  report.holds = report.violations.empty();
  return report;
}

}  // namespace s2pa
