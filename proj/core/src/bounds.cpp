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

#include "s2pa/bounds.hpp"

#include "s2pa/bid_properties.hpp"
#include "s2pa/errors.hpp"
#include "s2pa/welfare.hpp"

namespace s2pa {

void GuaranteeParams::validate() const {
  for (const auto* p : {&lambda, &mu, &gamma, &delta}) {
    if (*p && **p < 0) throw InvalidArgument("guarantee parameters must be nonnegative");
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "?";
}

RevenueGuaranteeCheck check_revenue_guarantee(const AuctionInstance& inst,
                                              const std::vector<BidProfile>& profiles,
                                              const Rational& gamma, const Rational& delta) {
  return check_revenue_guarantee(inst, profiles, gamma, delta,
                                 optimal_allocations(inst).opt_value);
}

RevenueGuaranteeCheck check_revenue_guarantee(const AuctionInstance& inst,
                                              const std::vector<BidProfile>& profiles,
                                              const Rational& gamma, const Rational& delta,
                                              const Rational& opt) {
  if (inst.mechanism() != Mechanism::s2pa) {
    throw PreconditionError("revenue guarantees are checked for s2pa");
  }
  GuaranteeParams{std::nullopt, std::nullopt, gamma, delta}.validate();
  RevenueGuaranteeCheck check;
  check.opt = opt;
  for (std::size_t k = 0; k < profiles.size(); ++k) {
    const Outcome out = run_auction(inst, profiles[k]);
    Rational slack = out.revenue - (gamma * opt - delta * out.welfare);
    if (k == 0 || slack < check.worst_slack) check.worst_slack = slack;
    if (slack < 0 && !check.violator) {
      check.holds = false;
      check.violator = k;
    }
  }
  return check;
}

SmoothnessCheck check_smoothness_at(const AuctionInstance& inst, const BidProfile& b,
                                    const std::vector<BidRow>& deviation, const Rational& lambda,
                                    const Rational& mu) {
  return check_smoothness_at(inst, b, deviation, lambda, mu, optimal_allocations(inst).opt_value);
}

SmoothnessCheck check_smoothness_at(const AuctionInstance& inst, const BidProfile& b,
                                    const std::vector<BidRow>& deviation, const Rational& lambda,
                                    const Rational& mu, const Rational& opt) {
  GuaranteeParams{lambda, mu, std::nullopt, std::nullopt}.validate();
  if (static_cast<int>(deviation.size()) != inst.bidders()) {
    throw InvalidArgument("deviation needs one row per bidder");
  }
  const Outcome out = run_auction(inst, b);
  SmoothnessCheck check;
  check.lhs = 0;
  for (int i = 0; i < inst.bidders(); ++i) {
    check.lhs += run_auction(inst, b.with_row(i, deviation[i])).utilities[i];
  }
  check.rhs = lambda * opt - mu * out.welfare;
  check.slack = check.lhs - check.rhs;
  check.holds = check.slack >= 0;
  return check;
}

std::vector<BidRow> xos_deviation(const AuctionInstance& inst, const Allocation& optimal) {
  validate_allocation(inst, optimal);
  std::vector<BidRow> rows;
  for (int i = 0; i < inst.bidders(); ++i) {
    const std::vector<Rational> clause = maximizing_clause(inst.valuation(i), optimal[i]);
    BidRow row(inst.items(), Rational(0));
    for (int j : optimal[i]) row[j] = clause[j];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<BidRow> prefix_deviation(const AuctionInstance& inst, const Allocation& optimal) {
  validate_allocation(inst, optimal);
  std::vector<BidRow> rows;
  for (int i = 0; i < inst.bidders(); ++i) {
    const auto support = permutation_supports(
        inst.valuation(i), {prefix_permutation(inst.items(), optimal[i])});
    BidRow row(inst.items(), Rational(0));
    for (int j : optimal[i]) row[j] = support.front()[j];
    rows.push_back(std::move(row));
  }
  return rows;
}

Rational poa_bound(const GuaranteeParams& params) {
  params.validate();
  if (params.has_smoothness() && params.has_revenue()) {
    return (*params.lambda + *params.gamma) / (1 + *params.mu + *params.delta);
  }
  if (params.has_revenue()) return *params.gamma / (1 + *params.delta);
  if (params.has_smoothness()) return *params.lambda / (1 + *params.mu);
  throw InvalidArgument("poa_bound needs (lambda, mu), (gamma, delta) or both");
}

namespace {

FloorCheck floor_from(const Rational& utilities, const Rational& revenue, const Rational& welfare,
                      const Rational& opt, const Rational& gamma, const Rational& delta) {
  GuaranteeParams{std::nullopt, std::nullopt, gamma, delta}.validate();
  FloorCheck check;
  check.welfare = welfare;
  check.opt = opt;
  check.floor = gamma / (1 + delta) * opt;
  if (utilities < 0) {
    check.verdict = Verdict::inapplicable;
    check.reason = "sum of utilities " + to_string(utilities) + " is negative";
  } else if (revenue < gamma * opt - delta * welfare) {
    check.verdict = Verdict::inapplicable;
    check.reason = "revenue " + to_string(revenue) + " is below the guarantee " +
                   to_string(Rational(gamma * opt - delta * welfare));
  } else {
    check.verdict = welfare >= check.floor ? Verdict::holds : Verdict::violated;
  }
  return check;
}

Rational utility_sum(const Outcome& out) {
  Rational total = 0;
  for (const auto& u : out.utilities) total += u;
  return total;
}

}  // namespace

FloorCheck check_welfare_floor(const AuctionInstance& inst, const BidProfile& b,
                               const Rational& gamma, const Rational& delta) {
  const Outcome out = run_auction(inst, b);
  return floor_from(utility_sum(out), out.revenue, out.welfare,
                    optimal_allocations(inst).opt_value, gamma, delta);
}

FloorCheck check_welfare_floor(const AuctionInstance& inst, const ProfileDistribution& dist,
                               const Rational& gamma, const Rational& delta) {
  Rational utilities = 0, revenue = 0, welfare = 0;
  for (const auto& p : dist.support()) {
    const Outcome out = run_auction(inst, p.value);
    utilities += p.probability * utility_sum(out);
    revenue += p.probability * out.revenue;
    welfare += p.probability * out.welfare;
  }
  return floor_from(utilities, revenue, welfare, optimal_allocations(inst).opt_value, gamma, delta);
}

FloorCheck check_welfare_floor(const BayesianSetting& setting, const StrategyProfile& strategies,
                               const TypeDistribution& dist, const Rational& gamma,
                               const Rational& delta) {
  setting.validate(dist);
  strategies.validate(setting);
  Rational utilities = 0, revenue = 0, welfare = 0, opt = 0;
  for (const auto& point : dist.support()) {
    if (point.probability == 0) continue;
    const AuctionInstance inst = setting.instance(point.value);
    opt += point.probability * optimal_allocations(inst).opt_value;
    for_each_realization(setting, strategies, point.value,
                         [&](const BidProfile& b, const Rational& w) {
                           const Outcome out = run_auction(inst, b);
                           const Rational weight = point.probability * w;
                           utilities += weight * utility_sum(out);
                           revenue += weight * out.revenue;
                           welfare += weight * out.welfare;
                         });
  }
  return floor_from(utilities, revenue, welfare, opt, gamma, delta);
}

FloorCheck subadditive_composed_check(const AuctionInstance& inst, const BidProfile& b,
                                      std::optional<BidGrid> grid) {
  FloorCheck check;
  const OptResult opt = optimal_allocations(inst);
  const Outcome out = run_auction(inst, b);
  check.welfare = out.welfare;
  check.opt = opt.opt_value;
  check.floor = Rational(2, 3) * opt.opt_value;
  auto inapplicable = [&](std::string reason) {
    check.verdict = Verdict::inapplicable;
    check.reason = std::move(reason);
    return check;
  };
  for (int i = 0; i < inst.bidders(); ++i) {
    if (!check_class(inst.valuation(i), ValuationClass::subadditive).holds) {
      return inapplicable("bidder " + std::to_string(i) + " is not subadditive");
    }
  }
  if (inst.mechanism() != Mechanism::s2pa) return inapplicable("mechanism is not s2pa");
  if (!check_nob(inst, b, true).holds) return inapplicable("strong NOB fails");
  if (!check_snub(inst, b, opt.maximizers).holds) return inapplicable("sNUB fails");
  if (!verify_pne(inst, b, grid ? *grid : default_grid(inst)).holds) {
    return inapplicable("profile is not a PNE");
  }
  check.verdict = out.welfare >= check.floor ? Verdict::holds : Verdict::violated;
  return check;
}

}  // namespace s2pa
