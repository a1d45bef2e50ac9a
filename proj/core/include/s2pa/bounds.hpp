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
#include "s2pa/equilibria.hpp"
#include "s2pa/rational.hpp"

namespace s2pa {

/// Smoothness (λ, μ) and revenue-guarantee (γ, δ) parameters. δ may exceed 1.
struct GuaranteeParams {
  std::optional<Rational> lambda;
  std::optional<Rational> mu;
  std::optional<Rational> gamma;
  std::optional<Rational> delta;

  /// Throws InvalidArgument on a negative entry.
  void validate() const;
  bool has_smoothness() const { return lambda && mu; }
  bool has_revenue() const { return gamma && delta; }
};

enum class Verdict { holds, violated, inapplicable };
std::string to_string(Verdict v);

struct RevenueGuaranteeCheck {
  bool holds = true;
  Rational opt;
  /// min over profiles of revenue − (γ·OPT − δ·SW); 0 for an empty list.
  Rational worst_slack;
  std::optional<std::size_t> violator;  // first violating profile
};

/// revenue(b) >= γ·OPT − δ·SW(b) for every profile (s2pa only).
RevenueGuaranteeCheck check_revenue_guarantee(const AuctionInstance& inst,
                                              const std::vector<BidProfile>& profiles,
                                              const Rational& gamma, const Rational& delta);
RevenueGuaranteeCheck check_revenue_guarantee(const AuctionInstance& inst,
                                              const std::vector<BidProfile>& profiles,
                                              const Rational& gamma, const Rational& delta,
                                              const Rational& opt);

struct SmoothnessCheck {
  bool holds = true;
  Rational lhs;  // Σ_i u_i(b*_i, b_{-i})
  Rational rhs;  // λ·OPT − μ·SW(b)
  Rational slack;
};

SmoothnessCheck check_smoothness_at(const AuctionInstance& inst, const BidProfile& b,
                                    const std::vector<BidRow>& deviation, const Rational& lambda,
                                    const Rational& mu);
SmoothnessCheck check_smoothness_at(const AuctionInstance& inst, const BidProfile& b,
                                    const std::vector<BidRow>& deviation, const Rational& lambda,
                                    const Rational& mu, const Rational& opt);

/// Row i bids the maximizing clause of v_i on S*_i, 0 elsewhere. Throws
/// PreconditionError when some valuation has no supporting clause.
std::vector<BidRow> xos_deviation(const AuctionInstance& inst, const Allocation& optimal);

/// Row i bids the marginals of a permutation listing S*_i first, 0 outside S*_i.
/// Works for every valuation; the α-submodular deviation.
std::vector<BidRow> prefix_deviation(const AuctionInstance& inst, const Allocation& optimal);

/// γ/(1+δ), λ/(1+μ) or (λ+γ)/(1+μ+δ), depending on which pairs are present.
Rational poa_bound(const GuaranteeParams& params);

struct FloorCheck {
  Verdict verdict = Verdict::holds;
  Rational welfare;  // SW or E[SW]
  Rational opt;      // OPT or E[OPT]
  Rational floor;    // fraction · opt
  std::string reason;  // why the check is inapplicable
};

/// Pointwise: if Σu_i(b) >= 0 and revenue(b) >= γ·OPT − δ·SW(b), then SW >= γ/(1+δ)·OPT.
FloorCheck check_welfare_floor(const AuctionInstance& inst, const BidProfile& b,
                               const Rational& gamma, const Rational& delta);

/// Correlated bid distribution on one instance, everything in expectation.
FloorCheck check_welfare_floor(const AuctionInstance& inst, const ProfileDistribution& dist,
                               const Rational& gamma, const Rational& delta);

/// Type distribution (possibly correlated) with a strategy profile.
FloorCheck check_welfare_floor(const BayesianSetting& setting, const StrategyProfile& strategies,
                               const TypeDistribution& dist, const Rational& gamma,
                               const Rational& delta);

/// For subadditive valuations and a PNE with strong NOB and sNUB, SW >= 2/3·OPT.
/// Unmet preconditions give Verdict::inapplicable.
FloorCheck subadditive_composed_check(const AuctionInstance& inst, const BidProfile& b,
                                      std::optional<BidGrid> grid = std::nullopt);

}  // namespace s2pa
