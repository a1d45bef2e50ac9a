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
#include <string>
#include <vector>

#include "s2pa/auction.hpp"
#include "s2pa/distribution.hpp"
#include "s2pa/equilibria.hpp"
#include "s2pa/report.hpp"

namespace s2pa {

/// One operation invocation. `params` and `expect` hold canonical JSON text.
struct CheckSpec {
  std::string name;
  std::string op;
  std::string params = "{}";
  std::optional<std::string> expect;

  bool operator==(const CheckSpec&) const = default;
};

struct Scenario {
  std::string name{};
  std::string description{};
  AuctionInstance instance;
  std::vector<std::string> item_names{};
  std::optional<BidProfile> bids{};
  std::optional<BidGrid> grid{};
  /// Bayesian inputs: per-bidder type lists, a type distribution and strategies.
  std::optional<BayesianSetting> setting{};
  std::optional<TypeDistribution> type_distribution{};
  std::optional<StrategyProfile> strategies{};
  /// Correlated distribution over bid profiles (CCE checks).
  std::optional<ProfileDistribution> profile_distribution{};
  std::vector<CheckSpec> checks{};
  std::uint64_t seed = 0;
};

/// Parses scenario JSON. Throws ParseError naming the field (and the line for
/// syntax errors) or ValidationError for invalid valuations.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

/// Canonical JSON form; parse_scenario(scenario_to_json(s)) reproduces s.
std::string scenario_to_json(const Scenario& s);

struct RunOptions {
  std::optional<std::vector<int>> tie_break;
  std::optional<Rational> grid_step;
  std::optional<Rational> grid_max;
  std::optional<std::uint64_t> seed;
  /// Applies to welfare search and PNE enumeration.
  std::optional<std::uint64_t> budget;
  bool timing = false;
};

/// Runs every check in order. A check with `expect` holds iff every expected
/// field matches; otherwise it reports the operation's own verdict.
Report run_scenario(const Scenario& s, const RunOptions& options = {});

/// Names accepted by catalog_scenario, with their default parameters.
std::vector<std::string> catalog_names();

/// "ex-1.1", "ex-xos-inub(m=6)", "ex-single-minded(R=1000)", "app-b2(alpha=1/3)", ...
/// Throws InvalidArgument for unknown names.
Scenario catalog_scenario(const std::string& name);
Report run_catalog(const std::string& name, const RunOptions& options = {});

/// Scenario wrapping a generated instance, with no checks.
Scenario scenario_from_instance(const AuctionInstance& inst, const std::string& name);

}  // namespace s2pa
