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

#include "doctest.h"
#include "oracles.hpp"
#include "s2pa/bid_properties.hpp"
#include "s2pa/errors.hpp"
#include "s2pa/generators.hpp"
#include "s2pa/welfare.hpp"

using namespace s2pa;

namespace {

std::vector<Rational> ints(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.push_back(Rational(x));
  return out;
}

AuctionInstance ud_pair(std::initializer_list<long> a, std::initializer_list<long> b) {
  return AuctionInstance({ValuationSpec::unit_demand(ints(a)), ValuationSpec::unit_demand(ints(b))});
}

AuctionInstance appendix_d() {
  return AuctionInstance({ValuationSpec::table(3, ints({0, 5, 5, 10, 10, 15, 15, 16})),
                          ValuationSpec::table(3, ints({0, 8, 8, 14, 15, 15, 15, 15}))});
}

}  // namespace

TEST_CASE("property names round-trip") {
  for (auto p : {Property::nob, Property::strong_nob, Property::inub, Property::snub, Property::snub_expected}) {
    CHECK(parse_property(to_string(p)) == p);
  }
  CHECK_THROWS_AS(parse_property("bogus"), ParseError);
}

TEST_CASE("underbidding on the unit-demand example") {
  const auto inst = ud_pair({2, 1}, {1, 2});
  const BidProfile b({ints({0, 1}), ints({1, 0})});
  const auto opt = optimal_allocations(inst);
  CHECK(check_nob(inst, b).holds);
  const auto inub = check_inub(inst, b, opt.maximizers);
  CHECK_FALSE(inub.holds);
  REQUIRE_FALSE(inub.violations.empty());
  CHECK(inub.violations.front().bidder == 0);
  CHECK(inub.violations.front().items == ItemSet{0});
  CHECK(inub.violations.front().required == 1);
  CHECK(inub.violations.front().actual == 0);
  CHECK(is_item_underbid(inst, b, 0, 0));
  CHECK_FALSE(is_item_underbid(inst, b, 0, 1));
  CHECK_FALSE(check_snub(inst, b, opt.maximizers).holds);
}

TEST_CASE("sNUB without iNUB") {
  const auto inst = appendix_d();
  const BidProfile b({ints({3, 3, 8}), ints({8, 8, 2})});
  const auto opt = optimal_allocations(inst);
  CHECK(check_snub(inst, b, opt.maximizers).holds);
  const auto inub = check_inub(inst, b, opt.maximizers);
  CHECK_FALSE(inub.holds);
  CHECK(inub.violations.front().required == 5);
  CHECK(inub.violations.front().actual == 3);
}

TEST_CASE("property checks agree with their definitions") {
  Rng rng(77);
  for (auto family : {Family::ud, Family::sm_table, Family::xos_clauses, Family::mon_table}) {
    for (const auto& inst : generate_instances(family, 2 + (family == Family::ud), 3, 6, 20)) {
      const auto opt = optimal_allocations(inst);
      const auto ref = oracle::naive_opt(inst);
      for (int t = 0; t < 8; ++t) {
        const BidProfile b = random_bids(inst, rng);
        CHECK(check_nob(inst, b).holds == oracle::naive_nob(inst, b));
        CHECK(check_nob(inst, b, true).holds == oracle::naive_strong_nob(inst, b));
        CHECK(check_inub(inst, b, opt.maximizers).holds == oracle::naive_inub(inst, b, ref));
        CHECK(check_snub(inst, b, opt.maximizers).holds == oracle::naive_snub(inst, b, ref));
        const auto shared = check_snub(inst, b, opt.maximizers);
        if (shared.holds) {
          REQUIRE(shared.witness_allocation);
          CHECK(welfare_of(inst, *shared.witness_allocation) == ref.value);
          CHECK(check_snub(inst, b, opt.maximizers, WitnessMode::per_bidder).holds);
        }
      }
    }
  }
}

TEST_CASE("iNUB implies sNUB for submodular bidders") {
  Rng rng(4);
  int inub_seen = 0;
  for (const auto& inst : generate_instances(Family::sm_table, 2, 3, 10, 60)) {
    const auto opt = optimal_allocations(inst);
    for (int t = 0; t < 20; ++t) {
      const BidProfile b = random_bids(inst, rng);
      if (!check_inub(inst, b, opt.maximizers).holds) continue;
      ++inub_seen;
      CHECK(check_snub(inst, b, opt.maximizers).holds);
    }
  }
  CHECK(inub_seen > 50);
}

TEST_CASE("bidding the marginal weakly dominates underbidding") {
  const auto inst = appendix_d();
  const BidProfile b({ints({3, 3, 8}), ints({8, 8, 2})});
  const auto r = dominance_check(inst, 0, 0, b, Rational(3));
  CHECK(r.confirmed);
  CHECK(r.marginal == 5);
  CHECK_FALSE(r.counterexample);
  CHECK(r.strict_opponent == 1);
  CHECK(r.strict_witness.column[1] == 4);
  CHECK(r.strict_witness.utility_marginal > r.strict_witness.utility_under);
  CHECK_THROWS_AS(dominance_check(inst, 0, 0, b, Rational(5)), PreconditionError);

  Rng rng(6);
  for (const auto& g : generate_instances(Family::mon_table, 3, 3, 8, 30)) {
    const BidProfile bb = random_bids(g, rng);
    const Rational w = g.valuation(1).marginal(ItemSet{2}, won_items_excluding(g, bb, 1, 2));
    if (w == 0) continue;
    const auto d = dominance_check(g, 1, 2, bb, Rational(w / 3), {{Rational(0), Rational(0), w}});
    CHECK(d.confirmed);
    for (const auto& p : d.probes) CHECK(p.utility_marginal >= p.utility_under);
  }
}

TEST_CASE("flat optimal profiles pass NOB and sNUB and realize OPT") {
  for (auto family : {Family::mon_table, Family::xos_clauses, Family::ud}) {
    for (const auto& inst : generate_instances(family, 3, 3, 12, 25)) {
      const auto opt = optimal_allocations(inst);
      const BidProfile b = construct_flat_optimal_profile(inst, opt.maximizers.front());
      CHECK(check_nob(inst, b).holds);
      CHECK(check_snub(inst, b, opt.maximizers).holds);
      CHECK(run_auction(inst, b).welfare == opt.opt_value);
    }
  }
  const auto inst = ud_pair({3, 2}, {2, 3});
  CHECK(construct_flat_optimal_profile(inst, {ItemSet{0}, ItemSet{1}}) ==
        BidProfile({ints({3, 0}), ints({0, 3})}));
}

TEST_CASE("expected sNUB over a correlated type distribution") {
  // Each bidder is either a low or a high unit-demand type.
  const BayesianSetting setting({{ValuationSpec::unit_demand(ints({2, 1})), ValuationSpec::unit_demand(ints({4, 2}))},
                                 {ValuationSpec::unit_demand(ints({1, 2})), ValuationSpec::unit_demand(ints({2, 4}))}});
  const TypeDistribution dist({{{0, 0}, rational(1, 2)}, {{1, 1}, rational(1, 2)}});
  const auto truthful = StrategyProfile::pure({{ints({2, 0}), ints({4, 0})}, {ints({0, 2}), ints({0, 4})}});
  CHECK(check_snub_expected(setting, truthful, dist).holds);
  const auto shy = StrategyProfile::pure({{ints({0, 1}), ints({0, 2})}, {ints({1, 0}), ints({2, 0})}});
  const auto r = check_snub_expected(setting, shy, dist);
  CHECK_FALSE(r.holds);
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations.front().type);
}
