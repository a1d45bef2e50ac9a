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
#include "s2pa/errors.hpp"
#include "s2pa/generators.hpp"
#include "s2pa/valuation.hpp"

using namespace s2pa;

namespace {

Rational q(long p, long d = 1) { return rational(p, d); }

std::vector<Rational> ints(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.push_back(q(x));
  return out;
}

ValuationSpec cardinality_table(int m, const std::vector<Rational>& by_size) {
  std::vector<Rational> e(std::size_t{1} << m);
  for (std::uint32_t s = 0; s < e.size(); ++s) e[s] = by_size[ItemSet(s).size()];
  return ValuationSpec::table(m, e);
}

}  // namespace

TEST_CASE("rationals parse and render canonically") {
  CHECK(to_string(parse_rational("4/6")) == "2/3");
  CHECK(to_string(parse_rational("-3")) == "-3");
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(" 1"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  for (long p = -7; p <= 7; ++p) {
    for (long d = 1; d <= 5; ++d) {
      const Rational r = q(p, d);
      CHECK(parse_rational(to_string(r)) == r);
    }
  }
}

TEST_CASE("item sets") {
  const ItemSet s{0, 2};
  CHECK(s.size() == 2);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(1));
  CHECK(to_string(s) == "{0,2}");
  CHECK(to_string(s, {"x", "y", "z"}) == "{x,z}");
  CHECK(s.elements() == std::vector<int>{0, 2});
  int count = 0;
  for_each_subset(ItemSet::full(4), [&](ItemSet) { ++count; });
  CHECK(count == 16);
  count = 0;
  for_each_subset(s, [&](ItemSet sub) {
    CHECK(sub.subset_of(s));
    ++count;
  });
  CHECK(count == 4);
}

TEST_CASE("value and marginal for each representation") {
  const auto add = ValuationSpec::additive(ints({1, 2, 3}));
  CHECK(add.value(ItemSet{0, 2}) == 4);
  CHECK(add.marginal(ItemSet{1}, ItemSet{0}) == 2);

  const auto ud = ValuationSpec::unit_demand(ints({3, 2}));
  CHECK(ud.value(ItemSet{0, 1}) == 3);
  CHECK(ud.marginal(ItemSet{0}, ItemSet{1}) == 1);
  CHECK(ud.value(ItemSet{}) == 0);

  const auto xos = ValuationSpec::xos({ints({2, 2, 0, 0}), ints({0, 0, 1, 1})});
  CHECK(xos.value(ItemSet{0, 1, 2, 3}) == 4);
  CHECK(xos.value(ItemSet{2, 3}) == 2);
  CHECK(xos.value(ItemSet{0, 2}) == 2);

  const auto tab = ValuationSpec::table(3, ints({0, 5, 5, 10, 10, 15, 15, 16}));
  CHECK(tab.marginal(ItemSet{0, 1}, ItemSet{2}) == 6);
  CHECK(tab.marginal(ItemSet{0}, ItemSet{2}) == 5);

  CHECK_THROWS_AS(add.value(ItemSet{3}), InvalidArgument);
}

TEST_CASE("to_table and as_xos preserve the set function") {
  Rng rng(3);
  for (auto family : {Family::ud, Family::xos_clauses}) {
    for (int k = 0; k < 20; ++k) {
      const auto v = random_valuation(family, 4, rng);
      const auto t = v.to_table();
      const auto x = v.as_xos();
      for (std::uint32_t s = 0; s < 16; ++s) {
        CHECK(t.value(ItemSet(s)) == v.value(ItemSet(s)));
        CHECK(x.value(ItemSet(s)) == v.value(ItemSet(s)));
      }
    }
  }
  CHECK_THROWS_AS(ValuationSpec::table(1, ints({0, 1})).as_xos(), InvalidArgument);
}

TEST_CASE("validation rejects malformed valuations") {
  // v({x}) > v({x,y})
  CHECK_THROWS_AS(ValuationSpec::table(2, ints({0, 3, 1, 2})), ValidationError);
  try {
    ValuationSpec::table(2, ints({0, 3, 1, 2}));
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    CHECK(what.find("{0}") != std::string::npos);
    CHECK(what.find("{0,1}") != std::string::npos);
  }
  CHECK_THROWS_AS(ValuationSpec::table(2, ints({1, 3, 3, 4})), ValidationError);
  CHECK_THROWS_AS(ValuationSpec::table(2, ints({0, 1, 1})), ValidationError);
  CHECK_THROWS_AS(ValuationSpec::additive({q(1), q(-1)}), ValidationError);
  CHECK_THROWS_AS(ValuationSpec::xos({}), ValidationError);
  CHECK_THROWS_AS(ValuationSpec::xos({ints({1, 2}), ints({1})}), ValidationError);
}

TEST_CASE("class membership agrees with brute force on random tables") {
  Rng rng(17);
  for (int k = 0; k < 150; ++k) {
    const Family family = k % 3 == 0 ? Family::mon_table : (k % 3 == 1 ? Family::sa_table : Family::sm_table);
    const int m = 2 + k % 3;
    const auto v = random_valuation(family, m, rng);
    CHECK(check_class(v, ValuationClass::monotone).holds == oracle::brute_monotone(v));
    CHECK(check_class(v, ValuationClass::subadditive).holds == oracle::brute_subadditive(v));
    CHECK(check_class(v, ValuationClass::submodular).holds == oracle::brute_submodular(v));
    // submodular ⊂ xos ⊂ subadditive
    const bool xos = check_class(v, ValuationClass::xos).holds;
    if (oracle::brute_submodular(v)) CHECK(xos);
    if (xos) CHECK(oracle::brute_subadditive(v));
  }
}

TEST_CASE("tables built from clauses are xos; witnesses point at real failures") {
  Rng rng(5);
  for (int k = 0; k < 40; ++k) {
    const auto v = random_valuation(Family::xos_clauses, 3 + k % 2, rng);
    CHECK(check_class(v.to_table(), ValuationClass::xos).holds);
    for (std::uint32_t s = 0; s < (1u << v.items()); ++s) {
      const auto a = maximizing_clause(v, ItemSet(s));
      Rational sum = 0;
      for (int j : ItemSet(s)) sum += a[j];
      CHECK(sum == v.value(ItemSet(s)));
    }
  }
  const auto not_sub = ValuationSpec::table(2, ints({0, 1, 1, 3}));
  const auto c = check_class(not_sub, ValuationClass::subadditive);
  REQUIRE_FALSE(c.holds);
  REQUIRE(c.witness);
  CHECK(not_sub.value(c.witness->s | c.witness->t) >
        not_sub.value(c.witness->s) + not_sub.value(c.witness->t));
}

TEST_CASE("alpha_star matches the brute-force triple scan") {
  Rng rng(23);
  for (int k = 0; k < 120; ++k) {
    const Family family = k % 2 ? Family::alpha_table : Family::mon_table;
    const auto v = random_valuation(family, 2 + k % 4, rng);
    const auto cert = alpha_star(v);
    CHECK(cert.alpha_star == oracle::brute_alpha(v));
    if (cert.alpha_star < 1) {
      REQUIRE(cert.witness);
      const auto& w = *cert.witness;
      const int j = *w.item;
      CHECK(w.s.subset_of(w.t));
      CHECK_FALSE(w.t.contains(j));
      CHECK(v.marginal(ItemSet::single(j), w.s) == cert.alpha_star * v.marginal(ItemSet::single(j), w.t));
    } else {
      CHECK_FALSE(cert.witness);
    }
  }
}

TEST_CASE("submodular and alpha families") {
  Rng rng(1);
  for (int k = 0; k < 30; ++k) {
    CHECK(alpha_star(random_valuation(Family::sm_table, 3, rng)).alpha_star == 1);
    CHECK(alpha_star(random_valuation(Family::alpha_table, 3, rng)).alpha_star > 0);
  }
}

TEST_CASE("cardinality examples") {
  // 1 on singletons and pairs, 3/2 on the full set
  const auto b1 = cardinality_table(3, {q(0), q(1), q(1), q(3, 2)});
  CHECK(check_class(b1, ValuationClass::xos).holds);
  const auto a1 = alpha_star(b1);
  CHECK(a1.alpha_star == 0);
  REQUIRE(a1.witness);
  CHECK(b1.marginal(ItemSet::single(*a1.witness->item), a1.witness->s) == 0);

  for (auto alpha : {q(0), q(1, 3), q(1, 2), q(2, 3), q(1)}) {
    const auto v = cardinality_table(3, {q(0), q(2), Rational(2 * (1 + alpha)), Rational(2 * (2 + alpha))});
    CHECK(alpha_star(v).alpha_star == alpha);
    CHECK(check_class(v, ValuationClass::xos).holds == (alpha == 1));
    CHECK(check_class(v, ValuationClass::subadditive).holds);
  }
}

TEST_CASE("permutation supports and prefix permutations") {
  const auto v = ValuationSpec::table(3, ints({0, 5, 5, 10, 10, 15, 15, 16}));
  const auto sup = permutation_supports(v, {{0, 1, 2}, {2, 0, 1}});
  CHECK(sup[0] == ints({5, 5, 6}));
  CHECK(sup[1] == ints({5, 1, 10}));
  CHECK(prefix_permutation(4, ItemSet{1, 3}) == std::vector<int>{1, 3, 0, 2});
  CHECK_THROWS_AS(permutation_supports(v, {{0, 0, 1}}), InvalidArgument);

  // For submodular v every permutation support is dominated by v.
  Rng rng(8);
  for (int k = 0; k < 20; ++k) {
    const auto sm = random_valuation(Family::sm_table, 3, rng);
    for (const auto& a : permutation_supports(sm, {{0, 1, 2}, {1, 2, 0}, {2, 1, 0}})) {
      for (std::uint32_t s = 0; s < 8; ++s) {
        Rational sum = 0;
        for (int j : ItemSet(s)) sum += a[j];
        CHECK(sum <= sm.value(ItemSet(s)));
      }
    }
  }
}

TEST_CASE("supporting clauses on tables") {
  const auto v = ValuationSpec::table(2, ints({0, 2, 2, 3}));
  const auto a = supporting_clause(v, ItemSet{0, 1});
  REQUIRE(a);
  CHECK((*a)[0] + (*a)[1] == 3);
  CHECK((*a)[0] <= 2);
  CHECK((*a)[1] <= 2);
  const auto b2 = cardinality_table(3, {q(0), q(2), q(3), q(5)});
  CHECK_FALSE(supporting_clause(b2, ItemSet::full(3)));
  CHECK_THROWS_AS(maximizing_clause(b2, ItemSet::full(3)), PreconditionError);
}
