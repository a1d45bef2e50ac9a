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

// Independent reference implementations used only by the tests. They follow
// the definitions literally and share no code paths with the library beyond
// ValuationSpec::value and the data types.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "s2pa/auction.hpp"
#include "s2pa/equilibria.hpp"
#include "s2pa/rational.hpp"
#include "s2pa/valuation.hpp"

namespace oracle {

using s2pa::Allocation;
using s2pa::AuctionInstance;
using s2pa::BidProfile;
using s2pa::ItemSet;
using s2pa::Rational;
using s2pa::ValuationSpec;

struct Opt {
  Rational value;
  std::set<std::vector<std::uint32_t>> maximizers;
};

inline std::vector<std::uint32_t> bits(const Allocation& a) {
  std::vector<std::uint32_t> out;
  for (auto s : a) out.push_back(s.bits());
  return out;
}

// Every one of the n^m assignments.
inline Opt naive_opt(const AuctionInstance& inst) {
  const int n = inst.bidders(), m = inst.items();
  std::vector<int> owner(m, 0);
  Opt best;
  bool first = true;
  while (true) {
    Allocation a(n);
    for (int j = 0; j < m; ++j) a[owner[j]] = a[owner[j]].with(j);
    Rational w = 0;
    for (int i = 0; i < n; ++i) w += inst.valuation(i).value(a[i]);
    if (first || w > best.value) {
      best.value = w;
      best.maximizers.clear();
      first = false;
    }
    if (w == best.value) best.maximizers.insert(bits(a));
    int j = 0;
    while (j < m && ++owner[j] == n) owner[j++] = 0;
    if (j == m) break;
  }
  return best;
}

struct NaiveOutcome {
  std::vector<int> winner;
  std::vector<Rational> price;
  Allocation allocation;
  std::vector<Rational> utility;
  Rational welfare;
  Rational revenue;
};

// Item by item: highest bid wins, ties to the earliest bidder in the
// tie-break list, price is the highest other bid (s2pa) or the own bid (s1pa).
inline NaiveOutcome naive_auction(const AuctionInstance& inst, const BidProfile& b) {
  const int n = inst.bidders(), m = inst.items();
  NaiveOutcome out;
  out.allocation.assign(n, ItemSet{});
  out.utility.assign(n, Rational(0));
  std::vector<Rational> paid(n, Rational(0));
  std::vector<int> order = inst.tie_break();
  for (int j = 0; j < m; ++j) {
    int w = order[0];
    for (int i : order) {
      if (b.at(i, j) > b.at(w, j)) w = i;
    }
    Rational second = 0;
    for (int i = 0; i < n; ++i) {
      if (i != w) second = std::max(second, b.at(i, j));
    }
    const Rational p = inst.mechanism() == s2pa::Mechanism::s2pa ? second : b.at(w, j);
    out.winner.push_back(w);
    out.price.push_back(p);
    out.allocation[w] = out.allocation[w].with(j);
    paid[w] += p;
    out.revenue += p;
  }
  for (int i = 0; i < n; ++i) {
    const Rational v = inst.valuation(i).value(out.allocation[i]);
    out.welfare += v;
    out.utility[i] = v - paid[i];
  }
  return out;
}

// Largest α in [0,1] with v(j|S) >= α v(j|T) over S ⊆ T, j ∉ T.
inline Rational brute_alpha(const ValuationSpec& v) {
  const int m = v.items();
  const std::uint32_t full = (1u << m) - 1;
  Rational alpha = 1;
  for (std::uint32_t t = 0; t <= full; ++t) {
    for (std::uint32_t s = 0; s <= full; ++s) {
      if ((s & ~t) != 0) continue;
      for (int j = 0; j < m; ++j) {
        if ((t >> j) & 1u) continue;
        const Rational mt = v.value(ItemSet(t | (1u << j))) - v.value(ItemSet(t));
        if (mt <= 0) continue;
        const Rational ms = v.value(ItemSet(s | (1u << j))) - v.value(ItemSet(s));
        alpha = std::min(alpha, Rational(ms / mt));
      }
    }
  }
  return alpha;
}

inline bool brute_monotone(const ValuationSpec& v) {
  const std::uint32_t full = (1u << v.items()) - 1;
  for (std::uint32_t t = 0; t <= full; ++t)
    for (std::uint32_t s = 0; s <= full; ++s)
      if ((s & ~t) == 0 && v.value(ItemSet(s)) > v.value(ItemSet(t))) return false;
  return v.value(ItemSet{}) == 0;
}

inline bool brute_subadditive(const ValuationSpec& v) {
  const std::uint32_t full = (1u << v.items()) - 1;
  for (std::uint32_t s = 0; s <= full; ++s)
    for (std::uint32_t t = 0; t <= full; ++t)
      if (v.value(ItemSet(s | t)) > v.value(ItemSet(s)) + v.value(ItemSet(t))) return false;
  return true;
}

inline bool brute_submodular(const ValuationSpec& v) {
  const std::uint32_t full = (1u << v.items()) - 1;
  for (std::uint32_t s = 0; s <= full; ++s)
    for (std::uint32_t t = 0; t <= full; ++t)
      if (v.value(ItemSet(s | t)) + v.value(ItemSet(s & t)) > v.value(ItemSet(s)) + v.value(ItemSet(t)))
        return false;
  return true;
}

// Calls f on every row of grid points.
inline void for_each_grid_row(int m, const std::vector<Rational>& points,
                              const std::function<void(const std::vector<Rational>&)>& f) {
  std::vector<std::size_t> idx(m, 0);
  std::vector<Rational> row(m, points[0]);
  while (true) {
    f(row);
    int j = 0;
    while (j < m && ++idx[j] == points.size()) {
      idx[j] = 0;
      row[j] = points[0];
      ++j;
    }
    if (j == m) return;
    row[j] = points[idx[j]];
  }
}

inline Rational naive_best_utility(const AuctionInstance& inst, int bidder, const BidProfile& b,
                                   const s2pa::BidGrid& grid) {
  Rational best;
  bool first = true;
  for_each_grid_row(inst.items(), grid.points(), [&](const std::vector<Rational>& row) {
    BidProfile d = b;
    for (int j = 0; j < inst.items(); ++j) d.at(bidder, j) = row[j];
    const Rational u = naive_auction(inst, d).utility[bidder];
    if (first || u > best) best = u;
    first = false;
  });
  return best;
}

inline bool naive_pne(const AuctionInstance& inst, const BidProfile& b, const s2pa::BidGrid& grid) {
  const auto now = naive_auction(inst, b);
  for (int i = 0; i < inst.bidders(); ++i) {
    if (naive_best_utility(inst, i, b, grid) > now.utility[i]) return false;
  }
  return true;
}

// S_i(b_{-j}): items other than j won by i.
inline ItemSet won_without(const AuctionInstance& inst, const BidProfile& b, int i, int j) {
  const auto out = naive_auction(inst, b);
  return out.allocation[i].without(j);
}

inline bool naive_nob(const AuctionInstance& inst, const BidProfile& b) {
  const auto out = naive_auction(inst, b);
  for (int i = 0; i < inst.bidders(); ++i) {
    Rational sum = 0;
    for (int j : out.allocation[i]) sum += b.at(i, j);
    if (sum > inst.valuation(i).value(out.allocation[i])) return false;
  }
  return true;
}

inline bool naive_strong_nob(const AuctionInstance& inst, const BidProfile& b) {
  const std::uint32_t full = (1u << inst.items()) - 1;
  for (int i = 0; i < inst.bidders(); ++i)
    for (std::uint32_t s = 0; s <= full; ++s) {
      Rational sum = 0;
      for (int j : ItemSet(s)) sum += b.at(i, j);
      if (sum > inst.valuation(i).value(ItemSet(s))) return false;
    }
  return true;
}

inline Allocation to_allocation(const std::vector<std::uint32_t>& a) {
  Allocation out;
  for (auto s : a) out.push_back(ItemSet(s));
  return out;
}

// Shared witness: one maximizer certifies every bidder.
inline bool naive_inub(const AuctionInstance& inst, const BidProfile& b, const Opt& opt) {
  const auto out = naive_auction(inst, b);
  for (const auto& bits : opt.maximizers) {
    const Allocation star = to_allocation(bits);
    bool ok = true;
    for (int i = 0; i < inst.bidders() && ok; ++i) {
      for (int j : star[i] - out.allocation[i]) {
        const ItemSet won = out.allocation[i].without(j);
        if (b.at(i, j) < inst.valuation(i).value(won.with(j)) - inst.valuation(i).value(won)) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

inline bool naive_snub(const AuctionInstance& inst, const BidProfile& b, const Opt& opt) {
  const auto out = naive_auction(inst, b);
  for (const auto& bits : opt.maximizers) {
    const Allocation star = to_allocation(bits);
    bool ok = true;
    for (int i = 0; i < inst.bidders() && ok; ++i) {
      const ItemSet extra = star[i] - out.allocation[i];
      Rational sum = 0;
      for (int j : extra) sum += b.at(i, j);
      const auto& v = inst.valuation(i);
      if (sum < v.value(extra | out.allocation[i]) - v.value(out.allocation[i])) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace oracle
