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

#include "s2pa/generators.hpp"

#include <algorithm>

#include "s2pa/errors.hpp"

namespace s2pa {

std::string to_string(Family f) {
  switch (f) {
    case Family::ud: return "ud";
    case Family::sm_table: return "sm_table";
    case Family::xos_clauses: return "xos_clauses";
    case Family::sa_table: return "sa_table";
    case Family::mon_table: return "mon_table";
    case Family::alpha_table: return "alpha_table";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  for (Family f : {Family::ud, Family::sm_table, Family::xos_clauses, Family::sa_table,
                   Family::mon_table, Family::alpha_table}) {
    if (text == to_string(f)) return f;
  }
  throw ParseError("family", "unknown generator family '" + text + "'");
}

namespace {

// Coverage function plus a budget-additive one; both are submodular.
ValuationSpec submodular_table(int m, Rng& rng, long k) {
  constexpr int kElements = 4;
  std::vector<long> weight(kElements);
  for (auto& w : weight) w = rng.between(1, k);
  std::vector<std::uint32_t> covers(m);
  for (auto& c : covers) c = static_cast<std::uint32_t>(rng.below(1U << kElements));
  std::vector<long> additive(m);
  for (auto& a : additive) a = rng.between(0, k);
  const long cap = rng.between(0, k * m);

  std::vector<Rational> entries(std::size_t{1} << m);
  for (std::uint32_t s = 0; s < entries.size(); ++s) {
    std::uint32_t covered = 0;
    long sum = 0;
    for (int j = 0; j < m; ++j) {
      if ((s >> j) & 1U) {
        covered |= covers[j];
        sum += additive[j];
      }
    }
    long value = std::min(sum, cap);
    for (int e = 0; e < kElements; ++e) {
      if ((covered >> e) & 1U) value += weight[e];
    }
    entries[s] = value;
  }
  return ValuationSpec::table(m, std::move(entries));
}

// Fills sets by increasing size. `low` and `high` give the admissible range
// for v(S) given all smaller sets.
template <typename Range>
ValuationSpec layered_table(int m, Range&& range) {
  std::vector<Rational> entries(std::size_t{1} << m, Rational(0));
  std::vector<std::uint32_t> order(entries.size());
  for (std::uint32_t s = 0; s < order.size(); ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  for (std::uint32_t s : order) {
    if (s == 0) continue;
    Rational below = 0;
    for (int j = 0; j < m; ++j) {
      if ((s >> j) & 1U) below = std::max(below, entries[s & ~(1U << j)]);
    }
    entries[s] = range(ItemSet(s), below, entries);
  }
  return ValuationSpec::table(m, std::move(entries));
}

}  // namespace

ValuationSpec random_valuation(Family family, int m, Rng& rng, const GeneratorOptions& options) {
  const long k = options.max_value;
  if (k < 1) throw InvalidArgument("max_value must be at least 1");
  if (m < 1) throw InvalidArgument("generators need at least one item");
  const bool table = family != Family::ud && family != Family::xos_clauses;
  if (table && m > kMaxGeneratedTableItems) {
    throw InvalidArgument("table families support m <= " + std::to_string(kMaxGeneratedTableItems));
  }
  if (!table && m > kMaxItems) throw InvalidArgument("too many items");

  switch (family) {
    case Family::ud: {
      std::vector<Rational> w(m);
      for (auto& x : w) x = rng.between(0, k);
      return ValuationSpec::unit_demand(std::move(w));
    }
    case Family::xos_clauses: {
      const int count = static_cast<int>(rng.between(1, std::max(1, options.max_clauses)));
      std::vector<std::vector<Rational>> clauses(count, std::vector<Rational>(m));
      for (auto& clause : clauses) {
        for (auto& x : clause) x = rng.between(0, k);
      }
      return ValuationSpec::xos(std::move(clauses));
    }
    case Family::sm_table:
      return submodular_table(m, rng, k);
    case Family::sa_table:
      return layered_table(m, [&](ItemSet s, const Rational& below, const std::vector<Rational>& e) {
        if (s.size() == 1) return Rational(rng.between(0, k));
        // v(S) <= v(A) + v(S \ A) for every split; the bound is an integer.
        Rational high;
        bool first = true;
        for_each_subset(s, [&](ItemSet a) {
          if (a.empty() || a == s) return;
          Rational split = e[a.bits()] + e[(s - a).bits()];
          if (first || split < high) high = split;
          first = false;
        });
        const long lo = below.get_num().get_si();
        const long hi = high.get_num().get_si();
        return Rational(rng.between(lo, hi));
      });
    case Family::mon_table:
      return layered_table(m, [&](ItemSet, const Rational& below, const std::vector<Rational>&) {
        return Rational(below + rng.between(0, k));
      });
    case Family::alpha_table:
      return layered_table(m, [&](ItemSet, const Rational& below, const std::vector<Rational>&) {
        return Rational(below + rng.between(1, k));
      });
  }
  throw InvalidArgument("unknown family");
}

std::vector<AuctionInstance> generate_instances(Family family, int bidders, int items,
                                                std::uint64_t seed, int count,
                                                const GeneratorOptions& options) {
  if (bidders < 1) throw InvalidArgument("generators need at least one bidder");
  if (count < 0) throw InvalidArgument("negative instance count");
  Rng rng(seed);
  std::vector<AuctionInstance> out;
  out.reserve(count);
  for (int c = 0; c < count; ++c) {
    std::vector<ValuationSpec> valuations;
    for (int i = 0; i < bidders; ++i) valuations.push_back(random_valuation(family, items, rng, options));
    out.emplace_back(std::move(valuations));
  }
  return out;
}

BidProfile random_bids(const AuctionInstance& inst, Rng& rng, long denominator) {
  if (denominator < 1) throw InvalidArgument("denominator must be positive");
  BidProfile b(inst.bidders(), inst.items());
  for (int i = 0; i < inst.bidders(); ++i) {
    const Rational top = inst.valuation(i).value(ItemSet::full(inst.items())) * denominator;
    mpz_class limit;
    mpz_fdiv_q(limit.get_mpz_t(), top.get_num_mpz_t(), top.get_den_mpz_t());
    const long hi = limit.get_si();
    for (int j = 0; j < inst.items(); ++j) b.at(i, j) = Rational(rng.between(0, hi), denominator);
  }
  for (int i = 0; i < inst.bidders(); ++i) {
    for (int j = 0; j < inst.items(); ++j) b.at(i, j).canonicalize();
  }
  return b;
}

}  // namespace s2pa
