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

#include "s2pa/valuation.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "s2pa/errors.hpp"
#include "s2pa/lp.hpp"

namespace s2pa {

std::string to_string(ValuationKind kind) {
  switch (kind) {
    case ValuationKind::additive: return "additive";
    case ValuationKind::unit_demand: return "unit_demand";
    case ValuationKind::xos: return "xos";
    case ValuationKind::table: return "table";
  }
  return "?";
}

ValuationKind parse_valuation_kind(const std::string& text) {
  if (text == "additive") return ValuationKind::additive;
  if (text == "unit_demand") return ValuationKind::unit_demand;
  if (text == "xos") return ValuationKind::xos;
  if (text == "table") return ValuationKind::table;
  throw ParseError("kind", "unknown valuation kind '" + text + "'");
}

std::string to_string(ValuationClass c) {
  switch (c) {
    case ValuationClass::monotone: return "monotone";
    case ValuationClass::subadditive: return "subadditive";
    case ValuationClass::submodular: return "submodular";
    case ValuationClass::xos: return "xos";
  }
  return "?";
}

ValuationClass parse_valuation_class(const std::string& text) {
  if (text == "monotone") return ValuationClass::monotone;
  if (text == "subadditive") return ValuationClass::subadditive;
  if (text == "submodular") return ValuationClass::submodular;
  if (text == "xos") return ValuationClass::xos;
  throw ParseError("class", "unknown valuation class '" + text + "'");
}

namespace {

void require_nonnegative(const std::vector<Rational>& xs, const char* what) {
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (xs[j] < 0) {
      throw ValidationError(std::string(what) + " entry " + std::to_string(j) +
                            " is negative");
    }
  }
}

void require_item_count(std::size_t m) {
  if (m == 0) throw ValidationError("valuation over zero items");
  if (m > static_cast<std::size_t>(kMaxItems)) {
    throw ValidationError("valuation over more than " + std::to_string(kMaxItems) + " items");
  }
}

void validate_table(int m, const std::vector<Rational>& entries) {
  if (entries.size() != (std::size_t{1} << m)) {
    throw ValidationError("table needs 2^m = " + std::to_string(std::size_t{1} << m) +
                          " entries, got " + std::to_string(entries.size()));
  }
  if (entries[0] != 0) throw ValidationError("table is not normalized: v({}) != 0");
  for (std::uint32_t mask = 0; mask < entries.size(); ++mask) {
    for (int j = 0; j < m; ++j) {
      if ((mask >> j) & 1U) continue;
      const std::uint32_t bigger = mask | (std::uint32_t{1} << j);
      if (entries[mask] > entries[bigger]) {
        throw ValidationError("table is not monotone: v(" + to_string(ItemSet(mask)) + ") = " +
                              to_string(entries[mask]) + " > v(" + to_string(ItemSet(bigger)) +
                              ") = " + to_string(entries[bigger]));
      }
    }
  }
}

Rational clause_sum(const std::vector<Rational>& clause, ItemSet s) {
  Rational total = 0;
  for (int j : s) total += clause[j];
  return total;
}

}  // namespace

ValuationSpec::ValuationSpec(int items, Data data) : items_(items), data_(std::move(data)) {}

ValuationSpec ValuationSpec::additive(std::vector<Rational> weights) {
  require_item_count(weights.size());
  require_nonnegative(weights, "additive");
  const int m = static_cast<int>(weights.size());
  return ValuationSpec(m, Additive{std::move(weights)});
}

ValuationSpec ValuationSpec::unit_demand(std::vector<Rational> weights) {
  require_item_count(weights.size());
  require_nonnegative(weights, "unit_demand");
  const int m = static_cast<int>(weights.size());
  return ValuationSpec(m, UnitDemand{std::move(weights)});
}

ValuationSpec ValuationSpec::xos(std::vector<std::vector<Rational>> clauses) {
  if (clauses.empty()) throw ValidationError("xos valuation needs at least one clause");
  require_item_count(clauses.front().size());
  for (const auto& clause : clauses) {
    if (clause.size() != clauses.front().size()) {
      throw ValidationError("xos clauses have different lengths");
    }
    require_nonnegative(clause, "xos clause");
  }
  const int m = static_cast<int>(clauses.front().size());
  return ValuationSpec(m, Xos{std::move(clauses)});
}

ValuationSpec ValuationSpec::table(int items, std::vector<Rational> entries) {
  if (items <= 0 || items > kMaxTableItems) {
    throw ValidationError("table valuations support 1.." + std::to_string(kMaxTableItems) +
                          " items");
  }
  require_nonnegative(entries, "table");
  validate_table(items, entries);
  return ValuationSpec(items, Table{std::move(entries)});
}

ValuationKind ValuationSpec::kind() const { return static_cast<ValuationKind>(data_.index()); }

const std::vector<Rational>& ValuationSpec::weights() const {
  if (const auto* a = std::get_if<Additive>(&data_)) return a->weights;
  if (const auto* u = std::get_if<UnitDemand>(&data_)) return u->weights;
  throw InvalidArgument("weights() on a " + to_string(kind()) + " valuation");
}

const std::vector<std::vector<Rational>>& ValuationSpec::clauses() const {
  if (const auto* x = std::get_if<Xos>(&data_)) return x->clauses;
  throw InvalidArgument("clauses() on a " + to_string(kind()) + " valuation");
}

const std::vector<Rational>& ValuationSpec::entries() const {
  if (const auto* t = std::get_if<Table>(&data_)) return t->entries;
  throw InvalidArgument("entries() on a " + to_string(kind()) + " valuation");
}

void ValuationSpec::check_range(ItemSet s) const {
  if (!s.subset_of(ItemSet::full(items_))) {
    throw InvalidArgument("item set " + to_string(s) + " outside [0, " + std::to_string(items_) +
                          ")");
  }
}

Rational ValuationSpec::value(ItemSet s) const {
  check_range(s);
  switch (kind()) {
    case ValuationKind::additive:
      return clause_sum(std::get<Additive>(data_).weights, s);
    case ValuationKind::unit_demand: {
      const auto& w = std::get<UnitDemand>(data_).weights;
      Rational best = 0;
      for (int j : s) {
        if (w[j] > best) best = w[j];
      }
      return best;
    }
    case ValuationKind::xos: {
      Rational best = 0;
      for (const auto& clause : std::get<Xos>(data_).clauses) {
        Rational v = clause_sum(clause, s);
        if (v > best) best = v;
      }
      return best;
    }
    case ValuationKind::table:
      return std::get<Table>(data_).entries[s.bits()];
  }
  return 0;
}

Rational ValuationSpec::marginal(ItemSet t, ItemSet s) const {
  return value(s | t) - value(s);
}

ValuationSpec ValuationSpec::to_table() const {
  if (kind() == ValuationKind::table) return *this;
  if (items_ > kMaxTableItems) throw BudgetExceeded("to_table: too many items");
  std::vector<Rational> entries(std::size_t{1} << items_);
  for (std::uint32_t mask = 0; mask < entries.size(); ++mask) entries[mask] = value(ItemSet(mask));
  return ValuationSpec(items_, Table{std::move(entries)});
}

ValuationSpec ValuationSpec::as_xos() const {
  switch (kind()) {
    case ValuationKind::xos:
      return *this;
    case ValuationKind::additive:
      return xos({weights()});
    case ValuationKind::unit_demand: {
      std::vector<std::vector<Rational>> clauses;
      for (int j = 0; j < items_; ++j) {
        std::vector<Rational> clause(items_, Rational(0));
        clause[j] = weights()[j];
        clauses.push_back(std::move(clause));
      }
      return xos(std::move(clauses));
    }
    case ValuationKind::table:
      break;
  }
  throw InvalidArgument("as_xos: table valuations have no clause list");
}

void validate(const ValuationSpec& v) {
  switch (v.kind()) {
    case ValuationKind::additive:
    case ValuationKind::unit_demand:
      require_item_count(v.weights().size());
      require_nonnegative(v.weights(), to_string(v.kind()).c_str());
      break;
    case ValuationKind::xos:
      for (const auto& clause : v.clauses()) {
        if (static_cast<int>(clause.size()) != v.items()) {
          throw ValidationError("xos clause length differs from item count");
        }
        require_nonnegative(clause, "xos clause");
      }
      break;
    case ValuationKind::table:
      validate_table(v.items(), v.entries());
      break;
  }
}

namespace {

void require_budget(const ValuationSpec& v, int limit, const char* what) {
  if (v.items() > limit) {
    throw BudgetExceeded(std::string(what) + ": m = " + std::to_string(v.items()) +
                         " exceeds the enumeration budget of " + std::to_string(limit));
  }
}

// Visits every (S ⊂ T, j ∉ T), T in increasing bitmask order. The visitor
// returns false to stop the scan.
template <typename Visit>
void for_each_triple(int m, Visit&& visit) {
  const std::uint32_t all = ItemSet::full(m).bits();
  for (std::uint32_t t = 0; t <= all; ++t) {
    for (int j = 0; j < m; ++j) {
      if ((t >> j) & 1U) continue;
      bool stop = false;
      for_each_subset(ItemSet(t), [&](ItemSet s) {
        if (stop || s.bits() == t) return;
        stop = !visit(s, ItemSet(t), j);
      });
      if (stop) return;
    }
  }
}

}  // namespace

std::optional<std::vector<Rational>> supporting_clause(const ValuationSpec& v, ItemSet s) {
  const Rational target = v.value(s);
  std::vector<Rational> clause(v.items(), Rational(0));
  if (target == 0) return clause;

  const std::vector<int> members = s.elements();
  const std::size_t k = members.size();
  lp::Problem problem;
  problem.c.assign(k, Rational(1));
  for (std::uint32_t sub = 1; sub < (std::uint32_t{1} << k); ++sub) {
    std::vector<Rational> row(k, Rational(0));
    ItemSet t;
    for (std::size_t idx = 0; idx < k; ++idx) {
      if ((sub >> idx) & 1U) {
        row[idx] = 1;
        t = t.with(members[idx]);
      }
    }
    problem.a.push_back(std::move(row));
    problem.b.push_back(v.value(t));
  }
  const lp::Solution sol = lp::maximize(problem);
  if (!sol.bounded || sol.value < target) return std::nullopt;
  for (std::size_t idx = 0; idx < k; ++idx) clause[members[idx]] = sol.x[idx];
  return clause;
}

ClassCheck check_class(const ValuationSpec& v, ValuationClass c, EnumerationBudget budget) {
  const ValuationKind kind = v.kind();
  const int m = v.items();
  const bool structural_sm = kind == ValuationKind::additive || kind == ValuationKind::unit_demand;
  const bool structural_xos = structural_sm || kind == ValuationKind::xos;

  switch (c) {
    case ValuationClass::monotone: {
      if (kind != ValuationKind::table) return {};
      const auto& e = v.entries();
      for (std::uint32_t mask = 0; mask < e.size(); ++mask) {
        for (int j = 0; j < m; ++j) {
          const std::uint32_t bigger = mask | (std::uint32_t{1} << j);
          if (e[mask] > e[bigger]) {
            return {false, ClassWitness{ItemSet(mask), ItemSet(bigger), std::nullopt}};
          }
        }
      }
      return {};
    }
    case ValuationClass::subadditive: {
      if (structural_xos) return {};
      require_budget(v, budget.max_items, "check_class(subadditive)");
      const auto& e = v.entries();
      const std::uint32_t all = ItemSet::full(m).bits();
      for (std::uint32_t s = 0; s <= all; ++s) {
        for (std::uint32_t t = s; t <= all; ++t) {
          if (e[s] + e[t] < e[s | t]) {
            return {false, ClassWitness{ItemSet(s), ItemSet(t), std::nullopt}};
          }
        }
      }
      return {};
    }
    case ValuationClass::submodular: {
      if (structural_sm) return {};
      require_budget(v, budget.max_items, "check_class(submodular)");
      const ValuationSpec table = v.to_table();
      const auto& e = table.entries();
      ClassCheck result;
      for_each_triple(m, [&](ItemSet s, ItemSet t, int j) {
        const Rational small = e[s.with(j).bits()] - e[s.bits()];
        const Rational large = e[t.with(j).bits()] - e[t.bits()];
        if (small < large) {
          result = {false, ClassWitness{s, t, j}};
          return false;
        }
        return true;
      });
      return result;
    }
    case ValuationClass::xos: {
      if (structural_xos) return {};
      require_budget(v, budget.max_items, "check_class(xos)");
      const std::uint32_t all = ItemSet::full(m).bits();
      for (std::uint32_t s = 1; s <= all; ++s) {
        if (!supporting_clause(v, ItemSet(s))) {
          return {false, ClassWitness{ItemSet(s), ItemSet(s), std::nullopt}};
        }
      }
      return {};
    }
  }
  return {};
}

AlphaCertificate alpha_star(const ValuationSpec& v, EnumerationBudget budget) {
  require_budget(v, budget.max_items + 4, "alpha_star");
  const ValuationSpec table = v.to_table();
  const auto& e = table.entries();
  AlphaCertificate cert{Rational(1), std::nullopt};
  for_each_triple(v.items(), [&](ItemSet s, ItemSet t, int j) {
    const Rational large = e[t.with(j).bits()] - e[t.bits()];
    if (large <= 0) return true;
    const Rational small = e[s.with(j).bits()] - e[s.bits()];
    Rational ratio = small / large;
    if (ratio < cert.alpha_star) {
      cert.alpha_star = ratio;
      cert.witness = ClassWitness{s, t, j};
    }
    return cert.alpha_star > 0;
  });
  return cert;
}

std::vector<int> prefix_permutation(int items, ItemSet s) {
  std::vector<int> perm = s.elements();
  for (int j : ItemSet::full(items) - s) perm.push_back(j);
  return perm;
}

std::vector<std::vector<Rational>> permutation_supports(
    const ValuationSpec& v, const std::vector<std::vector<int>>& perms) {
  const int m = v.items();
  std::vector<std::vector<Rational>> supports;
  supports.reserve(perms.size());
  for (const auto& perm : perms) {
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected(m);
    std::iota(expected.begin(), expected.end(), 0);
    if (sorted != expected) throw InvalidArgument("not a permutation of the items");

    std::vector<Rational> a(m);
    ItemSet before;
    Rational prev = 0;
    for (int j : perm) {
      before = before.with(j);
      Rational cur = v.value(before);
      a[j] = cur - prev;
      prev = cur;
    }
    supports.push_back(std::move(a));
  }
  return supports;
}

std::vector<Rational> maximizing_clause(const ValuationSpec& v, ItemSet s) {
  switch (v.kind()) {
    case ValuationKind::xos: {
      const auto& clauses = v.clauses();
      std::size_t best = 0;
      Rational best_value = clause_sum(clauses[0], s);
      for (std::size_t l = 1; l < clauses.size(); ++l) {
        Rational value = clause_sum(clauses[l], s);
        if (value > best_value) {
          best = l;
          best_value = value;
        }
      }
      return clauses[best];
    }
    case ValuationKind::additive:
      return v.weights();
    case ValuationKind::unit_demand: {
      std::vector<Rational> clause(v.items(), Rational(0));
      int arg = -1;
      for (int j : s) {
        if (arg < 0 || v.weights()[j] > v.weights()[arg]) arg = j;
      }
      if (arg >= 0) clause[arg] = v.weights()[arg];
      return clause;
    }
    case ValuationKind::table: {
      auto clause = supporting_clause(v, s);
      if (!clause) {
        throw PreconditionError("no additive clause supports " + to_string(s) +
                                ": valuation is not xos");
      }
      return *clause;
    }
  }
  return {};
}

std::string describe(const ValuationSpec& v) {
  auto list = [](const std::vector<Rational>& xs) {
    std::string out = "(";
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (k) out += ',';
      out += to_string(xs[k]);
    }
    return out + ")";
  };
  switch (v.kind()) {
    case ValuationKind::additive:
    case ValuationKind::unit_demand:
      return to_string(v.kind()) + list(v.weights());
    case ValuationKind::xos: {
      std::string out = "xos[";
      for (std::size_t l = 0; l < v.clauses().size(); ++l) {
        if (l) out += ' ';
        out += list(v.clauses()[l]);
      }
      return out + "]";
    }
    case ValuationKind::table:
      return "table" + list(v.entries());
  }
  return "?";
}

}  // namespace s2pa
