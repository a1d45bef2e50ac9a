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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "s2pa/item_set.hpp"
#include "s2pa/rational.hpp"

namespace s2pa {

enum class ValuationKind { additive, unit_demand, xos, table };

std::string to_string(ValuationKind kind);
ValuationKind parse_valuation_kind(const std::string& text);

/// One bidder's set function over m items, kept in the representation it was
/// given in. Construction validates shape and nonnegativity; tables are also
/// checked for normalization and monotonicity.
class ValuationSpec {
 public:
  struct Additive {
    std::vector<Rational> weights;
    bool operator==(const Additive&) const = default;
  };
  struct UnitDemand {
    std::vector<Rational> weights;
    bool operator==(const UnitDemand&) const = default;
  };
  struct Xos {
    std::vector<std::vector<Rational>> clauses;
    bool operator==(const Xos&) const = default;
  };
  /// 2^m entries, entry k is the value of the set whose bitmask is k.
  struct Table {
    std::vector<Rational> entries;
    bool operator==(const Table&) const = default;
  };

  static ValuationSpec additive(std::vector<Rational> weights);
  static ValuationSpec unit_demand(std::vector<Rational> weights);
  static ValuationSpec xos(std::vector<std::vector<Rational>> clauses);
  static ValuationSpec table(int items, std::vector<Rational> entries);

  ValuationKind kind() const;
  int items() const { return items_; }

  const std::vector<Rational>& weights() const;  // additive / unit_demand
  const std::vector<std::vector<Rational>>& clauses() const;  // xos
  const std::vector<Rational>& entries() const;  // table

  /// v(S). Throws InvalidArgument when S names an item >= m.
  Rational value(ItemSet s) const;

  /// v(T | S) = v(S ∪ T) − v(S).
  Rational marginal(ItemSet t, ItemSet s) const;

  /// Dense table with the same set function. Requires m <= kMaxTableItems.
  ValuationSpec to_table() const;

  /// Additive and unit-demand specs rewritten as clause lists; xos returned as is.
  /// Throws InvalidArgument for table kind.
  ValuationSpec as_xos() const;

  bool operator==(const ValuationSpec&) const = default;

 private:
  using Data = std::variant<Additive, UnitDemand, Xos, Table>;
  ValuationSpec(int items, Data data);
  void check_range(ItemSet s) const;

  int items_ = 0;
  Data data_;
};

inline constexpr int kMaxTableItems = 16;

/// Re-runs the validation pass (normalization, monotonicity, nonnegativity).
/// Throws ValidationError naming the violating pair of sets.
void validate(const ValuationSpec& v);

enum class ValuationClass { monotone, subadditive, submodular, xos };

std::string to_string(ValuationClass c);
ValuationClass parse_valuation_class(const std::string& text);

/// A violating configuration. For monotone/subadditive: (S, T). For
/// submodular: v(j|S) < v(j|T) with S ⊆ T. For xos: no clause supports S.
struct ClassWitness {
  ItemSet s;
  ItemSet t;
  std::optional<int> item;
};

struct ClassCheck {
  bool holds = true;
  std::optional<ClassWitness> witness;
};

struct EnumerationBudget {
  /// Largest m for which subset-pair enumeration (and the xos programs) run.
  int max_items = 6;
};

/// Class membership by exhaustive enumeration. Xos membership on tables
/// solves one exact linear program per subset. Throws BudgetExceeded when m
/// is above the budget and the kind does not settle the question directly.
ClassCheck check_class(const ValuationSpec& v, ValuationClass c,
                       EnumerationBudget budget = {});

struct AlphaCertificate {
  Rational alpha_star;
  /// (S, T, j) attaining the minimum ratio; empty when alpha_star is 1.
  std::optional<ClassWitness> witness;
};

/// Largest α with v(j|S) >= α·v(j|T) for all S ⊂ T, j ∉ T.
/// Pairs with v(j|T) = 0 impose nothing; v(j|S) = 0 < v(j|T) forces 0.
/// Budget: m <= max_items + 4 (the scan is 3^m·m).
AlphaCertificate alpha_star(const ValuationSpec& v, EnumerationBudget budget = {});

/// For each permutation ℓ the additive vector a with a_j = v(j | items before
/// j in ℓ). Throws InvalidArgument if an entry is not a permutation of [m].
std::vector<std::vector<Rational>> permutation_supports(
    const ValuationSpec& v, const std::vector<std::vector<int>>& perms);

/// Permutation listing `s` first (ascending), then the rest (ascending).
std::vector<int> prefix_permutation(int items, ItemSet s);

/// Clause a with a(S) = v(S). Xos kind: first clause attaining the maximum.
/// Additive and unit-demand: the induced clause. Table kind: a supporting
/// clause from the xos program; throws PreconditionError if none exists.
std::vector<Rational> maximizing_clause(const ValuationSpec& v, ItemSet s);

/// Table kind: a clause a >= 0, zero outside S, with a(S) = v(S) and
/// a(T) <= v(T) for every T, or nullopt when no such clause exists.
std::optional<std::vector<Rational>> supporting_clause(const ValuationSpec& v, ItemSet s);

std::string describe(const ValuationSpec& v);

}  // namespace s2pa
