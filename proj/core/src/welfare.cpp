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

#include "s2pa/welfare.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "s2pa/errors.hpp"

namespace s2pa {

std::uint64_t assignment_count(int bidders, int items) {
  std::uint64_t total = 1;
  for (int j = 0; j < items; ++j) {
    if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(bidders)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= static_cast<std::uint64_t>(bidders);
  }
  return total;
}

namespace {

enum class BoundKind { none, singletons, marginals };

BoundKind pick_bound(const AuctionInstance& inst) {
  bool submodular = true;
  for (const auto& v : inst.valuations()) {
    switch (v.kind()) {
      case ValuationKind::additive:
      case ValuationKind::unit_demand:
        break;
      case ValuationKind::xos:
        submodular = false;
        break;
      case ValuationKind::table:
        if (v.items() > EnumerationBudget{}.max_items) return BoundKind::none;
        if (submodular && !check_class(v, ValuationClass::submodular).holds) submodular = false;
        if (!submodular && !check_class(v, ValuationClass::subadditive).holds) {
          return BoundKind::none;
        }
        break;
    }
  }
  return submodular ? BoundKind::marginals : BoundKind::singletons;
}

class Search {
 public:
  Search(const AuctionInstance& inst, BoundKind bound)
      : inst_(inst), bound_(bound), n_(inst.bidders()), m_(inst.items()) {
    bundles_.assign(n_, ItemSet{});
    values_.assign(n_, Rational(0));
    assignment_.assign(m_, 0);
    if (bound_ == BoundKind::singletons) {
      // suffix_[j] = Σ_{k >= j} max_i v_i({k})
      suffix_.assign(m_ + 1, Rational(0));
      for (int j = m_ - 1; j >= 0; --j) {
        Rational best = 0;
        for (int i = 0; i < n_; ++i) best = std::max(best, inst_.valuation(i).value(ItemSet::single(j)));
        suffix_[j] = suffix_[j + 1] + best;
      }
    }
  }

  /// Explores the subtree with item 0 fixed to `first`, or everything if first < 0.
  void run(int first) {
    if (m_ == 0) {
      record(Rational(0));
      return;
    }
    if (first < 0) {
      descend(0, Rational(0));
      return;
    }
    assign(0, first);
    descend(1, current_welfare());
  }

  bool has_best = false;
  Rational best;
  std::vector<std::vector<int>> argmax;
  std::uint64_t explored = 0;

 private:
  Rational current_welfare() const {
    Rational total = 0;
    for (const auto& v : values_) total += v;
    return total;
  }

  void assign(int item, int bidder) {
    assignment_[item] = bidder;
    bundles_[bidder] = bundles_[bidder].with(item);
    values_[bidder] = inst_.valuation(bidder).value(bundles_[bidder]);
  }

  void unassign(int item, int bidder, Rational previous) {
    bundles_[bidder] = bundles_[bidder].without(item);
    values_[bidder] = std::move(previous);
  }

  Rational upper_bound(int next, const Rational& welfare) const {
    if (bound_ == BoundKind::singletons) return welfare + suffix_[next];
    Rational total = welfare;
    for (int j = next; j < m_; ++j) {
      Rational best = 0;
      for (int i = 0; i < n_; ++i) {
        best = std::max(best, inst_.valuation(i).marginal(ItemSet::single(j), bundles_[i]));
      }
      total += best;
    }
    return total;
  }

  void record(const Rational& welfare) {
    if (!has_best || welfare > best) {
      has_best = true;
      best = welfare;
      argmax.clear();
    }
    if (welfare == best) argmax.push_back(assignment_);
  }

  void descend(int item, const Rational& welfare) {
    ++explored;
    if (item == m_) {
      record(welfare);
      return;
    }
    if (bound_ != BoundKind::none && has_best && upper_bound(item, welfare) < best) return;
    for (int i = 0; i < n_; ++i) {
      Rational previous = values_[i];
      assign(item, i);
      descend(item + 1, welfare - previous + values_[i]);
      unassign(item, i, std::move(previous));
    }
  }

  const AuctionInstance& inst_;
  BoundKind bound_;
  int n_;
  int m_;
  std::vector<ItemSet> bundles_;
  std::vector<Rational> values_;
  std::vector<int> assignment_;
  std::vector<Rational> suffix_;
};

Allocation to_allocation(const std::vector<int>& assignment, int bidders) {
  Allocation alloc(bidders);
  for (std::size_t j = 0; j < assignment.size(); ++j) {
    alloc[assignment[j]] = alloc[assignment[j]].with(static_cast<int>(j));
  }
  return alloc;
}

}  // namespace

OptResult optimal_allocations(const AuctionInstance& inst, OptOptions options) {
  const int n = inst.bidders();
  const int m = inst.items();
  const std::uint64_t space = assignment_count(n, m);
  if (space > options.budget) {
    throw BudgetExceeded("optimal_allocations: n^m = " +
                         (space == std::numeric_limits<std::uint64_t>::max()
                              ? std::string("overflow")
                              : std::to_string(space)) +
                         " exceeds the budget of " + std::to_string(options.budget));
  }
  const BoundKind bound = pick_bound(inst);

  std::vector<Search> searches;
  if (options.workers <= 1 || m == 0) {
    searches.emplace_back(inst, bound);
    searches.back().run(-1);
  } else {
    for (int i = 0; i < n; ++i) searches.emplace_back(inst, bound);
    std::vector<std::thread> pool;
    const int workers = std::min(options.workers, n);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&searches, w, workers, n] {
        for (int i = w; i < n; i += workers) searches[i].run(i);
      });
    }
    for (auto& t : pool) t.join();
  }

  OptResult result;
  bool seen = false;
  std::vector<std::vector<int>> assignments;
  for (const auto& s : searches) {
    result.explored += s.explored;
    if (!s.has_best) continue;
    if (!seen || s.best > result.opt_value) {
      seen = true;
      result.opt_value = s.best;
      assignments.clear();
    }
    if (s.best == result.opt_value) {
      assignments.insert(assignments.end(), s.argmax.begin(), s.argmax.end());
    }
  }
  std::sort(assignments.begin(), assignments.end());
  for (const auto& a : assignments) result.maximizers.push_back(to_allocation(a, n));
  return result;
}

Rational welfare_ratio(const AuctionInstance& inst, const BidProfile& b, const Rational& opt) {
  if (opt <= 0) throw PreconditionError("welfare ratio undefined: OPT = 0");
  return run_auction(inst, b).welfare / opt;
}

Rational welfare_ratio(const AuctionInstance& inst, const BidProfile& b) {
  return welfare_ratio(inst, b, optimal_allocations(inst).opt_value);
}

}  // namespace s2pa
