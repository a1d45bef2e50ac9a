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

#include "s2pa/equilibria.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "s2pa/errors.hpp"
#include "s2pa/welfare.hpp"

namespace s2pa {

namespace {

mpz_class floor_div(const Rational& x, const Rational& step) {
  const Rational q = x / step;
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

mpz_class ceil_div(const Rational& x, const Rational& step) {
  const Rational q = x / step;
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

void require_s2pa(const AuctionInstance& inst, const char* what) {
  if (inst.mechanism() != Mechanism::s2pa) {
    throw PreconditionError(std::string(what) + " supports s2pa only");
  }
}

void require_grid_covers(const ValuationSpec& v, const BidGrid& grid, int bidder) {
  const Rational top = v.value(ItemSet::full(v.items()));
  if (grid.top() < top) {
    throw GridError("grid tops out at " + to_string(grid.top()) + " but bidder " +
                    std::to_string(bidder) + " values [m] at " + to_string(top));
  }
}

// What bidder i faces on each item at one opponent profile.
struct PriceView {
  std::vector<Rational> prices;
  std::vector<bool> wins_ties;
  Rational weight;
};

PriceView price_view(const AuctionInstance& inst, const BidProfile& b, int bidder) {
  const int m = inst.items();
  PriceView view;
  view.prices.assign(m, Rational(0));
  view.wins_ties.assign(m, true);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < inst.bidders(); ++k) {
      if (k == bidder) continue;
      const int order = cmp(b.at(k, j), view.prices[j]);
      if (order > 0) {
        view.prices[j] = b.at(k, j);
        view.wins_ties[j] = inst.wins_tie(bidder, k);
      } else if (order == 0 && !inst.wins_tie(bidder, k)) {
        view.wins_ties[j] = false;
      }
    }
  }
  return view;
}

bool wins(const PriceView& view, int j, const Rational& bid) {
  const int order = cmp(bid, view.prices[j]);
  return order > 0 || (order == 0 && view.wins_ties[j]);
}

Rational utility_against(const ValuationSpec& v, const PriceView& view, const BidRow& row) {
  ItemSet won;
  Rational paid = 0;
  for (int j = 0; j < static_cast<int>(row.size()); ++j) {
    if (wins(view, j, row[j])) {
      won = won.with(j);
      paid += view.prices[j];
    }
  }
  return v.value(won) - paid;
}

// Highest weighted utility over the breakpoint product, first maximizer in
// odometer order. Returns the unnormalized total.
std::pair<Rational, BidRow> best_deviation(const ValuationSpec& v,
                                           const std::vector<PriceView>& views,
                                           const BidGrid& grid, DeviationBudget budget) {
  const int m = v.items();
  std::vector<std::vector<Rational>> candidates(m);
  std::uint64_t total = 1;
  for (int j = 0; j < m; ++j) {
    std::vector<Rational>& c = candidates[j];
    c.push_back(Rational(0));
    for (const auto& view : views) {
      if (auto bid = grid.round_up(view.prices[j], !view.wins_ties[j])) c.push_back(*bid);
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (total > budget.max_candidates / c.size() + 1) {
      throw BudgetExceeded("deviation candidates exceed " + std::to_string(budget.max_candidates));
    }
    total *= c.size();
  }
  if (total > budget.max_candidates) {
    throw BudgetExceeded("deviation candidates exceed " + std::to_string(budget.max_candidates));
  }

  std::vector<std::size_t> pick(m, 0);
  BidRow row(m);
  bool have = false;
  Rational best;
  BidRow best_row;
  while (true) {
    for (int j = 0; j < m; ++j) row[j] = candidates[j][pick[j]];
    Rational value = 0;
    for (const auto& view : views) value += view.weight * utility_against(v, view, row);
    if (!have || value > best) {
      have = true;
      best = value;
      best_row = row;
    }
    int j = m - 1;
    while (j >= 0 && ++pick[j] == candidates[j].size()) pick[j--] = 0;
    if (j < 0) break;
  }
  return {best, best_row};
}

}  // namespace

void BidGrid::validate() const {
  if (step <= 0) throw InvalidArgument("grid step must be positive");
  if (max < 0) throw InvalidArgument("grid max must be nonnegative");
}

Rational BidGrid::top() const {
  validate();
  return Rational(floor_div(max, step)) * step;
}

std::size_t BidGrid::size() const {
  validate();
  return floor_div(max, step).get_ui() + 1;
}

std::vector<Rational> BidGrid::points() const {
  const std::size_t count = size();
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(Rational(step * static_cast<unsigned long>(k)));
  return out;
}

std::optional<Rational> BidGrid::round_up(const Rational& x, bool strict) const {
  validate();
  mpz_class k;
  if (x < 0) {
    k = 0;
  } else if (strict) {
    k = floor_div(x, step) + 1;
  } else {
    k = ceil_div(x, step);
  }
  Rational bid = Rational(k) * step;
  if (bid > max) return std::nullopt;
  return bid;
}

BidGrid default_grid(const AuctionInstance& inst) {
  std::vector<Rational> values{Rational(0)};
  for (const auto& v : inst.valuations()) {
    if (v.items() > kMaxTableItems) throw BudgetExceeded("default_grid enumerates 2^m bundles");
    for_each_subset(ItemSet::full(v.items()), [&](ItemSet s) { values.push_back(v.value(s)); });
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Rational gap = 0;
  for (std::size_t k = 1; k < values.size(); ++k) {
    Rational d = values[k] - values[k - 1];
    if (gap == 0 || d < gap) gap = d;
  }
  BidGrid grid;
  grid.step = gap == 0 ? Rational(1) : Rational(gap / 4);
  grid.max = std::max(values.back(), grid.step);
  return grid;
}

BestResponse best_response(const AuctionInstance& inst, int bidder, const BidProfile& b,
                           const BidGrid& grid) {
  require_s2pa(inst, "best_response");
  validate_profile(inst, b);
  grid.validate();
  if (bidder < 0 || bidder >= inst.bidders()) throw InvalidArgument("bidder out of range");
  const ValuationSpec& v = inst.valuation(bidder);
  require_grid_covers(v, grid, bidder);

  const int m = inst.items();
  const PriceView view = price_view(inst, b, bidder);
  std::vector<Rational> win_bid(m);
  ItemSet winnable;
  for (int j = 0; j < m; ++j) {
    if (auto bid = grid.round_up(view.prices[j], !view.wins_ties[j])) {
      win_bid[j] = *bid;
      winnable = winnable.with(j);
    }
  }

  BestResponse best;
  bool have = false;
  for_each_subset(winnable, [&](ItemSet t) {
    Rational u = v.value(t);
    for (int j : t) u -= view.prices[j];
    if (!have || u > best.utility) {
      have = true;
      best.utility = u;
      best.target = t;
    }
  });
  best.bids.assign(m, Rational(0));
  for (int j : best.target) best.bids[j] = win_bid[j];
  // A zero bid can still win on priority; report what the auction actually does.
  const Outcome realized = run_auction(inst, b.with_row(bidder, best.bids));
  best.utility = realized.utilities[bidder];
  best.target = realized.allocation[bidder];
  return best;
}

EquilibriumCheck verify_pne(const AuctionInstance& inst, const BidProfile& b, const BidGrid& grid) {
  require_s2pa(inst, "verify_pne");
  const Outcome out = run_auction(inst, b);
  for (int i = 0; i < inst.bidders(); ++i) {
    BestResponse br = best_response(inst, i, b, grid);
    if (br.utility > out.utilities[i]) {
      return {false, Deviation{i, -1, std::move(br.bids), out.utilities[i], br.utility}};
    }
  }
  return {};
}

EquilibriumCheck verify_cce(const AuctionInstance& inst, const ProfileDistribution& dist,
                            const BidGrid& grid, DeviationBudget budget) {
  require_s2pa(inst, "verify_cce");
  grid.validate();
  if (dist.size() == 0) throw InvalidArgument("empty distribution");
  for (const auto& p : dist.support()) validate_profile(inst, p.value);
  for (int i = 0; i < inst.bidders(); ++i) {
    const ValuationSpec& v = inst.valuation(i);
    require_grid_covers(v, grid, i);
    Rational current = 0;
    std::vector<PriceView> views;
    for (const auto& p : dist.support()) {
      if (p.probability == 0) continue;
      current += p.probability * run_auction(inst, p.value).utilities[i];
      PriceView view = price_view(inst, p.value, i);
      view.weight = p.probability;
      views.push_back(std::move(view));
    }
    auto [value, row] = best_deviation(v, views, grid, budget);
    if (value > current) return {false, Deviation{i, -1, std::move(row), current, value}};
  }
  return {};
}

EquilibriumCheck verify_bne(const BayesianSetting& setting, const StrategyProfile& strategies,
                            const TypeDistribution& dist, const BidGrid& grid,
                            DeviationBudget budget) {
  if (setting.mechanism() != Mechanism::s2pa) throw PreconditionError("verify_bne supports s2pa only");
  grid.validate();
  setting.validate(dist);
  strategies.validate(setting);
  const int n = setting.bidders();
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < setting.type_count(i); ++t) {
      Rational mass = 0;
      Rational current = 0;
      std::vector<PriceView> views;
      for (const auto& point : dist.support()) {
        if (point.probability == 0 || point.value[i] != t) continue;
        mass += point.probability;
        const AuctionInstance inst = setting.instance(point.value);
        for_each_realization(setting, strategies, point.value,
                             [&](const BidProfile& b, const Rational& w) {
                               current += point.probability * w * run_auction(inst, b).utilities[i];
                             });
        for_each_realization(
            setting, strategies, point.value,
            [&](const BidProfile& b, const Rational& w) {
              PriceView view = price_view(inst, b, i);
              view.weight = point.probability * w;
              views.push_back(std::move(view));
            },
            i, BidRow(setting.items(), Rational(0)));
      }
      if (mass == 0) continue;
      const ValuationSpec& v = setting.type(i, t);
      require_grid_covers(v, grid, i);
      auto [value, row] = best_deviation(v, views, grid, budget);
      if (value > current) {
        return {false, Deviation{i, t, std::move(row), Rational(current / mass),
                                 Rational(value / mass)}};
      }
    }
  }
  return {};
}

XosPne construct_xos_pne(const AuctionInstance& inst) {
  const OptResult opt = optimal_allocations(inst);
  const Allocation& optimal = opt.maximizers.front();
  BidProfile b(inst.bidders(), inst.items());
  for (int i = 0; i < inst.bidders(); ++i) {
    const ValuationSpec& v = inst.valuation(i);
    const std::vector<Rational> clause = maximizing_clause(v, optimal[i]);
    for (int j : optimal[i]) b.at(i, j) = clause[j];
  }
  Outcome out = run_auction(inst, b);
  return {std::move(b), std::move(out.allocation)};
}

namespace {

bool passes_filters(const AuctionInstance& inst, const BidProfile& b,
                    const std::set<Property>& filters, const std::vector<Allocation>& maximizers) {
  for (Property p : filters) {
    switch (p) {
      case Property::nob:
        if (!check_nob(inst, b, false).holds) return false;
        break;
      case Property::strong_nob:
        if (!check_nob(inst, b, true).holds) return false;
        break;
      case Property::inub:
        if (!check_inub(inst, b, maximizers).holds) return false;
        break;
      case Property::snub:
        if (!check_snub(inst, b, maximizers).holds) return false;
        break;
      case Property::snub_expected:
        throw InvalidArgument("snub_expected is not a profile filter");
    }
  }
  return true;
}

}  // namespace

PneSearchResult enumerate_pne(const AuctionInstance& inst, const BidGrid& grid,
                              const PneSearchOptions& options) {
  require_s2pa(inst, "enumerate_pne");
  const std::vector<Rational> points = grid.points();
  const int n = inst.bidders();
  const int m = inst.items();
  const int cells = n * m;
  std::uint64_t space = 1;
  for (int c = 0; c < cells; ++c) {
    if (space > options.budget / points.size()) {
      throw BudgetExceeded("grid has more than " + std::to_string(options.budget) + " profiles");
    }
    space *= points.size();
  }
  for (int i = 0; i < n; ++i) require_grid_covers(inst.valuation(i), grid, i);

  const OptResult opt = optimal_allocations(inst);
  if (opt.opt_value == 0) throw PreconditionError("enumerate_pne: OPT = 0");

  PneSearchResult result;
  result.opt = opt.opt_value;
  std::mutex guard;

  // Worker w handles the profiles whose first cell index is congruent to w.
  auto scan = [&](int worker, int workers) {
    std::vector<std::size_t> idx(cells, 0);
    BidProfile b(n, m);
    std::vector<FoundPne> found;
    std::uint64_t examined = 0;
    for (std::size_t first = worker; first < points.size(); first += workers) {
      std::fill(idx.begin(), idx.end(), 0);
      idx[0] = first;
      while (true) {
        for (int c = 0; c < cells; ++c) b.at(c / m, c % m) = points[idx[c]];
        ++examined;
        if (passes_filters(inst, b, options.filters, opt.maximizers) &&
            verify_pne(inst, b, grid).holds) {
          found.push_back({b, Rational(run_auction(inst, b).welfare / opt.opt_value)});
        }
        int c = cells - 1;
        while (c >= 1 && ++idx[c] == points.size()) idx[c--] = 0;
        if (c < 1) break;
      }
    }
    std::lock_guard lock(guard);
    result.examined += examined;
    for (auto& f : found) result.equilibria.push_back(std::move(f));
  };

  const int workers = std::max(1, std::min<int>(options.workers, static_cast<int>(points.size())));
  if (cells == 0) {
    throw InvalidArgument("enumerate_pne needs at least one bid cell");
  } else if (workers == 1) {
    scan(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w, workers);
    for (auto& t : pool) t.join();
  }
  std::sort(result.equilibria.begin(), result.equilibria.end(),
            [](const FoundPne& a, const FoundPne& b) { return a.bids < b.bids; });
  for (const auto& f : result.equilibria) {
    if (!result.worst_ratio || f.ratio < *result.worst_ratio) result.worst_ratio = f.ratio;
  }
  return result;
}

Dynamics best_response_dynamics(const AuctionInstance& inst, const BidProfile& b0,
                                const std::vector<int>& order, int max_rounds,
                                const BidGrid& grid) {
  validate_profile(inst, b0);
  for (int i : order) {
    if (i < 0 || i >= inst.bidders()) throw InvalidArgument("order names an unknown bidder");
  }
  Dynamics d;
  d.trajectory.push_back(b0);
  BidProfile b = b0;
  for (int round = 0; round < max_rounds; ++round) {
    bool changed = false;
    for (int i : order) {
      BestResponse br = best_response(inst, i, b, grid);
      if (br.utility > run_auction(inst, b).utilities[i]) {
        b.set_row(i, br.bids);
        d.trajectory.push_back(b);
        ++d.improving_steps;
        changed = true;
      }
    }
    if (!changed) {
      d.converged = true;
      break;
    }
  }
  return d;
}

}  // namespace s2pa
