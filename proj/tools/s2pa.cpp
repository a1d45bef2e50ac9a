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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "s2pa/bid_properties.hpp"
#include "s2pa/errors.hpp"
#include "s2pa/generators.hpp"
#include "s2pa/scenario.hpp"
#include "s2pa/welfare.hpp"

namespace {

using namespace s2pa;

constexpr int kExitHolds = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Globals {
  std::string tie_break;
  std::string grid_step;
  std::string grid_max;
  std::optional<std::uint64_t> seed;
  std::string format = "text";
  std::optional<std::uint64_t> budget;
  bool timing = false;
};

struct InstanceSource {
  std::string family = "xos_clauses";
  int bidders = 2;
  int items = 2;
  int count = 10;
  int max_value = 6;
};

RunOptions run_options(const Globals& g) {
  RunOptions o;
  if (!g.tie_break.empty()) {
    std::vector<int> order;
    std::stringstream in(g.tie_break);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      try {
        std::size_t used = 0;
        order.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("--tie-break", "expected comma-separated bidder indices");
      }
    }
    o.tie_break = order;
  }
  if (!g.grid_step.empty()) o.grid_step = parse_rational(g.grid_step);
  if (!g.grid_max.empty()) o.grid_max = parse_rational(g.grid_max);
  o.seed = g.seed;
  o.budget = g.budget;
  o.timing = g.timing;
  return o;
}

int finish(const Report& report, const Globals& g) {
  std::cout << emit_report(report, parse_report_format(g.format));
  return report.all_hold() ? kExitHolds : kExitViolated;
}

std::vector<AuctionInstance> instances(const InstanceSource& src, const Globals& g) {
  GeneratorOptions options;
  options.max_value = src.max_value;
  return generate_instances(parse_family(src.family), src.bidders, src.items, g.seed.value_or(0),
                            src.count, options);
}

void add_instance_flags(CLI::App* cmd, InstanceSource& src) {
  cmd->add_option("--family", src.family, "ud|sm_table|xos_clauses|sa_table|mon_table|alpha_table")
      ->capture_default_str();
  cmd->add_option("-n,--bidders", src.bidders, "bidders per instance")->capture_default_str();
  cmd->add_option("-m,--items", src.items, "items per instance")->capture_default_str();
  cmd->add_option("--count", src.count, "number of instances")->capture_default_str();
  cmd->add_option("--max-value", src.max_value, "largest generated integer value")->capture_default_str();
}

std::string join_filters(const std::vector<std::string>& filters) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& f : filters) out.push_back(f);
  return out.dump();
}

// Runs one scenario and appends its records, prefixing names with `prefix`.
void append_run(Report& into, const Scenario& s, const RunOptions& options, const std::string& prefix) {
  Report r = run_scenario(s, options);
  for (auto& c : r.checks) {
    c.name = prefix + c.name;
    into.checks.push_back(std::move(c));
  }
}

std::optional<BidProfile> sample_filtered(const AuctionInstance& inst, const OptResult& opt,
                                          Property filter, Rng& rng, int tries) {
  for (int t = 0; t < tries; ++t) {
    BidProfile b = random_bids(inst, rng);
    bool ok = false;
    switch (filter) {
      case Property::nob: ok = check_nob(inst, b).holds; break;
      case Property::strong_nob: ok = check_nob(inst, b, true).holds; break;
      case Property::inub: ok = check_inub(inst, b, opt.maximizers).holds; break;
      case Property::snub: ok = check_snub(inst, b, opt.maximizers).holds; break;
      case Property::snub_expected: ok = check_snub(inst, b, opt.maximizers).holds; break;
    }
    if (ok) return b;
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of simultaneous second-price item auctions"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--tie-break", g.tie_break, "bidder priority order, e.g. 1,0");
  app.add_option("--grid-step", g.grid_step, "bid grid step as p/q");
  app.add_option("--grid-max", g.grid_max, "largest grid bid as p/q");
  app.add_option("--seed", g.seed, "generator seed");
  app.add_option("--format", g.format, "text|csv|structured")->capture_default_str();
  app.add_option("--budget", g.budget, "largest search space explored before giving up");
  app.add_flag("--timing", g.timing, "record wall time per check");

  std::string scenario_path;
  auto* run = app.add_subcommand("run", "run the checks of a scenario file");
  run->add_option("scenario", scenario_path, "scenario JSON file")->required();

  std::string example_name;
  bool dump = false;
  bool list = false;
  auto* example = app.add_subcommand("example", "run a built-in example");
  example->add_option("name", example_name, "example name, e.g. ex-xos-inub(m=6)");
  example->add_flag("--dump", dump, "print the example as a scenario file instead of running it");
  example->add_flag("--list", list, "list the built-in examples");

  InstanceSource search_src;
  std::vector<std::string> search_filters;
  std::string min_ratio;
  std::string search_scenario;
  auto* search = app.add_subcommand("pne-search", "enumerate grid PNE and report the worst welfare ratio");
  add_instance_flags(search, search_src);
  search->add_option("--scenario", search_scenario, "use the instance of a scenario file instead");
  search->add_option("--filter", search_filters, "nob|strong_nob|inub|snub (repeatable)");
  search->add_option("--min-ratio", min_ratio, "fail when an equilibrium falls below this ratio");

  InstanceSource cert_src;
  std::string claim = "revenue";
  std::string filter_name;
  std::string gamma = "1", delta = "1", lambda, mu = "1", deviation = "xos";
  int samples = 5;
  auto* certify = app.add_subcommand("certify", "check a guarantee on generated instances");
  add_instance_flags(certify, cert_src);
  certify->add_option("--claim", claim, "revenue|smoothness|floor|xos-pne|flat|composed")->capture_default_str();
  certify->add_option("--filter", filter_name, "bid filter for sampled profiles");
  certify->add_option("--samples", samples, "filtered bid profiles per instance")->capture_default_str();
  certify->add_option("--gamma", gamma)->capture_default_str();
  certify->add_option("--delta", delta)->capture_default_str();
  certify->add_option("--lambda", lambda, "defaults to the smallest measured alpha*");
  certify->add_option("--mu", mu)->capture_default_str();
  certify->add_option("--deviation", deviation, "xos|prefix")->capture_default_str();

  InstanceSource gen_src;
  std::string out_dir;
  auto* gen = app.add_subcommand("gen", "generate random instances as scenario files");
  add_instance_flags(gen, gen_src);
  gen->add_option("--out-dir", out_dir, "write one file per instance instead of a JSON array");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitHolds : kExitUsage;
  }

  try {
    const RunOptions options = run_options(g);
    parse_report_format(g.format);

    if (*run) return finish(run_scenario(load_scenario(scenario_path), options), g);

    if (*example) {
      if (list) {
        for (const auto& n : catalog_names()) std::cout << n << "\n";
        return kExitHolds;
      }
      if (example_name.empty()) throw ParseError("example", "missing example name (see --list)");
      if (dump) {
        std::cout << scenario_to_json(catalog_scenario(example_name));
        return kExitHolds;
      }
      return finish(run_catalog(example_name, options), g);
    }

    if (*search) {
      nlohmann::json params{{"filters", nlohmann::json::parse(join_filters(search_filters))}};
      if (!min_ratio.empty()) params["min_ratio"] = min_ratio;
      std::vector<Scenario> scenarios;
      if (!search_scenario.empty()) {
        scenarios.push_back(load_scenario(search_scenario));
        scenarios.back().checks.clear();
      } else {
        int k = 0;
        for (const auto& inst : instances(search_src, g)) {
          scenarios.push_back(scenario_from_instance(inst, "instance-" + std::to_string(k++)));
        }
      }
      Report report;
      report.scenario = "pne-search";
      for (auto& s : scenarios) {
        s.checks.push_back({"pne_search", "pne_search", params.dump(), std::nullopt});
        append_run(report, s, options, s.name + "/");
      }
      return finish(report, g);
    }

    if (*certify) {
      const std::map<std::string, std::string> ops = {{"revenue", "revenue_guarantee"},
                                                      {"smoothness", "smoothness"},
                                                      {"floor", "welfare_floor"},
                                                      {"xos-pne", "xos_pne"},
                                                      {"flat", "flat_profile"},
                                                      {"composed", "composed"}};
      auto op = ops.find(claim);
      if (op == ops.end()) throw ParseError("--claim", "unknown claim '" + claim + "'");
      const bool needs_bids = claim == "revenue" || claim == "smoothness" || claim == "floor";
      Property filter = claim == "smoothness" ? Property::nob : Property::snub;
      if (!filter_name.empty()) filter = parse_property(filter_name);
      Rng rng(g.seed.value_or(0) ^ 0x5eedULL);
      Report report;
      report.scenario = "certify-" + claim;
      int k = 0;
      for (const auto& inst : instances(cert_src, g)) {
        const std::string prefix = "instance-" + std::to_string(k++);
        Scenario s = scenario_from_instance(inst, prefix);
        nlohmann::json params = nlohmann::json::object();
        if (claim == "revenue" || claim == "floor") params = {{"gamma", gamma}, {"delta", delta}};
        if (claim == "smoothness") {
          std::string lam = lambda;
          if (lam.empty()) {
            Rational low = 1;
            for (const auto& v : inst.valuations()) low = std::min(low, alpha_star(v).alpha_star);
            lam = to_string(low);
          }
          params = {{"lambda", lam}, {"mu", mu}, {"deviation", deviation}};
        }
        s.checks.push_back({claim, op->second, params.dump(), std::nullopt});
        if (!needs_bids && claim != "composed") {
          append_run(report, s, options, prefix + "/");
          continue;
        }
        OptOptions opt_options;
        if (g.budget) opt_options.budget = *g.budget;
        const OptResult opt = optimal_allocations(inst, opt_options);
        if (claim == "composed") {
          if (opt.opt_value == 0) continue;  // welfare ratio undefined
          // Random profiles are almost never equilibria; sample from the filtered grid PNE instead.
          BidGrid grid = default_grid(inst);
          if (options.grid_step) grid.step = *options.grid_step;
          if (options.grid_max) grid.max = *options.grid_max;
          PneSearchOptions search_options;
          search_options.filters = {Property::strong_nob, Property::snub};
          if (g.budget) search_options.budget = *g.budget;
          auto found = enumerate_pne(inst, grid, search_options).equilibria;
          std::stable_sort(found.begin(), found.end(),
                           [](const FoundPne& a, const FoundPne& b) { return a.ratio < b.ratio; });
          for (int t = 0; t < samples && t < static_cast<int>(found.size()); ++t) {
            s.bids = found[t].bids;
            append_run(report, s, options, prefix + "/pne-" + std::to_string(t) + "/");
          }
          continue;
        }
        // The floor premise needs nonnegative total utility, as at any equilibrium.
        auto keep = [&](const BidProfile& b) {
          if (claim != "floor") return true;
          Rational total = 0;
          for (const auto& u : run_auction(inst, b).utilities) total += u;
          return total >= 0;
        };
        for (int t = 0; t < samples; ++t) {
          std::optional<BidProfile> b;
          for (int tries = 0; tries < 50 && !b; ++tries) {
            b = sample_filtered(inst, opt, filter, rng, 2000);
            if (!b) break;
            if (!keep(*b)) b.reset();
          }
          if (!b) break;
          s.bids = *b;
          append_run(report, s, options, prefix + "/sample-" + std::to_string(t) + "/");
        }
      }
      return finish(report, g);
    }

    if (*gen) {
      std::vector<std::string> docs;
      int k = 0;
      for (const auto& inst : instances(gen_src, g)) {
        Scenario s = scenario_from_instance(inst, gen_src.family + "-" + std::to_string(k++));
        s.seed = g.seed.value_or(0);
        docs.push_back(scenario_to_json(s));
      }
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (std::size_t i = 0; i < docs.size(); ++i) {
          std::ofstream(std::filesystem::path(out_dir) / (gen_src.family + "-" + std::to_string(i) + ".json"))
              << docs[i];
        }
        return kExitHolds;
      }
      nlohmann::json all = nlohmann::json::array();
      for (const auto& d : docs) all.push_back(nlohmann::json::parse(d));
      std::cout << all.dump(2) << "\n";
      return kExitHolds;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "s2pa: budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "s2pa: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
