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

#include "s2pa/scenario.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"
#include "s2pa/bid_properties.hpp"
#include "s2pa/bounds.hpp"
#include "s2pa/errors.hpp"
#include "s2pa/welfare.hpp"

namespace s2pa {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- parsing

std::string field_path(const std::string& parent, const std::string& key) {
  return parent.empty() ? key : parent + "." + key;
}

std::string index_path(const std::string& parent, std::size_t k) {
  return parent + "[" + std::to_string(k) + "]";
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(field_path(where, key), "missing field");
  return *it;
}

Rational rational_from(const json& node, const std::string& where) {
  if (node.is_number_integer()) return Rational(node.get<long>());
  if (node.is_string()) {
    try {
      return parse_rational(node.get<std::string>());
    } catch (const Error& e) {
      throw ParseError(where, e.what());
    }
  }
  if (node.is_number_float()) {
    throw ParseError(where, "decimal numbers are not accepted; write \"p/q\"");
  }
  throw ParseError(where, "expected a rational (\"p/q\" string or integer)");
}

int int_from(const json& node, const std::string& where) {
  if (!node.is_number_integer()) throw ParseError(where, "expected an integer");
  return node.get<int>();
}

std::vector<Rational> rationals_from(const json& node, const std::string& where) {
  if (!node.is_array()) throw ParseError(where, "expected an array of rationals");
  std::vector<Rational> out;
  for (std::size_t k = 0; k < node.size(); ++k) out.push_back(rational_from(node[k], index_path(where, k)));
  return out;
}

std::vector<std::vector<Rational>> matrix_from(const json& node, const std::string& where) {
  if (!node.is_array()) throw ParseError(where, "expected an array of rows");
  std::vector<std::vector<Rational>> out;
  for (std::size_t k = 0; k < node.size(); ++k) out.push_back(rationals_from(node[k], index_path(where, k)));
  return out;
}

ValuationSpec valuation_from(const json& node, int m, const std::string& where) {
  const json& kind_node = require(node, "kind", where);
  if (!kind_node.is_string()) throw ParseError(field_path(where, "kind"), "expected a string");
  ValuationKind kind;
  try {
    kind = parse_valuation_kind(kind_node.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(field_path(where, "kind"), e.what());
  }
  const std::string data_where = field_path(where, "data");
  const json& data = require(node, "data", where);
  auto check_len = [&](std::size_t got, std::size_t want) {
    if (got != want) {
      throw ParseError(data_where, "expected " + std::to_string(want) + " entries, got " +
                                       std::to_string(got));
    }
  };
  try {
    switch (kind) {
      case ValuationKind::additive: {
        auto w = rationals_from(data, data_where);
        check_len(w.size(), m);
        return ValuationSpec::additive(std::move(w));
      }
      case ValuationKind::unit_demand: {
        auto w = rationals_from(data, data_where);
        check_len(w.size(), m);
        return ValuationSpec::unit_demand(std::move(w));
      }
      case ValuationKind::xos: {
        auto clauses = matrix_from(data, data_where);
        for (const auto& c : clauses) check_len(c.size(), m);
        return ValuationSpec::xos(std::move(clauses));
      }
      case ValuationKind::table: {
        auto e = rationals_from(data, data_where);
        if (m >= 0 && m < 31) check_len(e.size(), std::size_t{1} << m);
        return ValuationSpec::table(m, std::move(e));
      }
    }
  } catch (const ValidationError& e) {
    throw ValidationError(where + ": " + e.what());
  }
  throw ParseError(where, "unreachable");
}

ojson rational_json(const Rational& r) { return to_string(r); }

ojson row_json(const std::vector<Rational>& row) {
  ojson out = ojson::array();
  for (const auto& x : row) out.push_back(rational_json(x));
  return out;
}

ojson profile_json(const BidProfile& b) {
  ojson out = ojson::array();
  for (int i = 0; i < b.bidders(); ++i) out.push_back(row_json(b.row_copy(i)));
  return out;
}

ojson valuation_json(const ValuationSpec& v) {
  ojson out{{"kind", to_string(v.kind())}};
  switch (v.kind()) {
    case ValuationKind::additive:
    case ValuationKind::unit_demand:
      out["data"] = row_json(v.weights());
      break;
    case ValuationKind::xos: {
      ojson clauses = ojson::array();
      for (const auto& c : v.clauses()) clauses.push_back(row_json(c));
      out["data"] = clauses;
      break;
    }
    case ValuationKind::table:
      out["data"] = row_json(v.entries());
      break;
  }
  return out;
}

ojson mixed_json(const MixedRow& mixed) {
  if (mixed.size() == 1 && mixed.support().front().probability == 1) {
    return row_json(mixed.support().front().value);
  }
  ojson support = ojson::array();
  for (const auto& p : mixed.support()) {
    support.push_back({{"weight", rational_json(p.probability)}, {"payload", row_json(p.value)}});
  }
  return ojson{{"mixed", support}};
}

MixedRow mixed_from(const json& node, const std::string& where) {
  try {
    if (node.is_object()) {
      const json& support = require(node, "mixed", where);
      std::vector<MixedRow::Point> points;
      for (std::size_t k = 0; k < support.size(); ++k) {
        const std::string w = index_path(field_path(where, "mixed"), k);
        points.push_back({rationals_from(require(support[k], "payload", w), field_path(w, "payload")),
                          rational_from(require(support[k], "weight", w), field_path(w, "weight"))});
      }
      return MixedRow(std::move(points));
    }
    return MixedRow::point_mass(rationals_from(node, where));
  } catch (const InvalidArgument& e) {
    throw ParseError(where, e.what());
  }
}

json canonical(const json& node) { return json::parse(node.dump()); }

}  // namespace

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("scenario", e.what());
  }
  if (!doc.is_object()) throw ParseError("scenario", "top level must be an object");

  const json& inst_node = require(doc, "instance", "");
  const int m = int_from(require(inst_node, "m", "instance"), "instance.m");
  if (m < 1 || m > kMaxItems) throw ParseError("instance.m", "item count out of range");
  const json& vals = require(inst_node, "valuations", "instance");
  if (!vals.is_array() || vals.empty()) {
    throw ParseError("instance.valuations", "expected a non-empty array");
  }
  std::vector<ValuationSpec> valuations;
  for (std::size_t k = 0; k < vals.size(); ++k) {
    valuations.push_back(valuation_from(vals[k], m, index_path("instance.valuations", k)));
  }
  if (inst_node.contains("n") &&
      int_from(inst_node["n"], "instance.n") != static_cast<int>(valuations.size())) {
    throw ParseError("instance.n", "does not match the number of valuations");
  }
  Mechanism mechanism = Mechanism::s2pa;
  if (inst_node.contains("mechanism")) {
    try {
      mechanism = parse_mechanism(inst_node["mechanism"].get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError("instance.mechanism", e.what());
    }
  }
  std::vector<int> tie_break;
  if (inst_node.contains("tie_break")) {
    const json& tb = inst_node["tie_break"];
    if (!tb.is_array()) throw ParseError("instance.tie_break", "expected an array");
    for (std::size_t k = 0; k < tb.size(); ++k) tie_break.push_back(int_from(tb[k], index_path("instance.tie_break", k)));
  }
  std::vector<std::string> item_names;
  if (inst_node.contains("items")) {
    const json& names = inst_node["items"];
    if (!names.is_array() || static_cast<int>(names.size()) != m) {
      throw ParseError("instance.items", "expected " + std::to_string(m) + " item names");
    }
    for (const auto& nm : names) item_names.push_back(nm.get<std::string>());
  }

  std::optional<AuctionInstance> instance;
  try {
    instance.emplace(std::move(valuations), mechanism, tie_break);
  } catch (const InvalidArgument& e) {
    throw ParseError("instance", e.what());
  }
  const int n = instance->bidders();

  Scenario s{.name = doc.value("name", std::string()),
             .description = doc.value("description", std::string()),
             .instance = *instance};
  s.item_names = std::move(item_names);

  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) throw ParseError("seed", "expected a nonnegative integer");
    s.seed = doc["seed"].get<std::uint64_t>();
  }

  auto profile_from = [&](const json& node, const std::string& where) {
    try {
      BidProfile b(matrix_from(node, where));
      validate_profile(s.instance, b);
      return b;
    } catch (const InvalidArgument& e) {
      throw ParseError(where, e.what());
    }
  };

  if (doc.contains("bids")) s.bids = profile_from(doc["bids"], "bids");

  if (doc.contains("grid")) {
    BidGrid grid{rational_from(require(doc["grid"], "step", "grid"), "grid.step"),
                 rational_from(require(doc["grid"], "max", "grid"), "grid.max")};
    try {
      grid.validate();
    } catch (const InvalidArgument& e) {
      throw ParseError("grid", e.what());
    }
    s.grid = grid;
  }

  if (doc.contains("types")) {
    const json& types = doc["types"];
    if (!types.is_array() || static_cast<int>(types.size()) != n) {
      throw ParseError("types", "expected one type list per bidder");
    }
    std::vector<std::vector<ValuationSpec>> lists;
    for (std::size_t i = 0; i < types.size(); ++i) {
      const std::string w = index_path("types", i);
      if (!types[i].is_array() || types[i].empty()) throw ParseError(w, "expected a non-empty array");
      std::vector<ValuationSpec> list;
      for (std::size_t t = 0; t < types[i].size(); ++t) {
        list.push_back(valuation_from(types[i][t], m, index_path(w, t)));
      }
      lists.push_back(std::move(list));
    }
    s.setting.emplace(std::move(lists), mechanism, s.instance.tie_break());
  }

  if (doc.contains("distribution")) {
    const json& dist = doc["distribution"];
    const std::string kind = require(dist, "kind", "distribution").get<std::string>();
    const json& support = require(dist, "support", "distribution");
    if (!support.is_array()) throw ParseError("distribution.support", "expected an array");
    try {
      if (kind == "over_bid_profiles") {
        std::vector<ProfileDistribution::Point> points;
        for (std::size_t k = 0; k < support.size(); ++k) {
          const std::string w = index_path("distribution.support", k);
          points.push_back({profile_from(require(support[k], "payload", w), field_path(w, "payload")),
                            rational_from(require(support[k], "weight", w), field_path(w, "weight"))});
        }
        s.profile_distribution = ProfileDistribution(std::move(points));
      } else if (kind == "over_type_profiles") {
        if (!s.setting) throw ParseError("distribution", "over_type_profiles needs a types field");
        std::vector<TypeDistribution::Point> points;
        for (std::size_t k = 0; k < support.size(); ++k) {
          const std::string w = index_path("distribution.support", k);
          const json& payload = require(support[k], "payload", w);
          TypeProfile profile;
          if (!payload.is_array()) throw ParseError(field_path(w, "payload"), "expected type indices");
          for (std::size_t i = 0; i < payload.size(); ++i) {
            profile.push_back(int_from(payload[i], index_path(field_path(w, "payload"), i)));
          }
          points.push_back({profile, rational_from(require(support[k], "weight", w), field_path(w, "weight"))});
        }
        s.type_distribution = TypeDistribution(std::move(points));
        s.setting->validate(*s.type_distribution);
      } else {
        throw ParseError("distribution.kind", "expected over_bid_profiles or over_type_profiles");
      }
    } catch (const InvalidArgument& e) {
      throw ParseError("distribution", e.what());
    }
  }

  if (doc.contains("strategies")) {
    if (!s.setting) throw ParseError("strategies", "strategies need a types field");
    const json& strat = doc["strategies"];
    if (!strat.is_array()) throw ParseError("strategies", "expected an array per bidder");
    StrategyProfile profile;
    for (std::size_t i = 0; i < strat.size(); ++i) {
      const std::string w = index_path("strategies", i);
      if (!strat[i].is_array()) throw ParseError(w, "expected an array per type");
      std::vector<MixedRow> rows;
      for (std::size_t t = 0; t < strat[i].size(); ++t) rows.push_back(mixed_from(strat[i][t], index_path(w, t)));
      profile.rows.push_back(std::move(rows));
    }
    try {
      profile.validate(*s.setting);
    } catch (const InvalidArgument& e) {
      throw ParseError("strategies", e.what());
    }
    s.strategies = std::move(profile);
  }

  if (doc.contains("checks")) {
    const json& checks = doc["checks"];
    if (!checks.is_array()) throw ParseError("checks", "expected an array");
    for (std::size_t k = 0; k < checks.size(); ++k) {
      const std::string w = index_path("checks", k);
      CheckSpec c;
      const json& op = require(checks[k], "op", w);
      if (!op.is_string()) throw ParseError(field_path(w, "op"), "expected a string");
      c.op = op.get<std::string>();
      c.name = checks[k].value("name", c.op);
      if (checks[k].contains("params")) {
        if (!checks[k]["params"].is_object()) throw ParseError(field_path(w, "params"), "expected an object");
        c.params = canonical(checks[k]["params"]).dump();
      }
      if (checks[k].contains("expect")) {
        if (!checks[k]["expect"].is_object()) throw ParseError(field_path(w, "expect"), "expected an object");
        c.expect = canonical(checks[k]["expect"]).dump();
      }
      s.checks.push_back(std::move(c));
    }
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open scenario file");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_scenario(text.str());
  } catch (const ParseError& e) {
    throw ParseError(path, e.what());
  }
}

namespace {

ojson scenario_json(const Scenario& s) {
  ojson inst{{"n", s.instance.bidders()},
            {"m", s.instance.items()},
            {"mechanism", to_string(s.instance.mechanism())},
            {"tie_break", s.instance.tie_break()}};
  if (!s.item_names.empty()) inst["items"] = s.item_names;
  ojson vals = ojson::array();
  for (const auto& v : s.instance.valuations()) vals.push_back(valuation_json(v));
  inst["valuations"] = vals;

  ojson doc{{"name", s.name}, {"description", s.description}, {"seed", s.seed}, {"instance", inst}};
  if (s.bids) doc["bids"] = profile_json(*s.bids);
  if (s.grid) doc["grid"] = {{"step", rational_json(s.grid->step)}, {"max", rational_json(s.grid->max)}};
  if (s.setting) {
    ojson types = ojson::array();
    for (int i = 0; i < s.setting->bidders(); ++i) {
      ojson list = ojson::array();
      for (int t = 0; t < s.setting->type_count(i); ++t) list.push_back(valuation_json(s.setting->type(i, t)));
      types.push_back(list);
    }
    doc["types"] = types;
  }
  if (s.profile_distribution) {
    ojson support = ojson::array();
    for (const auto& p : s.profile_distribution->support()) {
      support.push_back({{"weight", rational_json(p.probability)}, {"payload", profile_json(p.value)}});
    }
    doc["distribution"] = {{"kind", "over_bid_profiles"}, {"support", support}};
  } else if (s.type_distribution) {
    ojson support = ojson::array();
    for (const auto& p : s.type_distribution->support()) {
      support.push_back({{"weight", rational_json(p.probability)}, {"payload", p.value}});
    }
    doc["distribution"] = {{"kind", "over_type_profiles"}, {"support", support}};
  }
  if (s.strategies) {
    ojson strat = ojson::array();
    for (const auto& rows : s.strategies->rows) {
      ojson list = ojson::array();
      for (const auto& r : rows) list.push_back(mixed_json(r));
      strat.push_back(list);
    }
    doc["strategies"] = strat;
  }
  ojson checks = ojson::array();
  for (const auto& c : s.checks) {
    ojson node{{"name", c.name}, {"op", c.op}, {"params", ojson::parse(c.params)}};
    if (c.expect) node["expect"] = ojson::parse(*c.expect);
    checks.push_back(node);
  }
  doc["checks"] = checks;
  return doc;
}

}  // namespace

namespace {

// Containers that fit on one line are written compactly.
void write_pretty(const ojson& node, int indent, std::string& out) {
  const std::string flat = node.dump();
  if (!node.is_structured() || node.empty() || indent + flat.size() <= 96) {
    out += flat;
    return;
  }
  const std::string pad(indent + 2, ' ');
  const bool object = node.is_object();
  out += object ? "{\n" : "[\n";
  bool first = true;
  for (auto it = node.begin(); it != node.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (object) out += ojson(it.key()).dump() + ": ";
    write_pretty(*it, indent + 2, out);
  }
  out += "\n" + std::string(indent, ' ') + (object ? "}" : "]");
}

}  // namespace

std::string scenario_to_json(const Scenario& s) {
  std::string out;
  write_pretty(scenario_json(s), 0, out);
  return out + "\n";
}

Scenario scenario_from_instance(const AuctionInstance& inst, const std::string& name) {
  return Scenario{.name = name, .instance = inst};
}

// ---------------------------------------------------------------- running

namespace {

struct Outcome2 {
  Verdict verdict = Verdict::holds;
  std::map<std::string, std::string> values;
  std::vector<std::string> witnesses;
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string row_text(const std::vector<Rational>& row) {
  std::string out = "(";
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (k) out += ',';
    out += to_string(row[k]);
  }
  return out + ")";
}

class Runner {
 public:
  Runner(const Scenario& s, const RunOptions& options)
      : s_(s),
        options_(options),
        inst_(options.tie_break
                  ? AuctionInstance(s.instance.valuations(), s.instance.mechanism(), *options.tie_break)
                  : s.instance) {
    grid_ = s.grid ? *s.grid : default_grid(inst_);
    if (options.grid_step) grid_.step = *options.grid_step;
    if (options.grid_max) grid_.max = *options.grid_max;
    grid_.validate();
    base_ = json::parse(scenario_json(s).dump());
    base_.erase("checks");
  }

  CheckRecord run(const CheckSpec& c) {
    CheckRecord record;
    record.name = c.name;
    record.op = c.op;
    record.digest = fnv1a_hex(base_.dump() + "|" + c.op + "|" + c.params);
    const auto start = std::chrono::steady_clock::now();
    params_ = json::parse(c.params);
    where_ = "check '" + c.name + "'";
    Outcome2 out = dispatch(c.op);
    if (c.expect) apply_expectations(json::parse(*c.expect), out);
    record.result = out.verdict;
    record.values = std::move(out.values);
    record.witnesses = std::move(out.witnesses);
    if (options_.timing) {
      record.wall_us = std::chrono::duration_cast<std::chrono::microseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    }
    return record;
  }

 private:
  // ---- parameter access
  const json* param(const std::string& key) const {
    auto it = params_.find(key);
    return it == params_.end() ? nullptr : &*it;
  }
  int bidder_param(const std::string& key = "bidder") const {
    const json* p = param(key);
    if (!p) throw ParseError(where_ + "." + key, "missing parameter");
    const int i = int_from(*p, where_ + "." + key);
    if (i < 0 || i >= inst_.bidders()) throw ParseError(where_ + "." + key, "bidder out of range");
    return i;
  }
  int item_index(const json& node, const std::string& where) const {
    if (node.is_string()) {
      for (std::size_t k = 0; k < s_.item_names.size(); ++k) {
        if (s_.item_names[k] == node.get<std::string>()) return static_cast<int>(k);
      }
      throw ParseError(where, "unknown item '" + node.get<std::string>() + "'");
    }
    const int j = int_from(node, where);
    if (j < 0 || j >= inst_.items()) throw ParseError(where, "item out of range");
    return j;
  }
  int item_param(const std::string& key = "item") const {
    const json* p = param(key);
    if (!p) throw ParseError(where_ + "." + key, "missing parameter");
    return item_index(*p, where_ + "." + key);
  }
  ItemSet set_param(const std::string& key) const {
    const json* p = param(key);
    if (!p) return ItemSet{};
    if (!p->is_array()) throw ParseError(where_ + "." + key, "expected an item list");
    ItemSet s;
    for (std::size_t k = 0; k < p->size(); ++k) s = s.with(item_index((*p)[k], index_path(where_ + "." + key, k)));
    return s;
  }
  Rational rational_param(const std::string& key) const {
    const json* p = param(key);
    if (!p) throw ParseError(where_ + "." + key, "missing parameter");
    return rational_from(*p, where_ + "." + key);
  }
  std::optional<Rational> optional_rational(const std::string& key) const {
    const json* p = param(key);
    if (!p) return std::nullopt;
    return rational_from(*p, where_ + "." + key);
  }
  bool bool_param(const std::string& key, bool fallback) const {
    const json* p = param(key);
    if (!p) return fallback;
    if (!p->is_boolean()) throw ParseError(where_ + "." + key, "expected true or false");
    return p->get<bool>();
  }
  std::string string_param(const std::string& key, const std::string& fallback) const {
    const json* p = param(key);
    if (!p) return fallback;
    if (!p->is_string()) throw ParseError(where_ + "." + key, "expected a string");
    return p->get<std::string>();
  }
  const BidProfile& bids() const {
    if (!s_.bids) throw ParseError(where_, "operation needs a bids field");
    return *s_.bids;
  }

  // ---- cached results
  const OptResult& opt() {
    if (!opt_) {
      OptOptions o;
      if (options_.budget) o.budget = *options_.budget;
      opt_ = optimal_allocations(inst_, o);
    }
    return *opt_;
  }

  // ---- rendering
  std::string set_text(ItemSet s) const { return to_string(s, s_.item_names); }
  std::string alloc_text(const Allocation& a) const { return to_string(a, s_.item_names); }
  std::string violation_text(const Violation& v) const {
    std::string out = "bidder " + std::to_string(v.bidder);
    if (v.type) out += " type " + std::to_string(*v.type);
    if (!v.items.empty()) out += " items " + set_text(v.items);
    out += ": required " + to_string(v.required) + ", actual " + to_string(v.actual);
    if (v.allocation) out += " (maximizer " + std::to_string(*v.allocation) + ")";
    return out;
  }
  void report_property(const PropertyReport& r, Outcome2& out) const {
    out.verdict = r.holds ? Verdict::holds : Verdict::violated;
    out.values["holds"] = bool_text(r.holds);
    if (r.witness_allocation) out.values["witness_allocation"] = alloc_text(*r.witness_allocation);
    for (const auto& v : r.violations) out.witnesses.push_back(violation_text(v));
  }
  static Verdict verdict_of(bool b) { return b ? Verdict::holds : Verdict::violated; }

  void apply_expectations(const json& expect, Outcome2& out) const {
    bool ok = true;
    for (const auto& [key, want] : expect.items()) {
      std::string expected;
      if (key == "result") {
        expected = want.get<std::string>();
        if (to_string(out.verdict) != expected) {
          ok = false;
          out.witnesses.push_back("expected result = " + expected + ", got " + to_string(out.verdict));
        }
        continue;
      }
      if (want.is_boolean()) {
        expected = bool_text(want.get<bool>());
      } else if (want.is_number_integer()) {
        expected = to_string(Rational(want.get<long>()));
      } else if (want.is_string()) {
        expected = want.get<std::string>();
        try {
          expected = to_string(parse_rational(expected));
        } catch (const Error&) {
        }
      } else {
        throw ParseError(where_ + ".expect." + key, "expected a boolean, integer or string");
      }
      auto it = out.values.find(key);
      const std::string got = it == out.values.end() ? "(missing)" : it->second;
      if (got != expected) {
        ok = false;
        out.witnesses.push_back("expected " + key + " = " + expected + ", got " + got);
      }
    }
    out.verdict = ok ? Verdict::holds : Verdict::violated;
  }

  std::vector<BidRow> deviation_rows(const Allocation& optimal) const {
    const json* p = param("deviation");
    if (!p || (p->is_string() && p->get<std::string>() == "xos")) return xos_deviation(inst_, optimal);
    if (p->is_string() && p->get<std::string>() == "prefix") return prefix_deviation(inst_, optimal);
    return matrix_from(*p, where_ + ".deviation");
  }

  std::set<Property> filters_param() const {
    std::set<Property> out;
    const json* p = param("filters");
    if (!p) return out;
    if (!p->is_array()) throw ParseError(where_ + ".filters", "expected a list of properties");
    for (const auto& f : *p) {
      try {
        out.insert(parse_property(f.get<std::string>()));
      } catch (const ParseError& e) {
        throw ParseError(where_ + ".filters", e.what());
      }
    }
    return out;
  }

  Outcome2 dispatch(const std::string& op) {
    static const std::map<std::string, Outcome2 (Runner::*)()> table = {
        {"outcome", &Runner::op_outcome},
        {"opt", &Runner::op_opt},
        {"ratio", &Runner::op_ratio},
        {"value", &Runner::op_value},
        {"marginal", &Runner::op_marginal},
        {"class", &Runner::op_class},
        {"alpha_star", &Runner::op_alpha_star},
        {"supports", &Runner::op_supports},
        {"maximizing_clause", &Runner::op_maximizing_clause},
        {"won_items_excluding", &Runner::op_won_excluding},
        {"revenue_lemma", &Runner::op_revenue_lemma},
        {"nob", &Runner::op_nob},
        {"inub", &Runner::op_inub},
        {"snub", &Runner::op_snub},
        {"underbid", &Runner::op_underbid},
        {"dominance", &Runner::op_dominance},
        {"flat_profile", &Runner::op_flat_profile},
        {"best_response", &Runner::op_best_response},
        {"pne", &Runner::op_pne},
        {"cce", &Runner::op_cce},
        {"bne", &Runner::op_bne},
        {"xos_pne", &Runner::op_xos_pne},
        {"pne_search", &Runner::op_pne_search},
        {"dynamics", &Runner::op_dynamics},
        {"revenue_guarantee", &Runner::op_revenue_guarantee},
        {"smoothness", &Runner::op_smoothness},
        {"poa_bound", &Runner::op_poa_bound},
        {"welfare_floor", &Runner::op_welfare_floor},
        {"composed", &Runner::op_composed},
        {"snub_expected", &Runner::op_snub_expected},
    };
    auto it = table.find(op);
    if (it == table.end()) throw ParseError(where_ + ".op", "unknown operation '" + op + "'");
    try {
      return (this->*(it->second))();
    } catch (const PreconditionError& e) {
      Outcome2 out;
      out.verdict = Verdict::inapplicable;
      out.witnesses.push_back(e.what());
      return out;
    }
  }

  // ---- operations
  Outcome2 op_outcome() {
    const Outcome o = run_auction(inst_, bids());
    Outcome2 out;
    out.values["sw"] = to_string(o.welfare);
    out.values["revenue"] = to_string(o.revenue);
    out.values["allocation"] = alloc_text(o.allocation);
    out.values["prices"] = row_text(o.item_prices);
    out.values["payments"] = row_text(o.payments);
    out.values["utilities"] = row_text(o.utilities);
    return out;
  }

  Outcome2 op_opt() {
    const OptResult& r = opt();
    Outcome2 out;
    out.values["opt"] = to_string(r.opt_value);
    out.values["maximizers"] = std::to_string(r.maximizers.size());
    out.values["maximizer"] = alloc_text(r.maximizers.front());
    return out;
  }

  Outcome2 op_ratio() {
    Outcome2 out;
    out.values["ratio"] = to_string(welfare_ratio(inst_, bids(), opt().opt_value));
    return out;
  }

  Outcome2 op_value() {
    Outcome2 out;
    out.values["value"] = to_string(inst_.valuation(bidder_param()).value(set_param("set")));
    return out;
  }

  Outcome2 op_marginal() {
    Outcome2 out;
    out.values["marginal"] =
        to_string(inst_.valuation(bidder_param()).marginal(set_param("t"), set_param("s")));
    return out;
  }

  Outcome2 op_class() {
    ValuationClass c;
    try {
      c = parse_valuation_class(string_param("class", "monotone"));
    } catch (const ParseError& e) {
      throw ParseError(where_ + ".class", e.what());
    }
    const ClassCheck r = check_class(inst_.valuation(bidder_param()), c);
    Outcome2 out;
    out.verdict = verdict_of(r.holds);
    out.values["holds"] = bool_text(r.holds);
    if (r.witness) {
      std::string w = "S = " + set_text(r.witness->s);
      if (c != ValuationClass::xos) w += ", T = " + set_text(r.witness->t);
      if (r.witness->item) w += ", j = " + set_text(ItemSet::single(*r.witness->item));
      out.witnesses.push_back(w);
    }
    return out;
  }

  Outcome2 op_alpha_star() {
    const AlphaCertificate cert = alpha_star(inst_.valuation(bidder_param()));
    Outcome2 out;
    out.values["alpha"] = to_string(cert.alpha_star);
    if (cert.witness) {
      out.values["witness_s"] = set_text(cert.witness->s);
      out.values["witness_t"] = set_text(cert.witness->t);
      out.values["witness_j"] = set_text(ItemSet::single(*cert.witness->item));
    }
    return out;
  }

  Outcome2 op_supports() {
    const json* p = param("perms");
    if (!p || !p->is_array()) throw ParseError(where_ + ".perms", "expected a list of permutations");
    std::vector<std::vector<int>> perms;
    for (std::size_t k = 0; k < p->size(); ++k) {
      std::vector<int> perm;
      for (std::size_t q = 0; q < (*p)[k].size(); ++q) {
        perm.push_back(item_index((*p)[k][q], index_path(index_path(where_ + ".perms", k), q)));
      }
      perms.push_back(std::move(perm));
    }
    const auto supports = permutation_supports(inst_.valuation(bidder_param()), perms);
    Outcome2 out;
    for (std::size_t k = 0; k < supports.size(); ++k) out.values["perm" + std::to_string(k)] = row_text(supports[k]);
    return out;
  }

  Outcome2 op_maximizing_clause() {
    Outcome2 out;
    out.values["clause"] = row_text(maximizing_clause(inst_.valuation(bidder_param()), set_param("set")));
    return out;
  }

  Outcome2 op_won_excluding() {
    Outcome2 out;
    out.values["won"] = set_text(won_items_excluding(inst_, bids(), bidder_param(), item_param()));
    return out;
  }

  Outcome2 op_revenue_lemma() {
    const LemmaCheck r = check_revenue_bids_lemma(inst_, bids(), opt().maximizers.front());
    Outcome2 out;
    out.verdict = verdict_of(r.holds);
    out.values["holds"] = bool_text(r.holds);
    out.values["lhs"] = to_string(r.lhs);
    out.values["rhs"] = to_string(r.rhs);
    out.values["slack"] = to_string(r.slack);
    return out;
  }

  Outcome2 op_nob() {
    Outcome2 out;
    report_property(check_nob(inst_, bids(), bool_param("strong", false)), out);
    return out;
  }

  WitnessMode mode_param() const {
    const std::string mode = string_param("mode", "shared");
    if (mode == "shared") return WitnessMode::shared;
    if (mode == "per_bidder") return WitnessMode::per_bidder;
    throw ParseError(where_ + ".mode", "expected shared or per_bidder");
  }

  Outcome2 op_inub() {
    Outcome2 out;
    report_property(check_inub(inst_, bids(), opt().maximizers, mode_param()), out);
    return out;
  }

  Outcome2 op_snub() {
    Outcome2 out;
    report_property(check_snub(inst_, bids(), opt().maximizers, mode_param()), out);
    return out;
  }

  Outcome2 op_underbid() {
    const int i = bidder_param();
    const int j = item_param();
    const bool under = is_item_underbid(inst_, bids(), i, j);
    Outcome2 out;
    out.verdict = verdict_of(under);
    out.values["holds"] = bool_text(under);
    out.values["bid"] = to_string(bids().at(i, j));
    out.values["marginal"] = to_string(inst_.valuation(i).marginal(
        ItemSet::single(j), won_items_excluding(inst_, bids(), i, j)));
    return out;
  }

  Outcome2 op_dominance() {
    std::vector<std::vector<Rational>> probes;
    if (const json* p = param("probes")) probes = matrix_from(*p, where_ + ".probes");
    const DominanceReport r = dominance_check(inst_, bidder_param(), item_param(), bids(),
                                              rational_param("under"), probes);
    Outcome2 out;
    out.verdict = verdict_of(r.confirmed);
    out.values["holds"] = bool_text(r.confirmed);
    out.values["marginal"] = to_string(r.marginal);
    out.values["probes"] = std::to_string(r.probes.size());
    out.values["strict_opponent"] = std::to_string(r.strict_opponent);
    out.values["strict_opponent_bid"] = to_string(r.strict_witness.column[r.strict_opponent]);
    out.values["strict_gain"] =
        to_string(Rational(r.strict_witness.utility_marginal - r.strict_witness.utility_under));
    if (r.counterexample) out.witnesses.push_back("underbid wins at column " + row_text(r.counterexample->column));
    return out;
  }

  Outcome2 op_flat_profile() {
    const OptResult& r = opt();
    const BidProfile b = construct_flat_optimal_profile(inst_, r.maximizers.front());
    const Outcome o = run_auction(inst_, b);
    const bool nob = check_nob(inst_, b).holds;
    const bool snub = check_snub(inst_, b, r.maximizers).holds;
    const bool optimal = o.welfare == r.opt_value;
    Outcome2 out;
    out.verdict = verdict_of(nob && snub && optimal);
    out.values["holds"] = bool_text(nob && snub && optimal);
    out.values["bids"] = to_string(b);
    out.values["allocation"] = alloc_text(o.allocation);
    out.values["nob"] = bool_text(nob);
    out.values["snub"] = bool_text(snub);
    return out;
  }

  Outcome2 op_best_response() {
    const BestResponse br = best_response(inst_, bidder_param(), bids(), grid_);
    Outcome2 out;
    out.values["utility"] = to_string(br.utility);
    out.values["bids"] = row_text(br.bids);
    out.values["target"] = set_text(br.target);
    return out;
  }

  void report_equilibrium(const EquilibriumCheck& r, Outcome2& out) const {
    out.verdict = verdict_of(r.holds);
    out.values["holds"] = bool_text(r.holds);
    if (r.deviation) {
      std::string w = "bidder " + std::to_string(r.deviation->bidder);
      if (r.deviation->type >= 0) w += " type " + std::to_string(r.deviation->type);
      w += " deviates to " + row_text(r.deviation->bids) + ": " + to_string(r.deviation->current) +
           " -> " + to_string(r.deviation->improved);
      out.witnesses.push_back(w);
    }
  }

  Outcome2 op_pne() {
    Outcome2 out;
    report_equilibrium(verify_pne(inst_, bids(), grid_), out);
    return out;
  }

  Outcome2 op_cce() {
    if (!s_.profile_distribution) throw ParseError(where_, "cce needs a distribution over bid profiles");
    Outcome2 out;
    report_equilibrium(verify_cce(inst_, *s_.profile_distribution, grid_), out);
    return out;
  }

  void require_bayesian() const {
    if (!s_.setting || !s_.type_distribution || !s_.strategies) {
      throw ParseError(where_, "operation needs types, a type distribution and strategies");
    }
  }

  Outcome2 op_bne() {
    require_bayesian();
    Outcome2 out;
    report_equilibrium(verify_bne(*s_.setting, *s_.strategies, *s_.type_distribution, grid_), out);
    return out;
  }

  Outcome2 op_xos_pne() {
    const XosPne r = construct_xos_pne(inst_);
    const OptResult& o = opt();
    const bool pne = verify_pne(inst_, r.bids, grid_).holds;
    const bool nob = check_nob(inst_, r.bids).holds;
    const bool snub = check_snub(inst_, r.bids, o.maximizers).holds;
    const Rational ratio = welfare_ratio(inst_, r.bids, o.opt_value);
    const bool ok = pne && nob && snub && ratio == 1;
    Outcome2 out;
    out.verdict = verdict_of(ok);
    out.values["holds"] = bool_text(ok);
    out.values["bids"] = to_string(r.bids);
    out.values["allocation"] = alloc_text(r.allocation);
    out.values["pne"] = bool_text(pne);
    out.values["nob"] = bool_text(nob);
    out.values["snub"] = bool_text(snub);
    out.values["ratio"] = to_string(ratio);
    return out;
  }

  Outcome2 op_pne_search() {
    PneSearchOptions o;
    o.filters = filters_param();
    if (options_.budget) o.budget = *options_.budget;
    const PneSearchResult r = enumerate_pne(inst_, grid_, o);
    Outcome2 out;
    out.values["count"] = std::to_string(r.equilibria.size());
    out.values["examined"] = std::to_string(r.examined);
    out.values["worst_ratio"] = r.worst_ratio ? to_string(*r.worst_ratio) : "none";
    if (const auto floor = optional_rational("min_ratio")) {
      const bool ok = !r.worst_ratio || *r.worst_ratio >= *floor;
      out.verdict = verdict_of(ok);
      out.values["holds"] = bool_text(ok);
    }
    if (r.equilibria.empty()) out.witnesses.push_back("no PNE found at this grid");
    for (const auto& f : r.equilibria) {
      if (r.worst_ratio && f.ratio == *r.worst_ratio) {
        out.witnesses.push_back("worst " + to_string(f.bids));
        break;
      }
    }
    return out;
  }

  Outcome2 op_dynamics() {
    std::vector<int> order;
    if (const json* p = param("order")) {
      for (std::size_t k = 0; k < p->size(); ++k) order.push_back(int_from((*p)[k], index_path(where_ + ".order", k)));
    } else {
      for (int i = 0; i < inst_.bidders(); ++i) order.push_back(i);
    }
    int rounds = 100;
    if (const json* p = param("max_rounds")) rounds = int_from(*p, where_ + ".max_rounds");
    BidProfile start = s_.bids && !bool_param("from_zero", false)
                           ? *s_.bids
                           : BidProfile(inst_.bidders(), inst_.items());
    const Dynamics d = best_response_dynamics(inst_, start, order, rounds, grid_);
    const bool pne = verify_pne(inst_, d.trajectory.back(), grid_).holds;
    Outcome2 out;
    out.verdict = verdict_of(d.converged && pne);
    out.values["holds"] = bool_text(d.converged && pne);
    out.values["converged"] = bool_text(d.converged);
    out.values["steps"] = std::to_string(d.improving_steps);
    out.values["final"] = to_string(d.trajectory.back());
    return out;
  }

  std::vector<BidProfile> profiles_for_guarantee() const {
    if (string_param("source", s_.bids ? "bids" : "profiles") == "bids") return {bids()};
    if (!s_.profile_distribution) throw ParseError(where_, "no bid profiles to check");
    std::vector<BidProfile> out;
    for (const auto& p : s_.profile_distribution->support()) out.push_back(p.value);
    return out;
  }

  Outcome2 op_revenue_guarantee() {
    const RevenueGuaranteeCheck r = check_revenue_guarantee(
        inst_, profiles_for_guarantee(), rational_param("gamma"), rational_param("delta"),
        opt().opt_value);
    Outcome2 out;
    out.verdict = verdict_of(r.holds);
    out.values["holds"] = bool_text(r.holds);
    out.values["slack"] = to_string(r.worst_slack);
    if (r.violator) out.witnesses.push_back("profile " + std::to_string(*r.violator));
    return out;
  }

  Outcome2 op_smoothness() {
    const auto rows = deviation_rows(opt().maximizers.front());
    const SmoothnessCheck r = check_smoothness_at(inst_, bids(), rows, rational_param("lambda"),
                                                  rational_param("mu"), opt().opt_value);
    Outcome2 out;
    out.verdict = verdict_of(r.holds);
    out.values["holds"] = bool_text(r.holds);
    out.values["lhs"] = to_string(r.lhs);
    out.values["rhs"] = to_string(r.rhs);
    out.values["slack"] = to_string(r.slack);
    std::string dev;
    for (const auto& row : rows) dev += (dev.empty() ? "" : " ") + row_text(row);
    out.values["deviation"] = "[" + dev + "]";
    return out;
  }

  Outcome2 op_poa_bound() {
    GuaranteeParams p{optional_rational("lambda"), optional_rational("mu"),
                      optional_rational("gamma"), optional_rational("delta")};
    Outcome2 out;
    try {
      out.values["bound"] = to_string(poa_bound(p));
    } catch (const InvalidArgument& e) {
      throw ParseError(where_, e.what());
    }
    return out;
  }

  void report_floor(const FloorCheck& r, Outcome2& out) const {
    out.verdict = r.verdict;
    out.values["welfare"] = to_string(r.welfare);
    out.values["opt"] = to_string(r.opt);
    out.values["floor"] = to_string(r.floor);
    if (!r.reason.empty()) out.witnesses.push_back(r.reason);
  }

  Outcome2 op_welfare_floor() {
    const Rational gamma = rational_param("gamma");
    const Rational delta = rational_param("delta");
    std::string fallback = "bids";
    if (!s_.bids) fallback = s_.type_distribution ? "types" : "profiles";
    const std::string source = string_param("source", fallback);
    Outcome2 out;
    if (source == "bids") {
      report_floor(check_welfare_floor(inst_, bids(), gamma, delta), out);
    } else if (source == "profiles") {
      if (!s_.profile_distribution) throw ParseError(where_, "no bid-profile distribution");
      report_floor(check_welfare_floor(inst_, *s_.profile_distribution, gamma, delta), out);
    } else if (source == "types") {
      require_bayesian();
      report_floor(check_welfare_floor(*s_.setting, *s_.strategies, *s_.type_distribution, gamma, delta), out);
    } else {
      throw ParseError(where_ + ".source", "expected bids, profiles or types");
    }
    return out;
  }

  Outcome2 op_composed() {
    Outcome2 out;
    report_floor(subadditive_composed_check(inst_, bids(), grid_), out);
    return out;
  }

  Outcome2 op_snub_expected() {
    require_bayesian();
    Outcome2 out;
    report_property(check_snub_expected(*s_.setting, *s_.strategies, *s_.type_distribution), out);
    return out;
  }

  const Scenario& s_;
  const RunOptions& options_;
  AuctionInstance inst_;
  BidGrid grid_;
  json base_;
  json params_;
  std::string where_;
  std::optional<OptResult> opt_;
};

}  // namespace

Report run_scenario(const Scenario& s, const RunOptions& options) {
  Runner runner(s, options);
  Report report;
  report.scenario = s.name;
  for (const auto& c : s.checks) report.checks.push_back(runner.run(c));
  return report;
}

}  // namespace s2pa
