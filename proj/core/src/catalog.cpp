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

#include <map>
#include <sstream>

#include "json.hpp"
#include "s2pa/errors.hpp"
#include "s2pa/scenario.hpp"

namespace s2pa {

using nlohmann::json;

namespace {

const std::map<std::string, std::string>& fixed_entries() {
  static const std::map<std::string, std::string> entries = {
      {"ex-1.1", R"json({
  "description": "Two unit-demand bidders; a PNE with no overbidding in which bidder 0 underbids on x.",
  "instance": {
    "n": 2, "m": 2, "mechanism": "s2pa", "tie_break": [0, 1], "items": ["x", "y"],
    "valuations": [
      {"kind": "unit_demand", "data": [2, 1]},
      {"kind": "unit_demand", "data": [1, 2]}
    ]
  },
  "bids": [[0, 1], [1, 0]],
  "checks": [
    {"name": "outcome", "op": "outcome", "expect": {"sw": 2, "revenue": 0}},
    {"name": "opt", "op": "opt", "expect": {"opt": 4}},
    {"name": "ratio", "op": "ratio", "expect": {"ratio": "1/2"}},
    {"name": "pne", "op": "pne", "expect": {"holds": true}},
    {"name": "nob", "op": "nob", "expect": {"holds": true}},
    {"name": "inub", "op": "inub", "expect": {"holds": false}},
    {"name": "underbid-0-x", "op": "underbid", "params": {"bidder": 0, "item": "x"}, "expect": {"holds": true, "marginal": 1}},
    {"name": "snub", "op": "snub", "expect": {"holds": false}},
    {"name": "dominance-0-x", "op": "dominance", "params": {"bidder": 0, "item": "x", "under": 0},
     "expect": {"holds": true, "strict_opponent_bid": "1/2"}}
  ]
})json"},
      {"ex-1.2", R"json({
  "description": "Two unit-demand bidders with a PNE that passes every bid filter and reaches ratio 2/3.",
  "instance": {
    "n": 2, "m": 2, "mechanism": "s2pa", "tie_break": [0, 1], "items": ["x", "y"],
    "valuations": [
      {"kind": "unit_demand", "data": [3, 2]},
      {"kind": "unit_demand", "data": [2, 3]}
    ]
  },
  "bids": [[1, 2], [2, 1]],
  "grid": {"step": 1, "max": 3},
  "checks": [
    {"name": "outcome", "op": "outcome", "expect": {"sw": 4, "revenue": 2}},
    {"name": "opt", "op": "opt", "expect": {"opt": 6}},
    {"name": "ratio", "op": "ratio", "expect": {"ratio": "2/3"}},
    {"name": "pne", "op": "pne", "expect": {"holds": true}},
    {"name": "nob", "op": "nob", "expect": {"holds": true}},
    {"name": "inub", "op": "inub", "expect": {"holds": true}},
    {"name": "snub", "op": "snub", "expect": {"holds": true}},
    {"name": "revenue-1-1", "op": "revenue_guarantee", "params": {"gamma": 1, "delta": 1}, "expect": {"holds": true}},
    {"name": "smoothness-1-1", "op": "smoothness", "params": {"lambda": 1, "mu": 1, "deviation": "xos"}, "expect": {"holds": true}},
    {"name": "floor", "op": "welfare_floor", "params": {"gamma": 1, "delta": 1}, "expect": {"result": "holds"}},
    {"name": "composed", "op": "composed", "expect": {"result": "holds", "floor": 4}},
    {"name": "pne-search", "op": "pne_search", "params": {"filters": ["nob", "snub"]}, "expect": {"worst_ratio": "2/3"}},
    {"name": "xos-pne", "op": "xos_pne", "expect": {"holds": true}},
    {"name": "flat-profile", "op": "flat_profile", "expect": {"holds": true, "bids": "[(3,0) (0,3)]"}}
  ]
})json"},
      {"prop-6.2", R"json({
  "description": "A PNE with underbidding ruled out but heavy overbidding on lost items; welfare is half of optimal.",
  "instance": {
    "n": 2, "m": 2, "mechanism": "s2pa", "tie_break": [0, 1], "items": ["x", "y"],
    "valuations": [
      {"kind": "unit_demand", "data": [2, 1]},
      {"kind": "unit_demand", "data": [1, 2]}
    ]
  },
  "bids": [[1, 100], [100, 1]],
  "checks": [
    {"name": "outcome", "op": "outcome", "expect": {"sw": 2, "revenue": 2}},
    {"name": "opt", "op": "opt", "expect": {"opt": 4}},
    {"name": "pne", "op": "pne", "expect": {"holds": true}},
    {"name": "inub", "op": "inub", "expect": {"holds": true}},
    {"name": "nob", "op": "nob", "expect": {"holds": false}},
    {"name": "floor", "op": "welfare_floor", "params": {"gamma": 1, "delta": 1}, "expect": {"result": "holds", "floor": 2}}
  ]
})json"},
      {"ex-xos-nob-inub", R"json({
  "description": "XOS bidders with a PNE satisfying NOB and iNUB whose welfare is half of optimal.",
  "instance": {
    "n": 2, "m": 4, "mechanism": "s2pa", "tie_break": [0, 1], "items": ["x", "y", "z", "w"],
    "valuations": [
      {"kind": "xos", "data": [[2, 2, 0, 0], [0, 0, 1, 1]]},
      {"kind": "xos", "data": [[0, 0, 2, 2], [1, 1, 0, 0]]}
    ]
  },
  "bids": [[0, 0, 1, 1], [1, 1, 0, 0]],
  "checks": [
    {"name": "outcome", "op": "outcome", "expect": {"sw": 4}},
    {"name": "opt", "op": "opt", "expect": {"opt": 8}},
    {"name": "ratio", "op": "ratio", "expect": {"ratio": "1/2"}},
    {"name": "pne", "op": "pne", "expect": {"holds": true}},
    {"name": "nob", "op": "nob", "expect": {"holds": true}},
    {"name": "inub", "op": "inub", "expect": {"holds": true}},
    {"name": "snub", "op": "snub", "expect": {"holds": false}}
  ]
})json"},
      {"app-b1", R"json({
  "description": "A three-item XOS valuation that is not alpha-submodular for any alpha > 0.",
  "instance": {
    "n": 1, "m": 3, "mechanism": "s2pa", "tie_break": [0], "items": ["x", "y", "z"],
    "valuations": [
      {"kind": "table", "data": [0, 1, 1, 1, 1, 1, 1, "3/2"]}
    ]
  },
  "checks": [
    {"name": "xos", "op": "class", "params": {"bidder": 0, "class": "xos"}, "expect": {"holds": true}},
    {"name": "submodular", "op": "class", "params": {"bidder": 0, "class": "submodular"}, "expect": {"holds": false}},
    {"name": "alpha-star", "op": "alpha_star", "params": {"bidder": 0}, "expect": {"alpha": 0}},
    {"name": "marginal-z", "op": "marginal", "params": {"bidder": 0, "t": ["z"], "s": ["x"]}, "expect": {"marginal": 0}}
  ]
})json"},
      {"app-d", R"json({
  "description": "Three items, two bidders: a PNE satisfying sNUB but not iNUB.",
  "instance": {
    "n": 2, "m": 3, "mechanism": "s2pa", "tie_break": [0, 1], "items": ["x", "y", "z"],
    "valuations": [
      {"kind": "table", "data": [0, 5, 5, 10, 10, 15, 15, 16]},
      {"kind": "table", "data": [0, 8, 8, 14, 15, 15, 15, 15]}
    ]
  },
  "bids": [[3, 3, 8], [8, 8, 2]],
  "checks": [
    {"name": "outcome", "op": "outcome", "expect": {"sw": 24, "revenue": 8}},
    {"name": "opt", "op": "opt", "expect": {"opt": 25}},
    {"name": "ratio", "op": "ratio", "expect": {"ratio": "24/25"}},
    {"name": "pne", "op": "pne", "expect": {"holds": true}},
    {"name": "snub", "op": "snub", "expect": {"holds": true}},
    {"name": "inub", "op": "inub", "expect": {"holds": false}},
    {"name": "underbid-0-x", "op": "underbid", "params": {"bidder": 0, "item": "x"}, "expect": {"holds": true, "marginal": 5}},
    {"name": "marginal-xy-z", "op": "marginal", "params": {"bidder": 0, "t": ["x", "y"], "s": ["z"]}, "expect": {"marginal": 6}},
    {"name": "supports-xyz", "op": "supports", "params": {"bidder": 0, "perms": [["x", "y", "z"]]}, "expect": {"perm0": "(5,5,6)"}},
    {"name": "dominance-0-x", "op": "dominance", "params": {"bidder": 0, "item": "x", "under": 3},
     "expect": {"holds": true, "strict_opponent_bid": 4}},
    {"name": "flat-profile", "op": "flat_profile", "expect": {"holds": true}}
  ]
})json"},
  };
  return entries;
}

json xos_inub(int m) {
  if (m < 4 || m > 16) throw InvalidArgument("ex-xos-inub: m must lie in [4, 16]");
  auto zeros = [m] { return json(std::vector<int>(m, 0)); };
  json a1 = zeros(), a2 = zeros(), c1 = zeros(), c2 = zeros(), b1 = zeros(), b2 = zeros();
  a1[0] = a1[1] = 2;
  a2[2] = a2[3] = 1;
  c2[0] = c2[1] = 1;
  b2[0] = b2[1] = 2;
  json names = json::array();
  for (int j = 2; j < m; ++j) {
    c1[j] = 2;
    b1[j] = 2;
  }
  for (int j = 0; j < m; ++j) names.push_back(j < 26 ? std::string(1, static_cast<char>('a' + j)) : "i" + std::to_string(j));
  const std::string two_m = std::to_string(2 * m);
  return {
      {"description", "XOS bidders where iNUB alone leaves welfare at a 2/m fraction of optimal."},
      {"instance",
       {{"n", 2}, {"m", m}, {"mechanism", "s2pa"}, {"tie_break", {0, 1}}, {"items", names},
        {"valuations", {{{"kind", "xos"}, {"data", {a1, a2}}}, {{"kind", "xos"}, {"data", {c1, c2}}}}}}},
      {"bids", {b1, b2}},
      {"checks",
       {{{"name", "outcome"}, {"op", "outcome"}, {"expect", {{"sw", 4}}}},
        {{"name", "opt"}, {"op", "opt"}, {"expect", {{"opt", 2 * m}}}},
        {{"name", "ratio"}, {"op", "ratio"}, {"expect", {{"ratio", to_string(Rational(2, m))}}}},
        {{"name", "pne"}, {"op", "pne"}, {"expect", {{"holds", true}}}},
        {{"name", "inub"}, {"op", "inub"}, {"expect", {{"holds", true}}}},
        {{"name", "nob"}, {"op", "nob"}, {"expect", {{"holds", false}}}},
        {{"name", "revenue-1-m"}, {"op", "revenue_guarantee"}, {"params", {{"gamma", 1}, {"delta", m}}},
         {"expect", {{"holds", true}}}},
        {{"name", "revenue-1-1"}, {"op", "revenue_guarantee"}, {"params", {{"gamma", 1}, {"delta", 1}}},
         {"expect", {{"holds", false}}}},
        {{"name", "xos-pne"}, {"op", "xos_pne"}, {"expect", {{"holds", true}}}}}}};
}

json single_minded(const Rational& r) {
  if (r <= 1) throw InvalidArgument("ex-single-minded: R must exceed 1");
  const std::string rs = to_string(r);
  return {
      {"description", "Single-minded bidders; the low-value bidder wins both items in a PNE with iNUB."},
      {"instance",
       {{"n", 2}, {"m", 2}, {"mechanism", "s2pa"}, {"tie_break", {0, 1}}, {"items", {"x", "y"}},
        {"valuations",
         {{{"kind", "table"}, {"data", {0, 0, 0, 1}}}, {{"kind", "table"}, {"data", {"0", "0", "0", rs}}}}}}},
      {"bids", {{rs, rs}, {0, 0}}},
      {"checks",
       {{{"name", "outcome"}, {"op", "outcome"}, {"expect", {{"sw", 1}, {"allocation", "[{x,y} {}]"}}}},
        {{"name", "opt"}, {"op", "opt"}, {"expect", {{"opt", rs}}}},
        {{"name", "ratio"}, {"op", "ratio"}, {"expect", {{"ratio", to_string(Rational(1 / r))}}}},
        {{"name", "pne"}, {"op", "pne"}, {"expect", {{"holds", true}}}},
        {{"name", "inub"}, {"op", "inub"}, {"expect", {{"holds", true}}}}}}};
}

json alpha_family(const Rational& alpha) {
  if (alpha < 0 || alpha > 1) throw InvalidArgument("app-b2: alpha must lie in [0, 1]");
  const std::string v1 = "2";
  const std::string v2 = to_string(Rational(2 * (1 + alpha)));
  const std::string v3 = to_string(Rational(2 * (2 + alpha)));
  return {
      {"description", "A symmetric three-item valuation that is exactly alpha-submodular."},
      {"instance",
       {{"n", 1}, {"m", 3}, {"mechanism", "s2pa"}, {"tie_break", {0}}, {"items", {"x", "y", "z"}},
        {"valuations", {{{"kind", "table"}, {"data", {"0", v1, v1, v2, v1, v2, v2, v3}}}}}}},
      {"checks",
       {{{"name", "xos"}, {"op", "class"}, {"params", {{"bidder", 0}, {"class", "xos"}}},
         {"expect", {{"holds", alpha == 1}}}},
        {{"name", "subadditive"}, {"op", "class"}, {"params", {{"bidder", 0}, {"class", "subadditive"}}},
         {"expect", {{"holds", true}}}},
        {{"name", "alpha-star"}, {"op", "alpha_star"}, {"params", {{"bidder", 0}}},
         {"expect", {{"alpha", to_string(alpha)}}}}}}};
}

struct ParsedName {
  std::string base;
  std::optional<std::string> arg;
};

ParsedName split_name(const std::string& name) {
  const auto open = name.find('(');
  if (open == std::string::npos) return {name, std::nullopt};
  if (name.back() != ')') throw InvalidArgument("malformed example name '" + name + "'");
  std::string arg = name.substr(open + 1, name.size() - open - 2);
  if (const auto eq = arg.find('='); eq != std::string::npos) arg = arg.substr(eq + 1);
  return {name.substr(0, open), arg};
}

Rational arg_rational(const ParsedName& p, const std::string& fallback) {
  try {
    return parse_rational(p.arg.value_or(fallback));
  } catch (const Error&) {
    throw InvalidArgument("bad parameter for " + p.base + ": '" + *p.arg + "'");
  }
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"ex-1.1",           "ex-1.2",
          "prop-6.2",         "ex-xos-inub(m=4)",
          "ex-xos-nob-inub",  "ex-single-minded(R=1000)",
          "app-b1",           "app-b2(alpha=1/2)",
          "app-d"};
}

Scenario catalog_scenario(const std::string& name) {
  const ParsedName p = split_name(name);
  json doc;
  std::string canonical_name = p.base;
  if (auto it = fixed_entries().find(p.base); it != fixed_entries().end()) {
    if (p.arg) throw InvalidArgument("example '" + p.base + "' takes no parameter");
    doc = json::parse(it->second);
  } else if (p.base == "ex-xos-inub") {
    const Rational m = arg_rational(p, "4");
    if (m.get_den() != 1) throw InvalidArgument("ex-xos-inub: m must be an integer");
    doc = xos_inub(static_cast<int>(m.get_num().get_si()));
    canonical_name += "(m=" + to_string(m) + ")";
  } else if (p.base == "ex-single-minded") {
    const Rational r = arg_rational(p, "1000");
    doc = single_minded(r);
    canonical_name += "(R=" + to_string(r) + ")";
  } else if (p.base == "app-b2") {
    const Rational alpha = arg_rational(p, "1/2");
    doc = alpha_family(alpha);
    canonical_name += "(alpha=" + to_string(alpha) + ")";
  } else {
    std::string known;
    for (const auto& n : catalog_names()) known += (known.empty() ? "" : ", ") + n;
    throw InvalidArgument("unknown example '" + name + "' (known: " + known + ")");
  }
  doc["name"] = canonical_name;
  return parse_scenario(doc.dump());
}

Report run_catalog(const std::string& name, const RunOptions& options) {
  return run_scenario(catalog_scenario(name), options);
}

}  // namespace s2pa
