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

#include "s2pa/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "s2pa/errors.hpp"

namespace s2pa {

using nlohmann::json;

bool Report::all_hold() const {
  for (const auto& c : checks) {
    if (c.result != Verdict::holds) return false;
  }
  return true;
}

std::string to_string(ReportFormat f) {
  switch (f) {
    case ReportFormat::text: return "text";
    case ReportFormat::csv: return "csv";
    case ReportFormat::structured: return "structured";
  }
  return "?";
}

ReportFormat parse_report_format(const std::string& text) {
  if (text == "text") return ReportFormat::text;
  if (text == "csv") return ReportFormat::csv;
  if (text == "structured") return ReportFormat::structured;
  throw ParseError("format", "unknown report format '" + text + "'");
}

Verdict parse_verdict(const std::string& text) {
  if (text == "holds") return Verdict::holds;
  if (text == "violated") return Verdict::violated;
  if (text == "inapplicable") return Verdict::inapplicable;
  throw ParseError("result", "unknown verdict '" + text + "'");
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string text_report(const Report& report) {
  std::ostringstream out;
  out << "scenario " << (report.scenario.empty() ? "(unnamed)" : report.scenario) << '\n';
  for (const auto& c : report.checks) {
    out << "check " << c.name << " [" << c.op << "]: " << to_string(c.result) << '\n';
    for (const auto& [k, v] : c.values) out << "  " << k << " = " << v << '\n';
    for (const auto& w : c.witnesses) out << "  witness: " << w << '\n';
    if (c.wall_us) out << "  wall_us = " << *c.wall_us << '\n';
    out << "  digest = " << c.digest << '\n';
  }
  int holds = 0, violated = 0, inapplicable = 0;
  for (const auto& c : report.checks) {
    if (c.result == Verdict::holds) ++holds;
    if (c.result == Verdict::violated) ++violated;
    if (c.result == Verdict::inapplicable) ++inapplicable;
  }
  out << "summary: " << holds << " holds, " << violated << " violated, " << inapplicable
      << " inapplicable\n";
  return out.str();
}

std::string csv_report(const Report& report) {
  std::ostringstream out;
  out << "scenario,name,op,result,digest,values,witnesses,wall_us\n";
  for (const auto& c : report.checks) {
    std::string values;
    for (const auto& [k, v] : c.values) {
      if (!values.empty()) values += ';';
      values += k + "=" + v;
    }
    std::string witnesses;
    for (const auto& w : c.witnesses) {
      if (!witnesses.empty()) witnesses += ';';
      witnesses += w;
    }
    out << csv_field(report.scenario) << ',' << csv_field(c.name) << ',' << csv_field(c.op) << ','
        << to_string(c.result) << ',' << c.digest << ',' << csv_field(values) << ','
        << csv_field(witnesses) << ',' << (c.wall_us ? std::to_string(*c.wall_us) : "") << '\n';
  }
  return out.str();
}

std::string structured_report(const Report& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json record = {{"name", c.name},     {"op", c.op},         {"digest", c.digest},
                   {"result", to_string(c.result)}, {"values", c.values}, {"witnesses", c.witnesses}};
    if (c.wall_us) record["wall_us"] = *c.wall_us;
    checks.push_back(std::move(record));
  }
  return json{{"scenario", report.scenario}, {"checks", std::move(checks)}}.dump(2) + "\n";
}

}  // namespace

std::string emit_report(const Report& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::text: return text_report(report);
    case ReportFormat::csv: return csv_report(report);
    case ReportFormat::structured: return structured_report(report);
  }
  return {};
}

Report parse_report(const std::string& structured) {
  json doc;
  try {
    doc = json::parse(structured);
  } catch (const json::parse_error& e) {
    throw ParseError("report", e.what());
  }
  try {
    Report report;
    report.scenario = doc.at("scenario").get<std::string>();
    for (const auto& c : doc.at("checks")) {
      CheckRecord record;
      record.name = c.at("name").get<std::string>();
      record.op = c.at("op").get<std::string>();
      record.digest = c.at("digest").get<std::string>();
      record.result = parse_verdict(c.at("result").get<std::string>());
      record.values = c.at("values").get<std::map<std::string, std::string>>();
      record.witnesses = c.at("witnesses").get<std::vector<std::string>>();
      if (c.contains("wall_us")) record.wall_us = c.at("wall_us").get<std::int64_t>();
      report.checks.push_back(std::move(record));
    }
    return report;
  } catch (const json::exception& e) {
    throw ParseError("report", e.what());
  }
}

}  // namespace s2pa
