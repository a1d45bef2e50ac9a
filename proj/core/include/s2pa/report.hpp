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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "s2pa/bounds.hpp"

namespace s2pa {

struct CheckRecord {
  std::string name;
  std::string op;
  /// FNV-1a of the canonical scenario inputs and the check parameters.
  std::string digest;
  Verdict result = Verdict::holds;
  /// Named results, rationals rendered "p/q" (integers as "p").
  std::map<std::string, std::string> values;
  std::vector<std::string> witnesses;
  /// Microseconds; only recorded when timing is requested.
  std::optional<std::int64_t> wall_us;

  bool operator==(const CheckRecord&) const = default;
};

struct Report {
  std::string scenario;
  std::vector<CheckRecord> checks;

  bool operator==(const Report&) const = default;
  /// True iff every check holds; inapplicable counts as not holding.
  bool all_hold() const;
};

enum class ReportFormat { text, csv, structured };

std::string to_string(ReportFormat f);
ReportFormat parse_report_format(const std::string& text);

std::string emit_report(const Report& report, ReportFormat format);

/// Inverse of emit_report(·, structured).
Report parse_report(const std::string& structured);

Verdict parse_verdict(const std::string& text);

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace s2pa
