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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace s2pa {

/// Exact rational number. All values, bids, prices and ratios use it.
using Rational = mpq_class;

/// Parses "p/q" or an integer literal (optional leading '-'). Rejects decimals,
/// whitespace and zero denominators. The result is canonical.
Rational parse_rational(std::string_view text);

/// Renders canonically: "p/q" for non-integers, "p" for integers.
std::string to_string(const Rational& value);

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace s2pa
