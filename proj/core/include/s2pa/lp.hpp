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

#include <vector>

#include "s2pa/rational.hpp"

namespace s2pa::lp {

/// maximize c·x subject to A x <= b, x >= 0, with b >= 0 so the origin is
/// feasible. Dense rows; every row of `a` has c.size() entries.
struct Problem {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

struct Solution {
  bool bounded = true;
  Rational value;
  std::vector<Rational> x;
};

/// Exact primal simplex with Bland's rule; terminates on every input.
Solution maximize(const Problem& problem);

}  // namespace s2pa::lp
