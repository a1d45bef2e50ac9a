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

#include "s2pa/lp.hpp"

#include <cstddef>

#include "s2pa/errors.hpp"

namespace s2pa::lp {

Solution maximize(const Problem& problem) {
  const std::size_t rows = problem.a.size();
  const std::size_t vars = problem.c.size();
  if (problem.b.size() != rows) throw InvalidArgument("lp: row count mismatch");
  for (const auto& row : problem.a) {
    if (row.size() != vars) throw InvalidArgument("lp: column count mismatch");
  }
  for (const auto& rhs : problem.b) {
    if (rhs < 0) throw InvalidArgument("lp: negative right-hand side");
  }

  // Tableau columns: structural vars, then one slack per row, then rhs.
  const std::size_t cols = vars + rows;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t v = 0; v < vars; ++v) t[r][v] = problem.a[r][v];
    t[r][vars + r] = 1;
    t[r][cols] = problem.b[r];
  }
  // Reduced costs; objective value kept negated in the last cell.
  std::vector<Rational> z(cols + 1);
  for (std::size_t v = 0; v < vars; ++v) z[v] = problem.c[v];

  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = vars + r;

  while (true) {
    std::size_t enter = cols;
    for (std::size_t k = 0; k < cols; ++k) {
      if (z[k] > 0) {
        enter = k;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][cols] / t[r][enter];
      if (leave == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == rows) return Solution{false, {}, {}};

    const Rational pivot = t[leave][enter];
    for (auto& cell : t[leave]) cell /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rational factor = t[r][enter];
      for (std::size_t k = 0; k <= cols; ++k) t[r][k] -= factor * t[leave][k];
    }
    if (z[enter] != 0) {
      const Rational factor = z[enter];
      for (std::size_t k = 0; k <= cols; ++k) z[k] -= factor * t[leave][k];
    }
    basis[leave] = enter;
  }

  Solution sol;
  sol.value = -z[cols];
  sol.x.assign(vars, Rational(0));
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < vars) sol.x[basis[r]] = t[r][cols];
  }
  return sol;
}

}  // namespace s2pa::lp
