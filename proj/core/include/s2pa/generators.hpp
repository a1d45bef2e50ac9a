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
#include <random>
#include <string>
#include <vector>

#include "s2pa/auction.hpp"
#include "s2pa/valuation.hpp"

namespace s2pa {

enum class Family { ud, sm_table, xos_clauses, sa_table, mon_table, alpha_table };

std::string to_string(Family f);
Family parse_family(const std::string& text);

/// mt19937_64 with modulo reduction, so sequences are identical on every
/// platform (the standard distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish integer in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  /// Integer in [lo, hi].
  long between(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

struct GeneratorOptions {
  /// Integer values and weights are drawn from [0, max_value].
  int max_value = 6;
  /// Upper bound on the clause count of xos_clauses valuations.
  int max_clauses = 3;
};

/// Largest m accepted by the table families.
inline constexpr int kMaxGeneratedTableItems = 6;

/// One random valuation of the family. Every family member passes its class
/// check: ud and sm_table are submodular, xos_clauses xos, sa_table
/// subadditive, mon_table monotone, alpha_table strictly increasing (α* > 0).
ValuationSpec random_valuation(Family family, int items, Rng& rng,
                               const GeneratorOptions& options = {});

/// `count` instances of n bidders over m items, deterministic in the seed.
std::vector<AuctionInstance> generate_instances(Family family, int bidders, int items,
                                                std::uint64_t seed, int count,
                                                const GeneratorOptions& options = {});

/// Row i has entries k / denominator with k uniform in [0, denominator · v_i([m])].
BidProfile random_bids(const AuctionInstance& inst, Rng& rng, long denominator = 2);

}  // namespace s2pa
