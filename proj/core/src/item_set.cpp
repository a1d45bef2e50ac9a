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

#include "s2pa/item_set.hpp"

namespace s2pa {

std::string to_string(ItemSet s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (int j : s) {
    if (!first) out += ',';
    first = false;
    out += j < static_cast<int>(names.size()) ? names[j] : std::to_string(j);
  }
  out += '}';
  return out;
}

}  // namespace s2pa
