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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace s2pa {

/// Largest item count any bitmask-indexed structure supports.
inline constexpr int kMaxItems = 20;

/// A subset of the items [0, m), stored as a bitmask.
class ItemSet {
 public:
  constexpr ItemSet() = default;
  constexpr explicit ItemSet(std::uint32_t bits) : bits_(bits) {}
  constexpr ItemSet(std::initializer_list<int> items) {
    for (int j : items) bits_ |= std::uint32_t{1} << j;
  }

  static constexpr ItemSet full(int m) {
    return ItemSet(m >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1);
  }
  static constexpr ItemSet single(int j) { return ItemSet(std::uint32_t{1} << j); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int j) const { return (bits_ >> j) & 1U; }
  constexpr bool subset_of(ItemSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr ItemSet with(int j) const { return ItemSet(bits_ | (std::uint32_t{1} << j)); }
  constexpr ItemSet without(int j) const { return ItemSet(bits_ & ~(std::uint32_t{1} << j)); }

  constexpr ItemSet operator|(ItemSet o) const { return ItemSet(bits_ | o.bits_); }
  constexpr ItemSet operator&(ItemSet o) const { return ItemSet(bits_ & o.bits_); }
  constexpr ItemSet operator-(ItemSet o) const { return ItemSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const ItemSet&) const = default;
  constexpr auto operator<=>(const ItemSet&) const = default;

  /// Iterates over member indices in increasing order.
  class iterator {
   public:
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint32_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int j : *this) out.push_back(j);
    return out;
  }

 private:
  std::uint32_t bits_ = 0;
};

/// "{0,2}" style rendering; with names, "{x,z}".
std::string to_string(ItemSet s, const std::vector<std::string>& names = {});

/// Calls f(sub) for every subset of `s`, including the empty set and `s` itself,
/// in increasing bitmask order.
template <typename F>
void for_each_subset(ItemSet s, F&& f) {
  const std::uint32_t mask = s.bits();
  std::uint32_t sub = 0;
  while (true) {
    f(ItemSet(sub));
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

}  // namespace s2pa
