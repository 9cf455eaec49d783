// Copyright 2026 The kempe Authors
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
#include <iterator>
#include <vector>

namespace kempe {

/// Colors are 1-based, matching a palette 1..t. 0 means "uncolored".
using Color = int;
inline constexpr Color kUncolored = 0;
inline constexpr int kMaxColors = 63;

/// Bit set over colors 1..63.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr ColorSet(std::initializer_list<Color> colors) {
    for (Color c : colors) insert(c);
  }

  static constexpr ColorSet palette(int t) {
    ColorSet s;
    s.bits_ = t <= 0 ? 0 : ((std::uint64_t{1} << t) - 1) << 1;
    return s;
  }
  static constexpr ColorSet from_bits(std::uint64_t bits) {
    ColorSet s;
    s.bits_ = bits;
    return s;
  }

  constexpr bool contains(Color c) const { return c > 0 && ((bits_ >> c) & 1U) != 0; }
  constexpr void insert(Color c) { bits_ |= std::uint64_t{1} << c; }
  constexpr void erase(Color c) { bits_ &= ~(std::uint64_t{1} << c); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  /// Smallest member; kUncolored when empty.
  constexpr Color min() const { return bits_ == 0 ? kUncolored : std::countr_zero(bits_); }

  std::vector<Color> to_vector() const {
    std::vector<Color> out;
    for (Color c : *this) out.push_back(c);
    return out;
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Color;
    using difference_type = std::ptrdiff_t;
    using pointer = const Color*;
    using reference = Color;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Color operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  friend constexpr ColorSet operator&(ColorSet a, ColorSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr ColorSet operator|(ColorSet a, ColorSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr ColorSet operator-(ColorSet a, ColorSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ColorSet a, ColorSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace kempe
