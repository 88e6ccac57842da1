// Copyright 2026 The Authors.
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

#ifndef MTW_SUBSET_HPP_
#define MTW_SUBSET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace mtw {

inline constexpr int kMaxGround = 64;

// A subset of a ground set of at most 64 canonically indexed elements.
// Ordering is lexicographic on the sorted index lists, so sorting a
// container of subsets gives the canonical emission order used everywhere.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}
  Subset(std::initializer_list<int> indices);

  static Subset from_indices(const std::vector<int>& indices);
  static constexpr Subset full(int n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr Subset singleton(int i) { return Subset(std::uint64_t{1} << i); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }

  // Largest member, or -1 for the empty set.
  constexpr int max_element() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }
  constexpr int min_element() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  constexpr Subset with(int i) const { return Subset(bits_ | (std::uint64_t{1} << i)); }
  constexpr Subset without(int i) const { return Subset(bits_ & ~(std::uint64_t{1} << i)); }

  std::vector<int> indices() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
  }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(Subset a, Subset b) = default;
  friend std::strong_ordering operator<=>(Subset a, Subset b);

 private:
  std::uint64_t bits_ = 0;
};

// Moves the members of `compact` (indices into the list `positions`) to the
// indices named by `positions`; the inverse of `compress`.
Subset expand(Subset compact, const std::vector<int>& positions);
// Keeps only members of `s` listed in `positions` and renumbers them by their
// position in that list.
Subset compress(Subset s, const std::vector<int>& positions);

std::string to_string(Subset s);

}  // namespace mtw

#endif  // MTW_SUBSET_HPP_
