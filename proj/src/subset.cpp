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

#include "mtw/subset.hpp"

#include <sstream>

namespace mtw {

Subset::Subset(std::initializer_list<int> indices) {
  for (int i : indices) bits_ |= std::uint64_t{1} << i;
}

Subset Subset::from_indices(const std::vector<int>& indices) {
  std::uint64_t bits = 0;
  for (int i : indices) bits |= std::uint64_t{1} << i;
  return Subset(bits);
}

std::vector<int> Subset::indices() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int i) { out.push_back(i); });
  return out;
}

std::strong_ordering operator<=>(Subset a, Subset b) {
  const std::uint64_t diff = a.bits_ ^ b.bits_;
  if (diff == 0) return std::strong_ordering::equal;
  // Both lists agree below the first differing index i. The list holding i
  // is smaller unless the other list stops there (then it is a prefix).
  const int i = std::countr_zero(diff);
  const std::uint64_t above = i == 63 ? 0 : (~std::uint64_t{0} << (i + 1));
  if (a.contains(i)) {
    return (b.bits_ & above) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return (a.bits_ & above) != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

Subset expand(Subset compact, const std::vector<int>& positions) {
  Subset out;
  compact.for_each([&](int i) { out = out.with(positions[i]); });
  return out;
}

Subset compress(Subset s, const std::vector<int>& positions) {
  Subset out;
  for (int i = 0; i < static_cast<int>(positions.size()); ++i) {
    if (s.contains(positions[i])) out = out.with(i);
  }
  return out;
}

std::string to_string(Subset s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  s.for_each([&](int i) {
    if (!first) os << ',';
    os << i;
    first = false;
  });
  os << '}';
  return os.str();
}

}  // namespace mtw
