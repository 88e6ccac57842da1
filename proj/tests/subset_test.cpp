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

#include <algorithm>
#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "mtw/subset.hpp"

using mtw::Subset;

TEST_CASE("subset basics") {
  Subset s{0, 3, 5};
  CHECK(s.size() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(4));
  CHECK(s.min_element() == 0);
  CHECK(s.max_element() == 5);
  CHECK(Subset().max_element() == -1);
  CHECK(s.indices() == std::vector<int>{0, 3, 5});
  CHECK(mtw::to_string(s) == "{0,3,5}");
  CHECK(mtw::to_string(Subset()) == "{}");
  CHECK(Subset::full(64).size() == 64);
  CHECK((s - Subset{3}) == Subset{0, 5});
}

TEST_CASE("subset order is lexicographic on sorted index lists") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    Subset a(rng() & 0x3ff), b(rng() & 0x3ff);
    if (trial % 3 == 0) b = Subset(a.bits() | (std::uint64_t{1} << (rng() % 10)));
    const auto ia = a.indices(), ib = b.indices();
    CHECK((a < b) == (ia < ib));
    CHECK((a == b) == (ia == ib));
  }
}

TEST_CASE("expand and compress are inverse on the listed positions") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> positions;
    for (int i = 0; i < 20; ++i) {
      if (rng() % 2) positions.push_back(i);
    }
    const Subset compact(rng() & ((std::uint64_t{1} << positions.size()) - 1));
    const Subset wide = mtw::expand(compact, positions);
    CHECK(mtw::compress(wide, positions) == compact);
    for (int i : compact.indices()) CHECK(wide.contains(positions[i]));
    CHECK(wide.size() == compact.size());
  }
}
