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

#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "mtw/smith.hpp"

using mtw::IntMatrix;
using mtw::Integer;

namespace {

Integer det(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Integer total = 0;
  for (int c = 0; c < n; ++c) {
    IntMatrix minor;
    for (int r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (int j = 0; j < n; ++j) {
        if (j != c) row.push_back(a[r][j]);
      }
      minor.push_back(row);
    }
    total += (c % 2 == 0 ? 1 : -1) * a[0][c] * det(minor);
  }
  return total;
}

// Invariant factors from determinantal divisors: D_k is the gcd of all k x k
// minors and d_k = D_k / D_{k-1}.
std::vector<Integer> via_minors(const IntMatrix& a) {
  const int rows = static_cast<int>(a.size()), cols = static_cast<int>(a[0].size());
  std::vector<Integer> out;
  Integer prev = 1;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    Integer g = 0;
    for (std::uint32_t rm = 0; rm < (1U << rows); ++rm) {
      if (__builtin_popcount(rm) != k) continue;
      for (std::uint32_t cm = 0; cm < (1U << cols); ++cm) {
        if (__builtin_popcount(cm) != k) continue;
        IntMatrix sub;
        for (int r = 0; r < rows; ++r) {
          if (!(rm >> r & 1U)) continue;
          std::vector<Integer> row;
          for (int c = 0; c < cols; ++c) {
            if (cm >> c & 1U) row.push_back(a[r][c]);
          }
          sub.push_back(row);
        }
        g = boost::multiprecision::gcd(g, det(sub));
      }
    }
    if (g == 0) break;
    g = g < 0 ? Integer(-g) : g;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

mtw::SparseMatrix to_sparse(const std::vector<std::vector<std::int64_t>>& a) {
  mtw::SparseMatrix m;
  m.rows = static_cast<int>(a.size());
  m.cols = m.rows == 0 ? 0 : static_cast<int>(a[0].size());
  m.columns.resize(m.cols);
  for (int c = 0; c < m.cols; ++c) {
    for (int r = 0; r < m.rows; ++r) {
      if (a[r][c] != 0) m.columns[c].emplace_back(r, a[r][c]);
    }
  }
  return m;
}

std::vector<Integer> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("named invariant factors") {
  CHECK(mtw::smith_invariants(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == ints({1, 1, 1}));
  CHECK(mtw::smith_invariants(IntMatrix{{2, 4}, {6, 8}}) == ints({2, 4}));
  CHECK(mtw::smith_invariants(IntMatrix{{0, 0}, {0, 0}}).empty());
  CHECK(mtw::smith_invariants(IntMatrix{}).empty());
  CHECK(mtw::smith_invariants(IntMatrix{{2, 0}, {0, 3}}) == ints({1, 6}));
}

TEST_CASE("dense invariant factors match determinantal divisors") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 4), cols = 1 + static_cast<int>(rng() % 4);
    IntMatrix a(rows, std::vector<Integer>(cols));
    for (auto& row : a) {
      for (auto& x : row) x = static_cast<int>(rng() % 11) - 5;
    }
    CHECK(mtw::smith_invariants(a) == via_minors(a));
  }
}

TEST_CASE("sparse elimination matches the dense path") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 9), cols = 1 + static_cast<int>(rng() % 9);
    std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
    for (auto& row : a) {
      for (auto& x : row) {
        const int roll = static_cast<int>(rng() % 10);
        x = roll < 5 ? 0 : roll < 8 ? (roll % 2 ? 1 : -1) : static_cast<std::int64_t>(rng() % 7) - 3;
      }
    }
    const auto s = to_sparse(a);
    CHECK(mtw::smith_invariants(s) == mtw::smith_invariants(s.dense()));
  }
}

TEST_CASE("overflowing entries fall back to arbitrary precision") {
  const std::int64_t big = std::int64_t{1} << 40;
  const std::vector<std::vector<std::int64_t>> a = {{1, big, 0}, {big, 3, big}, {0, big, 5}};
  const auto s = to_sparse(a);
  const auto got = mtw::smith_invariants(s);
  CHECK(got == mtw::smith_invariants(s.dense()));
  CHECK(got == via_minors(s.dense()));
}
