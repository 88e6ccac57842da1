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

#include "mtw/smith.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mtw {
namespace {

struct Overflow : std::exception {};

// int64 with overflow detection; lets the common unit-pivot path avoid
// arbitrary precision.
struct Checked {
  std::int64_t v = 0;
  Checked() = default;
  Checked(std::int64_t x) : v(x) {}  // NOLINT(runtime/explicit)
  friend Checked operator+(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow();
    return r;
  }
  friend Checked operator-(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow();
    return r;
  }
  friend Checked operator*(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow();
    return r;
  }
  friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
};

Integer to_integer(const Integer& x) { return x; }
Integer to_integer(Checked x) { return Integer(x.v); }
bool is_unit(const Integer& x) { return x == 1 || x == -1; }
bool is_unit(Checked x) { return x.v == 1 || x.v == -1; }
bool is_zero(const Integer& x) { return x.is_zero(); }
bool is_zero(Checked x) { return x.v == 0; }

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Diagonalizes in place by unimodular operations, choosing the nonzero entry
// of least absolute value as pivot. Returns the absolute diagonal entries.
std::vector<Integer> diagonalize(IntMatrix& a) {
  std::vector<Integer> diag;
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  for (int t = 0; t < std::min(rows, cols); ++t) {
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i) {
      for (int j = t; j < cols; ++j) {
        if (a[i][j].is_zero()) continue;
        if (pr < 0 || abs_int(a[i][j]) < abs_int(a[pr][pc])) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) break;
    while (true) {
      std::swap(a[t], a[pr]);
      if (pc != t) {
        for (int i = t; i < rows; ++i) std::swap(a[i][t], a[i][pc]);
      }
      const Integer p = a[t][t];
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t].is_zero()) continue;
        const Integer q = a[i][t] / p;
        if (!q.is_zero()) {
          for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        }
        if (!a[i][t].is_zero()) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j].is_zero()) continue;
        const Integer q = a[t][j] / p;
        if (!q.is_zero()) {
          for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        }
        if (!a[t][j].is_zero()) clean = false;
      }
      if (clean) break;
      // Some remainder is now smaller than the pivot; move it into place.
      pr = t;
      pc = t;
      Integer best = abs_int(p);
      for (int i = t + 1; i < rows; ++i) {
        if (!a[i][t].is_zero() && abs_int(a[i][t]) < best) {
          best = abs_int(a[i][t]);
          pr = i;
          pc = t;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (!a[t][j].is_zero() && abs_int(a[t][j]) < best) {
          best = abs_int(a[t][j]);
          pr = t;
          pc = j;
        }
      }
    }
    diag.push_back(abs_int(a[t][t]));
  }
  return diag;
}

// Turns a diagonal into invariant factors: (a, b) -> (gcd, lcm) until each
// entry divides the next.
std::vector<Integer> normalize(std::vector<Integer> d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const Integer g = boost::multiprecision::gcd(d[i], d[j]);
      if (g == d[i]) continue;
      const Integer l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

template <typename T>
std::vector<Integer> sparse_invariants(const SparseMatrix& m) {
  using Column = std::vector<std::pair<int, T>>;
  std::vector<Column> cols(m.cols);
  std::vector<std::vector<int>> row_cols(m.rows);
  for (int c = 0; c < m.cols; ++c) {
    for (auto [r, v] : m.columns[c]) {
      if (v == 0) continue;
      cols[c].emplace_back(r, T(v));
      row_cols[r].push_back(c);
    }
  }
  auto entry = [&](int c, int r) -> const T* {
    auto it = std::lower_bound(cols[c].begin(), cols[c].end(), r,
                               [](const std::pair<int, T>& e, int row) { return e.first < row; });
    return it != cols[c].end() && it->first == r ? &it->second : nullptr;
  };
  std::vector<char> col_alive(m.cols, 1), row_alive(m.rows, 1);
  long long units = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int r = 0; r < m.rows; ++r) {
      if (!row_alive[r]) continue;
      auto& list = row_cols[r];
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      std::vector<int> live;
      int pivot = -1;
      for (int c : list) {
        if (!col_alive[c]) continue;
        const T* v = entry(c, r);
        if (v == nullptr) continue;
        live.push_back(c);
        if (is_unit(*v) && (pivot < 0 || cols[c].size() < cols[pivot].size())) pivot = c;
      }
      list = live;
      if (pivot < 0) continue;
      const T pv = *entry(pivot, r);
      for (int c : live) {
        if (c == pivot) continue;
        // Column c minus (a_rc / a_rp) times the pivot column; a_rp is a unit.
        const T factor = *entry(c, r) * pv;
        Column merged;
        merged.reserve(cols[c].size() + cols[pivot].size());
        auto a = cols[c].begin(), ae = cols[c].end();
        auto b = cols[pivot].begin(), be = cols[pivot].end();
        while (a != ae || b != be) {
          if (b == be || (a != ae && a->first < b->first)) {
            merged.push_back(*a++);
          } else if (a == ae || b->first < a->first) {
            merged.emplace_back(b->first, T(0) - factor * b->second);
            row_cols[b->first].push_back(c);
            ++b;
          } else {
            T v = a->second - factor * b->second;
            if (!is_zero(v)) merged.emplace_back(a->first, v);
            ++a;
            ++b;
          }
        }
        cols[c] = std::move(merged);
      }
      col_alive[pivot] = 0;
      row_alive[r] = 0;
      row_cols[r].clear();
      ++units;
      progress = true;
    }
  }
  std::vector<int> rest_rows, rest_cols;
  std::vector<int> row_pos(m.rows, -1);
  for (int c = 0; c < m.cols; ++c) {
    if (!col_alive[c]) continue;
    bool any = false;
    for (auto& [r, v] : cols[c]) {
      if (row_alive[r] && !is_zero(v)) any = true;
    }
    if (any) rest_cols.push_back(c);
  }
  for (int c : rest_cols) {
    for (auto& [r, v] : cols[c]) {
      if (row_alive[r] && row_pos[r] < 0) {
        row_pos[r] = 0;
        rest_rows.push_back(r);
      }
    }
  }
  std::sort(rest_rows.begin(), rest_rows.end());
  for (std::size_t i = 0; i < rest_rows.size(); ++i) row_pos[rest_rows[i]] = static_cast<int>(i);
  IntMatrix dense(rest_rows.size(), std::vector<Integer>(rest_cols.size()));
  for (std::size_t j = 0; j < rest_cols.size(); ++j) {
    for (auto& [r, v] : cols[rest_cols[j]]) {
      if (row_alive[r]) dense[row_pos[r]][j] = to_integer(v);
    }
  }
  std::vector<Integer> out(static_cast<std::size_t>(units), Integer(1));
  for (Integer& d : smith_invariants(std::move(dense))) out.push_back(std::move(d));
  return normalize(std::move(out));
}

}  // namespace

IntMatrix SparseMatrix::dense() const {
  IntMatrix out(rows, std::vector<Integer>(cols));
  for (int c = 0; c < cols; ++c) {
    for (auto [r, v] : columns[c]) out[r][c] = v;
  }
  return out;
}

std::vector<Integer> smith_invariants(IntMatrix a) {
  std::vector<Integer> diag = diagonalize(a);
  std::vector<Integer> nonzero;
  for (Integer& d : diag) {
    if (!d.is_zero()) nonzero.push_back(std::move(d));
  }
  return normalize(std::move(nonzero));
}

std::vector<Integer> smith_invariants(const SparseMatrix& a) {
  try {
    return sparse_invariants<Checked>(a);
  } catch (const Overflow&) {
    return sparse_invariants<Integer>(a);
  }
}

}  // namespace mtw
