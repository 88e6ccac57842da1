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

#ifndef MTW_SMITH_HPP_
#define MTW_SMITH_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mtw {

using Integer = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<Integer>>;

// Column-major sparse integer matrix; each column holds (row, value) pairs
// sorted by row with no zero values.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> columns;

  IntMatrix dense() const;
};

// Nonzero invariant factors d_1 | d_2 | ... | d_k, all positive. The rank of
// the matrix is their count.
std::vector<Integer> smith_invariants(IntMatrix a);
// Eliminates unit pivots sparsely, then finishes densely. Arithmetic starts in
// checked 64-bit integers and restarts in arbitrary precision on overflow.
std::vector<Integer> smith_invariants(const SparseMatrix& a);

}  // namespace mtw

#endif  // MTW_SMITH_HPP_
