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

#ifndef MTW_GFP_HPP_
#define MTW_GFP_HPP_

#include <cstdint>
#include <vector>

namespace mtw {

bool is_prime(std::int64_t p);

// Rank over GF(p), p < 2^31, of the given vectors (all of equal length).
// Entries may be any integers; they are reduced mod p first.
int gfp_rank(std::vector<std::vector<std::int64_t>> vectors, std::int64_t p);

}  // namespace mtw

#endif  // MTW_GFP_HPP_
