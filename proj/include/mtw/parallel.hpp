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

#ifndef MTW_PARALLEL_HPP_
#define MTW_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace mtw {

// Worker count used by parallel loops. Taken from MTW_WORKERS when set,
// otherwise the hardware concurrency; set_worker_count overrides both.
int worker_count();
void set_worker_count(int workers);

// Runs fn(i) for i in [0, n) on the worker pool. Callers write results into
// slot i of a pre-sized container so the merged output never depends on
// scheduling. Of the exceptions thrown, the one from the lowest index is
// rethrown. Calls made from inside a task run serially.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace mtw

#endif  // MTW_PARALLEL_HPP_
