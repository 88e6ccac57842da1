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

#ifndef MTW_ACCEPTANCE_HPP_
#define MTW_ACCEPTANCE_HPP_

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mtw/errors.hpp"

namespace mtw {

inline constexpr int kCriterionCount = 11;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  // Short deterministic summary; the tolerance is part of it.
  std::string detail;
  // Deterministic machine data compared across runs.
  nlohmann::json data;
  double seconds = 0;
};

const std::string& criterion_name(int id);

// Criteria 1..10. Throws InvalidSpec for other ids.
CriterionResult run_criterion(int id, const Caps& caps = {});

struct AcceptanceRun {
  std::vector<CriterionResult> results;
  bool ok = false;
};

// Runs criteria 1..10 in order, then 11, which reruns 1..10 with a different
// worker count and compares the machine data byte for byte. With fail_fast
// the run stops at the first failing criterion.
AcceptanceRun run_acceptance(const Caps& caps, bool fail_fast,
                             const std::function<void(const CriterionResult&)>& on_result = {});

// Machine output of a run; carries no timings.
nlohmann::json acceptance_json(const AcceptanceRun& run, const Caps& caps);

}  // namespace mtw

#endif  // MTW_ACCEPTANCE_HPP_
