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

#ifndef MTW_FAMILY_IO_HPP_
#define MTW_FAMILY_IO_HPP_

#include <string>

#include "json.hpp"
#include "mtw/pispace.hpp"

namespace mtw {

// JSON family specs, e.g. {"kind":"uniform","n":4,"r":2}. Explicit families
// list exactly one of "independent", "bases" or "circuits". Malformed input
// throws Error(kInvalidSpec).
FamilySpec parse_family_spec(const nlohmann::json& j);
FamilySpec parse_family_spec_text(const std::string& text);
nlohmann::json to_json(const FamilySpec& spec);

}  // namespace mtw

#endif  // MTW_FAMILY_IO_HPP_
