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

#include "mtw/family_io.hpp"

namespace mtw {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::kInvalidSpec, msg); }

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get_as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    bad(std::string("field '") + what + "' has the wrong type");
  }
}

}  // namespace

FamilySpec parse_family_spec(const json& j) {
  if (!j.is_object()) bad("family spec must be a JSON object");
  const auto kind = get_as<std::string>(field(j, "kind"), "kind");
  if (kind == "uniform") {
    return UniformSpec{get_as<int>(field(j, "n"), "n"), get_as<int>(field(j, "r"), "r")};
  }
  if (kind == "boolean") {
    return BooleanSpec{get_as<int>(field(j, "n"), "n")};
  }
  if (kind == "graphic") {
    GraphicSpec g;
    g.vertices = get_as<int>(field(j, "vertices"), "vertices");
    for (const auto& e : field(j, "edges")) {
      auto pair = get_as<std::vector<int>>(e, "edges");
      if (pair.size() != 2) bad("graphic edges must have two endpoints");
      g.edges.emplace_back(pair[0], pair[1]);
    }
    return g;
  }
  if (kind == "linear_gfp") {
    LinearSpec l;
    l.p = get_as<std::int64_t>(field(j, "p"), "p");
    l.columns = get_as<std::vector<std::vector<std::int64_t>>>(field(j, "columns"), "columns");
    return l;
  }
  if (kind == "explicit") {
    ExplicitSpec e;
    e.ground = get_as<std::vector<std::string>>(field(j, "ground"), "ground");
    int forms = 0;
    for (auto [key, form] : {std::pair{"independent", ExplicitForm::kIndependent},
                             std::pair{"bases", ExplicitForm::kBases},
                             std::pair{"circuits", ExplicitForm::kCircuits}}) {
      if (j.contains(key)) {
        ++forms;
        e.form = form;
        e.sets = get_as<std::vector<std::vector<std::string>>>(j.at(key), key);
      }
    }
    if (forms != 1) bad("explicit family needs exactly one of independent, bases, circuits");
    if (j.contains("complete_downward")) {
      e.complete_downward = get_as<bool>(j.at("complete_downward"), "complete_downward");
    }
    return e;
  }
  bad("unknown family kind '" + kind + "'");
}

FamilySpec parse_family_spec_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("family spec is not valid JSON: ") + e.what());
  }
  return parse_family_spec(j);
}

json to_json(const FamilySpec& spec) {
  return std::visit([](const auto& s) -> json {
    using T = std::decay_t<decltype(s)>;
    if constexpr (std::is_same_v<T, UniformSpec>) {
      return {{"kind", "uniform"}, {"n", s.n}, {"r", s.r}};
    } else if constexpr (std::is_same_v<T, BooleanSpec>) {
      return {{"kind", "boolean"}, {"n", s.n}};
    } else if constexpr (std::is_same_v<T, GraphicSpec>) {
      json edges = json::array();
      for (auto [u, v] : s.edges) edges.push_back({u, v});
      return {{"kind", "graphic"}, {"vertices", s.vertices}, {"edges", edges}};
    } else if constexpr (std::is_same_v<T, LinearSpec>) {
      return {{"kind", "linear_gfp"}, {"p", s.p}, {"columns", s.columns}};
    } else {
      static const char* keys[] = {"independent", "bases", "circuits"};
      return {{"kind", "explicit"},
              {"ground", s.ground},
              {keys[static_cast<int>(s.form)], s.sets},
              {"complete_downward", s.complete_downward}};
    }
  }, spec);
}

}  // namespace mtw
