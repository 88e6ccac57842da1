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

#include "mtw/report.hpp"

#include <sstream>

namespace mtw {

json caps_json(const Caps& caps) {
  return {{"max_ground", caps.max_ground}, {"max_faces", caps.max_faces}, {"max_word_rank", caps.max_word_rank}};
}

json envelope(const std::string& command, const Caps& caps) {
  return {{"schema", kSchema}, {"command", command}, {"caps", caps_json(caps)}};
}

json subset_json(const GroundSet& ground, Subset s) {
  json out = json::array();
  for (const auto& label : ground.labels_of(s)) out.push_back(label);
  return out;
}

json integer_json(const Integer& x) {
  if (x <= std::numeric_limits<std::int64_t>::max() && x >= std::numeric_limits<std::int64_t>::min()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

json axioms_json(const PiSpace& m, const AxiomReport& report) {
  auto witnesses = [&](const std::vector<AxiomWitness>& ws) {
    json out = json::array();
    for (const auto& w : ws) {
      out.push_back({{"sigma", subset_json(m.ground(), w.sigma)}, {"tau", subset_json(m.ground(), w.tau)}});
    }
    return out;
  };
  return {{"ok", report.ok()},
          {"I1", {{"holds", report.i1_holds}, {"witnesses", witnesses(report.i1_witnesses)}}},
          {"I2", {{"holds", report.i2_holds}, {"witnesses", witnesses(report.i2_witnesses)}}},
          {"I2prime", {{"holds", report.i2prime_holds}, {"witnesses", witnesses(report.i2prime_witnesses)}}}};
}

json invariants_json(const PiSpace& m, const Caps& caps) {
  return {{"provenance", m.provenance()},
          {"ground", m.ground().labels()},
          {"rank", m.rank()},
          {"bases", bases(m, caps).size()},
          {"circuits", circuits(m, caps).size()},
          {"flats", flats(m, caps).elements.size()},
          {"loops", subset_json(m.ground(), loops(m))}};
}

json lattice_json(const PiSpace& m, const FlatsLattice& lattice) {
  json elements = json::array();
  for (const Flat& f : lattice.elements) {
    elements.push_back({{"set", subset_json(m.ground(), f.members)}, {"rank", f.rank}});
  }
  json covers = json::array();
  for (auto [a, b] : lattice.covers) covers.push_back({a, b});
  return {{"elements", elements}, {"covers", covers}};
}

std::string lattice_dot(const PiSpace& m, const FlatsLattice& lattice) {
  std::ostringstream os;
  os << "digraph flats {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lattice.elements.size(); ++i) {
    std::string label = "{";
    const auto labels = m.ground().labels_of(lattice.elements[i].members);
    for (std::size_t j = 0; j < labels.size(); ++j) label += (j ? "," : "") + labels[j];
    label += "}";
    os << "  f" << i << " [label=\"" << label << "\", rank=" << lattice.elements[i].rank << "];\n";
  }
  for (auto [a, b] : lattice.covers) os << "  f" << a << " -> f" << b << ";\n";
  os << "}\n";
  return os.str();
}

json closed_sets_json(const PiSpace& m, const ClosedSetPoset& closed) {
  json elements = json::array();
  for (Subset s : closed.elements) elements.push_back({{"set", subset_json(m.ground(), s)}});
  json covers = json::array();
  for (auto [a, b] : closed.covers) covers.push_back({a, b});
  return {{"elements", elements}, {"covers", covers}};
}

json geometric_json(const GeometricReport& report) {
  return {{"ok", report.ok()},
          {"lattice", report.lattice},
          {"ranked", report.ranked},
          {"atomistic", report.atomistic},
          {"semimodular", report.semimodular},
          {"witnesses", report.witnesses}};
}

json complex_json(const SimplicialComplex& k) {
  json facets = json::array();
  for (const Face& f : k.facets()) {
    json face = json::array();
    for (int v : f) face.push_back(k.vertex_labels()[v]);
    facets.push_back(face);
  }
  return {{"vertices", k.vertex_labels()}, {"dimension", k.dimension()}, {"void", k.is_void()}, {"facets", facets}};
}

json homology_json(const HomologyProfile& h) {
  if (h.degenerate) return {{"degenerate", true}};
  json dims = json::object();
  for (auto [d, b] : h.betti) {
    auto t = h.torsion.find(d);
    if (b == 0 && t == h.torsion.end()) continue;
    json torsion = json::array();
    if (t != h.torsion.end()) {
      for (const Integer& x : t->second) torsion.push_back(integer_json(x));
    }
    dims[std::to_string(d)] = {{"betti", b}, {"torsion", torsion}};
  }
  const Sphericity s = sphericity(h);
  return {{"dimension", h.dimension}, {"dims", dims}, {"spherical", s.spherical}, {"spheres", s.spheres}};
}

json cm_json(const SimplicialComplex& k, const CmReport& report) {
  json failures = json::array();
  for (const CmFailure& f : report.failures) {
    json face = json::array();
    for (int v : f.face) face.push_back(k.vertex_labels()[v]);
    failures.push_back({{"face", face},
                        {"expected_dimension", f.expected_dimension},
                        {"observed_dimension", f.observed_dimension},
                        {"observed", homology_json(f.observed)}});
  }
  json out = {{"overall", report.overall}, {"notion", report.notion}, {"failures", failures}};
  if (report.degenerate) out["degenerate"] = true;
  return out;
}

json asc_chain_json(const AscChainReport& report) {
  json trace = json::array();
  for (const AscChainStep& s : report.trace) {
    trace.push_back({{"n", s.n},
                     {"X", to_string(s.x)},
                     {"closure", to_string(s.closure)},
                     {"law", s.law_holds},
                     {"closed", s.closed}});
  }
  json out = {{"ok", report.ok},
              {"steps", report.steps},
              {"sequences", "a_n = 3n, b_n = 3n+1"},
              {"trace", trace}};
  if (report.failed_at) out["failed_at"] = *report.failed_at;
  return out;
}

json sweep_json(const std::vector<SweepRow>& rows, bool with_timing) {
  json out = json::array();
  for (const SweepRow& r : rows) {
    json row = {{"family", r.family},
                {"n", r.n},
                {"k", r.k},
                {"verified", r.verified},
                {"skipped", r.skipped},
                {"faces", r.faces}};
    if (with_timing) row["millis"] = r.millis;
    out.push_back(row);
  }
  return out;
}

}  // namespace mtw
