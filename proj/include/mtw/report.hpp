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

#ifndef MTW_REPORT_HPP_
#define MTW_REPORT_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "mtw/closure.hpp"
#include "mtw/complexes.hpp"
#include "mtw/errors.hpp"
#include "mtw/gallery.hpp"
#include "mtw/homology.hpp"
#include "mtw/pispace.hpp"

namespace mtw {

using nlohmann::json;

inline constexpr const char* kSchema = "mtw/1";

// {"schema": "mtw/1", "command": ..., "caps": {...}}; command output is
// merged into this object.
json envelope(const std::string& command, const Caps& caps);
json caps_json(const Caps& caps);

json subset_json(const GroundSet& ground, Subset s);
json integer_json(const Integer& x);

json axioms_json(const PiSpace& m, const AxiomReport& report);
json invariants_json(const PiSpace& m, const Caps& caps);
// {"elements": [{"set": [labels], "rank": r}], "covers": [[i, j]]}
json lattice_json(const PiSpace& m, const FlatsLattice& lattice);
std::string lattice_dot(const PiSpace& m, const FlatsLattice& lattice);
json closed_sets_json(const PiSpace& m, const ClosedSetPoset& closed);
json geometric_json(const GeometricReport& report);
json complex_json(const SimplicialComplex& k);
// {"dims": {"1": {"betti": 3, "torsion": []}}, "spherical": true, "spheres": 3}
// listing the degrees with nonzero Betti number or torsion.
json homology_json(const HomologyProfile& h);
json cm_json(const SimplicialComplex& k, const CmReport& report);
json asc_chain_json(const AscChainReport& report);
json sweep_json(const std::vector<SweepRow>& rows, bool with_timing);

}  // namespace mtw

#endif  // MTW_REPORT_HPP_
