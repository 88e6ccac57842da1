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

// mtw: command-line front end for pi-space checks, lattices and homology.
//
// Exit codes: 0 success, 1 a checked property is violated, 2 usage or input
// error, 3 an enumeration cap was exceeded.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mtw/acceptance.hpp"
#include "mtw/closure.hpp"
#include "mtw/complexes.hpp"
#include "mtw/family_io.hpp"
#include "mtw/gallery.hpp"
#include "mtw/homology.hpp"
#include "mtw/pispace.hpp"
#include "mtw/report.hpp"

namespace {

using mtw::Caps;
using mtw::Error;
using mtw::ErrorKind;
using mtw::json;
using mtw::PiSpace;
using mtw::Subset;

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

struct Options {
  std::string spec_file;
  std::string spec_json;
  std::string format = "human";
  Caps caps;

  std::string set;
  std::string strategy = "rank";
  std::string export_as = "json";
  std::string lattice_file;
  std::string keep;
  std::string flat;
  std::string complex = "independence";
  int max_letters = -1;
  bool with_complex = false;
  long long steps = 50;
  long long mutate = 0;
  std::string family;
  int k = 1;
  std::string n_range;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidSpec, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PiSpace load(const Options& o) {
  if (o.spec_file.empty() == o.spec_json.empty()) {
    throw Error(ErrorKind::kInvalidSpec, "give exactly one of --spec FILE or --json TEXT");
  }
  const std::string text = o.spec_file.empty() ? o.spec_json : read_file(o.spec_file);
  PiSpace m = mtw::build_family(mtw::parse_family_spec_text(text));
  if (m.size() > o.caps.max_ground) {
    throw Error(ErrorKind::kCapExceeded, "ground size " + std::to_string(m.size()) + " exceeds --max-ground " +
                                             std::to_string(o.caps.max_ground));
  }
  return m;
}

Subset parse_labels(const PiSpace& m, const std::string& list) {
  std::vector<std::string> labels;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) labels.push_back(item);
  }
  return m.ground().parse(labels);
}

std::string set_text(const PiSpace& m, Subset s) {
  std::string out = "{";
  const auto labels = m.ground().labels_of(s);
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i];
  return out + "}";
}

void emit(const Options& o, const std::string& command, json body, const std::string& human) {
  if (o.format == "json") {
    json out = mtw::envelope(command, o.caps);
    for (auto& [k, v] : body.items()) out[k] = v;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << human;
  }
}

std::string homology_text(const mtw::HomologyProfile& h) {
  if (h.degenerate) return "degenerate (void complex)\n";
  std::ostringstream os;
  os << "dimension " << h.dimension << "\n";
  for (auto [d, b] : h.betti) {
    os << "  H~" << d << ": betti " << b;
    auto t = h.torsion.find(d);
    if (t != h.torsion.end()) {
      os << ", torsion";
      for (const auto& x : t->second) os << " " << x;
    }
    os << "\n";
  }
  const auto s = mtw::sphericity(h);
  os << "spherical " << (s.spherical ? "yes" : "no") << ", spheres " << s.spheres << "\n";
  return os.str();
}

mtw::SimplicialComplex build_complex(const PiSpace& m, const Options& o) {
  if (o.complex == "independence") return mtw::independence_complex(m, o.caps);
  if (o.complex == "flats") return mtw::proper_part_complex(m, mtw::flats(m, o.caps), o.caps);
  if (o.complex == "closed") return mtw::proper_part_complex(m, mtw::closed_sets(m, o.caps), o.caps);
  if (o.complex == "words") return mtw::order_complex(mtw::injective_words(m, o.max_letters, o.caps), {}, o.caps);
  throw Error(ErrorKind::kInvalidSpec, "unknown complex " + o.complex);
}

mtw::FlatsLattice read_lattice(const PiSpace& m, const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kInvalidSpec, std::string("lattice file: ") + e.what());
  }
  if (!j.contains("elements") || !j["elements"].is_array()) {
    throw Error(ErrorKind::kInvalidSpec, "lattice file needs an \"elements\" array");
  }
  std::vector<mtw::Flat> elements;
  try {
    for (const auto& e : j["elements"]) {
      mtw::Flat f;
      f.members = m.ground().parse(e.at("set").get<std::vector<std::string>>());
      f.rank = e.contains("rank") ? e["rank"].get<int>() : mtw::rank_of(m, f.members);
      elements.push_back(f);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kInvalidSpec, std::string("lattice file: ") + e.what());
  }
  return mtw::make_lattice(std::move(elements));
}

int check_axioms(const Options& o) {
  const PiSpace m = load(o);
  const auto r = mtw::check_axioms(m, o.caps);
  std::ostringstream os;
  os << m.provenance() << ": I1 " << (r.i1_holds ? "holds" : "fails") << ", I2 " << (r.i2_holds ? "holds" : "fails")
     << ", I2' " << (r.i2prime_holds ? "holds" : "fails") << "\n";
  for (const auto& w : r.i2_witnesses) {
    os << "  I2 witness sigma=" << set_text(m, w.sigma) << " tau=" << set_text(m, w.tau) << "\n";
  }
  emit(o, "check-axioms", mtw::axioms_json(m, r), os.str());
  return r.ok() ? kOk : kViolated;
}

int invariants(const Options& o) {
  const PiSpace m = load(o);
  const json j = mtw::invariants_json(m, o.caps);
  std::ostringstream os;
  os << m.provenance() << ": rank " << j["rank"] << ", bases " << j["bases"] << ", circuits " << j["circuits"]
     << ", flats " << j["flats"] << ", loops " << set_text(m, mtw::loops(m)) << "\n";
  emit(o, "invariants", j, os.str());
  return kOk;
}

int closure_cmd(const Options& o) {
  const PiSpace m = load(o);
  const Subset x = parse_labels(m, o.set);
  if (o.strategy != "rank" && o.strategy != "circuit") {
    throw Error(ErrorKind::kInvalidSpec, "strategy must be rank or circuit");
  }
  const auto strategy = o.strategy == "rank" ? mtw::ClosureStrategy::kRank : mtw::ClosureStrategy::kCircuit;
  const Subset c = mtw::closure(m, x, strategy, o.caps);
  emit(o, "closure",
       {{"set", mtw::subset_json(m.ground(), x)}, {"closure", mtw::subset_json(m.ground(), c)},
        {"closed", c == x}},
       "Cl" + set_text(m, x) + " = " + set_text(m, c) + "\n");
  return kOk;
}

int flats_cmd(const Options& o) {
  const PiSpace m = load(o);
  const auto lattice = mtw::flats(m, o.caps);
  if (o.export_as == "dot") {
    std::cout << mtw::lattice_dot(m, lattice);
    return kOk;
  }
  if (o.export_as != "json") throw Error(ErrorKind::kInvalidSpec, "export must be json or dot");
  if (o.format == "human") {
    for (const auto& f : lattice.elements) std::cout << "rank " << f.rank << " " << set_text(m, f.members) << "\n";
    return kOk;
  }
  emit(o, "flats", mtw::lattice_json(m, lattice), "");
  return kOk;
}

int closed_sets_cmd(const Options& o) {
  const PiSpace m = load(o);
  const auto closed = mtw::closed_sets(m, o.caps);
  std::ostringstream os;
  for (Subset s : closed.elements) os << set_text(m, s) << "\n";
  emit(o, "closed-sets", mtw::closed_sets_json(m, closed), os.str());
  return kOk;
}

int verify_geometric_cmd(const Options& o) {
  const PiSpace m = load(o);
  const auto lattice = o.lattice_file.empty() ? mtw::flats(m, o.caps) : read_lattice(m, o.lattice_file);
  const auto r = mtw::verify_geometric(m, lattice);
  std::ostringstream os;
  os << "lattice " << r.lattice << ", ranked " << r.ranked << ", atomistic " << r.atomistic << ", semimodular "
     << r.semimodular << " -> " << (r.ok() ? "geometric" : "NOT geometric") << "\n";
  for (const auto& w : r.witnesses) os << "  " << w << "\n";
  emit(o, "verify-geometric", mtw::geometric_json(r), os.str());
  return r.ok() ? kOk : kViolated;
}

int contract_cmd(const Options& o) {
  const PiSpace m = load(o);
  const Subset keep = parse_labels(m, o.keep);
  const PiSpace c = mtw::contract(m, keep);
  json bases = json::array();
  for (Subset b : mtw::bases(c, o.caps)) bases.push_back(mtw::subset_json(c.ground(), b));
  std::ostringstream os;
  os << c.provenance() << " on " << set_text(m, keep) << ": rank " << c.rank() << ", bases " << bases.size() << "\n";
  emit(o, "contract",
       {{"provenance", c.provenance()}, {"ground", c.ground().labels()}, {"rank", c.rank()}, {"bases", bases}},
       os.str());
  return kOk;
}

int upper_interval_cmd(const Options& o) {
  const PiSpace m = load(o);
  const Subset f = parse_labels(m, o.flat);
  const bool ok = mtw::upper_interval_check(m, {f, mtw::rank_of(m, f)}, o.caps);
  const PiSpace c = mtw::contract(m, m.ground().all() - f);
  emit(o, "verify-upper-interval",
       {{"flat", mtw::subset_json(m.ground(), f)}, {"isomorphic", ok}, {"contraction_rank", c.rank()},
        {"rank", m.rank()}, {"flat_rank", mtw::rank_of(m, f)}},
       std::string("upper interval above ") + set_text(m, f) + (ok ? " is" : " is NOT") +
           " isomorphic to the flats of the contraction (rank " + std::to_string(c.rank()) + ")\n");
  return ok ? kOk : kViolated;
}

int homology_cmd(const Options& o) {
  const PiSpace m = load(o);
  const auto k = build_complex(m, o);
  const auto h = mtw::reduced_homology(k, o.caps);
  json body = mtw::homology_json(h);
  body["complex_kind"] = o.complex;
  if (o.with_complex) body["complex"] = mtw::complex_json(k);
  emit(o, "homology", body, homology_text(h));
  return kOk;
}

int verify_cm_cmd(const Options& o) {
  const PiSpace m = load(o);
  const auto k = build_complex(m, o);
  const auto r = mtw::verify_cm(k, o.caps);
  std::ostringstream os;
  if (r.degenerate) {
    os << "degenerate (void complex)\n";
  } else {
    os << (r.overall ? "Cohen-Macaulay" : "NOT Cohen-Macaulay") << " (" << r.notion << "), " << r.failures.size()
       << " failing links\n";
    for (const auto& f : r.failures) {
      os << "  face {";
      for (std::size_t i = 0; i < f.face.size(); ++i) os << (i ? "," : "") << k.vertex_labels()[f.face[i]];
      os << "}: expected dimension " << f.expected_dimension << ", link dimension " << f.observed_dimension << "\n";
    }
  }
  json body = mtw::cm_json(k, r);
  body["complex_kind"] = o.complex;
  emit(o, "verify-cm", body, os.str());
  return r.overall || r.degenerate ? kOk : kViolated;
}

int barycentric_cmd(const Options& o) {
  const PiSpace m = load(o);
  const bool ok = mtw::barycentric_check(m, o.caps);
  emit(o, "barycentric-check", {{"isomorphic", ok}},
       std::string("order complex of I(M) - {empty} ") + (ok ? "matches" : "does NOT match") +
           " the barycentric subdivision\n");
  return ok ? kOk : kViolated;
}

int asc_chain_cmd(const Options& o) {
  const auto family = o.mutate > 0 ? mtw::AscChainFamily::mutated(o.mutate) : mtw::AscChainFamily::standard();
  const auto r = mtw::verify_asc_chain(o.steps, family);
  std::ostringstream os;
  os << "sequences a_n = 3n, b_n = 3n+1\n";
  for (const auto& s : r.trace) {
    os << "n=" << s.n << " Cl(X_n) = " << mtw::to_string(s.closure) << (s.law_holds ? "" : "  <- chain law fails")
       << "\n";
  }
  os << (r.ok ? "verified" : "FAILED") << " over " << r.steps << " steps\n";
  emit(o, "gallery asc-chain", mtw::asc_chain_json(r), os.str());
  return r.ok ? kOk : kViolated;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorKind::kInvalidSpec, "range must look like a..b, got " + text);
  }
}

int sweep_cmd(const Options& o) {
  const auto [lo, hi] = parse_range(o.n_range);
  const auto rows = mtw::connectivity_sweep(o.family, o.k, lo, hi, o.caps);
  bool ok = true;
  for (const auto& r : rows) ok = ok && (r.verified || r.skipped);
  if (o.format == "csv") {
    std::cout << mtw::sweep_csv(rows, true);
  } else {
    std::ostringstream os;
    for (const auto& r : rows) {
      os << r.family << " n=" << r.n << " k=" << r.k << ": "
         << (r.skipped ? "skipped (cap)" : r.verified ? "(k-1)-connected" : "NOT (k-1)-connected") << ", " << r.faces
         << " faces, " << r.millis << " ms\n";
    }
    emit(o, "sweep", {{"rows", mtw::sweep_json(rows, true)}}, os.str());
  }
  return ok ? kOk : kViolated;
}

int reproduce_all_cmd(const Options& o) {
  const bool human = o.format == "human";
  const auto run = mtw::run_acceptance(o.caps, true, [&](const mtw::CriterionResult& r) {
    if (human) {
      std::cout << "criterion " << r.id << " [" << r.name << "]: " << (r.pass ? "PASS" : "FAIL") << " - "
                << r.detail << " (" << std::fixed << std::setprecision(1) << r.seconds << "s)\n"
                << std::flush;
    }
  });
  if (!human) std::cout << mtw::acceptance_json(run, o.caps).dump(2) << "\n";
  if (!run.ok) {
    const auto& last = run.results.back();
    std::cerr << "reproduce-all: criterion " << last.id << " (" << last.name << ") failed: " << last.detail << "\n";
    return kViolated;
  }
  return kOk;
}

void add_common(CLI::App* sub, Options& o, bool family) {
  if (family) {
    sub->add_option("--spec", o.spec_file, "family spec JSON file");
    sub->add_option("--json", o.spec_json, "inline family spec JSON");
  }
  sub->add_option("--format", o.format, "human, json or csv")->check(CLI::IsMember({"human", "json", "csv"}));
  sub->add_option("--max-ground", o.caps.max_ground, "largest ground set to enumerate");
  sub->add_option("--max-faces", o.caps.max_faces, "largest face count to enumerate");
  sub->add_option("--max-word-rank", o.caps.max_word_rank, "longest injective word");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pi-space, flats lattice and homology checks"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> action;

  auto sub = [&](const char* name, const char* help, bool family, int (*fn)(const Options&)) {
    CLI::App* s = app.add_subcommand(name, help);
    add_common(s, o, family);
    s->callback([&action, fn] { action = fn; });
    return s;
  };
  sub("check-axioms", "check I1, I2 and I2'", true, check_axioms);
  sub("invariants", "rank, bases, circuits, flats and loops", true, invariants);
  auto* cl = sub("closure", "closure of a set", true, closure_cmd);
  cl->add_option("--set", o.set, "comma-separated labels")->required();
  cl->add_option("--strategy", o.strategy, "rank or circuit");
  auto* fl = sub("flats", "lattice of flats", true, flats_cmd);
  fl->add_option("--export", o.export_as, "json or dot");
  sub("closed-sets", "fixed points of the closure", true, closed_sets_cmd);
  auto* vg = sub("verify-geometric", "ranked, atomistic, semimodular", true, verify_geometric_cmd);
  vg->add_option("--lattice", o.lattice_file, "check this lattice JSON instead of the enumerated one");
  auto* ct = sub("contract", "contraction onto a subset", true, contract_cmd);
  ct->add_option("--keep", o.keep, "comma-separated labels")->required();
  auto* ui = sub("verify-upper-interval", "flats above F against the contraction", true, upper_interval_cmd);
  ui->add_option("--flat", o.flat, "comma-separated labels")->required();
  for (const char* name : {"homology", "verify-cm"}) {
    auto* h = sub(name, name == std::string("homology") ? "reduced integral homology" : "homological CM check",
                  true, name == std::string("homology") ? homology_cmd : verify_cm_cmd);
    h->add_option("--complex", o.complex, "independence, flats, words or closed")
        ->check(CLI::IsMember({"independence", "flats", "words", "closed"}));
    h->add_option("--max-letters", o.max_letters, "longest word for --complex words");
    h->add_flag("--with-complex", o.with_complex, "include the facet list");
  }
  sub("barycentric-check", "order complex of I(M) - {empty} against sd(I(M))", true, barycentric_cmd);
  auto* gallery = app.add_subcommand("gallery", "symbolic examples");
  gallery->require_subcommand(1);
  auto* asc = gallery->add_subcommand("asc-chain", "ascending chain of non-closed closures");
  add_common(asc, o, false);
  asc->add_option("--steps", o.steps, "number of closure steps")->check(CLI::PositiveNumber);
  asc->add_option("--mutate", o.mutate, "drop b_n from circuit n (negative control)");
  asc->callback([&action] { action = asc_chain_cmd; });
  auto* sw = sub("sweep", "skeleton connectivity sweep", false, sweep_cmd);
  sw->add_option("--family", o.family, "boolean, uniform-half, uniform:R, path or complete")->required();
  sw->add_option("--k", o.k, "skeleton dimension");
  sw->add_option("--n", o.n_range, "size range a..b")->required();
  sub("reproduce-all", "run every acceptance criterion", false, reproduce_all_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action ? action(o) : kUsage;
  } catch (const Error& e) {
    if (o.format == "json") {
      json out = mtw::envelope("error", o.caps);
      out["error"] = {{"kind", mtw::error_kind_name(e.kind())}, {"message", e.what()}};
      std::cout << out.dump(2) << "\n";
    }
    std::cerr << "mtw: " << e.what() << "\n";
    return e.kind() == ErrorKind::kCapExceeded ? kCap : kUsage;
  }
}
