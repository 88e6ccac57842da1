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

#include "mtw/pispace.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "mtw/gfp.hpp"

namespace mtw {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidSpec: return "InvalidSpec";
    case ErrorKind::kNotDownwardClosed: return "NotDownwardClosed";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kCapExceeded: return "CapExceeded";
    case ErrorKind::kEmptyRestriction: return "EmptyRestriction";
    case ErrorKind::kDependentSeed: return "DependentSeed";
    case ErrorKind::kDimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorKind::kUnsupportedShape: return "UnsupportedShape";
  }
  return "Error";
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (size() > kMaxGround) {
    throw Error(ErrorKind::kInvalidSpec, "ground set has more than 64 elements");
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) {
    throw Error(ErrorKind::kInvalidSpec, "ground labels are not distinct");
  }
}

std::optional<int> GroundSet::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

Subset GroundSet::parse(const std::vector<std::string>& labels) const {
  Subset s;
  for (const auto& l : labels) {
    auto i = index_of(l);
    if (!i) throw Error(ErrorKind::kOutOfRange, "unknown element '" + l + "'");
    s = s.with(*i);
  }
  return s;
}

std::vector<std::string> GroundSet::labels_of(Subset s) const {
  std::vector<std::string> out;
  s.for_each([&](int i) { out.push_back(labels_[i]); });
  return out;
}

GroundSet GroundSet::sub(const std::vector<int>& positions) const {
  std::vector<std::string> out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back(labels_[p]);
  return GroundSet(std::move(out));
}

namespace {

int exhaustive_rank(const PiSpace& m) {
  int best = 0;
  for_each_independent(m, m.ground().all(), [&](Subset s) {
    best = std::max(best, s.size());
    return true;
  });
  return best;
}

int greedy_rank(const PiSpace& m) {
  Subset basis;
  for (int x = 0; x < m.size(); ++x) {
    if (m.independent(basis.with(x))) basis = basis.with(x);
  }
  return basis.size();
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(ErrorKind::kInvalidSpec, msg);
}

std::vector<std::string> index_labels(int n, const std::string& prefix) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::string edge_label(int u, int v) {
  if (u < 10 && v < 10) return "e" + std::to_string(u) + std::to_string(v);
  return "e" + std::to_string(u) + "-" + std::to_string(v);
}

PiSpace build_uniform(const UniformSpec& s) {
  require(s.n >= 1 && s.n <= kMaxGround, "uniform: need 1 <= n <= 64");
  require(s.r >= 0 && s.r <= s.n, "uniform: need 0 <= r <= n");
  const int r = s.r;
  return PiSpace(GroundSet(index_labels(s.n, "")), [r](Subset x) { return x.size() <= r; },
                 describe(FamilySpec(s)), true);
}

PiSpace build_boolean(const BooleanSpec& s) {
  require(s.n >= 1 && s.n <= kMaxGround, "boolean: need 1 <= n <= 64");
  return PiSpace(GroundSet(index_labels(s.n, "")), [](Subset) { return true; },
                 describe(FamilySpec(s)), true);
}

PiSpace build_graphic(const GraphicSpec& s) {
  require(s.vertices >= 1, "graphic: need at least one vertex");
  require(!s.edges.empty(), "graphic: need at least one edge");
  require(static_cast<int>(s.edges.size()) <= kMaxGround, "graphic: more than 64 edges");
  std::vector<std::string> labels;
  std::set<std::string> used;
  for (auto [u, v] : s.edges) {
    require(u >= 0 && v >= 0 && u < s.vertices && v < s.vertices, "graphic: edge endpoint out of range");
    std::string base = edge_label(std::min(u, v), std::max(u, v));
    std::string label = base;
    for (int k = 2; used.count(label) != 0; ++k) label = base + "#" + std::to_string(k);
    used.insert(label);
    labels.push_back(label);
  }
  auto edges = s.edges;
  const int nv = s.vertices;
  auto forest = [edges, nv](Subset x) {
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    bool ok = true;
    x.for_each([&](int e) {
      if (!ok) return;
      int a = find(edges[e].first);
      int b = find(edges[e].second);
      if (a == b) {
        ok = false;
      } else {
        parent[a] = b;
      }
    });
    return ok;
  };
  return PiSpace(GroundSet(std::move(labels)), forest, describe(FamilySpec(s)), true);
}

PiSpace build_linear(const LinearSpec& s) {
  require(s.p >= 2 && s.p < (std::int64_t{1} << 31) && is_prime(s.p), "linear_gfp: p must be a prime below 2^31");
  require(!s.columns.empty(), "linear_gfp: need at least one column");
  require(static_cast<int>(s.columns.size()) <= kMaxGround, "linear_gfp: more than 64 columns");
  const std::size_t dim = s.columns.front().size();
  require(dim >= 1, "linear_gfp: vectors must be non-empty");
  for (const auto& c : s.columns) require(c.size() == dim, "linear_gfp: vectors must have equal length");
  auto cols = s.columns;
  const std::int64_t p = s.p;
  auto oracle = [cols, p](Subset x) {
    std::vector<std::vector<std::int64_t>> rows;
    rows.reserve(x.size());
    x.for_each([&](int i) { rows.push_back(cols[i]); });
    return gfp_rank(std::move(rows), p) == x.size();
  };
  return PiSpace(GroundSet(index_labels(static_cast<int>(cols.size()), "v")), oracle, describe(FamilySpec(s)), true);
}

PiSpace build_explicit(const ExplicitSpec& s) {
  require(!s.ground.empty(), "explicit: ground must be non-empty");
  GroundSet ground(s.ground);
  std::vector<Subset> sets;
  for (const auto& labels : s.sets) {
    try {
      sets.push_back(ground.parse(labels));
    } catch (const Error& e) {
      throw Error(ErrorKind::kInvalidSpec, std::string("explicit: ") + e.what());
    }
  }
  const std::string prov = describe(FamilySpec(s));
  switch (s.form) {
    case ExplicitForm::kBases: {
      require(!sets.empty(), "explicit: need at least one basis");
      return PiSpace(ground, [sets](Subset x) {
        return std::any_of(sets.begin(), sets.end(), [x](Subset b) { return x.is_subset_of(b); });
      }, prov, false);
    }
    case ExplicitForm::kCircuits: {
      for (Subset c : sets) require(!c.empty(), "explicit: the empty set cannot be a circuit");
      return PiSpace(ground, [sets](Subset x) {
        return std::none_of(sets.begin(), sets.end(), [x](Subset c) { return c.is_subset_of(x); });
      }, prov, false);
    }
    case ExplicitForm::kIndependent:
      break;
  }
  require(!sets.empty(), "explicit: the independent family must be non-empty");
  std::unordered_set<std::uint64_t> family;
  for (Subset x : sets) family.insert(x.bits());
  if (s.complete_downward) {
    for (Subset x : sets) {
      require(x.size() <= 24, "explicit: downward completion of a set with more than 24 elements");
      const std::uint64_t b = x.bits();
      for (std::uint64_t sub = b;; sub = (sub - 1) & b) {
        family.insert(sub);
        if (sub == 0) break;
      }
    }
  } else {
    std::vector<Subset> sorted(sets);
    std::sort(sorted.begin(), sorted.end());
    for (Subset x : sorted) {
      bool closed = true;
      x.for_each([&](int i) {
        if (closed && family.count(x.without(i).bits()) == 0) {
          closed = false;
          throw Error(ErrorKind::kNotDownwardClosed,
                      "explicit: " + to_string(x.without(i)) + " is missing below " + to_string(x));
        }
      });
    }
  }
  auto shared = std::make_shared<const std::unordered_set<std::uint64_t>>(std::move(family));
  return PiSpace(ground, [shared](Subset x) { return shared->count(x.bits()) != 0; }, prov, false);
}

std::string derived(const std::string& op, const PiSpace& parent) {
  return "derived(" + op + "," + parent.provenance() + ")";
}

void require_in_ground(const PiSpace& m, Subset s) {
  if (!s.is_subset_of(m.ground().all())) {
    throw Error(ErrorKind::kOutOfRange, "subset " + to_string(s) + " exceeds ground of size " +
                                            std::to_string(m.size()));
  }
}

void require_cap(const PiSpace& m, const Caps& caps) {
  if (m.size() > caps.max_ground) {
    throw Error(ErrorKind::kCapExceeded, "ground size " + std::to_string(m.size()) + " exceeds enumeration cap " +
                                             std::to_string(caps.max_ground));
  }
}

constexpr std::size_t kMaxWitnesses = 16;

}  // namespace

std::string describe(const FamilySpec& spec) {
  std::ostringstream os;
  std::visit([&](const auto& s) {
    using T = std::decay_t<decltype(s)>;
    if constexpr (std::is_same_v<T, UniformSpec>) {
      os << "uniform(" << s.n << "," << s.r << ")";
    } else if constexpr (std::is_same_v<T, BooleanSpec>) {
      os << "boolean(" << s.n << ")";
    } else if constexpr (std::is_same_v<T, GraphicSpec>) {
      os << "graphic(" << s.vertices << ";";
      for (std::size_t i = 0; i < s.edges.size(); ++i) {
        os << (i ? "," : "") << s.edges[i].first << "-" << s.edges[i].second;
      }
      os << ")";
    } else if constexpr (std::is_same_v<T, LinearSpec>) {
      os << "linear_gfp(" << s.p << ";";
      for (std::size_t i = 0; i < s.columns.size(); ++i) {
        os << (i ? "," : "") << "[";
        for (std::size_t j = 0; j < s.columns[i].size(); ++j) os << (j ? " " : "") << s.columns[i][j];
        os << "]";
      }
      os << ")";
    } else {
      static const char* forms[] = {"independent", "bases", "circuits"};
      os << "explicit(" << s.ground.size() << " elements;" << forms[static_cast<int>(s.form)] << ";"
         << s.sets.size() << " sets" << (s.complete_downward ? ";completed" : "") << ")";
    }
  }, spec);
  return os.str();
}

PiSpace::PiSpace(GroundSet ground, Oracle oracle, std::string provenance, bool matroid)
    : ground_(std::move(ground)),
      oracle_(std::make_shared<const Oracle>(std::move(oracle))),
      provenance_(std::move(provenance)),
      matroid_(matroid) {
  rank_ = matroid_ ? greedy_rank(*this) : exhaustive_rank(*this);
}

PiSpace build_family(const FamilySpec& spec) {
  return std::visit([](const auto& s) -> PiSpace {
    using T = std::decay_t<decltype(s)>;
    if constexpr (std::is_same_v<T, UniformSpec>) return build_uniform(s);
    if constexpr (std::is_same_v<T, BooleanSpec>) return build_boolean(s);
    if constexpr (std::is_same_v<T, GraphicSpec>) return build_graphic(s);
    if constexpr (std::is_same_v<T, LinearSpec>) return build_linear(s);
    if constexpr (std::is_same_v<T, ExplicitSpec>) return build_explicit(s);
  }, spec);
}

bool is_independent(const PiSpace& m, Subset s) {
  require_in_ground(m, s);
  return m.independent(s);
}

void for_each_independent(const PiSpace& m, Subset within, const std::function<bool(Subset)>& fn) {
  if (!m.independent(Subset())) return;
  const int n = m.size();
  std::function<void(Subset, int)> visit = [&](Subset s, int from) {
    if (!fn(s)) return;
    for (int x = from; x < n; ++x) {
      if (!within.contains(x)) continue;
      Subset t = s.with(x);
      if (m.independent(t)) visit(t, x + 1);
    }
  };
  visit(Subset(), 0);
}

std::vector<Subset> independent_sets(const PiSpace& m, const Caps& caps) {
  require_cap(m, caps);
  std::vector<Subset> out;
  for_each_independent(m, m.ground().all(), [&](Subset s) {
    out.push_back(s);
    return true;
  });
  return out;
}

AxiomReport check_axioms(const PiSpace& m, const Caps& caps) {
  require_cap(m, caps);
  const int n = m.size();
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::uint8_t> indep(total);
  for (std::uint64_t b = 0; b < total; ++b) indep[b] = m.independent(Subset(b)) ? 1 : 0;

  AxiomReport report;
  std::vector<Subset> members;
  for (std::uint64_t b = 0; b < total; ++b) {
    if (indep[b]) members.emplace_back(b);
  }
  std::sort(members.begin(), members.end());
  if (members.empty() || !indep[0]) {
    report.i1_holds = false;
  }
  for (Subset s : members) {
    s.for_each([&](int x) {
      if (!indep[s.without(x).bits()]) {
        report.i1_holds = false;
        if (report.i1_witnesses.size() < kMaxWitnesses) report.i1_witnesses.push_back({s, s.without(x)});
      }
    });
  }

  // rank_in[S]: largest independent subset of S. basis_in[S]: largest
  // maximal independent set of M inside S, or -1.
  std::vector<std::int8_t> rank_in(total), basis_in(total);
  for (std::uint64_t b = 0; b < total; ++b) {
    Subset s(b);
    if (indep[b]) {
      rank_in[b] = static_cast<std::int8_t>(s.size());
    } else {
      std::int8_t best = 0;
      s.for_each([&](int x) { best = std::max(best, rank_in[s.without(x).bits()]); });
      rank_in[b] = best;
    }
    bool maximal = indep[b] != 0;
    for (int x = 0; maximal && x < n; ++x) {
      if (!s.contains(x) && indep[s.with(x).bits()]) maximal = false;
    }
    std::int8_t best = maximal ? static_cast<std::int8_t>(s.size()) : -1;
    s.for_each([&](int x) { best = std::max(best, basis_in[s.without(x).bits()]); });
    basis_in[b] = best;
  }
  std::vector<Subset> maximal_sets;
  for (Subset s : members) {
    if (basis_in[s.bits()] == s.size()) {
      bool maximal = true;
      for (int x = 0; maximal && x < n; ++x) {
        if (!s.contains(x) && indep[s.with(x).bits()]) maximal = false;
      }
      if (maximal) maximal_sets.push_back(s);
    }
  }

  for (Subset tau : members) {
    Subset blocked = tau;
    for (int x = 0; x < n; ++x) {
      if (!tau.contains(x) && !indep[tau.with(x).bits()]) blocked = blocked.with(x);
    }
    const int need = tau.size() + 1;
    if (rank_in[blocked.bits()] >= need) {
      report.i2_holds = false;
      if (report.i2_witnesses.size() < kMaxWitnesses) {
        std::optional<Subset> found;
        std::function<void(Subset, int)> search = [&](Subset s, int from) {
          if (found) return;
          if (s.size() == need) {
            found = s;
            return;
          }
          for (int x = from; x < n && !found; ++x) {
            if (blocked.contains(x) && indep[s.with(x).bits()]) search(s.with(x), x + 1);
          }
        };
        search(Subset(), 0);
        if (found) report.i2_witnesses.push_back({*found, tau});
      }
    }
    if (basis_in[blocked.bits()] > tau.size()) {
      report.i2prime_holds = false;
      if (report.i2prime_witnesses.size() < kMaxWitnesses) {
        for (Subset sigma : maximal_sets) {
          if (sigma.size() > tau.size() && sigma.is_subset_of(blocked)) {
            report.i2prime_witnesses.push_back({sigma, tau});
            break;
          }
        }
      }
    }
  }
  return report;
}

std::vector<int> positions_of(Subset s) { return s.indices(); }

PiSpace restriction(const PiSpace& m, Subset keep) {
  require_in_ground(m, keep);
  if (keep.empty()) throw Error(ErrorKind::kEmptyRestriction, "restriction to the empty set");
  auto positions = positions_of(keep);
  GroundSet ground = m.ground().sub(positions);
  return PiSpace(std::move(ground),
                 [m, positions](Subset s) { return m.independent(expand(s, positions)); },
                 derived("restrict", m), m.matroid_by_construction());
}

PiSpace skeleton(const PiSpace& m, int k) {
  if (k < 0) throw Error(ErrorKind::kInvalidSpec, "skeleton dimension must be non-negative");
  return PiSpace(m.ground(), [m, k](Subset s) { return s.size() <= k + 1 && m.independent(s); },
                 derived("skeleton" + std::to_string(k), m), m.matroid_by_construction());
}

PiSpace link(const PiSpace& m, Subset sigma) {
  require_in_ground(m, sigma);
  if (!m.independent(sigma)) {
    throw Error(ErrorKind::kDependentSeed, "link of dependent set " + to_string(sigma));
  }
  auto positions = positions_of(m.ground().all() - sigma);
  GroundSet ground = m.ground().sub(positions);
  return PiSpace(std::move(ground),
                 [m, sigma, positions](Subset t) { return m.independent(sigma | expand(t, positions)); },
                 derived("link", m), m.matroid_by_construction());
}

std::vector<Subset> bases(const PiSpace& m, const Caps& caps) {
  require_cap(m, caps);
  std::vector<Subset> out;
  const int n = m.size();
  for_each_independent(m, m.ground().all(), [&](Subset s) {
    for (int x = 0; x < n; ++x) {
      if (!s.contains(x) && m.independent(s.with(x))) return true;
    }
    out.push_back(s);
    return true;
  });
  return out;
}

WClosureReport w_closure_check(const SetFamily& family) {
  std::unordered_set<std::uint64_t> members;
  for (Subset s : family.members) members.insert(s.bits());
  std::vector<Subset> sorted(family.members);
  std::sort(sorted.begin(), sorted.end());
  WClosureReport report;
  if (sorted.empty()) return report;
  for (Subset s : sorted) {
    for (int x : s.indices()) {
      if (members.count(s.without(x).bits()) == 0) {
        report.equal = false;
        report.member = s;
        report.missing_subset = s.without(x);
        return report;
      }
    }
  }
  return report;
}

bool w_equals_fin_check(const PiSpace& m, const Caps& caps) {
  require_cap(m, caps);
  SetFamily family{m.size(), {}};
  const std::uint64_t total = std::uint64_t{1} << m.size();
  for (std::uint64_t b = 0; b < total; ++b) {
    if (m.independent(Subset(b))) family.members.emplace_back(b);
  }
  return w_closure_check(family).equal;
}

}  // namespace mtw
