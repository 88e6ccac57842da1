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

#include "mtw/gallery.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "mtw/complexes.hpp"
#include "mtw/homology.hpp"
#include "mtw/parallel.hpp"

namespace mtw {
namespace {

void unsupported(const std::string& what) { throw Error(ErrorKind::kUnsupportedShape, what); }

bool is_a_element(long long x) { return x >= 3 && x % 3 == 0; }
bool is_b_element(long long x) { return x >= 4 && x % 3 == 1; }

void check_shape(const SymbolicSet& x) {
  if (x.a_tail && *x.a_tail < 0) unsupported("a-tail threshold must be non-negative");
  for (long long m : x.a_finite) {
    if (m < 1) unsupported("a-index " + std::to_string(m) + " is not positive");
  }
  for (long long m : x.b_finite) {
    if (m < 1) unsupported("b-index " + std::to_string(m) + " is not positive");
  }
  for (long long r : x.rest_finite) {
    if (r < 0 || is_a_element(r) || is_b_element(r)) {
      unsupported("rest element " + std::to_string(r) + " is not outside both sequences");
    }
  }
}

std::string join_indices(const char* prefix, const std::set<long long>& s) {
  std::string out;
  for (long long m : s) out += (out.empty() ? "" : ",") + std::string(prefix) + std::to_string(m);
  return out;
}

}  // namespace

long long a_element(long long n) { return 3 * n; }
long long b_element(long long n) { return 3 * n + 1; }

SymbolicSet SymbolicSet::tail(long long t) {
  SymbolicSet x;
  x.a_tail = t;
  return x;
}

bool SymbolicSet::contains(long long x) const {
  if (is_a_element(x)) {
    const long long m = x / 3;
    return (a_tail && m > *a_tail) || a_finite.count(m) > 0;
  }
  if (is_b_element(x)) return b_finite.count(x / 3) > 0;
  return rest_finite.count(x) > 0;
}

SymbolicSet SymbolicSet::normalized() const {
  SymbolicSet out = *this;
  if (!out.a_tail) return out;
  long long& t = *out.a_tail;
  out.a_finite.erase(out.a_finite.upper_bound(t), out.a_finite.end());
  while (t >= 1 && out.a_finite.count(t) > 0) {
    out.a_finite.erase(t);
    --t;
  }
  return out;
}

std::string to_string(const SymbolicSet& x) {
  std::vector<std::string> parts;
  if (x.a_tail) parts.push_back("a_m for m>" + std::to_string(*x.a_tail));
  if (!x.a_finite.empty()) parts.push_back(join_indices("a", x.a_finite));
  if (!x.b_finite.empty()) parts.push_back(join_indices("b", x.b_finite));
  if (!x.rest_finite.empty()) {
    std::string r;
    for (long long v : x.rest_finite) r += (r.empty() ? "" : ",") + std::to_string(v);
    parts.push_back(r);
  }
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "; " : "") + parts[i];
  return out + "}";
}

bool AscChainFamily::has_circuit(long long n) const {
  if (n < 1) return false;
  return !(dropped_b && n == *dropped_b - 1);
}

bool AscChainFamily::circuit_has_b(long long n, long long j) const {
  if (j < 1 || j > n) return false;
  return !(dropped_b && n == *dropped_b && j == *dropped_b);
}

SymbolicSet asc_chain_closure(const SymbolicSet& input, const AscChainFamily& family) {
  check_shape(input);
  const SymbolicSet x = input.normalized();
  // Every circuit has infinitely many a-elements, so only a tail can hold one.
  if (!x.a_tail) return x;
  const long long t = *x.a_tail;
  const long long max_b = x.b_finite.empty() ? 0 : *x.b_finite.rbegin();
  // Past this index at least two b-indices of every circuit are missing.
  const long long last = max_b + 3 + (family.dropped_b ? *family.dropped_b : 0);
  SymbolicSet out = x;
  for (long long n = 1; n <= last; ++n) {
    if (!family.has_circuit(n)) continue;
    std::vector<long long> missing;
    for (long long m = n + 1; m <= t && missing.size() < 2; ++m) {
      if (!x.a_finite.count(m)) missing.push_back(a_element(m));
    }
    for (long long j = 1; j <= n && missing.size() < 2; ++j) {
      if (family.circuit_has_b(n, j) && !x.b_finite.count(j)) missing.push_back(b_element(j));
    }
    if (missing.size() != 1) continue;
    const long long e = missing[0];
    if (is_a_element(e)) {
      out.a_finite.insert(e / 3);
    } else {
      out.b_finite.insert(e / 3);
    }
  }
  return out.normalized();
}

AscChainReport verify_asc_chain(long long steps, const AscChainFamily& family) {
  AscChainReport report;
  if (steps < 1) throw Error(ErrorKind::kInvalidSpec, "steps must be at least 1");
  SymbolicSet x = SymbolicSet::tail(1);
  for (long long n = 1; n <= steps; ++n) {
    AscChainStep step;
    step.n = n;
    step.x = x;
    step.closure = asc_chain_closure(x, family);
    SymbolicSet expected = x;
    expected.b_finite.insert(n);
    expected = expected.normalized();
    step.closed = step.closure == x;
    step.law_holds = step.closure == expected && !step.closed;
    report.trace.push_back(step);
    report.steps = n;
    if (!step.law_holds) {
      report.failed_at = n;
      return report;
    }
    x = step.closure;
  }
  report.ok = true;
  return report;
}

PiSpace truncated_asc_chain(int t) {
  if (t < 3 || t > 32) throw Error(ErrorKind::kInvalidSpec, "truncation must lie in 3..32");
  ExplicitSpec spec;
  spec.form = ExplicitForm::kCircuits;
  for (int n = 1; n <= t; ++n) {
    spec.ground.push_back(std::to_string(a_element(n)));
    spec.ground.push_back(std::to_string(b_element(n)));
  }
  for (int n = 1; n <= t - 2; ++n) {
    std::vector<std::string> c;
    for (int m = n + 1; m <= t; ++m) c.push_back(std::to_string(a_element(m)));
    for (int j = 1; j <= n; ++j) c.push_back(std::to_string(b_element(j)));
    spec.sets.push_back(std::move(c));
  }
  return build_family(spec);
}

Subset truncate(const SymbolicSet& x, int t) {
  Subset out;
  for (int n = 1; n <= t; ++n) {
    if (x.contains(a_element(n))) out = out.with(2 * (n - 1));
    if (x.contains(b_element(n))) out = out.with(2 * (n - 1) + 1);
  }
  return out;
}

FamilySpec sweep_family(const std::string& family, int n) {
  if (n < 1) throw Error(ErrorKind::kInvalidSpec, "sweep size must be positive");
  if (family == "boolean") return BooleanSpec{n};
  if (family == "uniform-half") return UniformSpec{n, (n + 1) / 2};
  if (family.rfind("uniform:", 0) == 0) {
    int r = 0;
    try {
      r = std::stoi(family.substr(8));
    } catch (...) {
      throw Error(ErrorKind::kInvalidSpec, "bad uniform rank in family " + family);
    }
    if (r < 0) throw Error(ErrorKind::kInvalidSpec, "negative uniform rank in family " + family);
    return UniformSpec{n, std::min(r, n)};
  }
  if (family == "path" || family == "complete") {
    GraphicSpec g;
    g.vertices = n;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (family == "complete" || v == u + 1) g.edges.emplace_back(u, v);
      }
    }
    return g;
  }
  throw Error(ErrorKind::kInvalidSpec, "unknown sweep family " + family);
}

std::vector<SweepRow> connectivity_sweep(const std::string& family, int k, int n_lo, int n_hi, const Caps& caps) {
  if (k < 0) throw Error(ErrorKind::kInvalidSpec, "skeleton dimension must be non-negative");
  if (n_lo > n_hi) throw Error(ErrorKind::kInvalidSpec, "empty size range");
  std::vector<FamilySpec> specs;
  for (int n = n_lo; n <= n_hi; ++n) specs.push_back(sweep_family(family, n));
  std::vector<SweepRow> rows(specs.size());
  parallel_for(specs.size(), [&](std::size_t i) {
    SweepRow& row = rows[i];
    row.family = family;
    row.n = n_lo + static_cast<int>(i);
    row.k = k;
    const auto start = std::chrono::steady_clock::now();
    try {
      const PiSpace m = build_family(specs[i]);
      const SimplicialComplex c = independence_complex(skeleton(m, k), caps);
      row.verified = connectivity(c, k - 1, caps);
      for (long long f : f_vector(c, caps)) row.faces += f;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kCapExceeded) throw;
      row.skipped = true;
    }
    row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                     .count();
  });
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, bool with_timing) {
  std::ostringstream out;
  out << "family,n,k,verified,faces" << (with_timing ? ",millis" : "") << "\n";
  for (const SweepRow& r : rows) {
    out << r.family << "," << r.n << "," << r.k << "," << (r.skipped ? "skipped" : r.verified ? "true" : "false")
        << "," << r.faces;
    if (with_timing) out << "," << r.millis;
    out << "\n";
  }
  return out.str();
}

}  // namespace mtw
