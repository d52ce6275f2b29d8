// Copyright 2026 The gensat Authors.
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

#include "gensat/saturation.hpp"

#include <set>

#include "gensat/canonical.hpp"
#include "gensat/errors.hpp"
#include "gensat/graph6.hpp"
#include "json.hpp"

namespace gensat {
namespace {

bool find_clique(const Graph& g, const VertexSet& cand, int need,
                 std::vector<int>& out) {
  if (need == 0) return true;
  if (cand.count() < need) return false;
  for (int v = cand.first(); v >= 0; v = cand.next(v)) {
    out.push_back(v);
    if (find_clique(g, (cand & g.neighbors(v)).above(v), need - 1, out)) {
      return true;
    }
    out.pop_back();
  }
  return false;
}

Embedding star_at(const Graph& g, int center, int r) {
  Embedding f{center};
  g.neighbors(center).for_each([&](int u) {
    if (static_cast<int>(f.size()) <= r) f.push_back(u);
  });
  return f;
}

// Vertices of degree below `threshold` are pairwise adjacent.
bool low_vertices_form_clique(const Graph& g, int threshold) {
  VertexSet low;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) < threshold) low.set(v);
  }
  bool ok = true;
  low.for_each([&](int v) {
    VertexSet others = low;
    others.reset(v);
    if ((others - g.neighbors(v)).count() > 0) ok = false;
  });
  return ok;
}

bool has_clique_through(const Graph& g, int r, int u, int v) {
  std::vector<int> scratch;
  return find_clique(g, g.neighbors(u) & g.neighbors(v), r - 2, scratch);
}

}  // namespace

std::optional<Embedding> contains_copy(const Graph& g, const Pattern& f) {
  switch (f.kind()) {
    case PatternKind::kClique: {
      std::vector<int> out;
      if (find_clique(g, g.vertices(), f.parameter(), out)) return out;
      return std::nullopt;
    }
    case PatternKind::kStar: {
      for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) >= f.parameter()) return star_at(g, v, f.parameter());
      }
      return std::nullopt;
    }
    default:
      return find_embedding(g, f.graph());
  }
}

std::optional<Embedding> copy_through_new_edge(const Graph& g, const Pattern& f,
                                               Edge e) {
  if (g.adjacent(e.u, e.v)) {
    throw DomainError("edge_present", "copy_through_new_edge needs a non-edge");
  }
  switch (f.kind()) {
    case PatternKind::kClique: {
      const int r = f.parameter();
      if (r < 2) return std::nullopt;
      std::vector<int> out{e.u, e.v};
      if (find_clique(g, g.neighbors(e.u) & g.neighbors(e.v), r - 2, out)) {
        return out;
      }
      return std::nullopt;
    }
    case PatternKind::kStar: {
      const int r = f.parameter();
      for (auto [c, leaf] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        if (g.degree(c) + 1 >= r) {
          Embedding emb{c, leaf};
          g.neighbors(c).for_each([&](int x) {
            if (static_cast<int>(emb.size()) <= r) emb.push_back(x);
          });
          return emb;
        }
      }
      return std::nullopt;
    }
    default:
      return find_embedding_through(g.with_edge(e.u, e.v), f.graph(), e);
  }
}

SaturationCertificate is_family_saturated(const Graph& g, const Family& fs,
                                          const SaturationOptions& opts) {
  if (fs.empty()) {
    throw DomainError("empty_family", "forbidden family must be nonempty");
  }
  SaturationCertificate cert;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (auto emb = contains_copy(g, fs[i])) {
      cert.is_free = false;
      cert.free_violation = PatternCopy{i, std::move(*emb)};
      return cert;
    }
  }
  for (const Edge& e : g.non_edges()) {
    ++cert.checked_nonedges;
    std::optional<PatternCopy> made;
    for (std::size_t i = 0; i < fs.size() && !made; ++i) {
      std::optional<Embedding> emb;
      if (opts.anchored) {
        emb = copy_through_new_edge(g, fs[i], e);
      } else {
        emb = find_embedding(g.with_edge(e.u, e.v), fs[i].graph());
      }
      if (emb) made = PatternCopy{i, std::move(*emb)};
    }
    if (!made) {
      cert.unsaturated_witness = e;
      cert.creations.clear();
      return cert;
    }
    if (opts.record_creations) cert.creations.push_back({e, std::move(*made)});
  }
  cert.is_saturated = true;
  return cert;
}

SaturationCertificate is_saturated(const Graph& g, const Pattern& f,
                                   const SaturationOptions& opts) {
  return is_family_saturated(g, Family{f}, opts);
}

bool saturated(const Graph& g, const Pattern& f) {
  switch (f.kind()) {
    case PatternKind::kStar: {
      const int r = f.parameter();
      return g.max_degree() < r && low_vertices_form_clique(g, r - 1);
    }
    case PatternKind::kClique: {
      const int r = f.parameter();
      if (contains_copy(g, f)) return false;
      if (r < 2) return g.is_complete();
      for (const Edge& e : g.non_edges()) {
        if (!has_clique_through(g, r, e.u, e.v)) return false;
      }
      return true;
    }
    default: {
      if (find_embedding(g, f.graph())) return false;
      for (const Edge& e : g.non_edges()) {
        if (!find_embedding_through(g.with_edge(e.u, e.v), f.graph(), e)) {
          return false;
        }
      }
      return true;
    }
  }
}

bool family_saturated(const Graph& g, const Family& fs) {
  if (fs.size() == 1) return saturated(g, fs[0]);
  SaturationOptions opts;
  opts.record_creations = false;
  return is_family_saturated(g, fs, opts).is_saturated;
}

std::string validate_certificate(const Graph& g, const Family& fs,
                                 const SaturationCertificate& cert) {
  if (cert.is_saturated) {
    if (!cert.is_free || cert.free_violation || cert.unsaturated_witness) {
      return "saturated verdict carries a negative witness";
    }
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (find_embedding(g, fs[i].graph())) {
        return "graph contains member " + fs[i].spec();
      }
    }
    const auto missing = g.non_edges();
    if (cert.checked_nonedges != missing.size() ||
        cert.creations.size() != missing.size()) {
      return "certificate does not cover every non-edge";
    }
    for (std::size_t k = 0; k < missing.size(); ++k) {
      const Creation& c = cert.creations[k];
      if (c.edge != missing[k] || c.copy.member >= fs.size()) {
        return "creation list out of order";
      }
      const Graph plus = g.with_edge(c.edge.u, c.edge.v);
      const Graph& pat = fs[c.copy.member].graph();
      if (!is_valid_embedding(plus, pat, c.copy.embedding)) {
        return "invalid creating copy for non-edge (" +
               std::to_string(c.edge.u) + "," + std::to_string(c.edge.v) + ")";
      }
    }
    return {};
  }
  if (cert.free_violation) {
    const PatternCopy& pc = *cert.free_violation;
    if (cert.is_free || pc.member >= fs.size() ||
        !is_valid_embedding(g, fs[pc.member].graph(), pc.embedding)) {
      return "invalid free violation";
    }
    return {};
  }
  if (cert.unsaturated_witness) {
    const Edge e = *cert.unsaturated_witness;
    if (e.u < 0 || e.v >= g.order() || e.u == e.v || g.adjacent(e.u, e.v)) {
      return "unsaturated witness is not a non-edge";
    }
    const Graph plus = g.with_edge(e.u, e.v);
    for (const Pattern& f : fs) {
      if (find_embedding(g, f.graph())) return "graph is not free";
      if (find_embedding(plus, f.graph())) {
        return "witness edge creates " + f.spec();
      }
    }
    return {};
  }
  return "negative verdict without a witness";
}

Pattern pattern_for(const Graph& g) {
  const int n = g.order();
  const std::size_t m = g.size();
  if (n >= 1 && m == static_cast<std::size_t>(n) * (n - 1) / 2) {
    return Pattern::clique(n);
  }
  if (is_tree(g)) {
    if (g.max_degree() == n - 1) return Pattern::star(n - 1);
    if (g.max_degree() <= 2) return Pattern::path(n);
    return Pattern::tree(g);
  }
  if (n >= 3 && m == static_cast<std::size_t>(n) && g.is_connected() &&
      g.max_degree() == 2) {
    return Pattern::cycle(n);
  }
  return Pattern::graph(g);
}

PeelResult peel_universal(const Graph& g, const Family& fs) {
  const int n = g.order();
  int x = -1;
  for (int v = 0; v < n && x < 0; ++v) {
    if (g.degree(v) == n - 1) x = v;
  }
  if (x < 0) {
    throw DomainError("no_universal_vertex",
                      "no universal vertex: maximum degree is " +
                          std::to_string(n > 0 ? g.max_degree() : 0) + " on " +
                          std::to_string(n) + " vertices");
  }
  PeelResult out;
  out.graph = g.without_vertex(x);
  out.removed_vertex = x;
  std::set<CanonicalCode> seen;
  for (const Pattern& f : fs) {
    const Graph& h = f.graph();
    for (int v = 0; v < h.order(); ++v) {
      Graph reduced = h.without_vertex(v);
      if (seen.insert(canonical_form(reduced)).second) {
        out.family.push_back(pattern_for(reduced));
      }
    }
  }
  return out;
}

Family minimal_members(const Family& fs) {
  Family out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < fs.size() && keep; ++j) {
      if (j == i) continue;
      const Graph& a = fs[i].graph();
      const Graph& b = fs[j].graph();
      if (!find_embedding(a, b)) continue;
      // b is a subgraph of a; among isomorphic copies keep the first.
      if (!isomorphic(a, b) || j < i) keep = false;
    }
    if (keep) out.push_back(fs[i]);
  }
  return out;
}

StarSatStructure star_sat_structure(const Graph& g, int t) {
  StarSatStructure s;
  s.max_degree = g.order() > 0 ? g.max_degree() : 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) < t - 1) s.low_degree_vertices.push_back(v);
  }
  for (std::size_t i = 0; i < s.low_degree_vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < s.low_degree_vertices.size(); ++j) {
      if (!g.adjacent(s.low_degree_vertices[i], s.low_degree_vertices[j])) {
        s.clique_ok = false;
      }
    }
  }
  return s;
}

std::string certificate_json(const Graph& g, const Family& fs,
                             const SaturationCertificate& cert) {
  nlohmann::ordered_json j;
  j["graph"] = encode_graph6(g);
  if (fs.size() == 1) {
    j["pattern"] = fs[0].spec();
  } else {
    auto specs = nlohmann::json::array();
    for (const Pattern& f : fs) specs.push_back(f.spec());
    j["pattern"] = specs;
  }
  j["saturated"] = cert.is_saturated;
  j["free"] = cert.is_free;
  nlohmann::ordered_json w;
  if (cert.free_violation) {
    w["kind"] = "copy_present";
    w["member"] = fs[cert.free_violation->member].spec();
    w["embedding"] = cert.free_violation->embedding;
  } else if (cert.unsaturated_witness) {
    w["kind"] = "non_edge_creates_nothing";
    w["edge"] = {cert.unsaturated_witness->u, cert.unsaturated_witness->v};
  } else {
    w["kind"] = "all_non_edges_create_copies";
  }
  w["checked_nonedges"] = cert.checked_nonedges;
  j["witness"] = w;
  return j.dump();
}

}  // namespace gensat
