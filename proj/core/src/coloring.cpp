// Copyright 2026 The kempe Authors
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

#include "kempe/coloring.hpp"

#include <algorithm>
#include <string>

namespace kempe {

PartialColoring::PartialColoring(int num_colors, int num_edges)
    : t_(num_colors), colors_(static_cast<std::size_t>(num_edges), kUncolored) {
  if (num_colors < 0 || num_colors > kMaxColors) {
    throw Error(Errc::kBadColors, "palette size " + std::to_string(num_colors) +
                                      " outside [0," + std::to_string(kMaxColors) + "]");
  }
}

int PartialColoring::num_colored() const {
  return static_cast<int>(std::count_if(colors_.begin(), colors_.end(),
                                        [](Color c) { return c != kUncolored; }));
}

std::vector<EdgeId> PartialColoring::colored_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < num_edges(); ++e) {
    if (is_colored(e)) out.push_back(e);
  }
  return out;
}

std::vector<EdgeId> PartialColoring::uncolored_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < num_edges(); ++e) {
    if (!is_colored(e)) out.push_back(e);
  }
  return out;
}

PartialColoring PartialColoring::renamed(const std::vector<Color>& perm) const {
  PartialColoring out = *this;
  for (auto& c : out.colors_) c = perm[static_cast<std::size_t>(c)];
  return out;
}

ColorSet present_colors(const PartialColoring& c, const Multigraph& g, VertexId v) {
  ColorSet s;
  for (EdgeId e : g.incident(v)) {
    if (c.is_colored(e)) s.insert(c[e]);
  }
  return s;
}

ColorSet missing_colors(const PartialColoring& c, const Multigraph& g, VertexId v) {
  return ColorSet::palette(c.num_colors()) - present_colors(c, g, v);
}

int colored_degree(const PartialColoring& c, const Multigraph& g, VertexId v) {
  int d = 0;
  for (EdgeId e : g.incident(v)) d += c.is_colored(e) ? 1 : 0;
  return d;
}

std::optional<EdgeId> edge_with_color(const PartialColoring& c, const Multigraph& g,
                                      VertexId v, Color color) {
  for (EdgeId e : g.incident(v)) {
    if (c[e] == color) return e;
  }
  return std::nullopt;
}

bool is_proper(const PartialColoring& c, const Multigraph& g) {
  if (c.num_edges() != g.num_edges()) return false;
  for (EdgeId e = 0; e < c.num_edges(); ++e) {
    if (c[e] < kUncolored || c[e] > c.num_colors()) return false;
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    ColorSet seen;
    for (EdgeId e : g.incident(v)) {
      if (!c.is_colored(e)) continue;
      if (seen.contains(c[e])) return false;
      seen.insert(c[e]);
    }
  }
  return true;
}

EdgeSubgraph colored_subgraph(const Multigraph& g, const PartialColoring& c) {
  std::vector<bool> keep(static_cast<std::size_t>(g.num_edges()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) keep[static_cast<std::size_t>(e)] = c.is_colored(e);
  return edge_subgraph(g, keep);
}

bool KempeChain::contains_vertex(VertexId v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

namespace {

void check_pair(const PartialColoring& c, Color alpha, Color beta) {
  if (alpha == beta || alpha < 1 || beta < 1 || alpha > c.num_colors() ||
      beta > c.num_colors()) {
    throw Error(Errc::kBadColors, "invalid color pair (" + std::to_string(alpha) + "," +
                                      std::to_string(beta) + ") for t=" +
                                      std::to_string(c.num_colors()));
  }
}

struct Walk {
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;
  bool closed = false;
};

// Follows alternating colors from `from` along `first` until the chain ends or
// returns to `first`.
Walk walk_chain(const PartialColoring& c, const Multigraph& g, VertexId from, EdgeId first,
                Color alpha, Color beta) {
  Walk w;
  w.vertices.push_back(from);
  VertexId x = from;
  EdgeId e = first;
  for (int steps = 0; steps <= g.num_edges(); ++steps) {
    w.edges.push_back(e);
    x = g.edge(e).other(x);
    w.vertices.push_back(x);
    const Color next = c[e] == alpha ? beta : alpha;
    const auto ne = edge_with_color(c, g, x, next);
    if (!ne) return w;
    if (*ne == first) {
      w.closed = true;
      return w;
    }
    e = *ne;
  }
  throw Error(Errc::kStaleChain, "alternating walk does not terminate; coloring is improper");
}

}  // namespace

KempeChain kempe_chain(const PartialColoring& c, const Multigraph& g, VertexId start,
                       Color alpha, Color beta) {
  check_pair(c, alpha, beta);
  KempeChain chain;
  chain.alpha = alpha;
  chain.beta = beta;
  const auto ea = edge_with_color(c, g, start, alpha);
  const auto eb = edge_with_color(c, g, start, beta);
  if (!ea && !eb) {
    chain.vertices.push_back(start);
    return chain;
  }
  if (!ea || !eb) {
    Walk w = walk_chain(c, g, start, ea ? *ea : *eb, alpha, beta);
    chain.edges = std::move(w.edges);
    chain.vertices = std::move(w.vertices);
    return chain;
  }
  Walk forward = walk_chain(c, g, start, *ea, alpha, beta);
  if (forward.closed) {
    chain.kind = ChainKind::kEvenCycle;
    chain.edges = std::move(forward.edges);
    chain.vertices = std::move(forward.vertices);
    return chain;
  }
  Walk backward = walk_chain(c, g, start, *eb, alpha, beta);
  chain.edges.assign(backward.edges.rbegin(), backward.edges.rend());
  chain.edges.insert(chain.edges.end(), forward.edges.begin(), forward.edges.end());
  chain.vertices.assign(backward.vertices.rbegin(), backward.vertices.rend());
  chain.vertices.insert(chain.vertices.end(), forward.vertices.begin() + 1,
                        forward.vertices.end());
  return chain;
}

PartialColoring flip_chain(const PartialColoring& c, const Multigraph& g,
                           const KempeChain& chain) {
  (void)g;
  Color prev = kUncolored;
  for (EdgeId e : chain.edges) {
    const Color col = c[e];
    if ((col != chain.alpha && col != chain.beta) || col == prev) {
      throw Error(Errc::kStaleChain, "edge " + std::to_string(e) +
                                         " no longer alternates in the chain");
    }
    prev = col;
  }
  PartialColoring out = c;
  for (EdgeId e : chain.edges) out.set(e, c[e] == chain.alpha ? chain.beta : chain.alpha);
  return out;
}

bool UncoloredCycle::contains(EdgeId e) const {
  return std::find(cycle.begin(), cycle.end(), e) != cycle.end();
}

CycleOrImprovement uncolored_cycle(const PartialColoring& c, const Multigraph& g, EdgeId e,
                                   Color alpha, Color beta) {
  if (e < 0 || e >= g.num_edges() || c.is_colored(e)) {
    throw Error(Errc::kBadColors, "edge " + std::to_string(e) + " is not uncolored");
  }
  const VertexId u = g.edge(e).u;
  const VertexId v = g.edge(e).v;
  const ColorSet miss_u = missing_colors(c, g, u);
  const ColorSet miss_v = missing_colors(c, g, v);
  if (!miss_u.contains(alpha) || !miss_v.contains(beta)) {
    throw Error(Errc::kBadColors, "colors (" + std::to_string(alpha) + "," +
                                      std::to_string(beta) + ") are not missing at (" +
                                      std::to_string(u) + "," + std::to_string(v) + ")");
  }
  if (miss_v.contains(alpha)) return Improvement{e, KempeChain{alpha, beta, ChainKind::kPath, {}, {v}}, alpha};
  if (miss_u.contains(beta)) return Improvement{e, KempeChain{alpha, beta, ChainKind::kPath, {}, {u}}, beta};

  KempeChain path = kempe_chain(c, g, v, alpha, beta);
  if (path.kind != ChainKind::kPath || path.back() != u) {
    return Improvement{e, std::move(path), alpha};
  }
  UncoloredCycle uc;
  uc.edge = e;
  uc.u = u;
  uc.v = v;
  uc.alpha = alpha;
  uc.beta = beta;
  uc.cycle.push_back(e);
  uc.cycle.insert(uc.cycle.end(), path.edges.begin(), path.edges.end());
  uc.vertices = std::move(path.vertices);
  return uc;
}

PartialColoring apply_improvement(const PartialColoring& c, const Multigraph& g,
                                  const Improvement& imp) {
  PartialColoring out = imp.chain.empty() ? c : flip_chain(c, g, imp.chain);
  out.set(imp.edge, imp.color);
  return out;
}

namespace {

void check_current(const PartialColoring& c, const UncoloredCycle& uc) {
  if (c.is_colored(uc.edge)) {
    throw Error(Errc::kStaleChain, "cycle edge " + std::to_string(uc.edge) + " is colored");
  }
  for (std::size_t i = 1; i < uc.cycle.size(); ++i) {
    const Color want = (i % 2 == 1) ? uc.alpha : uc.beta;
    if (c[uc.cycle[i]] != want) {
      throw Error(Errc::kStaleChain, "path edge " + std::to_string(uc.cycle[i]) +
                                         " changed color");
    }
  }
}

}  // namespace

PartialColoring shift_cycle(const PartialColoring& c, const Multigraph& g,
                            const UncoloredCycle& uc, EdgeId new_uncolored) {
  (void)g;
  const auto it = std::find(uc.cycle.begin(), uc.cycle.end(), new_uncolored);
  if (it == uc.cycle.end()) {
    throw Error(Errc::kEdgeNotOnCycle, "edge " + std::to_string(new_uncolored) +
                                           " is not on the cycle of edge " +
                                           std::to_string(uc.edge));
  }
  check_current(c, uc);
  if (new_uncolored == uc.edge) return c;

  // Path edges p_1 .. p_{i-1} before the new gap swap colors; e takes α.
  const auto gap = static_cast<std::size_t>(it - uc.cycle.begin());
  PartialColoring out = c;
  out.set(uc.edge, uc.alpha);
  for (std::size_t i = 1; i < gap; ++i) {
    const EdgeId p = uc.cycle[i];
    out.set(p, c[p] == uc.alpha ? uc.beta : uc.alpha);
  }
  out.clear(new_uncolored);
  return out;
}

bool is_valid_uncolored_cycle(const PartialColoring& c, const Multigraph& g,
                              const UncoloredCycle& uc) {
  const int len = uc.length();
  if (len < 3 || len % 2 == 0) return false;
  if (uc.cycle.front() != uc.edge || c.is_colored(uc.edge)) return false;
  const Edge& e = g.edge(uc.edge);
  if (e.u != uc.u || e.v != uc.v) return false;
  if (static_cast<int>(uc.vertices.size()) != len) return false;
  if (uc.vertices.front() != uc.v || uc.vertices.back() != uc.u) return false;

  std::vector<VertexId> sorted = uc.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

  for (int i = 1; i < len; ++i) {
    const EdgeId p = uc.cycle[static_cast<std::size_t>(i)];
    const Edge& pe = g.edge(p);
    const VertexId a = uc.vertices[static_cast<std::size_t>(i - 1)];
    const VertexId b = uc.vertices[static_cast<std::size_t>(i)];
    if (!((pe.u == a && pe.v == b) || (pe.u == b && pe.v == a))) return false;
    if (c[p] != ((i % 2 == 1) ? uc.alpha : uc.beta)) return false;
  }
  const ColorSet miss_u = missing_colors(c, g, uc.u);
  const ColorSet miss_v = missing_colors(c, g, uc.v);
  return miss_u.contains(uc.alpha) && !miss_u.contains(uc.beta) &&
         miss_v.contains(uc.beta) && !miss_v.contains(uc.alpha);
}

}  // namespace kempe
