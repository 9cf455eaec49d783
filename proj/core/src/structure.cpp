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

#include "kempe/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace kempe {
namespace {

UncoloredCycle require_cycle(const PartialColoring& c, const Multigraph& g, EdgeId e, Color a,
                             Color b) {
  auto r = uncolored_cycle(c, g, e, a, b);
  if (auto* imp = std::get_if<Improvement>(&r)) {
    throw NotMaximumError("the alternating path of edge " + std::to_string(e) +
                              " does not close",
                          apply_improvement(c, g, *imp));
  }
  return std::get<UncoloredCycle>(std::move(r));
}

std::vector<bool> edge_mask(int m, const std::vector<EdgeId>& edges) {
  std::vector<bool> mask(static_cast<std::size_t>(m), false);
  for (EdgeId e : edges) mask[static_cast<std::size_t>(e)] = true;
  return mask;
}

bool share_edge(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
  for (EdgeId x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) return true;
  }
  return false;
}

nlohmann::json edge_json(const Multigraph& g, EdgeId e) {
  return {{"id", e}, {"u", g.edge(e).u}, {"v", g.edge(e).v}};
}

MaxSubgraphCertificate with_coloring(const MaxSubgraphCertificate& cert, PartialColoring c) {
  MaxSubgraphCertificate out = cert;
  out.coloring = std::move(c);
  out.size = out.coloring.num_colored();
  return out;
}

void notify(const StepObserver& observer, std::string_view name, const PartialColoring& c,
            bool settled) {
  if (observer) observer(RecolorStep{name, c, settled});
}

// --- disjoint cycle assignment ----------------------------------------------

struct EndColors {
  Color at_u = kUncolored;
  Color at_v = kUncolored;
};

class CycleAssigner {
 public:
  CycleAssigner(const Multigraph& g, const PartialColoring& c)
      : g_(g), c_(c), delta_(c.num_colors()),
        deg_(static_cast<std::size_t>(g.num_vertices()), 0) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) deg_[static_cast<std::size_t>(v)] = g.degree(v);
  }

  std::map<EdgeId, EndColors> run() {
    std::vector<EdgeId> active = c_.uncolored_edges();
    std::map<EdgeId, EndColors> out;
    if (!active.empty()) assign(active, out);
    return out;
  }

 private:
  Color used_at(const std::map<EdgeId, EndColors>& out, EdgeId e, VertexId x) const {
    const EndColors& ec = out.at(e);
    return g_.edge(e).u == x ? ec.at_u : ec.at_v;
  }

  int count_at_max_excluding(VertexId a, VertexId b) const {
    int count = 0;
    for (VertexId x = 0; x < g_.num_vertices(); ++x) {
      if (x != a && x != b && deg_[static_cast<std::size_t>(x)] == delta_) ++count;
    }
    return count;
  }

  void assign(const std::vector<EdgeId>& active, std::map<EdgeId, EndColors>& out) {
    if (active.size() == 1) {
      const EdgeId e = active.front();
      out[e] = {missing_colors(c_, g_, g_.edge(e).u).min(), missing_colors(c_, g_, g_.edge(e).v).min()};
      return;
    }
    for (EdgeId ek : active) {
      const Edge& ed = g_.edge(ek);
      if (count_at_max_excluding(ed.u, ed.v) == 0) continue;
      std::vector<EdgeId> rest;
      for (EdgeId e : active) {
        if (e != ek) rest.push_back(e);
      }
      --deg_[static_cast<std::size_t>(ed.u)];
      --deg_[static_cast<std::size_t>(ed.v)];
      assign(rest, out);
      ++deg_[static_cast<std::size_t>(ed.u)];
      ++deg_[static_cast<std::size_t>(ed.v)];
      out[ek] = {pick_avoiding(rest, out, ed.u), pick_avoiding(rest, out, ed.v)};
      return;
    }
    assign_at_center(active, out);
  }

  Color pick_avoiding(const std::vector<EdgeId>& others, const std::map<EdgeId, EndColors>& out,
                      VertexId x) const {
    ColorSet options = missing_colors(c_, g_, x);
    for (EdgeId e : others) {
      if (g_.edge(e).touches(x)) options.erase(used_at(out, e, x));
    }
    if (options.empty()) {
      throw Error(Errc::kBadColors, "no free color left at vertex " + std::to_string(x));
    }
    return options.min();
  }

  // Every active edge meets one vertex of maximum degree.
  void assign_at_center(const std::vector<EdgeId>& active, std::map<EdgeId, EndColors>& out) {
    VertexId center = -1;
    for (VertexId x = 0; x < g_.num_vertices() && center < 0; ++x) {
      if (deg_[static_cast<std::size_t>(x)] != delta_) continue;
      if (std::all_of(active.begin(), active.end(),
                      [&](EdgeId e) { return g_.edge(e).touches(x); })) {
        center = x;
      }
    }
    if (center < 0) {
      throw Error(Errc::kBadColors, "uncolored edges have no common vertex of maximum degree");
    }
    std::vector<EdgeId> order = active;
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
      const VertexId na = g_.edge(a).other(center);
      const VertexId nb = g_.edge(b).other(center);
      return na != nb ? na < nb : a < b;
    });
    const std::vector<Color> at_center = missing_colors(c_, g_, center).to_vector();
    if (at_center.size() < order.size()) {
      throw Error(Errc::kBadColors, "too few missing colors at the center");
    }
    std::map<VertexId, std::vector<Color>> neighbour_colors;
    std::map<VertexId, std::size_t> handed_out;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const EdgeId e = order[i];
      const VertexId nb = g_.edge(e).other(center);
      auto [it, fresh] = neighbour_colors.try_emplace(nb);
      if (fresh) it->second = missing_colors(c_, g_, nb).to_vector();
      const std::size_t slot = handed_out[nb]++;
      if (slot >= it->second.size()) {
        throw Error(Errc::kBadColors, "too few missing colors at vertex " + std::to_string(nb));
      }
      const Color far = it->second[slot];
      const Color near = at_center[i];
      out[e] = g_.edge(e).u == center ? EndColors{near, far} : EndColors{far, near};
    }
  }

  const Multigraph& g_;
  const PartialColoring& c_;
  int delta_;
  std::vector<int> deg_;
};

// --- cycle extension --------------------------------------------------------

// Returns the cyclic vertex order of a connected 2-regular edge set, or an
// empty vector when the edges do not form one cycle.
std::vector<VertexId> cycle_vertices(const Multigraph& g, const std::vector<EdgeId>& edges) {
  if (edges.size() < 2) return {};
  std::map<VertexId, std::vector<EdgeId>> at;
  for (EdgeId e : edges) {
    at[g.edge(e).u].push_back(e);
    at[g.edge(e).v].push_back(e);
  }
  for (const auto& [v, es] : at) {
    if (es.size() != 2) return {};
  }
  std::vector<VertexId> order;
  const VertexId start = g.edge(edges.front()).u;
  VertexId x = start;
  EdgeId via = edges.front();
  do {
    order.push_back(x);
    x = g.edge(via).other(x);
    const auto& es = at[x];
    via = es[0] == via ? es[1] : es[0];
  } while (x != start);
  if (order.size() != at.size()) return {};
  return order;
}

class CycleExtender {
 public:
  CycleExtender(const Multigraph& g, const CycleSet& cycles, const StepObserver& observer)
      : g_(g), observer_(observer), in_f_(static_cast<std::size_t>(g.num_edges()), false),
        cycle_of_(static_cast<std::size_t>(g.num_edges()), -1) {
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      for (EdgeId e : cycles[i]) {
        in_f_[static_cast<std::size_t>(e)] = true;
        cycle_of_[static_cast<std::size_t>(e)] = static_cast<int>(i);
      }
    }
    cycles_ = cycles;
    for (auto& cyc : cycles_) std::sort(cyc.begin(), cyc.end());
  }

  PartialColoring run(PartialColoring c) {
    const int m = g_.num_edges();
    const long long cap = std::max<long long>(1, static_cast<long long>(m) * m);
    long long moves = 0;
    while (true) {
      EdgeId e = -1;
      for (EdgeId f = 0; f < m; ++f) {
        if (in_f_[static_cast<std::size_t>(f)] && !c.is_colored(f)) {
          e = f;
          break;
        }
      }
      if (e < 0) return c;
      if (++moves > cap) {
        throw Error(Errc::kIterationLimit, "cycle extension did not finish within m^2 moves");
      }
      if (auto next = shift_off_cycles(c, e)) {
        c = std::move(*next);
        notify(observer_, "shift", c, true);
        continue;
      }
      c = rotate_or_escape(c, e);
    }
  }

 private:
  bool in_f(EdgeId e) const { return in_f_[static_cast<std::size_t>(e)]; }

  // Some cycle of e leaves the cycle system: move the gap to the least such edge.
  std::optional<PartialColoring> shift_off_cycles(const PartialColoring& c, EdgeId e) const {
    const Edge& ed = g_.edge(e);
    for (Color a : missing_colors(c, g_, ed.u)) {
      for (Color b : missing_colors(c, g_, ed.v)) {
        const UncoloredCycle uc = require_cycle(c, g_, e, a, b);
        EdgeId best = -1;
        for (EdgeId f : uc.cycle) {
          if (!in_f(f) && (best < 0 || f < best)) best = f;
        }
        if (best >= 0) return shift_cycle(c, g_, uc, best);
      }
    }
    return std::nullopt;
  }

  PartialColoring rotate_or_escape(const PartialColoring& c, EdgeId e) {
    const Edge& ed = g_.edge(e);
    const ColorSet miss_u = missing_colors(c, g_, ed.u);
    const ColorSet miss_v = missing_colors(c, g_, ed.v);
    if (miss_u.size() != 1 || miss_v.size() != 1) {
      throw NotMaximumError("edge " + std::to_string(e) +
                            " misses several colors yet all its cycles stay inside the system");
    }
    const UncoloredCycle ce = require_cycle(c, g_, e, miss_u.min(), miss_v.min());
    std::vector<EdgeId> sorted = ce.cycle;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != cycles_[static_cast<std::size_t>(cycle_of_[static_cast<std::size_t>(e)])]) {
      throw NotMaximumError("the cycle of edge " + std::to_string(e) +
                            " is not a cycle of the system");
    }
    for (EdgeId f : ce.cycle) {
      PartialColoring hf = shift_cycle(c, g_, ce, f);
      if (auto next = shift_off_cycles(hf, f)) {
        notify(observer_, "rotate", hf, true);
        notify(observer_, "shift", *next, true);
        return std::move(*next);
      }
    }
    return escape(c, ce);
  }

  // The whole odd cycle C_e lies in the system and every rotation of its gap
  // stays there. Normal form: the path colors are Δ-1 and Δ and color 1 is
  // any other color. Uncolor C_e, flip a 1-Δ path leaving C_e at w, free
  // color 1 at w's cycle neighbour z, and recolor the cycle with g = wz
  // taking color 1.
  PartialColoring escape(const PartialColoring& c, const UncoloredCycle& ce) {
    const int delta = c.num_colors();
    const Color lo = std::min(ce.alpha, ce.beta);
    const Color hi = std::max(ce.alpha, ce.beta);
    Color one = kUncolored;
    for (Color x = 1; x <= delta; ++x) {
      if (x != lo && x != hi) {
        one = x;
        break;
      }
    }
    std::vector<Color> perm(static_cast<std::size_t>(delta) + 1, kUncolored);
    perm[static_cast<std::size_t>(lo)] = delta - 1;
    perm[static_cast<std::size_t>(hi)] = delta;
    perm[static_cast<std::size_t>(one)] = 1;
    Color slot = 2;
    for (Color x = 1; x <= delta; ++x) {
      if (x != lo && x != hi && x != one) perm[static_cast<std::size_t>(x)] = slot++;
    }
    std::vector<Color> back(perm.size(), kUncolored);
    for (std::size_t x = 1; x < perm.size(); ++x) back[static_cast<std::size_t>(perm[x])] = static_cast<Color>(x);
    auto report = [&](std::string_view name, const PartialColoring& state, bool settled) {
      if (observer_) notify(observer_, name, state.renamed(back), settled);
    };

    PartialColoring theta = c.renamed(perm);
    for (EdgeId f : ce.cycle) theta.clear(f);
    report("uncolor cycle", theta, false);

    // Cyclic order: vertex ring[i] is joined to ring[i+1] by ring_edges[i].
    const std::vector<VertexId>& ring = ce.vertices;
    const std::size_t len = ring.size();
    std::vector<EdgeId> ring_edges(ce.cycle.begin() + 1, ce.cycle.end());
    ring_edges.push_back(ce.edge);
    auto on_cycle = [&](VertexId x) { return std::find(ring.begin(), ring.end(), x) != ring.end(); };

    std::size_t iw = len;
    KempeChain escape_path;
    for (std::size_t i = 0; i < len; ++i) {
      const VertexId p = ring[i];
      const ColorSet miss = missing_colors(theta, g_, p);
      if (!miss.contains(delta) || miss.contains(1)) {
        throw NotMaximumError("cycle vertex " + std::to_string(p) +
                              " does not have the degree profile of a maximum subgraph");
      }
      KempeChain path = kempe_chain(theta, g_, p, 1, delta);
      if (!on_cycle(path.back())) {
        iw = i;
        escape_path = std::move(path);
        break;
      }
    }
    if (iw == len) throw NotMaximumError("no 1-Δ path leaves the cycle");

    const std::size_t prev = (iw + len - 1) % len;
    const EdgeId forward_edge = ring_edges[iw];
    const EdgeId backward_edge = ring_edges[prev];
    const bool g_forward = forward_edge < backward_edge;
    const EdgeId gw = g_forward ? forward_edge : backward_edge;
    const VertexId w = ring[iw];
    const VertexId z = g_.edge(gw).other(w);

    PartialColoring state = flip_chain(theta, g_, escape_path);
    report("flip escape path", state, false);
    const auto z_one = edge_with_color(state, g_, z, 1);
    if (!z_one) throw NotMaximumError("cycle vertex " + std::to_string(z) + " misses color 1");
    state.clear(*z_one);
    report("free color 1", state, false);
    state.set(gw, 1);
    report("color cycle edge", state, false);
    // Walk C_e - g starting with h at w.
    for (std::size_t step = 0; step + 1 < len; ++step) {
      const std::size_t idx = g_forward ? (prev + len - step) % len : (iw + step) % len;
      state.set(ring_edges[idx], step % 2 == 0 ? delta - 1 : delta);
    }
    PartialColoring out = state.renamed(back);
    if (!is_proper(out, g_) || out.num_colored() != c.num_colored()) {
      throw NotMaximumError("escape recoloring is inconsistent with a maximum subgraph");
    }
    notify(observer_, "escape", out, true);
    return out;
  }

  const Multigraph& g_;
  const StepObserver& observer_;
  std::vector<bool> in_f_;
  std::vector<int> cycle_of_;
  CycleSet cycles_;
};

// --- matching normal form ---------------------------------------------------

// Colors the uncolored edge `gap` with fan.colors[0] and shifts the fan
// colors down by one up to index r (exclusive); edges[r] becomes uncolored.
// r == -1 leaves the fan alone.
PartialColoring rotate_fan(const PartialColoring& c, const FanSequence& fan, EdgeId gap, int r) {
  PartialColoring out = c;
  if (r < 0) return out;
  out.set(gap, fan.colors[0]);
  for (int j = 0; j < r; ++j) {
    out.set(fan.edges[static_cast<std::size_t>(j)], fan.colors[static_cast<std::size_t>(j) + 1]);
  }
  out.clear(fan.edges[static_cast<std::size_t>(r)]);
  return out;
}

[[noreturn]] void report_larger(const Multigraph& g, const PartialColoring& before,
                                const PartialColoring& candidate, const std::string& how) {
  if (!is_proper(candidate, g) || candidate.num_colored() != before.num_colored() + 1) {
    throw std::logic_error("fan recoloring (" + how + ") did not produce a larger coloring");
  }
  throw NotMaximumError("fan recoloring " + how + " colors one more edge", candidate);
}

}  // namespace

bool CycleAssignment::pairwise_disjoint() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (share_edge(entries[i].cycle.cycle, entries[j].cycle.cycle)) return false;
    }
  }
  return true;
}

CycleAssignment assign_disjoint_cycles(const Multigraph& g, const MaxSubgraphCertificate& cert) {
  const PartialColoring& c = cert.coloring;
  CycleAssignment out;
  for (const auto& [e, ends] : CycleAssigner(g, c).run()) {
    CycleAssignmentEntry entry;
    entry.edge = e;
    entry.alpha = ends.at_u;
    entry.beta = ends.at_v;
    entry.cycle = require_cycle(c, g, e, ends.at_u, ends.at_v);
    out.entries.push_back(std::move(entry));
  }
  return out;
}

VerificationReport check_cycle_intersection_lemma(const Multigraph& g,
                                                  const MaxSubgraphCertificate& cert) {
  VerificationReport report;
  report.theorem = "intersection";
  const PartialColoring& c = cert.coloring;
  const std::vector<EdgeId> uncolored = c.uncolored_edges();
  if (uncolored.size() < 2) return report;

  struct Option {
    Color at_u;
    Color at_v;
    std::vector<EdgeId> edges;
  };
  std::vector<std::vector<Option>> options;
  for (EdgeId e : uncolored) {
    auto& list = options.emplace_back();
    for (Color a : missing_colors(c, g, g.edge(e).u)) {
      for (Color b : missing_colors(c, g, g.edge(e).v)) {
        list.push_back({a, b, require_cycle(c, g, e, a, b).cycle});
      }
    }
  }
  auto color_at = [&](EdgeId e, const Option& o, VertexId x) {
    return g.edge(e).u == x ? o.at_u : o.at_v;
  };

  report.outcome = Outcome::kPass;
  for (std::size_t i = 0; i < uncolored.size(); ++i) {
    for (std::size_t j = i + 1; j < uncolored.size(); ++j) {
      const EdgeId e = uncolored[i];
      const EdgeId f = uncolored[j];
      for (const Option& oe : options[i]) {
        for (const Option& of : options[j]) {
          if (!share_edge(oe.edges, of.edges)) continue;
          bool explained = false;
          for (VertexId x : {g.edge(e).u, g.edge(e).v}) {
            if (!g.edge(f).touches(x)) continue;
            const Color s = color_at(e, oe, x);
            if (s == color_at(f, of, x) && missing_colors(c, g, x).contains(s)) explained = true;
          }
          if (!explained) {
            report.outcome = Outcome::kFail;
            report.witness = {{"edges", {edge_json(g, e), edge_json(g, f)}},
                              {"colors", {{oe.at_u, oe.at_v}, {of.at_u, of.at_v}}},
                              {"coloring", coloring_json(c)}};
            return report;
          }
        }
      }
    }
  }
  return report;
}

CycleSet split_cycles(const Multigraph& g, const std::vector<EdgeId>& edges) {
  std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()), 0);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.num_edges()) throw Error(Errc::kNotTwoFactor, "edge id out of range");
    ++deg[static_cast<std::size_t>(g.edge(e).u)];
    ++deg[static_cast<std::size_t>(g.edge(e).v)];
  }
  for (int d : deg) {
    if (d != 0 && d != 2) throw Error(Errc::kNotTwoFactor, "edge set is not 2-regular");
  }
  std::vector<bool> taken(static_cast<std::size_t>(g.num_edges()), false);
  const std::vector<bool> chosen = edge_mask(g.num_edges(), edges);
  CycleSet out;
  std::vector<EdgeId> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  for (EdgeId first : sorted) {
    if (taken[static_cast<std::size_t>(first)]) continue;
    std::vector<EdgeId> cyc;
    std::vector<VertexId> stack{g.edge(first).u};
    std::set<VertexId> seen{g.edge(first).u};
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        if (!chosen[static_cast<std::size_t>(e)] || taken[static_cast<std::size_t>(e)]) continue;
        taken[static_cast<std::size_t>(e)] = true;
        cyc.push_back(e);
        const VertexId y = g.edge(e).other(x);
        if (seen.insert(y).second) stack.push_back(y);
      }
    }
    std::sort(cyc.begin(), cyc.end());
    out.push_back(std::move(cyc));
  }
  return out;
}

MaxSubgraphCertificate extend_cycles(const Multigraph& g, const CycleSet& cycles,
                                     const MaxSubgraphCertificate& cert,
                                     const StepObserver& observer) {
  if (g.max_degree() < 3) {
    throw Error(Errc::kDeltaTooSmall, "cycle extension needs maximum degree at least 3");
  }
  std::vector<int> owner(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<bool> used(static_cast<std::size_t>(g.num_edges()), false);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (EdgeId e : cycles[i]) {
      if (e < 0 || e >= g.num_edges() || used[static_cast<std::size_t>(e)]) {
        throw Error(Errc::kNotTwoFactor, "cycle " + std::to_string(i) + " repeats or misnames an edge");
      }
      used[static_cast<std::size_t>(e)] = true;
    }
    const std::vector<VertexId> ring = cycle_vertices(g, cycles[i]);
    if (ring.empty()) throw Error(Errc::kNotTwoFactor, "edge set " + std::to_string(i) + " is not a cycle");
    for (VertexId x : ring) {
      int& o = owner[static_cast<std::size_t>(x)];
      if (o >= 0) {
        throw Error(Errc::kNotVertexDisjoint, "cycles " + std::to_string(o) + " and " +
                                                  std::to_string(i) + " share vertex " +
                                                  std::to_string(x));
      }
      o = static_cast<int>(i);
    }
  }
  return with_coloring(cert, CycleExtender(g, cycles, observer).run(cert.coloring));
}

MaxSubgraphCertificate extend_two_factor(const Multigraph& g, const std::vector<EdgeId>& two_factor,
                                         const MaxSubgraphCertificate& cert,
                                         const StepObserver& observer) {
  std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()), 0);
  for (EdgeId e : two_factor) {
    if (e < 0 || e >= g.num_edges()) throw Error(Errc::kNotTwoFactor, "edge id out of range");
    ++deg[static_cast<std::size_t>(g.edge(e).u)];
    ++deg[static_cast<std::size_t>(g.edge(e).v)];
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (deg[static_cast<std::size_t>(v)] != 2) {
      throw Error(Errc::kNotTwoFactor, "vertex " + std::to_string(v) + " has degree " +
                                           std::to_string(deg[static_cast<std::size_t>(v)]) +
                                           " in the edge set");
    }
  }
  return extend_cycles(g, split_cycles(g, two_factor), cert, observer);
}

FanSequence maximal_fan(const PartialColoring& c, const Multigraph& g, VertexId center,
                        VertexId start, Color first_color) {
  FanSequence fan;
  fan.center = center;
  fan.start = start;
  const auto first = edge_with_color(c, g, center, first_color);
  if (!first) return fan;
  ColorSet used{first_color};
  fan.vertices.push_back(g.edge(*first).other(center));
  fan.edges.push_back(*first);
  fan.colors.push_back(first_color);
  while (true) {
    const ColorSet wanted = missing_colors(c, g, fan.vertices.back()) - used;
    EdgeId next = -1;
    for (EdgeId e : g.incident(center)) {
      if (c.is_colored(e) && wanted.contains(c[e]) && (next < 0 || e < next)) next = e;
    }
    if (next < 0) return fan;
    used.insert(c[next]);
    fan.vertices.push_back(g.edge(next).other(center));
    fan.edges.push_back(next);
    fan.colors.push_back(c[next]);
  }
}

int adjacent_uncolored_pairs(const Multigraph& g, const PartialColoring& c) {
  int pairs = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const int k = g.degree(v) - colored_degree(c, g, v);
    pairs += k * (k - 1) / 2;
  }
  return pairs;
}

MaxSubgraphCertificate normalize_to_matching(const Multigraph& g,
                                             const MaxSubgraphCertificate& cert,
                                             const StepObserver& observer) {
  if (!g.is_simple()) throw Error(Errc::kNotSimple, "matching normal form needs a simple graph");
  PartialColoring c = cert.coloring;
  while (true) {
    VertexId v = -1;
    EdgeId gap = -1;
    for (VertexId x = 0; x < g.num_vertices() && v < 0; ++x) {
      std::vector<EdgeId> open;
      for (EdgeId e : g.incident(x)) {
        if (!c.is_colored(e)) open.push_back(e);
      }
      if (open.size() >= 2) {
        v = x;
        gap = *std::min_element(open.begin(), open.end());
      }
    }
    if (v < 0) return with_coloring(cert, std::move(c));

    const VertexId u = g.edge(gap).other(v);
    const ColorSet miss_v = missing_colors(c, g, v);
    const ColorSet miss_u = missing_colors(c, g, u);
    const Color alpha0 = miss_v.min();
    const Color beta = miss_u.min();
    if (miss_u.contains(alpha0)) {
      PartialColoring larger = c;
      larger.set(gap, alpha0);
      report_larger(g, c, larger, "at a common missing color");
    }
    const FanSequence fan = maximal_fan(c, g, u, v, alpha0);
    const int k = fan.size() - 1;
    const VertexId vk = fan.vertices.back();
    const ColorSet miss_k = missing_colors(c, g, vk);
    if (miss_k.empty()) {
      c = rotate_fan(c, fan, gap, k);
      notify(observer, "rotate fan", c, true);
      continue;
    }
    const Color next = miss_k.min();
    if (miss_u.contains(next)) {
      PartialColoring larger = rotate_fan(c, fan, gap, k);
      larger.set(fan.edges.back(), next);
      report_larger(g, c, larger, "at the fan tip");
    }
    if (miss_k.contains(beta)) {
      PartialColoring larger = rotate_fan(c, fan, gap, k);
      larger.set(fan.edges.back(), beta);
      report_larger(g, c, larger, "at the fan tip");
    }
    const auto pos = std::find(fan.colors.begin(), fan.colors.end(), next);
    if (pos == fan.colors.end()) {
      throw std::logic_error("fan is not maximal");
    }
    const int i = static_cast<int>(pos - fan.colors.begin());
    const KempeChain path = kempe_chain(c, g, vk, beta, next);
    const VertexId before_i = i == 0 ? v : fan.vertices[static_cast<std::size_t>(i) - 1];

    int r = k;
    std::string how = "with a path avoiding the fan";
    if (path.contains_vertex(fan.vertices[static_cast<std::size_t>(i)])) {
      r = i;
      how = "with a path through the fan";
    } else if (path.contains_vertex(before_i)) {
      r = i - 1;
      how = "with a path ending before the fan";
    }
    PartialColoring larger = rotate_fan(c, fan, gap, r);
    // Rotation only touches edges at u, and the one path edge at u (if any)
    // is the fan edge the rotation just uncolored.
    for (EdgeId e : path.edges) {
      if (larger.is_colored(e)) larger.set(e, larger[e] == beta ? next : beta);
    }
    larger.set(r < 0 ? gap : fan.edges[static_cast<std::size_t>(r)], beta);
    report_larger(g, c, larger, how);
  }
}

VerificationReport check_matching_complement(const Multigraph& g,
                                             const MaxSubgraphCertificate& cert) {
  VerificationReport report;
  report.theorem = "matching";
  report.outcome = Outcome::kPass;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::vector<EdgeId> open;
    for (EdgeId e : g.incident(v)) {
      if (!cert.coloring.is_colored(e)) open.push_back(e);
    }
    if (open.size() >= 2) {
      report.outcome = Outcome::kFail;
      report.witness = {{"vertex", v}, {"uncolored", open}};
      return report;
    }
  }
  return report;
}

VerificationReport check_cut_condition(const Multigraph& g, const MaxSubgraphCertificate& cert,
                                       CutMode mode) {
  VerificationReport report;
  report.theorem = "cut";
  const int n = g.num_vertices();
  if (mode.exhaustive && n > kExhaustiveCutMaxVertices) {
    throw Error(Errc::kTooLargeForExhaustive,
                std::to_string(n) + " vertices exceed the exhaustive cut limit");
  }
  if (n == 0) return report;
  report.outcome = Outcome::kPass;
  const PartialColoring& c = cert.coloring;

  int min_h = g.num_edges() + 1;
  for (VertexId x = 0; x < n; ++x) {
    const int dh = colored_degree(c, g, x);
    const int dg = g.degree(x);
    min_h = std::min(min_h, dh);
    if (2 * dh < dg) {
      report.outcome = Outcome::kFail;
      report.witness = {{"vertex", x}, {"d_G", dg}, {"d_H", dh}};
      return report;
    }
  }
  if (2 * min_h < g.min_degree()) {
    report.outcome = Outcome::kFail;
    report.witness = {{"delta_G", g.min_degree()}, {"delta_H", min_h}};
    return report;
  }

  auto check_set = [&](const std::vector<bool>& in) {
    int cut_g = 0;
    int cut_h = 0;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const Edge& ed = g.edge(e);
      if (in[static_cast<std::size_t>(ed.u)] != in[static_cast<std::size_t>(ed.v)]) {
        ++cut_g;
        if (c.is_colored(e)) ++cut_h;
      }
    }
    if (2 * cut_h >= cut_g) return true;
    std::vector<VertexId> side;
    for (VertexId x = 0; x < n; ++x) {
      if (in[static_cast<std::size_t>(x)]) side.push_back(x);
    }
    report.outcome = Outcome::kFail;
    report.witness = {{"X", side}, {"cut_G", cut_g}, {"cut_H", cut_h}};
    return false;
  };

  std::vector<bool> in(static_cast<std::size_t>(n), false);
  if (mode.exhaustive) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      for (int x = 0; x < n; ++x) in[static_cast<std::size_t>(x)] = ((mask >> x) & 1U) != 0;
      if (!check_set(in)) return report;
    }
  } else {
    std::mt19937_64 rng(mode.seed);
    std::bernoulli_distribution coin(0.5);
    for (int s = 0; s < mode.samples; ++s) {
      for (int x = 0; x < n; ++x) in[static_cast<std::size_t>(x)] = coin(rng);
      if (!check_set(in)) return report;
    }
  }
  return report;
}

VerificationReport check_ratio_bound(const Multigraph& g, const MaxSubgraphCertificate& cert) {
  VerificationReport report;
  report.theorem = "ratio";
  const int m = g.num_edges();
  const auto gir = girth(g);
  if (!gir) {
    report.outcome = cert.size == m ? Outcome::kVacuous : Outcome::kFail;
    if (report.failed()) report.witness = {{"size", cert.size}, {"m", m}, {"girth", nullptr}};
    return report;
  }
  const long long k = *gir / 2;
  const bool ok = (2 * k + 1) * cert.size >= 2 * k * m;
  report.outcome = ok ? Outcome::kPass : Outcome::kFail;
  if (!ok) report.witness = {{"size", cert.size}, {"m", m}, {"girth", *gir}, {"k", k}};
  return report;
}

VerificationReport check_class_one(const Multigraph& g, const MaxSubgraphCertificate& cert,
                                   SearchBudget budget) {
  if (!g.is_simple()) throw Error(Errc::kNotSimple, "class I check needs a simple graph");
  VerificationReport report;
  report.theorem = "class1";
  const EdgeSubgraph h = colored_subgraph(g, cert.coloring);
  const int delta_h = h.graph.max_degree();
  const int chi_h = chromatic_index(h.graph, budget).chi;
  const bool ok = delta_h == g.max_degree() && chi_h == delta_h;
  report.outcome = ok ? Outcome::kPass : Outcome::kFail;
  if (!ok) {
    report.witness = {{"delta_G", g.max_degree()}, {"delta_H", delta_h}, {"chi_H", chi_h},
                      {"coloring", coloring_json(cert.coloring)}};
  }
  return report;
}

VerificationReport check_corollary_bounds(const Multigraph& g, const MaxSubgraphCertificate& cert,
                                          SearchBudget budget) {
  VerificationReport report;
  report.theorem = "corollary";
  const auto gir = girth(g);
  if (!gir) return report;
  const long long k = *gir / 2;
  const long long mu = g.max_multiplicity();
  const long long drop = (mu + k - 1) / k;
  const EdgeSubgraph h = colored_subgraph(g, cert.coloring);
  const long long chi_g = chromatic_index(g, budget).chi;
  const long long chi_h = chromatic_index(h.graph, budget).chi;
  const long long delta_g = g.max_degree();
  const long long delta_h = h.graph.max_degree();
  // value >= whole - drop and (2k+1)·value >= 2k·whole - (2k-2)
  auto holds = [&](long long value, long long whole) {
    return value >= whole - drop && (2 * k + 1) * value >= 2 * k * whole - (2 * k - 2);
  };
  const bool ok = holds(chi_h, chi_g) && holds(delta_h, delta_g);
  report.outcome = ok ? Outcome::kPass : Outcome::kFail;
  if (!ok) {
    report.witness = {{"k", k},           {"mu", mu},          {"chi_G", chi_g},
                      {"chi_H", chi_h},   {"delta_G", delta_g}, {"delta_H", delta_h},
                      {"coloring", coloring_json(cert.coloring)}};
  }
  return report;
}

VerificationReport check_re_equals_rprime(const Multigraph& g, SearchBudget budget) {
  VerificationReport report;
  report.theorem = "rprime";
  const ChromaticCertificate chi = chromatic_index(g, budget);
  const MaxSubgraphCertificate cert = max_delta_subgraph(g, budget);
  int rp = 0;
  try {
    rp = r_prime(g, chi, budget);
  } catch (const Error& err) {
    if (err.code() != Errc::kOutOfRange) throw;
    report.witness = {{"r_e", r_e(cert)}, {"status", "oracle out of range"}};
    return report;
  }
  report.outcome = rp == r_e(cert) ? Outcome::kPass : Outcome::kFail;
  if (report.failed()) report.witness = {{"r_e", r_e(cert)}, {"r_prime", rp}};
  return report;
}

namespace {

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    if (r > cap) return cap + 1;
  }
  return r;
}

int complement_chi(const Multigraph& g, const PartialColoring& c, SearchBudget budget) {
  std::vector<bool> keep(static_cast<std::size_t>(g.num_edges()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) keep[static_cast<std::size_t>(e)] = !c.is_colored(e);
  return chromatic_index(edge_subgraph(g, keep).graph, budget).chi;
}

}  // namespace

ConjectureRecord explore_conjecture(const Multigraph& g, const MaxSubgraphCertificate& cert,
                                    SearchBudget budget) {
  ConjectureRecord rec;
  const int delta = g.max_degree();
  rec.k = chromatic_index(g, budget).chi - delta;
  rec.best = cert.coloring;
  rec.achieved = complement_chi(g, cert.coloring, budget);
  rec.subgraphs_tried = 1;
  auto consider = [&](const PartialColoring& c) {
    ++rec.subgraphs_tried;
    const int value = complement_chi(g, c, budget);
    if (value < rec.achieved) {
      rec.achieved = value;
      rec.best = c;
    }
  };
  if (rec.achieved > rec.k && g.is_simple()) consider(normalize_to_matching(g, cert).coloring);
  // χ'(G) <= Δ + χ'(G - E(H)), so k is a floor for every maximum subgraph.
  rec.exhaustive = rec.achieved == rec.k;

  const int m = g.num_edges();
  const int r = cert.uncolored();
  if (!rec.exhaustive && binomial_capped(m, r, kConjectureMaxRemovalSets) <= kConjectureMaxRemovalSets) {
    std::vector<int> idx(static_cast<std::size_t>(r));
    std::iota(idx.begin(), idx.end(), 0);
    bool more = true;
    while (more && rec.achieved > rec.k) {
      std::vector<bool> keep(static_cast<std::size_t>(m), true);
      for (int i : idx) keep[static_cast<std::size_t>(i)] = false;
      const EdgeSubgraph rest = edge_subgraph(g, keep);
      const ColorabilityResult fit = is_t_edge_colorable(rest.graph, delta, budget);
      if (fit.colorable) {
        PartialColoring c(delta, m);
        for (EdgeId e = 0; e < rest.graph.num_edges(); ++e) {
          c.set(rest.original[static_cast<std::size_t>(e)], (*fit.witness)[e]);
        }
        consider(c);
      }
      int pos = r - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - r + pos) --pos;
      if (pos < 0) {
        more = false;
      } else {
        ++idx[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j) - 1] + 1;
      }
    }
    rec.exhaustive = true;
  }
  if (!rec.exhaustive) {
    // A maximum subgraph with k-colorable complement is the same thing as a
    // (Δ+k)-coloring with exactly r edges above Δ.
    try {
      const OverflowColoring split = min_overflow_coloring(g, delta + rec.k, budget, r);
      if (split.overflow == r) {
        PartialColoring c(delta, m);
        for (EdgeId e = 0; e < m; ++e) {
          if (split.coloring[e] <= delta) c.set(e, split.coloring[e]);
        }
        ++rec.subgraphs_tried;
        rec.best = c;
        rec.achieved = rec.k;
        rec.exhaustive = true;
      } else if (rec.achieved == rec.k + 1) {
        rec.exhaustive = true;
      }
    } catch (const Error& err) {
      if (err.code() != Errc::kBudgetExceeded) throw;
    }
  }
  return rec;
}

}  // namespace kempe
