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

#include "kempe/exact.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <vector>

namespace kempe {
namespace {

using Mask = std::uint64_t;

Mask palette_bits(int t) { return ColorSet::palette(t).bits(); }

Mask lowest_bits(Mask m, int count) {
  Mask out = 0;
  for (int i = 0; i < count && m != 0; ++i) {
    const Mask low = m & (~m + 1);
    out |= low;
    m ^= low;
  }
  return out;
}

// Calls f(subset) for every subset of `items` with exactly `size` bits, in
// lexicographic order of the chosen positions. Stops early when f returns true.
template <typename F>
bool for_each_subset(Mask items, int size, F&& f) {
  std::vector<Mask> bits;
  for (Mask m = items; m != 0; m &= m - 1) bits.push_back(m & (~m + 1));
  const int n = static_cast<int>(bits.size());
  if (size > n || size < 0) return false;
  if (size == 0) return f(Mask{0});
  std::vector<int> idx(static_cast<std::size_t>(size));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Mask s = 0;
    for (int i : idx) s |= bits[static_cast<std::size_t>(i)];
    if (f(s)) return true;
    int k = size - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - size + k) --k;
    if (k < 0) return false;
    ++idx[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < size; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

[[noreturn]] void out_of_budget(const char* what, std::uint64_t limit) {
  throw Error(Errc::kBudgetExceeded,
              std::string(what) + " exceeded node budget " + std::to_string(limit));
}

// ---------------------------------------------------------------------------
// Edge-by-edge backtracking for t-edge-colorability.

class EdgeColorSearch {
 public:
  EdgeColorSearch(const Multigraph& g, int t, SearchBudget budget)
      : g_(g), t_(t), budget_(budget),
        used_(static_cast<std::size_t>(g.num_vertices()), 0),
        open_deg_(static_cast<std::size_t>(g.num_vertices()), 0),
        color_(static_cast<std::size_t>(g.num_edges()), kUncolored) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) open_deg_[static_cast<std::size_t>(v)] = g.degree(v);
  }

  ColorabilityResult run() {
    ColorabilityResult result;
    const int m = g_.num_edges();
    if (g_.max_degree() > t_) return result;
    remaining_ = m;
    if (m > 0) {
      VertexId hub = 0;
      for (VertexId v = 0; v < g_.num_vertices(); ++v) {
        if (g_.degree(v) > g_.degree(hub)) hub = v;
      }
      Color next = 1;
      for (EdgeId e : g_.incident(hub)) assign(e, next++);
    }
    result.colorable = search();
    result.nodes = nodes_;
    if (result.colorable) {
      PartialColoring c(t_, m);
      for (EdgeId e = 0; e < m; ++e) c.set(e, color_[static_cast<std::size_t>(e)]);
      result.witness = std::move(c);
    }
    return result;
  }

 private:
  void assign(EdgeId e, Color c) {
    const Edge& ed = g_.edge(e);
    const Mask bit = Mask{1} << c;
    used_[static_cast<std::size_t>(ed.u)] |= bit;
    used_[static_cast<std::size_t>(ed.v)] |= bit;
    --open_deg_[static_cast<std::size_t>(ed.u)];
    --open_deg_[static_cast<std::size_t>(ed.v)];
    ever_ |= bit;
    color_[static_cast<std::size_t>(e)] = c;
    --remaining_;
  }

  void unassign(EdgeId e, Color c) {
    const Edge& ed = g_.edge(e);
    const Mask bit = Mask{1} << c;
    used_[static_cast<std::size_t>(ed.u)] &= ~bit;
    used_[static_cast<std::size_t>(ed.v)] &= ~bit;
    ++open_deg_[static_cast<std::size_t>(ed.u)];
    ++open_deg_[static_cast<std::size_t>(ed.v)];
    color_[static_cast<std::size_t>(e)] = kUncolored;
    ++remaining_;
  }

  // Each color class adds a matching on the vertices that miss it and still
  // have uncolored edges.
  bool capacity_ok() const {
    int capacity = 0;
    for (Color c = 1; c <= t_; ++c) {
      int free_ends = 0;
      for (VertexId v = 0; v < g_.num_vertices(); ++v) {
        const auto i = static_cast<std::size_t>(v);
        if (open_deg_[i] > 0 && ((used_[i] >> c) & 1U) == 0) ++free_ends;
      }
      capacity += free_ends / 2;
      if (capacity >= remaining_) return true;
    }
    return capacity >= remaining_;
  }

  bool search() {
    if (++nodes_ > budget_.node_limit) out_of_budget("edge-colorability search", budget_.node_limit);
    if (remaining_ == 0) return true;
    if (!capacity_ok()) return false;

    const Mask palette = palette_bits(t_);
    EdgeId pick = -1;
    int pick_options = t_ + 1;
    Mask pick_avail = 0;
    for (EdgeId e = 0; e < g_.num_edges(); ++e) {
      if (color_[static_cast<std::size_t>(e)] != kUncolored) continue;
      const Edge& ed = g_.edge(e);
      const Mask avail = palette & ~used_[static_cast<std::size_t>(ed.u)] &
                         ~used_[static_cast<std::size_t>(ed.v)];
      const int options = std::popcount(avail);
      if (options < pick_options) {
        pick = e;
        pick_options = options;
        pick_avail = avail;
        if (options == 0) return false;
      }
    }

    const Mask saved_ever = ever_;
    bool fresh_tried = false;
    for (Mask m = pick_avail; m != 0; m &= m - 1) {
      const Color c = std::countr_zero(m);
      const bool fresh = ((ever_ >> c) & 1U) == 0;
      if (fresh) {
        if (fresh_tried) continue;
        fresh_tried = true;
      }
      assign(pick, c);
      if (search()) return true;
      unassign(pick, c);
      ever_ = saved_ever;
    }
    return false;
  }

  const Multigraph& g_;
  int t_;
  SearchBudget budget_;
  std::vector<Mask> used_;
  std::vector<int> open_deg_;
  std::vector<Color> color_;
  Mask ever_ = 0;
  int remaining_ = 0;
  std::uint64_t nodes_ = 0;
};

// ---------------------------------------------------------------------------
// Shared machinery for searches over parallel classes.

struct ClassOrder {
  std::vector<int> order;  // indices into g.parallel_classes()
};

// Vertices are ranked by BFS from a maximum-degree vertex; a class is visited
// when its later endpoint is reached, so each vertex closes as early as
// possible.
ClassOrder bfs_class_order(const Multigraph& g) {
  const int n = g.num_vertices();
  std::vector<int> rank(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int round = 0; round < n; ++round) {
    VertexId root = -1;
    for (VertexId v = 0; v < n; ++v) {
      if (rank[static_cast<std::size_t>(v)] >= 0) continue;
      if (root < 0 || g.degree(v) > g.degree(root)) root = v;
    }
    if (root < 0) break;
    std::vector<VertexId> queue{root};
    rank[static_cast<std::size_t>(root)] = next++;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId x = queue[head];
      std::vector<VertexId> nbrs;
      for (EdgeId e : g.incident(x)) nbrs.push_back(g.edge(e).other(x));
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      for (VertexId y : nbrs) {
        if (rank[static_cast<std::size_t>(y)] >= 0) continue;
        rank[static_cast<std::size_t>(y)] = next++;
        queue.push_back(y);
      }
    }
  }
  const auto classes = g.parallel_classes();
  ClassOrder out;
  out.order.resize(classes.size());
  std::iota(out.order.begin(), out.order.end(), 0);
  auto key = [&](int i) {
    const auto& c = classes[static_cast<std::size_t>(i)];
    const int a = rank[static_cast<std::size_t>(c.u)];
    const int b = rank[static_cast<std::size_t>(c.v)];
    return std::pair{std::max(a, b), std::min(a, b)};
  };
  std::stable_sort(out.order.begin(), out.order.end(),
                   [&](int x, int y) { return key(x) < key(y); });
  return out;
}

PartialColoring coloring_from_sets(const Multigraph& g, int t, const std::vector<Mask>& sets) {
  PartialColoring c(t, g.num_edges());
  const auto classes = g.parallel_classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::size_t slot = 0;
    for (Mask m = sets[i]; m != 0; m &= m - 1) {
      c.set(classes[i].edges[slot++], std::countr_zero(m));
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Maximum Δ-edge-colorable subgraph.

class MaxSubgraphSearch {
 public:
  MaxSubgraphSearch(const Multigraph& g, SearchBudget budget)
      : g_(g), budget_(budget), delta_(g.max_degree()), palette_(palette_bits(delta_)),
        classes_(g.parallel_classes()), order_(bfs_class_order(g).order),
        used_(static_cast<std::size_t>(g.num_vertices()), 0),
        rem_(static_cast<std::size_t>(g.num_vertices()), 0),
        chosen_(classes_.size(), 0) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) rem_[static_cast<std::size_t>(v)] = g.degree(v);
  }

  MaxSubgraphCertificate run() {
    PartialColoring seed = greedy_kempe_coloring(g_);
    best_ = seed.num_colored();
    best_sets_.assign(classes_.size(), 0);
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      for (EdgeId e : classes_[i].edges) {
        if (seed.is_colored(e)) best_sets_[i] |= Mask{1} << seed[e];
      }
    }
    ceiling_ = std::min(bound(0, 0), odd_set_bound());
    if (best_ < ceiling_) search(0, 0);

    MaxSubgraphCertificate cert;
    cert.coloring = coloring_from_sets(g_, delta_, best_sets_);
    cert.size = best_;
    cert.optimal = true;
    cert.nodes = nodes_;
    return cert;
  }

 private:
  // Each odd vertex set X spans at most Δ(|X|-1)/2 colored edges.
  int odd_set_bound() const {
    const int n = g_.num_vertices();
    const int m = g_.num_edges();
    if (n > 12) return m;
    int best = m;
    for (std::uint32_t x = 0; x < (1U << n); ++x) {
      const int size = std::popcount(x);
      if (size < 3 || size % 2 == 0) continue;
      int inside = 0;
      for (const Edge& e : g_.edges()) {
        if (((x >> e.u) & 1U) != 0 && ((x >> e.v) & 1U) != 0) ++inside;
      }
      const int cap = delta_ * (size - 1) / 2;
      if (inside > cap) best = std::min(best, m - (inside - cap));
    }
    return best;
  }

  int bound(std::size_t pos, int count) const {
    int by_class = 0;
    for (std::size_t i = pos; i < order_.size(); ++i) {
      const auto& cls = classes_[static_cast<std::size_t>(order_[i])];
      const Mask avail = palette_ & ~used_[static_cast<std::size_t>(cls.u)] &
                         ~used_[static_cast<std::size_t>(cls.v)];
      by_class += std::min(cls.multiplicity(), std::popcount(avail));
    }
    int ends = 0;
    for (std::size_t v = 0; v < used_.size(); ++v) {
      ends += std::min(rem_[v], std::popcount(palette_ & ~used_[v]));
    }
    int by_color = 0;
    for (Color c = 1; c <= delta_; ++c) {
      int free_ends = 0;
      for (std::size_t v = 0; v < used_.size(); ++v) {
        if (rem_[v] > 0 && ((used_[v] >> c) & 1U) == 0) ++free_ends;
      }
      by_color += free_ends / 2;
    }
    return count + std::min({by_class, ends / 2, by_color});
  }

  void search(std::size_t pos, int count) {
    if (++nodes_ > budget_.node_limit) out_of_budget("maximum subgraph search", budget_.node_limit);
    if (pos == order_.size()) {
      if (count > best_) {
        best_ = count;
        best_sets_ = chosen_;
      }
      return;
    }
    if (bound(pos, count) <= best_) return;

    const auto ci = static_cast<std::size_t>(order_[pos]);
    const auto& cls = classes_[ci];
    const auto u = static_cast<std::size_t>(cls.u);
    const auto v = static_cast<std::size_t>(cls.v);
    const int mu = cls.multiplicity();
    const Mask avail = palette_ & ~used_[u] & ~used_[v];
    const Mask fresh_all = palette_ & ~ever_;
    const Mask old = avail & ever_;
    const int n_fresh = std::popcount(fresh_all);
    const int n_old = std::popcount(old);

    rem_[u] -= mu;
    rem_[v] -= mu;
    const Mask saved_ever = ever_;
    const int top = std::min(mu, n_old + n_fresh);
    for (int s = top; s >= 0 && best_ < ceiling_; --s) {
      for (int j = std::min(s, n_fresh); j >= 0 && best_ < ceiling_; --j) {
        if (s - j > n_old) break;
        const Mask fresh = lowest_bits(fresh_all, j);
        for_each_subset(old, s - j, [&](Mask part) {
          const Mask set = part | fresh;
          used_[u] |= set;
          used_[v] |= set;
          ever_ |= set;
          chosen_[ci] = set;
          search(pos + 1, count + s);
          used_[u] &= ~set;
          used_[v] &= ~set;
          ever_ = saved_ever;
          chosen_[ci] = 0;
          return best_ >= ceiling_;
        });
      }
    }
    rem_[u] += mu;
    rem_[v] += mu;
  }

  const Multigraph& g_;
  SearchBudget budget_;
  int delta_;
  Mask palette_;
  std::span<const ParallelClass> classes_;
  std::vector<int> order_;
  std::vector<Mask> used_;
  std::vector<int> rem_;
  std::vector<Mask> chosen_;
  std::vector<Mask> best_sets_;
  Mask ever_ = 0;
  int best_ = 0;
  int ceiling_ = 0;
  std::uint64_t nodes_ = 0;
};

// ---------------------------------------------------------------------------
// All edges colored with Δ main colors and the remaining overflow colors;
// minimize the number of overflow edges.

class OverflowSearch {
 public:
  OverflowSearch(const Multigraph& g, int palette, SearchBudget budget)
      : g_(g), budget_(budget), delta_(g.max_degree()), chi_(palette),
        main_(palette_bits(delta_)), over_(palette_bits(palette) & ~palette_bits(delta_)),
        classes_(g.parallel_classes()), order_(bfs_class_order(g).order),
        used_(static_cast<std::size_t>(g.num_vertices()), 0),
        rem_(static_cast<std::size_t>(g.num_vertices()), 0),
        chosen_(classes_.size(), 0) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) rem_[static_cast<std::size_t>(v)] = g.degree(v);
  }

  OverflowColoring run(int stop_at) {
    best_ = g_.num_edges() + 1;
    floor_ = std::max(lower_bound(0), stop_at);
    if (floor_ >= 0) search(0, 0);
    if (best_ > g_.num_edges()) {
      throw Error(Errc::kOutOfRange, "no " + std::to_string(chi_) + "-edge-coloring found");
    }
    OverflowColoring out;
    out.overflow = best_;
    out.coloring = coloring_from_sets(g_, chi_, best_sets_);
    out.nodes = nodes_;
    return out;
  }

 private:
  int remaining_edges() const {
    int total = 0;
    for (int r : rem_) total += r;
    return total / 2;
  }

  // Returns -1 when the remaining classes cannot all be colored.
  int lower_bound(int overflow) const {
    int excess = 0;
    for (std::size_t v = 0; v < used_.size(); ++v) {
      const int free_main = std::popcount(main_ & ~used_[v]);
      const int free_over = std::popcount(over_ & ~used_[v]);
      if (rem_[v] > free_main + free_over) return -1;
      excess += std::max(0, rem_[v] - free_main);
    }
    const int remaining = remaining_edges();
    int main_cap = 0;
    int all_cap = 0;
    for (Color c = 1; c <= chi_; ++c) {
      int free_ends = 0;
      for (std::size_t v = 0; v < used_.size(); ++v) {
        if (rem_[v] > 0 && ((used_[v] >> c) & 1U) == 0) ++free_ends;
      }
      all_cap += free_ends / 2;
      if (c <= delta_) main_cap += free_ends / 2;
    }
    if (all_cap < remaining) return -1;
    return overflow + std::max((excess + 1) / 2, remaining - main_cap);
  }

  void search(std::size_t pos, int overflow) {
    if (++nodes_ > budget_.node_limit) out_of_budget("overflow search", budget_.node_limit);
    if (best_ <= floor_) return;
    if (pos == order_.size()) {
      if (overflow < best_) {
        best_ = overflow;
        best_sets_ = chosen_;
      }
      return;
    }
    const int lb = lower_bound(overflow);
    if (lb < 0 || lb >= best_) return;

    const auto ci = static_cast<std::size_t>(order_[pos]);
    const auto& cls = classes_[ci];
    const auto u = static_cast<std::size_t>(cls.u);
    const auto v = static_cast<std::size_t>(cls.v);
    const int mu = cls.multiplicity();
    const Mask avail = ~used_[u] & ~used_[v];
    const Mask main_fresh = main_ & ~ever_;
    const Mask over_fresh = over_ & ~ever_;
    const Mask main_old = main_ & avail & ever_;
    const Mask over_old = over_ & avail & ever_;
    const int main_max = std::popcount(main_old) + std::popcount(main_fresh);
    const int over_max = std::popcount(over_old) + std::popcount(over_fresh);

    rem_[u] -= mu;
    rem_[v] -= mu;
    const Mask saved_ever = ever_;
    for (int s = std::min(mu, main_max); s >= 0 && mu - s <= over_max; --s) {
      const int t = mu - s;
      if (overflow + t >= best_) break;
      choose(main_old, main_fresh, s, [&](Mask main_set) {
        return choose(over_old, over_fresh, t, [&](Mask over_set) {
          const Mask set = main_set | over_set;
          used_[u] |= set;
          used_[v] |= set;
          ever_ |= set;
          chosen_[ci] = set;
          search(pos + 1, overflow + t);
          used_[u] &= ~set;
          used_[v] &= ~set;
          ever_ = saved_ever;
          chosen_[ci] = 0;
          return best_ <= floor_;
        });
      });
      if (best_ <= floor_) break;
    }
    rem_[u] += mu;
    rem_[v] += mu;
  }

  // Subsets of size `size` drawn from `old` plus a prefix of `fresh`.
  template <typename F>
  static bool choose(Mask old, Mask fresh, int size, F&& f) {
    const int n_fresh = std::popcount(fresh);
    for (int j = std::min(size, n_fresh); j >= 0; --j) {
      if (size - j > std::popcount(old)) break;
      const Mask prefix = lowest_bits(fresh, j);
      if (for_each_subset(old, size - j, [&](Mask part) { return f(part | prefix); })) {
        return true;
      }
    }
    return false;
  }

  const Multigraph& g_;
  SearchBudget budget_;
  int delta_;
  int chi_;
  Mask main_;
  Mask over_;
  std::span<const ParallelClass> classes_;
  std::vector<int> order_;
  std::vector<Mask> used_;
  std::vector<int> rem_;
  std::vector<Mask> chosen_;
  std::vector<Mask> best_sets_;
  Mask ever_ = 0;
  int best_ = 0;
  int floor_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ColorabilityResult is_t_edge_colorable(const Multigraph& g, int t, SearchBudget budget) {
  if (t < 1 || t > kMaxColors) {
    throw Error(Errc::kBadColors, "palette size " + std::to_string(t) + " unsupported");
  }
  return EdgeColorSearch(g, t, budget).run();
}

ChromaticCertificate chromatic_index(const Multigraph& g, SearchBudget budget) {
  ChromaticCertificate cert;
  cert.delta = g.max_degree();
  if (g.num_edges() == 0) {
    cert.witness = PartialColoring(0, 0);
    return cert;
  }
  std::uint64_t last_refutation = 0;
  for (int t = cert.delta; t <= kMaxColors; ++t) {
    ColorabilityResult r = is_t_edge_colorable(g, t, budget);
    if (r.colorable) {
      cert.chi = t;
      cert.witness = std::move(*r.witness);
      cert.refutation_nodes = last_refutation;
      return cert;
    }
    last_refutation = r.nodes;
  }
  throw Error(Errc::kOutOfRange, "chromatic index exceeds the supported palette");
}

PartialColoring greedy_kempe_coloring(const Multigraph& g) {
  const int delta = g.max_degree();
  PartialColoring c(delta, g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const ColorSet avail = missing_colors(c, g, g.edge(e).u) & missing_colors(c, g, g.edge(e).v);
    if (!avail.empty()) c.set(e, avail.min());
  }
  bool improved = true;
  while (improved) {
    improved = false;
    for (EdgeId e : c.uncolored_edges()) {
      for (Color a : missing_colors(c, g, g.edge(e).u)) {
        for (Color b : missing_colors(c, g, g.edge(e).v)) {
          auto r = uncolored_cycle(c, g, e, a, b);
          if (auto* imp = std::get_if<Improvement>(&r)) {
            c = apply_improvement(c, g, *imp);
            improved = true;
            break;
          }
        }
        if (improved) break;
      }
      if (improved) break;
    }
  }
  return c;
}

MaxSubgraphCertificate max_delta_subgraph(const Multigraph& g, SearchBudget budget) {
  if (g.num_edges() == 0) {
    MaxSubgraphCertificate cert;
    cert.coloring = PartialColoring(0, 0);
    cert.optimal = true;
    return cert;
  }
  return MaxSubgraphSearch(g, budget).run();
}

int r_prime(const Multigraph& g, const ChromaticCertificate& chi, SearchBudget budget) {
  if (!chi.class_two()) return 0;
  if (chi.chi > kRPrimeMaxChi || g.num_edges() > kRPrimeMaxEdges) {
    throw Error(Errc::kOutOfRange, "r' oracle supports chi <= " + std::to_string(kRPrimeMaxChi) +
                                       " and m <= " + std::to_string(kRPrimeMaxEdges));
  }
  return min_overflow_coloring(g, chi.chi, budget).overflow;
}

OverflowColoring min_overflow_coloring(const Multigraph& g, int palette, SearchBudget budget,
                                       int stop_at) {
  if (palette < g.max_degree() || palette > kMaxColors) {
    throw Error(Errc::kBadColors, "palette " + std::to_string(palette) + " out of range");
  }
  if (g.num_edges() == 0) {
    OverflowColoring out;
    out.coloring = PartialColoring(palette, 0);
    return out;
  }
  return OverflowSearch(g, palette, budget).run(stop_at);
}

int r_prime(const Multigraph& g, SearchBudget budget) {
  return r_prime(g, chromatic_index(g, budget), budget);
}

}  // namespace kempe
