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

#include "kempe/multigraph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <string>

#include "kempe/error.hpp"

namespace kempe {

Multigraph Multigraph::build(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) throw Error(Errc::kBadVertex, "negative vertex count");
  Multigraph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  g.incidence_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(Errc::kBadVertex, "endpoint (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") outside [0," +
                                        std::to_string(n) + ")");
    }
    if (u == v) throw Error(Errc::kLoopEdge, "loop at vertex " + std::to_string(u));
    const auto id = static_cast<EdgeId>(g.edges_.size());
    g.edges_.push_back({u, v});
    g.incidence_[static_cast<std::size_t>(u)].push_back(id);
    g.incidence_[static_cast<std::size_t>(v)].push_back(id);
  }

  std::map<std::pair<int, int>, std::size_t> index;
  g.class_of_.resize(g.edges_.size());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    index.try_emplace({std::min(ed.u, ed.v), std::max(ed.u, ed.v)}, 0);
  }
  for (auto& [key, slot] : index) {
    slot = g.classes_.size();
    g.classes_.push_back({key.first, key.second, {}});
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const std::size_t c = index.at({std::min(ed.u, ed.v), std::max(ed.u, ed.v)});
    g.classes_[c].edges.push_back(e);
    g.class_of_[static_cast<std::size_t>(e)] = static_cast<int>(c);
  }

  g.max_degree_ = 0;
  g.min_degree_ = n == 0 ? 0 : std::numeric_limits<int>::max();
  for (VertexId v = 0; v < n; ++v) {
    g.max_degree_ = std::max(g.max_degree_, g.degree(v));
    g.min_degree_ = std::min(g.min_degree_, g.degree(v));
  }
  for (const auto& cls : g.classes_) {
    g.max_multiplicity_ = std::max(g.max_multiplicity_, cls.multiplicity());
  }
  return g;
}

int Multigraph::multiplicity(VertexId u, VertexId v) const {
  int count = 0;
  for (EdgeId e : incident(u)) {
    if (edge(e).other(u) == v) ++count;
  }
  return count;
}

std::vector<std::pair<int, int>> Multigraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

EdgeCut boundary(const Multigraph& g, std::span<const VertexId> side) {
  std::vector<char> in(static_cast<std::size_t>(g.num_vertices()), 0);
  EdgeCut cut;
  for (VertexId v : side) {
    if (v < 0 || v >= g.num_vertices()) {
      throw Error(Errc::kBadVertex, "cut side contains " + std::to_string(v));
    }
    if (!in[static_cast<std::size_t>(v)]) cut.side.push_back(v);
    in[static_cast<std::size_t>(v)] = 1;
  }
  std::sort(cut.side.begin(), cut.side.end());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (in[static_cast<std::size_t>(ed.u)] != in[static_cast<std::size_t>(ed.v)]) {
      cut.edges.push_back(e);
    }
  }
  return cut;
}

namespace {

std::vector<std::vector<VertexId>> simple_adjacency(const Multigraph& g) {
  std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(g.num_vertices()));
  for (const ParallelClass& cls : g.parallel_classes()) {
    adj[static_cast<std::size_t>(cls.u)].push_back(cls.v);
    adj[static_cast<std::size_t>(cls.v)].push_back(cls.u);
  }
  return adj;
}

// BFS from every root. A non-tree edge (x, y) closes a cycle of length at most
// dist[x] + dist[y] + 1, and the minimum over all roots is attained exactly.
// For odd cycles only edges with dist[x] == dist[y] qualify.
std::optional<int> shortest_cycle(const Multigraph& g, bool odd_only) {
  const auto adj = simple_adjacency(g);
  const int n = g.num_vertices();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (VertexId root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<VertexId> queue;
    dist[static_cast<std::size_t>(root)] = 0;
    queue.push(root);
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop();
      const int dx = dist[static_cast<std::size_t>(x)];
      for (VertexId y : adj[static_cast<std::size_t>(x)]) {
        const int dy = dist[static_cast<std::size_t>(y)];
        if (dy < 0) {
          dist[static_cast<std::size_t>(y)] = dx + 1;
          parent[static_cast<std::size_t>(y)] = x;
          queue.push(y);
        } else if (parent[static_cast<std::size_t>(x)] != y) {
          if (odd_only && dx != dy) continue;
          best = std::min(best, dx + dy + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

}  // namespace

std::optional<int> girth(const Multigraph& g) { return shortest_cycle(g, false); }

std::optional<int> odd_girth(const Multigraph& g) { return shortest_cycle(g, true); }

bool is_connected(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(x)) {
      const VertexId y = g.edge(e).other(x);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

Multigraph underlying_simple(const Multigraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (const ParallelClass& cls : g.parallel_classes()) edges.emplace_back(cls.u, cls.v);
  return Multigraph::build(g.num_vertices(), edges);
}

EdgeSubgraph edge_subgraph(const Multigraph& g, const std::vector<bool>& keep) {
  EdgeSubgraph sub;
  std::vector<std::pair<int, int>> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!keep[static_cast<std::size_t>(e)]) continue;
    edges.emplace_back(g.edge(e).u, g.edge(e).v);
    sub.original.push_back(e);
  }
  sub.graph = Multigraph::build(g.num_vertices(), edges);
  return sub;
}

}  // namespace kempe
