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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace kempe {

// Dense ids in [0, n) and [0, m), assigned in construction order.
using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool touches(VertexId x) const { return x == u || x == v; }
};

/// All parallel edges joining one unordered vertex pair, `u < v`.
struct ParallelClass {
  VertexId u = 0;
  VertexId v = 0;
  std::vector<EdgeId> edges;  // ascending

  int multiplicity() const { return static_cast<int>(edges.size()); }
};

/// Loopless undirected multigraph with stable edge identities.
///
/// Immutable after construction; parallel edges keep distinct ids.
class Multigraph {
 public:
  Multigraph() = default;

  /// Throws Error(kLoopEdge) on `u == v` and Error(kBadVertex) for endpoints
  /// outside [0, n).
  static Multigraph build(int n, std::span<const std::pair<int, int>> edges);
  static Multigraph build(int n, const std::vector<std::pair<int, int>>& edges) {
    return build(n, std::span<const std::pair<int, int>>(edges));
  }

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> incident(VertexId v) const {
    return incidence_[static_cast<std::size_t>(v)];
  }

  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }
  int max_degree() const { return max_degree_; }
  int min_degree() const { return min_degree_; }

  /// Largest number of parallel edges between one pair; 0 for edgeless graphs.
  int max_multiplicity() const { return max_multiplicity_; }
  int multiplicity(VertexId u, VertexId v) const;
  bool is_simple() const { return max_multiplicity_ <= 1; }
  bool has_parallel_pair() const { return max_multiplicity_ >= 2; }

  std::span<const ParallelClass> parallel_classes() const { return classes_; }
  /// Index into parallel_classes() of the class containing `e`.
  int class_of(EdgeId e) const { return class_of_[static_cast<std::size_t>(e)]; }

  std::vector<std::pair<int, int>> edge_list() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.edge_list() == b.edge_list();
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<ParallelClass> classes_;
  std::vector<int> class_of_;
  int max_degree_ = 0;
  int min_degree_ = 0;
  int max_multiplicity_ = 0;
};

/// ∂(X): the edges with exactly one endpoint in `side`.
struct EdgeCut {
  std::vector<VertexId> side;
  std::vector<EdgeId> edges;
};

/// Throws Error(kBadVertex) if some member of `side` is not a vertex.
EdgeCut boundary(const Multigraph& g, std::span<const VertexId> side);

/// Shortest cycle length of the underlying simple graph; nullopt for forests.
std::optional<int> girth(const Multigraph& g);
/// Shortest odd cycle of the underlying simple graph; nullopt when bipartite.
std::optional<int> odd_girth(const Multigraph& g);

bool is_connected(const Multigraph& g);

/// Underlying simple graph: one edge per adjacent pair, ordered as in
/// parallel_classes().
Multigraph underlying_simple(const Multigraph& g);

/// The spanning subgraph on the edges with `keep[e]`; `original[i]` is the id
/// in the parent graph of edge `i` of `graph`.
struct EdgeSubgraph {
  Multigraph graph;
  std::vector<EdgeId> original;
};
EdgeSubgraph edge_subgraph(const Multigraph& g, const std::vector<bool>& keep);

}  // namespace kempe
