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

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "kempe/color_set.hpp"
#include "kempe/error.hpp"
#include "kempe/multigraph.hpp"

namespace kempe {

/// Assignment of colors 1..t to a subset of the edges of a graph.
///
/// A value type: recoloring operations take a coloring and return a new one,
/// so callers can hold on to earlier states. Properness is not enforced by
/// the setters; use is_proper().
class PartialColoring {
 public:
  PartialColoring() = default;
  PartialColoring(int num_colors, int num_edges);

  int num_colors() const { return t_; }
  int num_edges() const { return static_cast<int>(colors_.size()); }

  Color color(EdgeId e) const { return colors_[static_cast<std::size_t>(e)]; }
  Color operator[](EdgeId e) const { return color(e); }
  bool is_colored(EdgeId e) const { return color(e) != kUncolored; }

  void set(EdgeId e, Color c) { colors_[static_cast<std::size_t>(e)] = c; }
  void clear(EdgeId e) { set(e, kUncolored); }

  int num_colored() const;
  std::vector<EdgeId> colored_edges() const;
  std::vector<EdgeId> uncolored_edges() const;

  /// Applies a color renaming: color c becomes perm[c]. perm[0] must be 0.
  PartialColoring renamed(const std::vector<Color>& perm) const;

  friend bool operator==(const PartialColoring&, const PartialColoring&) = default;

 private:
  int t_ = 0;
  std::vector<Color> colors_;
};

/// C(v): colors on the colored edges at v.
ColorSet present_colors(const PartialColoring& c, const Multigraph& g, VertexId v);
/// C̄(v) = {1..t} \ C(v).
ColorSet missing_colors(const PartialColoring& c, const Multigraph& g, VertexId v);
int colored_degree(const PartialColoring& c, const Multigraph& g, VertexId v);

/// The edge at v colored `color`, if any (the first one if c is improper).
std::optional<EdgeId> edge_with_color(const PartialColoring& c, const Multigraph& g,
                                      VertexId v, Color color);

/// No vertex sees a repeated color and every color lies in 1..t.
bool is_proper(const PartialColoring& c, const Multigraph& g);

/// Colored subgraph H as a standalone graph (ids remapped).
EdgeSubgraph colored_subgraph(const Multigraph& g, const PartialColoring& c);

enum class ChainKind { kPath, kEvenCycle };

/// Maximal connected component of the subgraph induced by colors α and β.
///
/// `vertices` has edges.size() + 1 entries and edges[i] joins vertices[i] and
/// vertices[i + 1]. For an even cycle the first and last vertex coincide. A
/// path that starts at an endpoint is listed from that endpoint.
struct KempeChain {
  Color alpha = kUncolored;
  Color beta = kUncolored;
  ChainKind kind = ChainKind::kPath;
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;

  bool empty() const { return edges.empty(); }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  bool contains_vertex(VertexId v) const;
};

/// The α-β chain through `start`. If `start` misses both colors the result is
/// an empty path anchored at `start`. Throws Error(kBadColors) if α == β or a
/// color lies outside 1..t.
KempeChain kempe_chain(const PartialColoring& c, const Multigraph& g, VertexId start,
                       Color alpha, Color beta);

/// Swaps α and β on the chain edges. Throws Error(kStaleChain) if the chain
/// edges no longer alternate between α and β under `c`.
PartialColoring flip_chain(const PartialColoring& c, const Multigraph& g,
                           const KempeChain& chain);

/// The odd cycle formed by an uncolored edge e = (u, v) and the α-β path that
/// leaves v and closes at u, where α is missing at u and β missing at v.
///
/// `cycle[0] == edge` and cycle[1..] lists the path from v to u; `vertices`
/// lists the path vertices v .. u.
struct UncoloredCycle {
  EdgeId edge = 0;
  VertexId u = 0;
  VertexId v = 0;
  Color alpha = kUncolored;
  Color beta = kUncolored;
  std::vector<EdgeId> cycle;
  std::vector<VertexId> vertices;

  int length() const { return static_cast<int>(cycle.size()); }
  bool contains(EdgeId e) const;
};

/// A way to color one more edge: flip `chain` (possibly empty), then give
/// `edge` the color `color`.
struct Improvement {
  EdgeId edge = 0;
  KempeChain chain;
  Color color = kUncolored;
};

using CycleOrImprovement = std::variant<UncoloredCycle, Improvement>;

/// Builds C^e_{α,β} for the uncolored edge e with endpoints (u, v) as stored in
/// the graph. If the colored subgraph is not maximum the α-β path may fail to
/// close at u; an Improvement is returned instead.
///
/// Throws Error(kBadColors) unless e is uncolored, α ∈ C̄(u) and β ∈ C̄(v).
CycleOrImprovement uncolored_cycle(const PartialColoring& c, const Multigraph& g, EdgeId e,
                                   Color alpha, Color beta);

PartialColoring apply_improvement(const PartialColoring& c, const Multigraph& g,
                                  const Improvement& imp);

/// Moves the uncolored edge of `uc` to `new_uncolored`, recoloring the rest of
/// the cycle alternately with α and β. Edges after `new_uncolored` on the
/// path keep their colors. Throws Error(kEdgeNotOnCycle) or Error(kStaleChain).
PartialColoring shift_cycle(const PartialColoring& c, const Multigraph& g,
                            const UncoloredCycle& uc, EdgeId new_uncolored);

/// Re-checks every structural property of an uncolored cycle against `c`:
/// odd length, closed walk through e, alternating path colors, α ∈ C̄(u) ∩ C(v),
/// β ∈ C̄(v) ∩ C(u).
bool is_valid_uncolored_cycle(const PartialColoring& c, const Multigraph& g,
                              const UncoloredCycle& uc);

/// Raised when a procedure that requires a maximum colored subgraph finds a
/// way to color more edges. When available, `improved()` is a proper
/// coloring with more colored edges than the input.
class NotMaximumError : public Error {
 public:
  explicit NotMaximumError(const std::string& what,
                           std::optional<PartialColoring> improved = std::nullopt)
      : Error(Errc::kNotMaximum, what), improved_(std::move(improved)) {}

  const std::optional<PartialColoring>& improved() const { return improved_; }

 private:
  std::optional<PartialColoring> improved_;
};

}  // namespace kempe
