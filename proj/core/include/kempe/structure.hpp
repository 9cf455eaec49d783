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
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/exact.hpp"
#include "kempe/multigraph.hpp"
#include "kempe/report.hpp"

namespace kempe {

// ---------------------------------------------------------------------------
// Odd cycles of uncolored edges

struct CycleAssignmentEntry {
  EdgeId edge = 0;
  Color alpha = kUncolored;  // missing at graph.edge(edge).u
  Color beta = kUncolored;   // missing at graph.edge(edge).v
  UncoloredCycle cycle;

  /// The color this entry uses at endpoint x of its edge.
  Color color_at(const Multigraph& g, VertexId x) const {
    return g.edge(edge).u == x ? alpha : beta;
  }
};

struct CycleAssignment {
  std::vector<CycleAssignmentEntry> entries;  // ordered by edge id

  /// Every pair of cycles is edge-disjoint.
  bool pairwise_disjoint() const;
};

/// One odd cycle per uncolored edge, pairwise edge-disjoint.
///
/// Follows the induction on the number of uncolored edges: an uncolored edge
/// whose removal keeps the maximum degree is peeled off and colored last,
/// avoiding the colors its neighbours already use at the shared endpoints;
/// otherwise every uncolored edge meets one vertex of maximum degree and its
/// missing colors are handed out directly.
///
/// Throws NotMaximumError if some cycle fails to close.
CycleAssignment assign_disjoint_cycles(const Multigraph& g, const MaxSubgraphCertificate& cert);

/// For every pair of uncolored edges and every admissible color choice whose
/// cycles share an edge, checks that the two edges meet at a vertex where
/// both use the same (missing) color.
VerificationReport check_cycle_intersection_lemma(const Multigraph& g,
                                                  const MaxSubgraphCertificate& cert);

// ---------------------------------------------------------------------------
// Recoloring procedures

/// One intermediate state of a recoloring procedure. `settled` is set when a
/// move has completed; the colored-edge count is back to its starting value
/// at that point.
struct RecolorStep {
  std::string_view name;
  const PartialColoring& coloring;
  bool settled = false;
};
using StepObserver = std::function<void(const RecolorStep&)>;

/// Edge sets of cycles. A cycle may be a pair of parallel edges.
using CycleSet = std::vector<std::vector<EdgeId>>;

/// A maximum certificate of the same size whose colored subgraph contains
/// every edge of `cycles`. Requires Δ >= 3 and pairwise vertex-disjoint
/// cycles.
///
/// Throws Error(kDeltaTooSmall), Error(kNotVertexDisjoint), Error(kNotTwoFactor)
/// when an edge set is not a cycle, Error(kIterationLimit) after m² moves, and
/// NotMaximumError.
MaxSubgraphCertificate extend_cycles(const Multigraph& g, const CycleSet& cycles,
                                     const MaxSubgraphCertificate& cert,
                                     const StepObserver& observer = {});

/// extend_cycles() for a spanning set of cycles covering every vertex with
/// degree 2. Throws Error(kNotTwoFactor) otherwise.
MaxSubgraphCertificate extend_two_factor(const Multigraph& g, const std::vector<EdgeId>& two_factor,
                                         const MaxSubgraphCertificate& cert,
                                         const StepObserver& observer = {});

/// Splits an edge set in which every touched vertex has degree 2 into its
/// cycles. Throws Error(kNotTwoFactor) if the edge set is not 2-regular.
CycleSet split_cycles(const Multigraph& g, const std::vector<EdgeId>& edges);

/// Fan at `center` grown from the uncolored edge (center, start):
/// vertices[i] is joined to the center by edges[i], colored colors[i];
/// colors[0] is missing at `start` and colors[i] is missing at vertices[i-1].
struct FanSequence {
  VertexId center = 0;
  VertexId start = 0;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  std::vector<Color> colors;

  int size() const { return static_cast<int>(vertices.size()); }
};

/// Maximal fan. The first edge is the one colored `first_color` at the
/// center; each later edge is the least-id edge whose color is new and missing
/// at the previous fan vertex. Empty if no edge at the center has
/// `first_color`.
FanSequence maximal_fan(const PartialColoring& c, const Multigraph& g, VertexId center,
                        VertexId start, Color first_color);

/// Number of unordered pairs of uncolored edges sharing a vertex.
int adjacent_uncolored_pairs(const Multigraph& g, const PartialColoring& c);

/// A maximum certificate of the same size whose uncolored edges form a
/// matching, by fan rotations at the far end of a doubly-uncovered vertex.
///
/// Throws Error(kNotSimple), and NotMaximumError (with the larger coloring
/// attached) when a fan exposes a way to color one more edge.
MaxSubgraphCertificate normalize_to_matching(const Multigraph& g,
                                             const MaxSubgraphCertificate& cert,
                                             const StepObserver& observer = {});

// ---------------------------------------------------------------------------
// Checkers

inline constexpr int kExhaustiveCutMaxVertices = 16;

struct CutMode {
  bool exhaustive = true;
  int samples = 0;
  std::uint64_t seed = 0;

  static CutMode sampled(int count, std::uint64_t seed) { return {false, count, seed}; }
};

/// |∂_H(X)| >= ⌈|∂_G(X)|/2⌉ for the checked sets X, d_H(x) >= ⌈d_G(x)/2⌉ for
/// every vertex, and δ(H) >= ⌈δ(G)/2⌉. Exhaustive mode throws
/// Error(kTooLargeForExhaustive) above 16 vertices.
VerificationReport check_cut_condition(const Multigraph& g, const MaxSubgraphCertificate& cert,
                                       CutMode mode = {});

/// (2k+1)·|E(H)| >= 2k·|E(G)| with k = ⌊girth/2⌋. Vacuous for forests with
/// H = G.
VerificationReport check_ratio_bound(const Multigraph& g, const MaxSubgraphCertificate& cert);

/// Δ(H) = Δ(G) and χ'(H) = Δ(H). Throws Error(kNotSimple).
VerificationReport check_class_one(const Multigraph& g, const MaxSubgraphCertificate& cert,
                                   SearchBudget budget = {});

/// With k = ⌊girth/2⌋, both
///   χ'(H) >= max(χ'(G) - ⌈μ/k⌉, (2k·χ'(G) - (2k-2)) / (2k+1)) and
///   Δ(H)  >= max(Δ(G)  - ⌈μ/k⌉, (2k·Δ(G)  - (2k-2)) / (2k+1)).
VerificationReport check_corollary_bounds(const Multigraph& g, const MaxSubgraphCertificate& cert,
                                          SearchBudget budget = {});

/// r_e(G) == r'_e(G). Vacuous when the r' oracle is out of range.
VerificationReport check_re_equals_rprime(const Multigraph& g, SearchBudget budget = {});

/// Uncolored edges are pairwise non-adjacent.
VerificationReport check_matching_complement(const Multigraph& g,
                                             const MaxSubgraphCertificate& cert);

struct ConjectureRecord {
  int k = 0;             // χ'(G) - Δ(G)
  int achieved = 0;      // least χ'(G - E(H)) over the maximum subgraphs tried
  int subgraphs_tried = 0;
  bool exhaustive = false;  // `achieved` is the minimum over all maximum subgraphs
  PartialColoring best;     // a maximum coloring attaining `achieved`

  bool equal() const { return k == achieved; }
};

inline constexpr std::uint64_t kConjectureMaxRemovalSets = 20'000;

/// k = χ'(G) - Δ(G) against the least chromatic index of the uncolored part
/// over maximum subgraphs: the given one, its matching normal form on simple
/// graphs, and every removal set of size r_e when there are at most
/// kConjectureMaxRemovalSets of them.
ConjectureRecord explore_conjecture(const Multigraph& g, const MaxSubgraphCertificate& cert,
                                    SearchBudget budget = {});

}  // namespace kempe
