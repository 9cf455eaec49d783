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
#include <string>

#include "kempe/coloring.hpp"
#include "kempe/multigraph.hpp"

namespace kempe {

inline constexpr std::uint64_t kDefaultNodeLimit = 50'000'000;

/// Explicit cap on search-tree nodes. Exhausting it raises
/// Error(kBudgetExceeded); the oracles never return a guess.
struct SearchBudget {
  std::uint64_t node_limit = kDefaultNodeLimit;
};

struct ColorabilityResult {
  bool colorable = false;
  std::optional<PartialColoring> witness;  // proper t-coloring of every edge
  std::uint64_t nodes = 0;

  explicit operator bool() const { return colorable; }
};

/// Exact decision of χ'(g) <= t by backtracking over edges, most constrained
/// edge first. The edges at one maximum-degree vertex are pre-colored 1..d and
/// unused colors are treated as interchangeable.
ColorabilityResult is_t_edge_colorable(const Multigraph& g, int t, SearchBudget budget = {});

struct ChromaticCertificate {
  int chi = 0;
  int delta = 0;
  PartialColoring witness;
  /// Search nodes spent refuting chi - 1 colors (0 when chi == delta).
  std::uint64_t refutation_nodes = 0;

  bool class_two() const { return chi > delta; }
};

ChromaticCertificate chromatic_index(const Multigraph& g, SearchBudget budget = {});

/// A Δ(G)-colored subgraph H. `optimal` is set only once the search proved
/// that no Δ-edge-colorable subgraph has more edges.
struct MaxSubgraphCertificate {
  PartialColoring coloring;
  int size = 0;
  bool optimal = false;
  std::uint64_t nodes = 0;

  int uncolored() const { return coloring.num_edges() - size; }
};

/// Greedy first-fit with Δ(G) colors, then repeated Kempe improvements along
/// non-closing α-β paths until every uncolored edge closes an odd cycle.
PartialColoring greedy_kempe_coloring(const Multigraph& g);

/// Maximum Δ(G)-edge-colorable subgraph by branch and bound over parallel
/// classes: each vertex pair receives a set of distinct colors of size at most
/// its multiplicity. Seeded with greedy_kempe_coloring().
MaxSubgraphCertificate max_delta_subgraph(const Multigraph& g, SearchBudget budget = {});

/// r_e(G) = |E(G)| - |E(H)| for a maximum H.
inline int r_e(const MaxSubgraphCertificate& cert) { return cert.uncolored(); }

inline constexpr int kRPrimeMaxChi = 8;
inline constexpr int kRPrimeMaxEdges = 24;

/// r'_e(G): over all χ'(G)-edge-colorings, the least total size of
/// k = χ'(G) - Δ(G) color classes. 0 for class I graphs. Throws
/// Error(kOutOfRange) when χ' > 8 or m > 24.
int r_prime(const Multigraph& g, const ChromaticCertificate& chi, SearchBudget budget = {});
int r_prime(const Multigraph& g, SearchBudget budget = {});

struct OverflowColoring {
  int overflow = 0;  // edges colored above Δ(G)
  PartialColoring coloring;
  std::uint64_t nodes = 0;
};

/// A proper coloring of every edge with `palette` >= Δ(G) colors that puts as
/// few edges as possible on colors above Δ(G). The search stops early once it
/// reaches `stop_at` overflow edges. No size caps; Error(kOutOfRange) if no
/// such coloring exists, Error(kBudgetExceeded) as usual.
OverflowColoring min_overflow_coloring(const Multigraph& g, int palette, SearchBudget budget = {},
                                       int stop_at = 0);

}  // namespace kempe
