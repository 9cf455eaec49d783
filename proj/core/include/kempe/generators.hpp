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
#include <string>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/exact.hpp"
#include "kempe/multigraph.hpp"

namespace kempe {

/// C^{2k}_{2k+1}: a (2k+1)-cycle with every edge of multiplicity 2k.
Multigraph fat_cycle(int k);

/// The 4k²-edge subgraph of fat_cycle(k) with one pair of multiplicity 2k and
/// the other 2k pairs of multiplicity 2k-1, on the same vertices.
Multigraph fat_cycle_extremal_subgraph(int k);

/// Two copies of r subdivided K_{2r+1,2r+1} glued at their subdivision
/// vertex, with the two glue vertices joined by an edge. Simple and
/// (2r+1)-regular on 4r(2r+1)+2 vertices; the subdivided edge is (a_0, b_0).
Multigraph hr_chain(int r);

/// k petals on a shared center; each petal is a center-a and a center-b edge
/// plus 2k-1 parallel a-b edges. 2k-regular on 2k+1 vertices.
Multigraph flower(int k);

/// Triangle a=0, b=1, c=2 with every pair doubled (edges ab, ab, ac, ac, bc,
/// bc) and a maximum 4-coloring leaving one ac and one bc edge uncolored, so
/// that C̄(a)={4}, C̄(b)={3}, C̄(c)={1,2}.
struct Figure1Instance {
  Multigraph graph;
  PartialColoring coloring;
  VertexId a = 0;
  VertexId b = 1;
  VertexId c = 2;
};
Figure1Instance figure1();

Multigraph petersen();
Multigraph cycle_graph(int n);
Multigraph complete_graph(int n);
Multigraph complete_bipartite(int left, int right);

inline constexpr int kRandomClassTwoMaxVertices = 10;
inline constexpr int kRandomClassTwoMaxMultiplicity = 3;
inline constexpr int kRandomClassTwoMaxRejections = 1000;

struct RandomClassTwo {
  Multigraph graph;
  int rejections = 0;
};

/// Connected class II multigraph drawn from a seeded generator: each vertex
/// pair is absent with probability 1/2, otherwise its multiplicity is uniform
/// in 1..mu_max. Draws are rejected until the exact χ' oracle certifies
/// class II; Error(kBudgetExceeded) after 1000 rejections, Error(kOutOfRange)
/// for n > 10 or mu_max > 3.
RandomClassTwo random_class2(std::uint64_t seed, int n, int mu_max, SearchBudget budget = {});

enum class Family { kFatCycle, kHrChain, kFlower, kFigure1, kPetersen, kRandomClassTwo };

struct FamilySpec {
  Family family = Family::kPetersen;
  int k = 1;  // k for fat cycles and flowers, r for H_r chains
  std::uint64_t seed = 0;
  int n = 0;
  int mu_max = 1;
};

/// Throws Error(kOutOfRange) for parameters outside a family's range.
Multigraph generate(const FamilySpec& spec, SearchBudget budget = {});
/// One-line description, e.g. "fat-cycle k=2".
std::string describe(const FamilySpec& spec);

/// Connected multigraphs on n vertices with multiplicities at most mu_max, one
/// per isomorphism class, in a fixed order. Grown one vertex at a time, since
/// every connected graph has a vertex whose removal keeps it connected.
std::vector<Multigraph> connected_graphs(int n, int mu_max);

/// Canonical form under vertex relabeling; equal codes mean isomorphic graphs.
std::vector<std::uint8_t> canonical_code(const Multigraph& g);

/// Every spanning 2-regular edge set, as sorted edge lists.
std::vector<std::vector<EdgeId>> two_factors(const Multigraph& g);

/// Up to `max_cycles` pairwise vertex-disjoint cycles found by seeded random
/// walks. May return fewer, including none.
std::vector<std::vector<EdgeId>> random_disjoint_cycles(const Multigraph& g, std::uint64_t seed,
                                                        int max_cycles = 3);

}  // namespace kempe
