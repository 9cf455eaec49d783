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


#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "kempe/error.hpp"
#include "kempe/exact.hpp"
#include "kempe/generators.hpp"
#include "oracles.hpp"

namespace kempe {
namespace {

bool is_regular(const Multigraph& g, int d) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

Multigraph relabel(const Multigraph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) {
    edges.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  }
  return Multigraph::build(g.num_vertices(), edges);
}

TEST(FatCycle, Formulas) {
  for (int k = 1; k <= 3; ++k) {
    const Multigraph g = fat_cycle(k);
    EXPECT_EQ(g.num_vertices(), 2 * k + 1);
    EXPECT_EQ(g.num_edges(), 2 * k * (2 * k + 1));
    EXPECT_EQ(g.max_degree(), 4 * k);
    EXPECT_EQ(g.max_multiplicity(), 2 * k);
    EXPECT_EQ(girth(g), 2 * k + 1);
    EXPECT_TRUE(is_regular(g, 4 * k));
  }
  EXPECT_THROW(fat_cycle(0), Error);
}

TEST(FatCycle, ExtremalSubgraphIsColorable) {
  for (int k = 1; k <= 3; ++k) {
    const Multigraph g = fat_cycle(k);
    const Multigraph h = fat_cycle_extremal_subgraph(k);
    EXPECT_EQ(h.num_vertices(), g.num_vertices());
    EXPECT_EQ(h.num_edges(), 4 * k * k);
    EXPECT_EQ(h.max_degree(), 4 * k - 1);
    for (const auto& cls : h.parallel_classes()) {
      EXPECT_LE(cls.multiplicity(), g.multiplicity(cls.u, cls.v));
    }
    const auto fit = is_t_edge_colorable(h, 4 * k);
    ASSERT_TRUE(fit.colorable) << "k=" << k;
    EXPECT_TRUE(is_proper(*fit.witness, h));
  }
}

TEST(HrChain, RadiusOne) {
  const Multigraph g = hr_chain(1);
  EXPECT_EQ(g.num_vertices(), 14);
  EXPECT_EQ(g.num_edges(), 21);
  EXPECT_TRUE(g.is_simple());
  EXPECT_TRUE(is_connected(g));
  EXPECT_TRUE(is_regular(g, 3));
  EXPECT_TRUE(chromatic_index(g).class_two());
}

TEST(HrChain, RadiusTwo) {
  const Multigraph g = hr_chain(2);
  EXPECT_EQ(g.num_vertices(), 4 * 2 * 5 + 2);
  EXPECT_EQ(g.num_edges(), g.num_vertices() * 5 / 2);
  EXPECT_TRUE(g.is_simple());
  EXPECT_TRUE(is_connected(g));
  EXPECT_TRUE(is_regular(g, 5));
}

TEST(Flower, Formulas) {
  for (int k = 2; k <= 4; ++k) {
    const Multigraph g = flower(k);
    EXPECT_EQ(g.num_vertices(), 2 * k + 1);
    EXPECT_EQ(g.num_edges(), k * (2 * k + 1));
    EXPECT_EQ(g.max_multiplicity(), 2 * k - 1);
    EXPECT_TRUE(is_regular(g, 2 * k));
    EXPECT_TRUE(is_connected(g));
  }
  EXPECT_THROW(flower(1), Error);
}

TEST(Figure1, Instance) {
  const auto f = figure1();
  EXPECT_EQ(f.graph.num_edges(), 6);
  EXPECT_EQ(f.graph.max_degree(), 4);
  EXPECT_EQ(f.graph.max_multiplicity(), 2);
  EXPECT_TRUE(is_proper(f.coloring, f.graph));
  EXPECT_EQ(f.coloring.num_colors(), 4);
  EXPECT_EQ(f.coloring.num_colored(), 4);
  EXPECT_EQ(max_delta_subgraph(f.graph).size, 4);
  for (EdgeId e : f.coloring.uncolored_edges()) EXPECT_TRUE(f.graph.edge(e).touches(f.c));
}

TEST(Named, Petersen) {
  const Multigraph g = petersen();
  EXPECT_EQ(g.num_vertices(), 10);
  EXPECT_EQ(g.num_edges(), 15);
  EXPECT_TRUE(is_regular(g, 3));
  EXPECT_EQ(girth(g), 5);
}

TEST(Named, SmallFamilies) {
  EXPECT_EQ(complete_graph(5).num_edges(), 10);
  EXPECT_EQ(complete_bipartite(2, 3).num_edges(), 6);
  EXPECT_EQ(cycle_graph(7).num_edges(), 7);
  EXPECT_THROW(cycle_graph(2), Error);
}

TEST(RandomClassTwo, Deterministic) {
  const auto a = random_class2(1, 5, 1);
  const auto b = random_class2(1, 5, 1);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.rejections, b.rejections);
  EXPECT_TRUE(a.graph.is_simple());
  EXPECT_TRUE(is_connected(a.graph));
  EXPECT_TRUE(chromatic_index(a.graph).class_two());
}

TEST(RandomClassTwo, Multigraph) {
  const auto r = random_class2(2, 4, 3);
  const auto chi = chromatic_index(r.graph);
  EXPECT_GT(chi.chi, chi.delta);
  EXPECT_LE(r.graph.max_multiplicity(), 3);
}

TEST(RandomClassTwo, Ranges) {
  EXPECT_THROW(random_class2(1, 11, 1), Error);
  EXPECT_THROW(random_class2(1, 5, 4), Error);
  // Two vertices with simple edges are never class II.
  try {
    random_class2(1, 2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kBudgetExceeded);
  }
}

TEST(Families, GenerateAndDescribe) {
  FamilySpec spec;
  spec.family = Family::kFatCycle;
  spec.k = 2;
  EXPECT_EQ(generate(spec), fat_cycle(2));
  EXPECT_EQ(describe(spec), "fat-cycle k=2");
  spec.family = Family::kFlower;
  spec.k = 1;
  EXPECT_THROW(generate(spec), Error);
  spec.family = Family::kRandomClassTwo;
  spec.seed = 1;
  spec.n = 5;
  EXPECT_EQ(generate(spec), random_class2(1, 5, 1).graph);
  EXPECT_EQ(describe(spec), "random-class2 seed=1 n=5 mu_max=1");
}

TEST(Enumeration, SimpleCounts) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(connected_graphs(n, 1).size(), oracle::count_connected(n, 1)) << "n=" << n;
  }
  // Connected unlabeled graphs on 6 and 7 vertices.
  EXPECT_EQ(connected_graphs(6, 1).size(), 112U);
  EXPECT_EQ(connected_graphs(7, 1).size(), 853U);
}

TEST(Enumeration, MultigraphCounts) {
  for (int n = 2; n <= 4; ++n) {
    EXPECT_EQ(connected_graphs(n, 3).size(), oracle::count_connected(n, 3)) << "n=" << n;
  }
  EXPECT_EQ(connected_graphs(5, 2).size(), oracle::count_connected(5, 2));
}

TEST(Enumeration, MembersAreConnectedAndDistinct) {
  std::set<std::vector<std::uint8_t>> codes;
  for (const Multigraph& g : connected_graphs(5, 2)) {
    EXPECT_TRUE(is_connected(g));
    EXPECT_LE(g.max_multiplicity(), 2);
    EXPECT_TRUE(codes.insert(canonical_code(g)).second);
  }
}

TEST(Enumeration, CanonicalCodeIgnoresLabels) {
  std::mt19937_64 rng(3);
  for (const Multigraph& g : connected_graphs(5, 2)) {
    std::vector<int> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_code(relabel(g, perm)), canonical_code(g));
  }
  EXPECT_NE(canonical_code(cycle_graph(4)), canonical_code(complete_bipartite(1, 3)));
}

// Spanning 2-regular subsets by brute force over all n-edge subsets.
std::size_t count_two_factors(const Multigraph& g) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  std::vector<bool> pick(static_cast<std::size_t>(m), false);
  std::fill(pick.begin(), pick.begin() + n, true);
  std::size_t count = 0;
  do {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (EdgeId e = 0; e < m; ++e) {
      if (!pick[static_cast<std::size_t>(e)]) continue;
      ++deg[static_cast<std::size_t>(g.edge(e).u)];
      ++deg[static_cast<std::size_t>(g.edge(e).v)];
    }
    if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; })) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

TEST(TwoFactors, MatchBruteForce) {
  const auto pet = two_factors(petersen());
  EXPECT_EQ(pet.size(), 6U);
  EXPECT_EQ(pet.size(), count_two_factors(petersen()));
  for (const auto& f : pet) {
    EXPECT_EQ(f.size(), 10U);
    EXPECT_TRUE(std::is_sorted(f.begin(), f.end()));
  }
  EXPECT_EQ(two_factors(complete_graph(4)).size(), 3U);
  EXPECT_EQ(two_factors(complete_graph(5)).size(), count_two_factors(complete_graph(5)));
  EXPECT_EQ(two_factors(hr_chain(1)).size(), count_two_factors(hr_chain(1)));
  EXPECT_EQ(two_factors(fat_cycle(1)).size(), count_two_factors(fat_cycle(1)));
}

TEST(RandomCycles, VertexDisjointCycles) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    for (const Multigraph& g : {petersen(), hr_chain(1), fat_cycle(2), complete_graph(6)}) {
      const auto cycles = random_disjoint_cycles(g, seed);
      EXPECT_EQ(cycles, random_disjoint_cycles(g, seed));
      std::vector<int> owner(static_cast<std::size_t>(g.num_vertices()), -1);
      for (std::size_t i = 0; i < cycles.size(); ++i) {
        std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()), 0);
        for (EdgeId e : cycles[i]) {
          ++deg[static_cast<std::size_t>(g.edge(e).u)];
          ++deg[static_cast<std::size_t>(g.edge(e).v)];
        }
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
          if (deg[static_cast<std::size_t>(v)] == 0) continue;
          EXPECT_EQ(deg[static_cast<std::size_t>(v)], 2);
          EXPECT_EQ(owner[static_cast<std::size_t>(v)], -1);
          owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
      }
    }
  }
}

}  // namespace
}  // namespace kempe
