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

#include "kempe/generators.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>

namespace kempe {
namespace {

using EdgeList = std::vector<std::pair<int, int>>;

void add_parallel(EdgeList& edges, int u, int v, int count) {
  for (int i = 0; i < count; ++i) edges.emplace_back(u, v);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::kOutOfRange, what);
}

// Multiplicity matrix stored row-major.
struct Matrix {
  int n = 0;
  std::vector<std::uint8_t> a;

  explicit Matrix(int size) : n(size), a(static_cast<std::size_t>(size * size), 0) {}
  std::uint8_t& at(int u, int v) { return a[static_cast<std::size_t>(u * n + v)]; }
  std::uint8_t at(int u, int v) const { return a[static_cast<std::size_t>(u * n + v)]; }
};

Matrix matrix_of(const Multigraph& g) {
  Matrix m(g.num_vertices());
  for (const Edge& e : g.edges()) {
    ++m.at(e.u, e.v);
    ++m.at(e.v, e.u);
  }
  return m;
}

// Lexicographically largest upper-triangle code over the relabelings that
// list vertices by decreasing (degree, number of neighbours).
std::vector<std::uint8_t> canonical(const Matrix& m) {
  const int n = m.n;
  std::vector<std::pair<int, int>> key(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    int deg = 0;
    int support = 0;
    for (int w = 0; w < n; ++w) {
      deg += m.at(v, w);
      support += m.at(v, w) > 0 ? 1 : 0;
    }
    key[static_cast<std::size_t>(v)] = {deg, support};
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return key[static_cast<std::size_t>(x)] > key[static_cast<std::size_t>(y)];
  });
  std::vector<std::pair<int, int>> blocks;  // [begin, end)
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && key[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] ==
                        key[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]) {
      ++j;
    }
    blocks.emplace_back(i, j);
    i = j;
  }

  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> code;
  code.reserve(static_cast<std::size_t>(n * (n - 1) / 2 + 1));
  std::function<void(std::size_t)> permute = [&](std::size_t b) {
    if (b == blocks.size()) {
      code.assign(1, static_cast<std::uint8_t>(n));
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          code.push_back(m.at(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]));
        }
      }
      if (code > best) best = code;
      return;
    }
    auto first = order.begin() + blocks[b].first;
    auto last = order.begin() + blocks[b].second;
    std::sort(first, last);
    do {
      permute(b + 1);
    } while (std::next_permutation(first, last));
  };
  permute(0);
  return best;
}

Multigraph decode(const std::vector<std::uint8_t>& code) {
  const int n = code.front();
  EdgeList edges;
  std::size_t pos = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) add_parallel(edges, i, j, code[pos++]);
  }
  return Multigraph::build(n, edges);
}

}  // namespace

Multigraph fat_cycle(int k) {
  require(k >= 1, "fat cycle needs k >= 1");
  const int len = 2 * k + 1;
  EdgeList edges;
  for (int i = 0; i < len; ++i) add_parallel(edges, i, (i + 1) % len, 2 * k);
  return Multigraph::build(len, edges);
}

Multigraph fat_cycle_extremal_subgraph(int k) {
  require(k >= 1, "fat cycle needs k >= 1");
  const int len = 2 * k + 1;
  EdgeList edges;
  for (int i = 0; i < len; ++i) add_parallel(edges, i, (i + 1) % len, i == 0 ? 2 * k : 2 * k - 1);
  return Multigraph::build(len, edges);
}

Multigraph hr_chain(int r) {
  require(r >= 1, "H_r chain needs r >= 1");
  const int side = 2 * r + 1;
  const int block = 2 * side;
  const int half = 1 + r * block;
  EdgeList edges;
  for (int h = 0; h < 2; ++h) {
    const int glue = h * half;
    for (int copy = 0; copy < r; ++copy) {
      const int a0 = glue + 1 + copy * block;
      const int b0 = a0 + side;
      edges.emplace_back(glue, a0);
      edges.emplace_back(glue, b0);
      for (int i = 0; i < side; ++i) {
        for (int j = 0; j < side; ++j) {
          if (i != 0 || j != 0) edges.emplace_back(a0 + i, b0 + j);
        }
      }
    }
  }
  edges.emplace_back(0, half);
  return Multigraph::build(2 * half, edges);
}

Multigraph flower(int k) {
  require(k >= 2, "flower needs k >= 2");
  EdgeList edges;
  for (int p = 0; p < k; ++p) {
    const int a = 1 + 2 * p;
    const int b = a + 1;
    edges.emplace_back(0, a);
    edges.emplace_back(0, b);
    add_parallel(edges, a, b, 2 * k - 1);
  }
  return Multigraph::build(2 * k + 1, edges);
}

Figure1Instance figure1() {
  Figure1Instance f;
  f.graph = Multigraph::build(3, EdgeList{{0, 1}, {0, 1}, {0, 2}, {0, 2}, {1, 2}, {1, 2}});
  f.coloring = PartialColoring(4, 6);
  f.coloring.set(0, 1);
  f.coloring.set(1, 2);
  f.coloring.set(2, 3);
  f.coloring.set(4, 4);
  return f;
}

Multigraph petersen() {
  EdgeList edges;
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, i + 5);
  for (int i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  return Multigraph::build(10, edges);
}

Multigraph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  EdgeList edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Multigraph::build(n, edges);
}

Multigraph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  EdgeList edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Multigraph::build(n, edges);
}

Multigraph complete_bipartite(int left, int right) {
  require(left >= 1 && right >= 1, "complete bipartite graph needs both sides nonempty");
  EdgeList edges;
  for (int i = 0; i < left; ++i) {
    for (int j = 0; j < right; ++j) edges.emplace_back(i, left + j);
  }
  return Multigraph::build(left + right, edges);
}

RandomClassTwo random_class2(std::uint64_t seed, int n, int mu_max, SearchBudget budget) {
  require(n >= 1 && n <= kRandomClassTwoMaxVertices, "random class II graphs need 1 <= n <= 10");
  require(mu_max >= 1 && mu_max <= kRandomClassTwoMaxMultiplicity,
          "random class II graphs need 1 <= mu_max <= 3");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution present(0.5);
  std::uniform_int_distribution<int> mult(1, mu_max);
  RandomClassTwo out;
  for (; out.rejections < kRandomClassTwoMaxRejections; ++out.rejections) {
    EdgeList edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (present(rng)) add_parallel(edges, u, v, mult(rng));
      }
    }
    Multigraph g = Multigraph::build(n, edges);
    if (g.num_edges() == 0 || !is_connected(g)) continue;
    if (chromatic_index(g, budget).class_two()) {
      out.graph = std::move(g);
      return out;
    }
  }
  throw Error(Errc::kBudgetExceeded, "no class II graph after " +
                                         std::to_string(kRandomClassTwoMaxRejections) +
                                         " draws");
}

Multigraph generate(const FamilySpec& spec, SearchBudget budget) {
  switch (spec.family) {
    case Family::kFatCycle: return fat_cycle(spec.k);
    case Family::kHrChain: return hr_chain(spec.k);
    case Family::kFlower: return flower(spec.k);
    case Family::kFigure1: return figure1().graph;
    case Family::kPetersen: return petersen();
    case Family::kRandomClassTwo: return random_class2(spec.seed, spec.n, spec.mu_max, budget).graph;
  }
  throw Error(Errc::kOutOfRange, "unknown family");
}

std::string describe(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kFatCycle: return "fat-cycle k=" + std::to_string(spec.k);
    case Family::kHrChain: return "hr-chain r=" + std::to_string(spec.k);
    case Family::kFlower: return "flower k=" + std::to_string(spec.k);
    case Family::kFigure1: return "figure1";
    case Family::kPetersen: return "petersen";
    case Family::kRandomClassTwo:
      return "random-class2 seed=" + std::to_string(spec.seed) + " n=" + std::to_string(spec.n) +
             " mu_max=" + std::to_string(spec.mu_max);
  }
  return "unknown";
}

std::vector<std::uint8_t> canonical_code(const Multigraph& g) { return canonical(matrix_of(g)); }

std::vector<Multigraph> connected_graphs(int n, int mu_max) {
  require(n >= 1 && n <= 9, "enumeration supports 1 <= n <= 9");
  require(mu_max >= 1 && mu_max <= 9, "enumeration supports 1 <= mu_max <= 9");
  std::set<std::vector<std::uint8_t>> level{canonical(Matrix(1))};
  for (int size = 2; size <= n; ++size) {
    std::set<std::vector<std::uint8_t>> next;
    const int old = size - 1;
    for (const auto& code : level) {
      Matrix base(size);
      std::size_t pos = 1;
      for (int i = 0; i < old; ++i) {
        for (int j = i + 1; j < old; ++j) {
          base.at(i, j) = base.at(j, i) = code[pos++];
        }
      }
      // Attach the new vertex with every nonzero multiplicity vector.
      std::vector<int> row(static_cast<std::size_t>(old), 0);
      while (true) {
        int i = 0;
        while (i < old && row[static_cast<std::size_t>(i)] == mu_max) row[static_cast<std::size_t>(i++)] = 0;
        if (i == old) break;
        ++row[static_cast<std::size_t>(i)];
        Matrix m = base;
        for (int j = 0; j < old; ++j) {
          m.at(j, old) = m.at(old, j) = static_cast<std::uint8_t>(row[static_cast<std::size_t>(j)]);
        }
        next.insert(canonical(m));
      }
    }
    level = std::move(next);
  }
  std::vector<Multigraph> out;
  out.reserve(level.size());
  for (const auto& code : level) out.push_back(decode(code));
  std::stable_sort(out.begin(), out.end(), [](const Multigraph& a, const Multigraph& b) {
    return a.num_edges() < b.num_edges();
  });
  return out;
}

std::vector<std::vector<EdgeId>> two_factors(const Multigraph& g) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<int> left(static_cast<std::size_t>(n), 0);
  for (VertexId v = 0; v < n; ++v) left[static_cast<std::size_t>(v)] = g.degree(v);
  std::vector<EdgeId> chosen;
  std::vector<std::vector<EdgeId>> out;
  std::function<void(EdgeId)> visit = [&](EdgeId e) {
    if (e == m) {
      if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; })) out.push_back(chosen);
      return;
    }
    const auto u = static_cast<std::size_t>(g.edge(e).u);
    const auto v = static_cast<std::size_t>(g.edge(e).v);
    --left[u];
    --left[v];
    if (deg[u] < 2 && deg[v] < 2) {
      ++deg[u];
      ++deg[v];
      chosen.push_back(e);
      visit(e + 1);
      chosen.pop_back();
      --deg[u];
      --deg[v];
    }
    if (deg[u] + left[u] >= 2 && deg[v] + left[v] >= 2) visit(e + 1);
    ++left[u];
    ++left[v];
  };
  if (n > 0) visit(0);
  return out;
}

std::vector<std::vector<EdgeId>> random_disjoint_cycles(const Multigraph& g, std::uint64_t seed,
                                                        int max_cycles) {
  const int n = g.num_vertices();
  std::mt19937_64 rng(seed);
  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  std::vector<std::vector<EdgeId>> out;
  if (n == 0) return out;
  std::uniform_int_distribution<int> pick_vertex(0, n - 1);
  for (int attempt = 0; attempt < 20 * max_cycles && static_cast<int>(out.size()) < max_cycles;
       ++attempt) {
    VertexId x = pick_vertex(rng);
    if (taken[static_cast<std::size_t>(x)]) continue;
    std::vector<VertexId> walk{x};
    std::vector<EdgeId> steps;
    for (int len = 0; len <= n; ++len) {
      std::vector<EdgeId> options;
      for (EdgeId e : g.incident(x)) {
        if (!steps.empty() && e == steps.back()) continue;
        if (!taken[static_cast<std::size_t>(g.edge(e).other(x))]) options.push_back(e);
      }
      if (options.empty()) break;
      const EdgeId e = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
      x = g.edge(e).other(x);
      steps.push_back(e);
      const auto seen = std::find(walk.begin(), walk.end(), x);
      if (seen != walk.end()) {
        const auto from = seen - walk.begin();
        std::vector<EdgeId> cycle(steps.begin() + from, steps.end());
        for (auto it = seen; it != walk.end(); ++it) taken[static_cast<std::size_t>(*it)] = true;
        std::sort(cycle.begin(), cycle.end());
        out.push_back(std::move(cycle));
        break;
      }
      walk.push_back(x);
    }
  }
  return out;
}

}  // namespace kempe
