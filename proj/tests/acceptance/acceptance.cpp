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


// Corpus-wide acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero if any blocking criterion fails.
//
// Usage: kempe_acceptance [flag-dir]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kempe/kempe.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace kempe;

namespace {

// Pinned limits.
constexpr double kFatCycleSeconds = 60.0;
constexpr double kExtensionSeconds = 600.0;
constexpr int kRandomCycleSets = 50;
constexpr int kBruteForceMaxVertices = 5;
constexpr int kBruteForceMaxEdges = 12;

struct Instance {
  std::string name;
  Multigraph graph;
  ChromaticCertificate chi;
  MaxSubgraphCertificate cert;

  bool class_two() const { return chi.class_two(); }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double x, int digits = 2) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << x;
  return out.str();
}

class Tally {
 public:
  void line(int id, const std::string& title, bool ok, const std::string& detail,
            bool blocking = true) {
    std::cout << "criterion " << id << " [" << (ok ? "PASS" : "FAIL") << "] " << title;
    if (!blocking) std::cout << " (non-blocking)";
    std::cout << ": " << detail << std::endl;
    if (!ok && blocking) failed_ = true;
  }
  bool failed() const { return failed_; }

 private:
  bool failed_ = false;
};

// Collects the first few failures of a criterion for the log.
class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 5) std::cerr << "  failure: " << what << "\n";
  }
  int count() const { return count_; }
  bool none() const { return count_ == 0; }

 private:
  int count_ = 0;
};

std::vector<Instance> build_corpus() {
  std::vector<std::pair<std::string, Multigraph>> graphs;
  for (int n = 2; n <= 7; ++n) {
    int i = 0;
    for (Multigraph& g : connected_graphs(n, 1)) {
      graphs.emplace_back("simple-n" + std::to_string(n) + "-" + std::to_string(i++), std::move(g));
    }
  }
  for (int n = 2; n <= 5; ++n) {
    int i = 0;
    for (Multigraph& g : connected_graphs(n, 3)) {
      if (g.is_simple()) continue;
      graphs.emplace_back("multi-n" + std::to_string(n) + "-" + std::to_string(i++), std::move(g));
    }
  }
  graphs.emplace_back("petersen", petersen());
  for (int k = 1; k <= 3; ++k) graphs.emplace_back("fat-cycle-k" + std::to_string(k), fat_cycle(k));
  graphs.emplace_back("hr-chain-r1", hr_chain(1));
  for (int k = 2; k <= 4; ++k) graphs.emplace_back("flower-k" + std::to_string(k), flower(k));
  graphs.emplace_back("figure1", figure1().graph);
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const int n = 6 + static_cast<int>(seed % 3);
    const int mu = 1 + static_cast<int>(seed % 3);
    const auto r = random_class2(seed, n, mu);
    FamilySpec spec;
    spec.family = Family::kRandomClassTwo;
    spec.seed = seed;
    spec.n = n;
    spec.mu_max = mu;
    std::string name = describe(spec);
    std::replace(name.begin(), name.end(), ' ', '-');
    graphs.emplace_back(name, r.graph);
  }

  std::vector<Instance> corpus;
  corpus.reserve(graphs.size());
  for (auto& [name, g] : graphs) {
    Instance inst;
    inst.name = name;
    inst.chi = chromatic_index(g);
    inst.cert = max_delta_subgraph(g);
    inst.graph = std::move(g);
    corpus.push_back(std::move(inst));
  }
  return corpus;
}

// 1. Oracle size of the fat cycle equals 4k^2 and the rounded-up ratio.
void fat_cycle_tightness(Tally& tally) {
  bool ok = true;
  std::string detail;
  for (int k = 1; k <= 2; ++k) {
    const auto start = Clock::now();
    const Multigraph g = fat_cycle(k);
    const auto cert = max_delta_subgraph(g);
    const double secs = seconds_since(start);
    const int m = g.num_edges();
    const int ratio_ceil = (2 * k * m + 2 * k) / (2 * k + 1);  // ceil(2k m / (2k+1))
    const bool this_ok = cert.optimal && cert.size == 4 * k * k && cert.size == ratio_ceil &&
                         secs < kFatCycleSeconds;
    ok = ok && this_ok;
    detail += "k=" + std::to_string(k) + ": size " + std::to_string(cert.size) + ", 4k^2 " +
              std::to_string(4 * k * k) + ", ceil " + std::to_string(ratio_ceil) + ", " +
              fixed(secs, 3) + "s; ";
  }
  tally.line(1, "fat-cycle tightness", ok, detail);
}

void ratio_bound(Tally& tally, const std::vector<Instance>& corpus) {
  Failures fails;
  int pass = 0;
  int vacuous = 0;
  for (const auto& inst : corpus) {
    const auto r = check_ratio_bound(inst.graph, inst.cert);
    if (r.failed()) fails.add(inst.name + " " + r.witness.dump());
    pass += r.outcome == Outcome::kPass;
    vacuous += r.outcome == Outcome::kVacuous;
  }
  tally.line(2, "ratio bound", fails.none(),
             std::to_string(corpus.size()) + " instances, " + std::to_string(pass) + " pass, " +
                 std::to_string(vacuous) + " vacuous (forests), " + std::to_string(fails.count()) +
                 " fail");
}

// Every Δ(G)-colorable subgraph left after deleting r edges.
std::vector<EdgeSubgraph> optimal_subgraphs(const Multigraph& g, int r) {
  const int m = g.num_edges();
  std::vector<bool> drop(static_cast<std::size_t>(m), false);
  std::fill(drop.begin(), drop.begin() + r, true);
  std::vector<EdgeSubgraph> out;
  do {
    std::vector<bool> keep(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) keep[static_cast<std::size_t>(i)] = !drop[static_cast<std::size_t>(i)];
    EdgeSubgraph rest = edge_subgraph(g, keep);
    if (is_t_edge_colorable(rest.graph, g.max_degree()).colorable) out.push_back(std::move(rest));
  } while (std::prev_permutation(drop.begin(), drop.end()));
  return out;
}

int least_min_degree(const Multigraph& g, int r) {
  int best = g.max_degree() + 1;
  for (const EdgeSubgraph& h : optimal_subgraphs(g, r)) best = std::min(best, h.graph.min_degree());
  return best;
}

void cut_condition(Tally& tally, const std::vector<Instance>& corpus) {
  Failures fails;
  for (const auto& inst : corpus) {
    const auto r = check_cut_condition(inst.graph, inst.cert);
    if (r.failed()) fails.add(inst.name + " " + r.witness.dump());
  }
  int extra = 0;
  for (const Multigraph& g : connected_graphs(8, 1)) {
    ++extra;
    const auto r = check_cut_condition(g, max_delta_subgraph(g));
    if (r.failed()) fails.add("simple n=8 #" + std::to_string(extra) + " " + r.witness.dump());
  }
  const Multigraph chain = hr_chain(1);
  const auto chain_cert = max_delta_subgraph(chain);
  const int least = least_min_degree(chain, r_e(chain_cert));
  const bool tight = least == 2;
  tally.line(3, "cut condition", fails.none() && tight,
             std::to_string(corpus.size()) + " instances plus " + std::to_string(extra) +
                 " simple graphs on 8 vertices, exhaustive, " + std::to_string(fails.count()) +
                 " fail; H_1 chain least optimal min degree " +
                 std::to_string(least) + " (want 2)");
}

bool assignment_ok(const Multigraph& g, const MaxSubgraphCertificate& cert, std::string& why) {
  const CycleAssignment a = assign_disjoint_cycles(g, cert);
  if (a.entries.size() != static_cast<std::size_t>(cert.uncolored())) {
    why = "entry count";
    return false;
  }
  if (!a.pairwise_disjoint()) {
    why = "not disjoint";
    return false;
  }
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const auto& entry = a.entries[i];
    const UncoloredCycle& uc = entry.cycle;
    if (uc.edge != entry.edge || cert.coloring.is_colored(entry.edge) || uc.length() % 2 == 0 ||
        !is_valid_uncolored_cycle(cert.coloring, g, uc)) {
      why = "invalid cycle for edge " + std::to_string(entry.edge);
      return false;
    }
    for (std::size_t j = i + 1; j < a.entries.size(); ++j) {
      for (EdgeId e : uc.cycle) {
        if (a.entries[j].cycle.contains(e)) {
          why = "shared edge " + std::to_string(e);
          return false;
        }
      }
    }
  }
  return true;
}

void disjoint_cycles(Tally& tally, const std::vector<Instance>& corpus) {
  Failures fails;
  int checked = 0;
  for (const auto& inst : corpus) {
    if (inst.cert.uncolored() == 0) continue;
    ++checked;
    std::string why;
    if (!assignment_ok(inst.graph, inst.cert, why)) fails.add(inst.name + ": " + why);
  }
  // The naive color choice on the small example makes two cycles share an edge.
  const auto f = figure1();
  const auto bc = std::get<UncoloredCycle>(uncolored_cycle(f.coloring, f.graph, 5, 3, 1));
  const auto ac = std::get<UncoloredCycle>(uncolored_cycle(f.coloring, f.graph, 3, 4, 1));
  bool naive_shared = false;
  for (EdgeId e : bc.cycle) naive_shared = naive_shared || ac.contains(e);
  MaxSubgraphCertificate fc;
  fc.coloring = f.coloring;
  fc.size = f.coloring.num_colored();
  fc.optimal = true;
  std::string why;
  const bool reassigned = assignment_ok(f.graph, fc, why);
  tally.line(4, "disjoint odd cycles", fails.none() && naive_shared && reassigned,
             std::to_string(checked) + " instances with uncolored edges, " +
                 std::to_string(fails.count()) + " fail; small example naive pair shares an edge: " +
                 (naive_shared ? "yes" : "no") + ", reassigned disjoint: " +
                 (reassigned ? "yes" : "no"));
}

bool extension_ok(const Multigraph& g, const CycleSet& cycles, const MaxSubgraphCertificate& cert,
                  std::string& why, std::map<std::string, long>* steps = nullptr) {
  bool proper = true;
  const auto out = extend_cycles(g, cycles, cert, [&](const RecolorStep& step) {
    if (!is_proper(step.coloring, g)) proper = false;
    if (steps != nullptr && step.settled) ++(*steps)[std::string(step.name)];
  });
  if (!proper) {
    why = "improper intermediate step";
    return false;
  }
  if (out.size != cert.size || out.coloring.num_colored() != cert.size || !is_proper(out.coloring, g)) {
    why = "size or properness changed";
    return false;
  }
  for (const auto& cyc : cycles) {
    for (EdgeId e : cyc) {
      if (!out.coloring.is_colored(e)) {
        why = "cycle edge " + std::to_string(e) + " uncolored";
        return false;
      }
    }
  }
  return true;
}

void cycle_extension(Tally& tally, const std::vector<Instance>& corpus) {
  const auto start = Clock::now();
  Failures fails;
  const Multigraph p = petersen();
  const auto pc = max_delta_subgraph(p);
  const auto factors = two_factors(p);
  for (const auto& f : factors) {
    std::string why;
    if (!extension_ok(p, split_cycles(p, f), pc, why)) fails.add("petersen 2-factor: " + why);
  }

  std::vector<const Instance*> pool;
  for (const auto& inst : corpus) {
    if (inst.graph.max_degree() >= 3) pool.push_back(&inst);
  }
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int sets = 0;
  for (int attempt = 0; sets < kRandomCycleSets && attempt < 100 * kRandomCycleSets; ++attempt) {
    const Instance& inst = *pool[pick(rng)];
    const std::uint64_t seed = rng();
    const CycleSet cycles = random_disjoint_cycles(inst.graph, seed);
    if (cycles.empty()) continue;
    ++sets;
    std::string why;
    if (!extension_ok(inst.graph, cycles, inst.cert, why)) {
      fails.add(inst.name + " seed " + std::to_string(seed) + ": " + why);
    }
  }
  // Every 2-factor of every corpus instance that has one.
  long sweep = 0;
  std::map<std::string, long> steps;
  for (const Instance* inst : pool) {
    if (inst->cert.uncolored() == 0) continue;
    for (const auto& f : two_factors(inst->graph)) {
      ++sweep;
      std::string why;
      if (!extension_ok(inst->graph, split_cycles(inst->graph, f), inst->cert, why, &steps)) {
        fails.add(inst->name + " 2-factor: " + why);
      }
    }
  }
  std::string moves;
  for (const auto& [name, count] : steps) moves += " " + name + "=" + std::to_string(count);
  const double secs = seconds_since(start);
  tally.line(5, "cycle extension",
             fails.none() && factors.size() == 6 && sets == kRandomCycleSets && secs < kExtensionSeconds,
             std::to_string(factors.size()) + " Petersen 2-factors, " + std::to_string(sets) +
                 " random cycle sets, " + std::to_string(sweep) + " corpus 2-factors (moves:" + moves +
                 "), " + std::to_string(fails.count()) + " fail, " + fixed(secs) + "s");
}

void matching_normalization(Tally& tally, const std::vector<Instance>& corpus) {
  Failures fails;
  int normalized = 0;
  int compared = 0;
  int out_of_range = 0;
  for (const auto& inst : corpus) {
    if (!inst.graph.is_simple()) continue;
    if (inst.class_two()) {
      ++normalized;
      const auto out = normalize_to_matching(inst.graph, inst.cert);
      if (out.size != inst.cert.size || !is_proper(out.coloring, inst.graph) ||
          adjacent_uncolored_pairs(inst.graph, out.coloring) != 0) {
        fails.add(inst.name + ": normalization");
      }
    }
    const auto r = check_re_equals_rprime(inst.graph);
    if (r.outcome == Outcome::kVacuous) {
      ++out_of_range;
    } else {
      ++compared;
      if (r.failed()) fails.add(inst.name + " " + r.witness.dump());
    }
  }
  tally.line(6, "matching normalization", fails.none(),
             std::to_string(normalized) + " simple class II normalized, r_e = r' compared on " +
                 std::to_string(compared) + " simple instances (" + std::to_string(out_of_range) +
                 " out of oracle range), " + std::to_string(fails.count()) + " fail");
}

void class_one(Tally& tally, const std::vector<Instance>& corpus) {
  Failures fails;
  int checked = 0;
  for (const auto& inst : corpus) {
    if (!inst.graph.is_simple() || !inst.class_two()) continue;
    ++checked;
    const auto r = check_class_one(inst.graph, inst.cert);
    if (r.failed()) fails.add(inst.name + " " + r.witness.dump());
  }
  // Multigraph side, recorded only: over all maximum subgraphs of the doubled
  // triangle, count those that are class II.
  const Multigraph fat = fat_cycle(1);
  const auto fat_cert = max_delta_subgraph(fat);
  const auto optimal = optimal_subgraphs(fat, r_e(fat_cert));
  int class_two_h = 0;
  std::string example = "none";
  for (const EdgeSubgraph& h : optimal) {
    const auto hchi = chromatic_index(h.graph);
    if (!hchi.class_two()) continue;
    if (class_two_h++ == 0) {
      example = "chi'(H) = " + std::to_string(hchi.chi) + " > " + std::to_string(hchi.delta) + " = Delta(H)";
    }
  }
  tally.line(7, "class one subgraph", fails.none(),
             std::to_string(checked) + " simple class II instances, " +
                 std::to_string(fails.count()) + " fail; recorded for the doubled triangle: " +
                 std::to_string(class_two_h) + " of " + std::to_string(optimal.size()) +
                 " maximum subgraphs are class II, e.g. " + example);
}

void corollary(Tally& tally, const std::vector<Instance>& corpus) {
  Failures fails;
  int checked = 0;
  int skipped = 0;
  int vacuous = 0;
  for (const auto& inst : corpus) {
    try {
      const auto r = check_corollary_bounds(inst.graph, inst.cert);
      ++checked;
      vacuous += r.outcome == Outcome::kVacuous;
      if (r.failed()) fails.add(inst.name + " " + r.witness.dump());
    } catch (const Error& e) {
      if (e.code() != Errc::kBudgetExceeded) throw;
      ++skipped;
    }
  }
  tally.line(8, "degree and chromatic bounds", fails.none(),
             std::to_string(checked) + " checked (" + std::to_string(vacuous) + " vacuous), " +
                 std::to_string(skipped) + " over budget, " + std::to_string(fails.count()) + " fail");
}

void oracle_consistency(Tally& tally, const std::vector<Instance>& corpus) {
  Failures fails;
  int brute = 0;
  for (const auto& inst : corpus) {
    const Multigraph& g = inst.graph;
    const int delta = g.max_degree();
    if (inst.chi.chi > 3 * delta / 2 || inst.chi.chi > delta + g.max_multiplicity()) {
      fails.add(inst.name + ": chromatic index above the classical bounds");
    }
    if (!is_proper(inst.chi.witness, g) || inst.chi.witness.num_colored() != g.num_edges()) {
      fails.add(inst.name + ": chromatic witness");
    }
    if (g.num_vertices() <= kBruteForceMaxVertices && g.num_edges() <= kBruteForceMaxEdges) {
      ++brute;
      const int expect = oracle::max_subgraph_size(g.num_vertices(), g.edge_list());
      if (expect != inst.cert.size) {
        fails.add(inst.name + ": oracle " + std::to_string(inst.cert.size) + " vs brute force " +
                  std::to_string(expect));
      }
    }
  }
  tally.line(9, "oracle self-consistency", fails.none(),
             std::to_string(brute) + " instances against all edge subsets, " +
                 std::to_string(corpus.size()) + " against Shannon and Vizing bounds, " +
                 std::to_string(fails.count()) + " fail");
}

void conjecture(Tally& tally, const std::vector<Instance>& corpus, const fs::path& flag_dir) {
  int explored = 0;
  int flagged = 0;
  int inexhaustive = 0;
  int errors = 0;
  fs::remove_all(flag_dir);
  for (const auto& inst : corpus) {
    if (!inst.class_two()) continue;
    ++explored;
    try {
      const auto rec = explore_conjecture(inst.graph, inst.cert);
      if (!rec.exhaustive) ++inexhaustive;
      if (rec.equal()) continue;
      ++flagged;
      fs::create_directories(flag_dir);
      nlohmann::json j = {{"instance", inst.name},
                          {"graph", format_graph(inst.graph)},
                          {"k", rec.k},
                          {"achieved", rec.achieved},
                          {"exhaustive", rec.exhaustive},
                          {"subgraphs_tried", rec.subgraphs_tried},
                          {"best", coloring_json(rec.best)}};
      write_text_file(flag_dir / (inst.name + ".json"), j.dump(2) + "\n");
    } catch (const Error& e) {
      if (e.code() != Errc::kBudgetExceeded) throw;
      ++errors;
    }
  }
  tally.line(10, "complement chromatic index exploration", true,
             std::to_string(explored) + " class II instances, " + std::to_string(flagged) +
                 " flagged" + (flagged > 0 ? " (see " + flag_dir.string() + ")" : "") + ", " +
                 std::to_string(inexhaustive) + " not exhaustive, " + std::to_string(errors) +
                 " over budget",
             false);
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path flag_dir = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance_flags");
  try {
    Tally tally;
    const auto start = Clock::now();
    fat_cycle_tightness(tally);
    const std::vector<Instance> corpus = build_corpus();
    std::cout << "corpus: " << corpus.size() << " instances certified in "
              << fixed(seconds_since(start)) << "s" << std::endl;
    ratio_bound(tally, corpus);
    cut_condition(tally, corpus);
    disjoint_cycles(tally, corpus);
    cycle_extension(tally, corpus);
    matching_normalization(tally, corpus);
    class_one(tally, corpus);
    corollary(tally, corpus);
    oracle_consistency(tally, corpus);
    conjecture(tally, corpus, flag_dir);
    std::cout << "total " << fixed(seconds_since(start)) << "s" << std::endl;
    return tally.failed() ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "acceptance run aborted: " << e.what() << "\n";
    return 2;
  }
}
