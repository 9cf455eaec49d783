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

// kempe: command-line front end for the edge-coloring oracles and the
// recoloring procedures.
//
// Exit status: 0 success, 1 a verified property failed, 2 usage, input or
// budget error.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kempe/kempe.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitError = 2;

struct Globals {
  std::uint64_t node_budget = kempe::kDefaultNodeLimit;
  std::uint64_t seed = 0;

  kempe::SearchBudget budget() const { return {node_budget}; }
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    kempe::write_text_file(path, text);
  }
}

kempe::Multigraph load_graph(const std::string& path) {
  return kempe::parse_graph(kempe::read_text_file(path));
}

// A user-supplied coloring, or an optimal one from the oracle.
kempe::MaxSubgraphCertificate load_certificate(const kempe::Multigraph& g,
                                               const std::string& coloring_path,
                                               const Globals& globals) {
  if (coloring_path.empty()) return kempe::max_delta_subgraph(g, globals.budget());
  kempe::MaxSubgraphCertificate cert;
  cert.coloring = kempe::parse_coloring(kempe::read_text_file(coloring_path), g.num_edges());
  if (cert.coloring.num_colors() != g.max_degree()) {
    throw kempe::Error(kempe::Errc::kBadColors, "coloring palette must equal the maximum degree");
  }
  if (!kempe::is_proper(cert.coloring, g)) {
    throw kempe::Error(kempe::Errc::kBadColors, "coloring is not proper");
  }
  cert.size = cert.coloring.num_colored();
  return cert;
}

std::vector<std::vector<kempe::EdgeId>> parse_cycles(const std::string& text) {
  std::vector<std::vector<kempe::EdgeId>> out;
  std::stringstream groups(text);
  for (std::string group; std::getline(groups, group, ';');) {
    std::vector<kempe::EdgeId> cycle;
    std::stringstream ids(group);
    for (std::string id; std::getline(ids, id, ',');) {
      try {
        cycle.push_back(std::stoi(id));
      } catch (const std::logic_error&) {
        throw kempe::Error(kempe::Errc::kParse, "bad edge id '" + id + "'");
      }
    }
    if (!cycle.empty()) out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<fs::path> corpus_files(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::optional<kempe::Family> family_named(const std::string& name) {
  static const std::map<std::string, kempe::Family> names = {
      {"fat-cycle", kempe::Family::kFatCycle}, {"hr-chain", kempe::Family::kHrChain},
      {"flower", kempe::Family::kFlower},      {"figure1", kempe::Family::kFigure1},
      {"petersen", kempe::Family::kPetersen},  {"random-class2", kempe::Family::kRandomClassTwo}};
  const auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

json explore_json(const kempe::ConjectureRecord& rec, const std::string& instance) {
  return {{"instance", instance},         {"k", rec.k},
          {"achieved", rec.achieved},     {"equal", rec.equal()},
          {"subgraphs_tried", rec.subgraphs_tried}, {"exhaustive", rec.exhaustive}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum Δ-edge-colorable subgraphs, Kempe cycles and recoloring procedures"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--node-budget", globals.node_budget, "Search-tree node limit for the exact oracles")
      ->capture_default_str();
  app.add_option("--seed", globals.seed, "Seed for randomized steps")->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "Write a generated graph");
  std::string family;
  kempe::FamilySpec spec;
  std::string out_path;
  std::string coloring_out;
  gen->add_option("family", family, "fat-cycle | hr-chain | flower | figure1 | petersen | random-class2")
      ->required();
  gen->add_option("-k", spec.k, "Family parameter (k, or r for hr-chain)")->capture_default_str();
  gen->add_option("--n", spec.n, "Vertex count for random-class2");
  gen->add_option("--mu-max", spec.mu_max, "Largest multiplicity for random-class2")->capture_default_str();
  gen->add_option("-o,--output", out_path, "Graph file (default stdout)");
  gen->add_option("--coloring-out", coloring_out, "figure1 only: also write its coloring");

  // color
  auto* color = app.add_subcommand("color", "Chromatic index with a witness coloring");
  std::string graph_path;
  std::string report_path;
  color->add_option("graph", graph_path)->required();
  color->add_option("-o,--output", out_path, "Coloring file");
  color->add_option("--report", report_path, "JSON report");

  // max-subgraph
  auto* maxsub = app.add_subcommand("max-subgraph", "Maximum Δ-edge-colorable subgraph");
  std::string dot_path;
  maxsub->add_option("graph", graph_path)->required();
  maxsub->add_option("-o,--output", out_path, "Coloring file");
  maxsub->add_option("--report", report_path, "JSON report");
  maxsub->add_option("--dot", dot_path, "Graphviz output");

  // assign-cycles
  auto* assign = app.add_subcommand("assign-cycles", "Pairwise edge-disjoint odd cycles");
  std::string coloring_path;
  assign->add_option("graph", graph_path)->required();
  assign->add_option("--coloring", coloring_path, "Maximum coloring (default: computed)");
  assign->add_option("-o,--output", out_path, "JSON output");

  // extend
  auto* extend = app.add_subcommand("extend", "Recolor so that given cycles are fully colored");
  std::string cycles_text;
  std::string two_factor_text;
  extend->add_option("graph", graph_path)->required();
  extend->add_option("--coloring", coloring_path, "Maximum coloring (default: computed)");
  auto* cycles_opt = extend->add_option("--cycles", cycles_text, "Edge ids, e.g. 0,1,2;5,6,7");
  auto* factor_opt = extend->add_option("--two-factor", two_factor_text, "Edge ids of a 2-factor");
  cycles_opt->excludes(factor_opt);
  extend->add_option("-o,--output", out_path, "Coloring file");
  extend->add_option("--dot", dot_path, "Graphviz output");

  // normalize
  auto* normalize = app.add_subcommand("normalize", "Make the uncolored edges a matching");
  normalize->add_option("graph", graph_path)->required();
  normalize->add_option("--coloring", coloring_path, "Maximum coloring (default: computed)");
  normalize->add_option("-o,--output", out_path, "Coloring file");

  // verify
  auto* verify = app.add_subcommand("verify", "Check properties over a corpus directory");
  std::string corpus;
  std::string theorems = "cut,ratio,class1,matching,assignment";
  verify->add_option("--corpus", corpus, "Directory of graph files")->required();
  verify->add_option("--theorems", theorems, "Comma-separated property names")->capture_default_str();
  verify->add_option("-o,--output", out_path, "JSON Lines output (default stdout)");

  // explore
  auto* explore = app.add_subcommand("explore", "Compare χ'(G) - Δ(G) with χ' of the uncolored part");
  std::string flag_dir;
  explore->add_option("graph", graph_path, "Single graph file");
  explore->add_option("--corpus", corpus, "Directory of graph files");
  explore->add_option("-o,--output", out_path, "JSON Lines output (default stdout)");
  explore->add_option("--flag-dir", flag_dir, "Directory for witness files of unequal instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (gen->parsed()) {
      const auto fam = family_named(family);
      if (!fam) throw CLI::ValidationError("family", "unknown family '" + family + "'");
      spec.family = *fam;
      spec.seed = globals.seed;
      const kempe::Multigraph g = kempe::generate(spec, globals.budget());
      emit(out_path, kempe::format_graph(g, kempe::describe(spec)));
      if (!coloring_out.empty()) {
        if (spec.family != kempe::Family::kFigure1) {
          throw CLI::ValidationError("--coloring-out", "only figure1 carries a coloring");
        }
        kempe::write_text_file(coloring_out, kempe::format_coloring(kempe::figure1().coloring));
      }
      return kExitOk;
    }

    if (color->parsed()) {
      const kempe::Multigraph g = load_graph(graph_path);
      const auto chi = kempe::chromatic_index(g, globals.budget());
      if (!out_path.empty()) kempe::write_text_file(out_path, kempe::format_coloring(chi.witness));
      const json r = {{"chi", chi.chi}, {"delta", chi.delta}, {"class", chi.class_two() ? 2 : 1}};
      if (!report_path.empty()) kempe::write_text_file(report_path, r.dump(2) + "\n");
      std::cout << r.dump() << "\n";
      return kExitOk;
    }

    if (maxsub->parsed()) {
      const kempe::Multigraph g = load_graph(graph_path);
      const auto chi = kempe::chromatic_index(g, globals.budget());
      const auto cert = kempe::max_delta_subgraph(g, globals.budget());
      std::optional<int> rp;
      if (chi.chi <= kempe::kRPrimeMaxChi && g.num_edges() <= kempe::kRPrimeMaxEdges) {
        rp = kempe::r_prime(g, chi, globals.budget());
      }
      const json r = kempe::certificate_report(chi, cert, rp);
      if (!out_path.empty()) kempe::write_text_file(out_path, kempe::format_coloring(cert.coloring));
      if (!report_path.empty()) kempe::write_text_file(report_path, r.dump(2) + "\n");
      if (!dot_path.empty()) kempe::write_text_file(dot_path, kempe::emit_dot(g, &cert.coloring));
      std::cout << r.dump() << "\n";
      return kExitOk;
    }

    if (assign->parsed()) {
      const kempe::Multigraph g = load_graph(graph_path);
      const auto cert = load_certificate(g, coloring_path, globals);
      const auto a = kempe::assign_disjoint_cycles(g, cert);
      json entries = json::array();
      for (const auto& e : a.entries) {
        entries.push_back({{"edge", e.edge}, {"alpha", e.alpha}, {"beta", e.beta},
                           {"cycle", e.cycle.cycle}});
      }
      const json r = {{"entries", entries}, {"pairwise_disjoint", a.pairwise_disjoint()}};
      emit(out_path, r.dump(2) + "\n");
      return a.pairwise_disjoint() ? kExitOk : kExitFailed;
    }

    if (extend->parsed()) {
      const kempe::Multigraph g = load_graph(graph_path);
      const auto cert = load_certificate(g, coloring_path, globals);
      kempe::MaxSubgraphCertificate out;
      if (!two_factor_text.empty()) {
        const auto ids = parse_cycles(two_factor_text);
        std::vector<kempe::EdgeId> flat;
        for (const auto& part : ids) flat.insert(flat.end(), part.begin(), part.end());
        out = kempe::extend_two_factor(g, flat, cert);
      } else {
        out = kempe::extend_cycles(g, parse_cycles(cycles_text), cert);
      }
      emit(out_path, kempe::format_coloring(out.coloring));
      if (!dot_path.empty()) kempe::write_text_file(dot_path, kempe::emit_dot(g, &out.coloring));
      return kExitOk;
    }

    if (normalize->parsed()) {
      const kempe::Multigraph g = load_graph(graph_path);
      const auto cert = load_certificate(g, coloring_path, globals);
      emit(out_path, kempe::format_coloring(kempe::normalize_to_matching(g, cert).coloring));
      return kExitOk;
    }

    if (verify->parsed()) {
      std::vector<std::string> names;
      std::stringstream list(theorems);
      for (std::string name; std::getline(list, name, ',');) {
        if (!name.empty()) names.push_back(name);
      }
      std::ostringstream lines;
      bool any_failed = false;
      for (const auto& file : corpus_files(corpus)) {
        const kempe::Multigraph g = load_graph(file.string());
        for (const auto& r : kempe::verify_instance(g, file.stem().string(), names, globals.budget())) {
          any_failed = any_failed || r.failed();
          lines << kempe::to_json(r).dump() << "\n";
        }
      }
      emit(out_path, lines.str());
      return any_failed ? kExitFailed : kExitOk;
    }

    if (explore->parsed()) {
      std::vector<fs::path> files;
      if (!graph_path.empty()) files.emplace_back(graph_path);
      if (!corpus.empty()) {
        const auto more = corpus_files(corpus);
        files.insert(files.end(), more.begin(), more.end());
      }
      if (files.empty()) throw CLI::ValidationError("explore", "give a graph file or --corpus");
      std::ostringstream lines;
      for (const auto& file : files) {
        const kempe::Multigraph g = load_graph(file.string());
        const auto cert = kempe::max_delta_subgraph(g, globals.budget());
        const auto rec = kempe::explore_conjecture(g, cert, globals.budget());
        const std::string instance = file.stem().string();
        lines << explore_json(rec, instance).dump() << "\n";
        if (!rec.equal() && !flag_dir.empty()) {
          fs::create_directories(flag_dir);
          json w = explore_json(rec, instance);
          w["graph"] = kempe::format_graph(g);
          w["coloring"] = kempe::coloring_json(rec.best);
          kempe::write_text_file(fs::path(flag_dir) / (instance + ".json"), w.dump(2) + "\n");
        }
      }
      emit(out_path, lines.str());
      return kExitOk;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
