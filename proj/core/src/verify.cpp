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

#include "kempe/verify.hpp"

#include <algorithm>

#include "kempe/structure.hpp"

namespace kempe {
namespace {

VerificationReport vacuous(std::string theorem, std::string_view why) {
  VerificationReport r;
  r.theorem = std::move(theorem);
  r.witness = {{"reason", std::string(why)}};
  return r;
}

VerificationReport check_assignment(const Multigraph& g, const MaxSubgraphCertificate& cert) {
  VerificationReport r;
  r.theorem = "assignment";
  if (cert.uncolored() == 0) return r;
  const CycleAssignment a = assign_disjoint_cycles(g, cert);
  r.outcome = Outcome::kPass;
  if (static_cast<int>(a.entries.size()) != cert.uncolored()) {
    r.outcome = Outcome::kFail;
    r.witness = {{"reason", "entry count differs from the number of uncolored edges"}};
    return r;
  }
  for (const auto& entry : a.entries) {
    if (!is_valid_uncolored_cycle(cert.coloring, g, entry.cycle)) {
      r.outcome = Outcome::kFail;
      r.witness = {{"edge", entry.edge}, {"cycle", entry.cycle.cycle}};
      return r;
    }
  }
  if (!a.pairwise_disjoint()) {
    r.outcome = Outcome::kFail;
    nlohmann::json cycles = nlohmann::json::array();
    for (const auto& entry : a.entries) {
      cycles.push_back({{"edge", entry.edge}, {"alpha", entry.alpha}, {"beta", entry.beta},
                        {"cycle", entry.cycle.cycle}});
    }
    r.witness = {{"cycles", cycles}, {"coloring", coloring_json(cert.coloring)}};
  }
  return r;
}

VerificationReport run_one(const Multigraph& g, const MaxSubgraphCertificate& cert,
                           const std::string& name, SearchBudget budget) {
  if (name == "cut") return check_cut_condition(g, cert);
  if (name == "ratio") return check_ratio_bound(g, cert);
  if (name == "class1") {
    if (!g.is_simple()) return vacuous(name, "multigraph");
    return check_class_one(g, cert, budget);
  }
  if (name == "matching") {
    if (!g.is_simple()) return vacuous(name, "multigraph");
    VerificationReport r = check_matching_complement(g, normalize_to_matching(g, cert));
    if (!r.failed() && cert.uncolored() == 0) r.outcome = Outcome::kVacuous;
    return r;
  }
  if (name == "assignment") return check_assignment(g, cert);
  if (name == "intersection") return check_cycle_intersection_lemma(g, cert);
  if (name == "corollary") return check_corollary_bounds(g, cert, budget);
  if (name == "rprime") return check_re_equals_rprime(g, budget);
  throw Error(Errc::kParse, "unknown property '" + name + "'");
}

}  // namespace

std::vector<std::string> known_theorems() {
  return {"cut", "ratio", "class1", "matching", "assignment", "intersection", "corollary", "rprime"};
}

std::vector<VerificationReport> verify_instance(const Multigraph& g, std::string_view instance,
                                                const MaxSubgraphCertificate& cert,
                                                const std::vector<std::string>& theorems,
                                                SearchBudget budget) {
  const auto known = known_theorems();
  for (const auto& name : theorems) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw Error(Errc::kParse, "unknown property '" + name + "'");
    }
  }
  std::vector<VerificationReport> out;
  for (const auto& name : theorems) {
    VerificationReport r = run_one(g, cert, name, budget);
    r.instance = std::string(instance);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> verify_instance(const Multigraph& g, std::string_view instance,
                                                const std::vector<std::string>& theorems,
                                                SearchBudget budget) {
  return verify_instance(g, instance, max_delta_subgraph(g, budget), theorems, budget);
}

}  // namespace kempe
