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

#include "kempe/report.hpp"

namespace kempe {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kPass: return "pass";
    case Outcome::kFail: return "fail";
    case Outcome::kVacuous: return "vacuous";
  }
  return "unknown";
}

nlohmann::json to_json(const VerificationReport& r) {
  return {{"theorem", r.theorem},
          {"instance", r.instance},
          {"outcome", std::string(to_string(r.outcome))},
          {"witness", r.witness}};
}

nlohmann::json certificate_report(const ChromaticCertificate& chi,
                                  const MaxSubgraphCertificate& cert,
                                  std::optional<int> r_prime, std::string_view r_prime_status) {
  nlohmann::json j = {{"chi", chi.chi},
                      {"delta", chi.delta},
                      {"class", chi.class_two() ? 2 : 1},
                      {"max_subgraph_size", cert.size},
                      {"r_e", r_e(cert)},
                      {"r_prime", nullptr},
                      {"optimal", cert.optimal}};
  if (r_prime) {
    j["r_prime"] = *r_prime;
  } else {
    j["r_prime_status"] = std::string(r_prime_status);
  }
  return j;
}

nlohmann::json coloring_json(const PartialColoring& c) {
  nlohmann::json colors = nlohmann::json::array();
  for (EdgeId e = 0; e < c.num_edges(); ++e) {
    if (c.is_colored(e)) {
      colors.push_back(c[e]);
    } else {
      colors.push_back(nullptr);
    }
  }
  return {{"t", c.num_colors()}, {"colors", colors}};
}

}  // namespace kempe
