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
#include <string_view>

#include <nlohmann/json.hpp>

#include "kempe/exact.hpp"

namespace kempe {

enum class Outcome { kPass, kFail, kVacuous };

std::string_view to_string(Outcome o);

/// Result of checking one property on one instance. A failing report carries
/// a witness (a vertex set, an edge pair, a coloring) that can be re-checked
/// on its own.
struct VerificationReport {
  std::string theorem;
  std::string instance;
  Outcome outcome = Outcome::kVacuous;
  nlohmann::json witness;  // null unless there is something to show

  bool failed() const { return outcome == Outcome::kFail; }
};

/// {"theorem", "instance", "outcome", "witness"}
nlohmann::json to_json(const VerificationReport& r);

/// {"chi", "delta", "class", "max_subgraph_size", "r_e", "r_prime", "optimal"}.
/// A missing r' is written as null with an "r_prime_status" string.
nlohmann::json certificate_report(const ChromaticCertificate& chi,
                                  const MaxSubgraphCertificate& cert,
                                  std::optional<int> r_prime,
                                  std::string_view r_prime_status = "oracle out of range");

nlohmann::json coloring_json(const PartialColoring& c);

}  // namespace kempe
