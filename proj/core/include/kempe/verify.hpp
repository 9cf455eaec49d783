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

#include <string>
#include <string_view>
#include <vector>

#include "kempe/exact.hpp"
#include "kempe/report.hpp"

namespace kempe {

/// Property names accepted by verify_instance().
std::vector<std::string> known_theorems();

/// Computes a maximum certificate for `g` once and checks each named
/// property against it: cut, ratio, class1, matching, assignment,
/// intersection, corollary, rprime. Properties that only apply to simple
/// graphs come back vacuous on multigraphs. Throws Error(kParse) for an
/// unknown name.
std::vector<VerificationReport> verify_instance(const Multigraph& g, std::string_view instance,
                                                const std::vector<std::string>& theorems,
                                                SearchBudget budget = {});

/// Same, against a given certificate.
std::vector<VerificationReport> verify_instance(const Multigraph& g, std::string_view instance,
                                                const MaxSubgraphCertificate& cert,
                                                const std::vector<std::string>& theorems,
                                                SearchBudget budget = {});

}  // namespace kempe
