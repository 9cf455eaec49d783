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

#include <filesystem>
#include <string>
#include <string_view>

#include "kempe/coloring.hpp"
#include "kempe/multigraph.hpp"

namespace kempe {

// Graph text format:
//   c <comment>
//   p <n> <m>
//   e <u> <v>        (m lines, 0-based, parallel edges repeated)
//
// Coloring text format:
//   t <num_colors>
//   x <edge> <color|->

/// `comment` may span several lines; each becomes a `c` line.
std::string format_graph(const Multigraph& g, std::string_view comment = {});
/// Throws Error(kParse) with the offending line number.
Multigraph parse_graph(std::string_view text);

std::string format_coloring(const PartialColoring& c);
/// Edges without an `x` line are uncolored. Throws Error(kParse).
PartialColoring parse_coloring(std::string_view text, int num_edges);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Graphviz description. Colored edges carry their color as label, uncolored
/// edges are dashed.
std::string emit_dot(const Multigraph& g, const PartialColoring* c = nullptr);

}  // namespace kempe
