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

#include "kempe/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace kempe {
namespace {

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw Error(Errc::kParse, "line " + std::to_string(line) + ": " + what);
}

// Reads the fields of one line; returns false on trailing garbage.
template <typename... T>
bool read_fields(std::istringstream& in, T&... fields) {
  (in >> ... >> fields);
  if (!in) return false;
  std::string rest;
  return !(in >> rest);
}

}  // namespace

std::string format_graph(const Multigraph& g, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) {
    std::istringstream lines{std::string(comment)};
    for (std::string line; std::getline(lines, line);) out << "c " << line << '\n';
  }
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

Multigraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<std::pair<int, int>> header;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (header) parse_error(lineno, "duplicate header");
      int n = 0;
      int m = 0;
      if (!read_fields(fields, n, m) || n < 0 || m < 0) parse_error(lineno, "bad header");
      header.emplace(n, m);
    } else if (tag == "e") {
      if (!header) parse_error(lineno, "edge before header");
      int u = 0;
      int v = 0;
      if (!read_fields(fields, u, v)) parse_error(lineno, "bad edge line");
      edges.emplace_back(u, v);
    } else {
      parse_error(lineno, "unknown line type '" + tag + "'");
    }
  }
  if (!header) parse_error(lineno, "missing header");
  if (static_cast<int>(edges.size()) != header->second) {
    parse_error(lineno, "header announces " + std::to_string(header->second) + " edges, found " +
                            std::to_string(edges.size()));
  }
  return Multigraph::build(header->first, edges);
}

std::string format_coloring(const PartialColoring& c) {
  std::ostringstream out;
  out << "t " << c.num_colors() << '\n';
  for (EdgeId e = 0; e < c.num_edges(); ++e) {
    out << "x " << e << ' ';
    if (c.is_colored(e)) {
      out << c[e];
    } else {
      out << '-';
    }
    out << '\n';
  }
  return out.str();
}

PartialColoring parse_coloring(std::string_view text, int num_edges) {
  std::istringstream in{std::string(text)};
  std::optional<PartialColoring> out;
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    if (tag == "t") {
      int t = 0;
      if (out || !read_fields(fields, t) || t < 0 || t > kMaxColors) parse_error(lineno, "bad palette line");
      out.emplace(t, num_edges);
    } else if (tag == "x") {
      if (!out) parse_error(lineno, "color before palette line");
      int e = 0;
      std::string value;
      if (!read_fields(fields, e, value) || e < 0 || e >= num_edges) parse_error(lineno, "bad color line");
      if (value == "-") {
        out->clear(e);
      } else {
        Color col = 0;
        try {
          std::size_t used = 0;
          col = std::stoi(value, &used);
          if (used != value.size()) parse_error(lineno, "bad color '" + value + "'");
        } catch (const std::logic_error&) {
          parse_error(lineno, "bad color '" + value + "'");
        }
        if (col < 1 || col > out->num_colors()) parse_error(lineno, "color out of palette");
        out->set(e, col);
      }
    } else {
      parse_error(lineno, "unknown line type '" + tag + "'");
    }
  }
  if (!out) parse_error(lineno, "missing palette line");
  return *out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kParse, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::kParse, "cannot write " + path.string());
  out << text;
}

std::string emit_dot(const Multigraph& g, const PartialColoring* c) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) out << "  " << v << ";\n";
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out << "  " << g.edge(e).u << " -- " << g.edge(e).v;
    if (c != nullptr) {
      if (c->is_colored(e)) {
        out << " [label=\"" << (*c)[e] << "\"]";
      } else {
        out << " [style=dashed]";
      }
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace kempe
