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
#include <filesystem>
#include <string>

#include "kempe/error.hpp"
#include "kempe/exact.hpp"
#include "kempe/generators.hpp"
#include "kempe/io.hpp"
#include "kempe/report.hpp"

namespace kempe {
namespace {

Errc parse_code(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::kOutOfRange;
}

TEST(GraphFormat, RoundTripKeepsIds) {
  for (const Multigraph& g : {petersen(), fat_cycle(2), hr_chain(1), flower(3), figure1().graph}) {
    const std::string text = format_graph(g, "test instance");
    const Multigraph back = parse_graph(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(format_graph(back, "test instance"), text);
  }
}

TEST(GraphFormat, Layout) {
  const std::string text = format_graph(Multigraph::build(2, {{0, 1}, {1, 0}}), "two\nlines");
  EXPECT_EQ(text, "c two\nc lines\np 2 2\ne 0 1\ne 1 0\n");
}

TEST(GraphFormat, CommentsAndBlankLines) {
  const Multigraph g = parse_graph("c hello\n\np 3 2\nc mid\ne 0 1\n  e 1 2\n");
  EXPECT_EQ(g.num_edges(), 2);
}

TEST(GraphFormat, Errors) {
  EXPECT_EQ(parse_code("e 0 1\n"), Errc::kParse);
  EXPECT_EQ(parse_code("p 2 2\ne 0 1\n"), Errc::kParse);
  EXPECT_EQ(parse_code("p 2 1\ne 0\n"), Errc::kParse);
  EXPECT_EQ(parse_code("p 2 1\ne 0 1 7\n"), Errc::kParse);
  EXPECT_EQ(parse_code("p 2 1\nq 0 1\n"), Errc::kParse);
  EXPECT_EQ(parse_code("p 2 0\np 2 0\n"), Errc::kParse);
  EXPECT_EQ(parse_code(""), Errc::kParse);
  EXPECT_EQ(parse_code("p 2 1\ne 1 1\n"), Errc::kLoopEdge);
  EXPECT_EQ(parse_code("p 2 1\ne 0 2\n"), Errc::kBadVertex);
  try {
    parse_graph("p 2 1\n\nx\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(ColoringFormat, RoundTrip) {
  const auto f = figure1();
  const std::string text = format_coloring(f.coloring);
  EXPECT_EQ(text, "t 4\nx 0 1\nx 1 2\nx 2 3\nx 3 -\nx 4 4\nx 5 -\n");
  EXPECT_EQ(parse_coloring(text, 6), f.coloring);
}

TEST(ColoringFormat, MissingLinesAreUncolored) {
  const PartialColoring c = parse_coloring("t 3\nx 2 3\n", 4);
  EXPECT_EQ(c.num_colored(), 1);
  EXPECT_EQ(c[2], 3);
}

TEST(ColoringFormat, Errors) {
  EXPECT_THROW(parse_coloring("x 0 1\n", 2), Error);
  EXPECT_THROW(parse_coloring("t 2\nx 0 3\n", 2), Error);
  EXPECT_THROW(parse_coloring("t 2\nx 5 1\n", 2), Error);
  EXPECT_THROW(parse_coloring("t 2\nx 0 1a\n", 2), Error);
  EXPECT_THROW(parse_coloring("t 2\nt 2\n", 2), Error);
  EXPECT_THROW(parse_coloring("", 2), Error);
}

TEST(Files, WriteThenRead) {
  const auto path = std::filesystem::temp_directory_path() / "kempe_io_test.txt";
  write_text_file(path, "p 0 0\n");
  EXPECT_EQ(read_text_file(path), "p 0 0\n");
  std::filesystem::remove(path);
  EXPECT_THROW(read_text_file(path), Error);
}

TEST(Dot, Triangle) {
  const std::string dot = emit_dot(complete_graph(3));
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n'), 8);
  EXPECT_EQ(dot.find("graph G {"), 0U);
  EXPECT_NE(dot.find("0 -- 1;"), std::string::npos);
}

TEST(Dot, Figure1LabelsAndDashes) {
  const auto f = figure1();
  const std::string dot = emit_dot(f.graph, &f.coloring);
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = dot.find(needle); pos != std::string::npos; pos = dot.find(needle, pos + 1)) ++n;
    return n;
  };
  EXPECT_EQ(count("label="), 4U);
  EXPECT_EQ(count("style=dashed"), 2U);
}

TEST(Dot, EmptyGraph) {
  EXPECT_EQ(emit_dot(Multigraph::build(0, std::vector<std::pair<int, int>>{})), "graph G {\n}\n");
}

TEST(Report, Json) {
  VerificationReport r;
  r.theorem = "ratio";
  r.instance = "c5";
  r.outcome = Outcome::kPass;
  const auto j = to_json(r);
  EXPECT_EQ(j.at("theorem"), "ratio");
  EXPECT_EQ(j.at("instance"), "c5");
  EXPECT_EQ(j.at("outcome"), "pass");
  EXPECT_TRUE(j.at("witness").is_null());
  EXPECT_EQ(to_string(Outcome::kVacuous), "vacuous");
}

TEST(Report, Certificate) {
  const Multigraph g = fat_cycle(1);
  const auto j = certificate_report(chromatic_index(g), max_delta_subgraph(g), r_prime(g));
  EXPECT_EQ(j.at("max_subgraph_size"), 4);
  EXPECT_EQ(j.at("r_e"), 2);
  EXPECT_EQ(j.at("r_prime"), 2);
  const auto out = certificate_report(chromatic_index(g), max_delta_subgraph(g), std::nullopt);
  EXPECT_TRUE(out.at("r_prime").is_null());
}

}  // namespace
}  // namespace kempe
