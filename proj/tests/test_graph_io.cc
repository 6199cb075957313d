// Copyright 2026 The distgi Authors.
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

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "distgi/graph.h"
#include "distgi/graph_io.h"
#include "test_util.h"

namespace distgi {
namespace {

TEST(Graph6Test, Examples) {
  EXPECT_EQ(parse_graph6("A_"), complete_graph(2));
  EXPECT_EQ(parse_graph6("@"), empty_graph(1));
  EXPECT_EQ(parse_graph6("?"), Graph(0));
  EXPECT_EQ(emit_graph6(parse_graph6("D?{")), "D?{");
  EXPECT_EQ(emit_graph6(cycle_graph(5)), "Dhc");
}

TEST(Graph6Test, AcceptsHeaderAndLineBreak) {
  EXPECT_EQ(parse_graph6(">>graph6<<A_"), complete_graph(2));
  EXPECT_EQ(parse_graph6("A_\n"), complete_graph(2));
}

TEST(Graph6Test, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("A"), ParseError);     // truncated
  EXPECT_THROW(parse_graph6("A__"), ParseError);   // trailing byte
  EXPECT_THROW(parse_graph6("A "), ParseError);    // illegal byte
  EXPECT_THROW(parse_graph6("A`"), ParseError);    // nonzero padding
  EXPECT_THROW(parse_graph6("~??D"), ParseError);  // long size for n < 63
}

TEST(Graph6Test, LongSizePrefixes) {
  for (int n : {62, 63, 64, 200, 3000}) {
    const Graph g = path_graph(n);
    const std::string text = emit_graph6(g);
    EXPECT_EQ(text[0] == '~', n >= 63) << n;
    EXPECT_EQ(parse_graph6(text), g) << n;
    EXPECT_EQ(emit_graph6(parse_graph6(text)), text) << n;
  }
  // The six-byte form is reserved for n >= 258048.
  EXPECT_THROW(parse_graph6("~~???????"), ParseError);
  // 258048 vertices need about 4 GB of edge bits; the size alone must parse
  // and then fail on the missing body.
  EXPECT_THROW(parse_graph6("~~??~???"), ParseError);
}

TEST(Graph6Test, RoundTripIsByteExact) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 500; ++i) {
    const Graph g = testing::random_graph(i % 70, 0.3, rng);
    const std::string text = emit_graph6(g);
    const Graph back = parse_graph6(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(emit_graph6(back), text);
  }
}

TEST(DimacsTest, Examples) {
  EXPECT_EQ(parse_dimacs("p edge 3 2\ne 1 2\ne 2 3\n"), path_graph(3));
  EXPECT_EQ(parse_dimacs("p edge 2 1\ne 1 2\ne 2 1\n"), complete_graph(2));
  EXPECT_THROW(parse_dimacs("p edge 2 1\ne 1 1\n"), ParseError);
}

TEST(DimacsTest, CommentsAndErrors) {
  EXPECT_EQ(parse_dimacs("c hello\np col 2 1\nc mid\ne 2 1\n"),
            complete_graph(2));
  EXPECT_THROW(parse_dimacs("e 1 2\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p edge 2 1\ne 1 3\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p edge 2 1\nx 1 2\n"), ParseError);
  EXPECT_THROW(parse_dimacs(""), ParseError);
}

TEST(DimacsTest, RoundTrip) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    const Graph g = testing::random_graph(i % 20, 0.3, rng);
    EXPECT_EQ(parse_dimacs(emit_dimacs(g)), g);
  }
}

TEST(FormatTest, SniffsByExtensionThenContent) {
  EXPECT_EQ(sniff_format("x.g6", "p edge 1 0"), GraphFormat::kGraph6);
  EXPECT_EQ(sniff_format("x.dimacs", "A_"), GraphFormat::kDimacs);
  EXPECT_EQ(sniff_format("x.col", "A_"), GraphFormat::kDimacs);
  EXPECT_EQ(sniff_format("x", "A_\n"), GraphFormat::kGraph6);
  EXPECT_EQ(sniff_format("x", "p edge 2 1\ne 1 2\n"), GraphFormat::kDimacs);
  EXPECT_EQ(sniff_format("x", "c comment\np edge 1 0\n"),
            GraphFormat::kDimacs);
}

TEST(FormatTest, ParseGraphHonorsOverride) {
  EXPECT_EQ(parse_graph("A_", GraphFormat::kGraph6), complete_graph(2));
  EXPECT_EQ(parse_graph("p edge 2 1\ne 1 2", GraphFormat::kDimacs),
            complete_graph(2));
  EXPECT_THROW(parse_graph("A_", GraphFormat::kDimacs), ParseError);
  EXPECT_EQ(parse_format_name("graph6"), GraphFormat::kGraph6);
  EXPECT_EQ(parse_format_name("dimacs"), GraphFormat::kDimacs);
  EXPECT_EQ(parse_format_name("auto"), GraphFormat::kAuto);
  EXPECT_THROW(parse_format_name("xml"), std::invalid_argument);
}

TEST(FormatTest, MissingFile) {
  EXPECT_THROW(read_graph_file("/nonexistent/graph.g6"), std::runtime_error);
}

}  // namespace
}  // namespace distgi
