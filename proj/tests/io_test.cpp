// Copyright 2026 The Amity Authors
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

#include "amity/io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "amity/cycles.hpp"
#include "amity/errors.hpp"
#include "amity/generators.hpp"

namespace amity {
namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(EdgeListTest, Triangle) {
  Digraph g = parse_edge_list("3 3\n0 1\n1 2\n2 0\n");
  EXPECT_EQ(g, directed_cycle(3));
}

TEST(EdgeListTest, LineNumberedErrors) {
  EXPECT_EQ(error_line("2 1\n0 0\n"), 2u);
  EXPECT_EQ(error_line("2 2\n0 1\n0 1\n"), 3u);
  EXPECT_EQ(error_line("2 1\n0 2\n"), 2u);
  EXPECT_EQ(error_line("2 1\nzero one\n"), 2u);
  EXPECT_EQ(error_line("2\n"), 1u);
  EXPECT_EQ(error_line("3 1\n0 1\n1 2\n"), 3u);
  EXPECT_EQ(error_line("3 2\n0 1\n"), 3u);
  EXPECT_EQ(error_line(""), 1u);
}

TEST(EdgeListTest, ErrorMessagesNameTheProblem) {
  try {
    parse_edge_list("2 1\n0 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
    EXPECT_EQ(e.code(), "parse_error");
  }
  try {
    parse_edge_list("2 2\n0 1\n0 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
  }
}

TEST(EdgeListTest, CommentsAndBlankLines) {
  Digraph g = parse_edge_list("# a triangle\n3 3\n\n0 1\n# middle\n1 2\n2 0\n");
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(EdgeListTest, RoundTripsGeneratedDigraphs) {
  std::vector<Digraph> zoo{directed_cycle(6),
                           complete_digraph(5),
                           circulant(7, {1, 2, 3}),
                           random_d_out(12, 3, 5),
                           random_regular(20, 4, 1),
                           random_layered(14, 3, 3, 2),
                           dominated_cubic_same_orientation(),
                           dominated_cubic_opposite_orientation(),
                           Digraph()};
  for (const auto& g : zoo) {
    std::string text = serialize_edge_list(g);
    EXPECT_EQ(parse_edge_list(text), g);
    EXPECT_EQ(serialize_edge_list(parse_edge_list(text)), text);
  }
}

TEST(DocumentTest, RoundTripsBitExactly) {
  GraphDocument doc{"fig", circulant(5, {1, 2}), {{"d", "2"}, {"source", "circulant(5,1,2)"}}};
  std::string text = serialize_document(doc);
  auto back = parse_document(text);
  EXPECT_EQ(back.name, "fig");
  EXPECT_EQ(back.metadata, doc.metadata);
  EXPECT_EQ(back.graph, doc.graph);
  EXPECT_EQ(serialize_document(back), text);
}

TEST(DotTest, NamedVertices) {
  Digraph g = parse_dot("digraph g {\n  a -> b;\n  b -> c -> a;\n}\n");
  EXPECT_EQ(g.size(), 3u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_TRUE(g.has_edge(2, 0));
}

TEST(DotTest, NumericIdsKeepValues) {
  Digraph g = parse_dot("digraph { 2 -> 0; 0 -> 1; 1 -> 2 }");
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_EQ(g.size(), 3u);
}

TEST(DotTest, Errors) {
  EXPECT_THROW(parse_dot("graph { a -- b }"), ParseError);
  EXPECT_THROW(parse_dot("digraph { a -> a }"), ParseError);
  EXPECT_THROW(parse_dot("digraph { a -> b; a -> b }"), ParseError);
  EXPECT_THROW(parse_dot("digraph { a -> b [color=red] }"), ParseError);
  EXPECT_THROW(parse_dot("digraph { a -> b"), ParseError);
}

TEST(PartitionFileTest, RoundTrip) {
  Partition p = Partition::from_mask(5, 0b10110);
  EXPECT_EQ(parse_partition(serialize_partition(p), 5), p);
  EXPECT_THROW(parse_partition("0\n2\n"), ParseError);
  EXPECT_THROW(parse_partition("0\n1\n", 3), ParseError);
}

TEST(VertexListTest, Parses) {
  EXPECT_EQ(parse_vertex_list("0,3, 5"), (std::vector<VertexId>{0, 3, 5}));
  EXPECT_THROW(parse_vertex_list("0,,1"), ParseError);
  EXPECT_THROW(parse_vertex_list("a"), ParseError);
}

TEST(GenerateTest, NamedInstances) {
  EXPECT_EQ(generate("cycle(6)", 0), directed_cycle(6));
  Digraph k5 = generate("complete(5)", 0);
  EXPECT_EQ(min_out_degree(k5), 4u);
  EXPECT_EQ(generate("circulant(7,1,2,3)", 0), circulant(7, {1, 2, 3}));
  EXPECT_EQ(generate(" disjoint_union( cycle(3), complete(3) ) ", 0).size(), 6u);
}

TEST(GenerateTest, DominatedCubicAliases) {
  Digraph right = generate("lemma46_right", 0);
  EXPECT_EQ(right, generate("dominated_cubic_opposite", 0));
  EXPECT_EQ(right.size(), 7u);
  for (VertexId v = 0; v < right.size(); ++v) EXPECT_EQ(right.out_degree(v), 3u);
  for (const auto& [u, v] : right.edges()) {
    EXPECT_FALSE(right.has_edge(v, u));
    EXPECT_TRUE(is_dominated(right, u, v));
  }
  EXPECT_EQ(generate("lemma46_left", 0).size(), 8u);
}

TEST(GenerateTest, RandomKindsAreSeeded) {
  EXPECT_EQ(generate("random_d_out(12,3)", 4), random_d_out(12, 3, 4));
  EXPECT_EQ(generate("random_regular(10,3)", 4), random_regular(10, 3, 4));
  EXPECT_EQ(generate("random_layered(14,3,3)", 4), random_layered(14, 3, 3, 4));
  EXPECT_NE(generate("random_d_out(12,3)", 4), generate("random_d_out(12,3)", 5));
}

TEST(GenerateTest, Errors) {
  EXPECT_THROW(generate("random_d_out(4,4)", 0), PreconditionError);
  EXPECT_THROW(generate("hypercube(3)", 0), PreconditionError);
  EXPECT_THROW(generate("cycle(", 0), ParseError);
  EXPECT_THROW(generate("cycle(3) x", 0), ParseError);
  EXPECT_THROW(generate("cycle(cycle(3))", 0), PreconditionError);
}

TEST(LoadGraphTest, FilesAndSpecs) {
  auto dir = std::filesystem::temp_directory_path();
  auto edge_path = (dir / "amity_io_test_edges.txt").string();
  auto dot_path = (dir / "amity_io_test.dot").string();
  std::ofstream(edge_path) << serialize_edge_list(complete_digraph(3));
  std::ofstream(dot_path) << "// comment\ndigraph { 0 -> 1; 1 -> 0 }\n";
  EXPECT_EQ(load_graph(edge_path, 0), complete_digraph(3));
  EXPECT_EQ(load_graph(dot_path, 0).edge_count(), 2u);
  EXPECT_EQ(load_graph("cycle(4)", 0), directed_cycle(4));
  std::remove(edge_path.c_str());
  std::remove(dot_path.c_str());
}

TEST(DigestTest, StableAndSensitive) {
  EXPECT_EQ(digest(directed_cycle(3)), digest(parse_edge_list("3 3\n0 1\n1 2\n2 0\n")));
  EXPECT_NE(digest(directed_cycle(3)), digest(complete_digraph(3)));
  EXPECT_EQ(digest(directed_cycle(3)).size(), 16u);
  // FNV-1a 64 of the empty-graph text "0 0\n".
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : std::string("0 0\n")) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char expected[17];
  std::snprintf(expected, sizeof(expected), "%016llx", static_cast<unsigned long long>(h));
  EXPECT_EQ(digest(Digraph()), expected);
}

}  // namespace
}  // namespace amity
