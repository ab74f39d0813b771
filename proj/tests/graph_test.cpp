#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "reference.hpp"
#include "rvc/error.hpp"
#include "rvc/generators.hpp"
#include "rvc/graph_io.hpp"
#include "rvc/structure.hpp"

namespace rvc {
namespace {

using fixtures::bowtie;
using fixtures::graph_of;

TEST(Graph, CollapsesDuplicatesAndSortsAdjacency) {
  Graph g = graph_of(4, {{2, 1}, {1, 2}, {0, 3}, {1, 0}});
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(2, 3));
  ASSERT_EQ(g.neighbors(1).size(), 2u);
  EXPECT_EQ(g.neighbors(1)[0], 0);
  EXPECT_EQ(g.neighbors(1)[1], 2);
}

TEST(Graph, RejectsSelfLoopsAndBadIds) {
  EXPECT_THROW(graph_of(3, {{1, 1}}), PreconditionError);
  EXPECT_THROW(graph_of(3, {{0, 3}}), PreconditionError);
  EXPECT_THROW(graph_of(3, {{-1, 0}}), PreconditionError);
}

TEST(Graph, WithAndWithoutEdges) {
  Graph p = make_path(4);
  std::vector<Edge> extra{{3, 0}};
  Graph c = p.with_edges(extra);
  EXPECT_EQ(c, make_cycle(4));
  EXPECT_EQ(c.without_edge({0, 3}), p);
}

TEST(GraphIo, Triangle) {
  auto parsed = parse_graph("0 1\n1 2\n2 0");
  EXPECT_EQ(parsed.graph, make_cycle(3));
  EXPECT_TRUE(parsed.warnings.empty());
}

TEST(GraphIo, DeclaredVertexCount) {
  auto parsed = parse_graph("vertices 4\n0 1\n");
  EXPECT_EQ(parsed.graph.vertex_count(), 4);
  EXPECT_EQ(parsed.graph.edge_count(), 1u);
  EXPECT_FALSE(is_connected(parsed.graph));
}

TEST(GraphIo, CompleteGraphOnFour) {
  auto parsed = parse_graph("0 1\n1 2\n2 3\n3 0\n0 2\n1 3");
  EXPECT_EQ(parsed.graph, make_complete(4));
}

TEST(GraphIo, CommentsAndBlankLines) {
  auto parsed = parse_graph("# header\n\n0 1   # trailing\n  1 2\n");
  EXPECT_EQ(parsed.graph, make_path(3));
}

TEST(GraphIo, DuplicateEdgeIsAWarning) {
  auto parsed = parse_graph("0 1\n1 0\n");
  EXPECT_EQ(parsed.graph.edge_count(), 1u);
  EXPECT_EQ(parsed.warnings.size(), 1u);
}

TEST(GraphIo, MalformedInputReportsLine) {
  try {
    parse_graph("0 1\n1 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(parse_graph("0 -1\n"), ParseError);
  EXPECT_THROW(parse_graph("2 2\n"), ParseError);
  EXPECT_THROW(parse_graph("0 1 2\n"), ParseError);
  EXPECT_THROW(parse_graph("vertices 2\n0 5\n"), ParseError);
  EXPECT_THROW(parse_graph("0 1\nvertices 3\n"), ParseError);
}

TEST(GraphIo, SerializeRoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = random_connected(12, 6, seed);
    auto text = serialize_graph(g);
    EXPECT_EQ(parse_graph(text).graph, g) << text;
  }
  Graph isolated(5);
  EXPECT_EQ(parse_graph(serialize_graph(isolated)).graph, isolated);
}

TEST(Structure, Connectivity) {
  EXPECT_TRUE(is_connected(make_cycle(3)));
  EXPECT_FALSE(is_connected(graph_of(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_connected(Graph(1)));
  EXPECT_TRUE(is_connected(Graph(0)));
}

TEST(Structure, Diameter) {
  EXPECT_EQ(diameter(make_cycle(5)), 2);
  EXPECT_EQ(diameter(make_complete(4)), 1);
  EXPECT_EQ(diameter(make_path(5)), 4);
  EXPECT_EQ(diameter(Graph(1)), 0);
  EXPECT_THROW(diameter(graph_of(4, {{0, 1}, {2, 3}})), PreconditionError);
}

TEST(Structure, DiameterMatchesIndependentBfs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = random_connected(15, static_cast<int>(seed % 7), seed);
    int expected = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      auto d = reference::bfs(g, v);
      expected = std::max(expected, *std::max_element(d.begin(), d.end()));
    }
    EXPECT_EQ(diameter(g), expected) << "seed " << seed;
  }
}

TEST(Structure, CutVertices) {
  EXPECT_EQ(cut_vertices(bowtie()), std::vector<Vertex>{2});
  EXPECT_TRUE(cut_vertices(make_cycle(6)).empty());
  EXPECT_EQ(cut_vertices(make_path(4)), (std::vector<Vertex>{1, 2}));
}

TEST(Structure, CutVerticesMatchRemovalTest) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = seed % 2 ? random_connected(14, 3, seed) : random_block_graph(4, 5, seed);
    EXPECT_EQ(cut_vertices(g), reference::cut_vertices(g)) << "seed " << seed;
  }
}

TEST(Structure, BlockDecompositionExamples) {
  auto bowtie_blocks = block_decomposition(bowtie());
  EXPECT_EQ(bowtie_blocks.blocks, (std::vector<std::vector<Vertex>>{{0, 1, 2}, {2, 3, 4}}));
  EXPECT_EQ(bowtie_blocks.cut_count(), 1);

  auto cycle_blocks = block_decomposition(make_cycle(7));
  EXPECT_EQ(cycle_blocks.blocks.size(), 1u);
  EXPECT_EQ(cycle_blocks.cut_count(), 0);

  auto path_blocks = block_decomposition(make_path(4));
  EXPECT_EQ(path_blocks.blocks, (std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(path_blocks.cut_count(), 2);
}

// Every edge in exactly one block, blocks are K2 or 2-connected, blocks meet
// only at cut vertices, and the block-cut graph is a tree.
void check_blocks(const Graph& g) {
  auto bd = block_decomposition(g);
  std::set<Vertex> cuts(bd.cut_vertices.begin(), bd.cut_vertices.end());
  std::map<Edge, int> owner;
  for (const auto& block : bd.blocks) {
    auto sub = induced_subgraph(g, block);
    EXPECT_TRUE(sub.graph.vertex_count() == 2 || reference::two_connected(sub.graph));
    for (const Edge& e : sub.graph.edges()) owner[Edge(block[static_cast<std::size_t>(e.u)], block[static_cast<std::size_t>(e.v)])]++;
  }
  EXPECT_EQ(owner.size(), g.edge_count());
  for (const auto& [e, count] : owner) EXPECT_EQ(count, 1);
  for (std::size_t i = 0; i < bd.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < bd.blocks.size(); ++j) {
      std::vector<Vertex> shared;
      std::set_intersection(bd.blocks[i].begin(), bd.blocks[i].end(), bd.blocks[j].begin(), bd.blocks[j].end(),
                            std::back_inserter(shared));
      EXPECT_LE(shared.size(), 1u);
      for (Vertex v : shared) EXPECT_TRUE(cuts.count(v));
    }
  // block-cut tree: nodes = blocks + cuts, edges = membership; tree iff edges = nodes - 1 (it is connected)
  std::size_t memberships = 0;
  for (const auto& block : bd.blocks)
    for (Vertex v : block) memberships += cuts.count(v);
  EXPECT_EQ(memberships, bd.blocks.size() + cuts.size() - 1);
  EXPECT_TRUE(std::is_sorted(bd.blocks.begin(), bd.blocks.end()));
}

TEST(Structure, BlockDecompositionProperties) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    check_blocks(random_block_graph(2 + static_cast<int>(seed % 4), 6, seed));
    check_blocks(random_connected(16, static_cast<int>(seed % 5), seed));
  }
  check_blocks(make_complete(2));
}

TEST(Structure, TwoConnectivity) {
  EXPECT_TRUE(is_2_connected(make_complete(4)));
  EXPECT_FALSE(is_2_connected(bowtie()));
  EXPECT_FALSE(is_2_connected(make_complete(2)));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = random_connected(10, static_cast<int>(seed % 6), seed);
    EXPECT_EQ(is_2_connected(g), reference::two_connected(g)) << "seed " << seed;
  }
}

TEST(Structure, CycleRecognitionAndOrder) {
  EXPECT_TRUE(is_cycle_graph(make_cycle(9)));
  EXPECT_FALSE(is_cycle_graph(make_path(9)));
  EXPECT_FALSE(is_cycle_graph(fixtures::theta()));
  Graph relabeled = graph_of(5, {{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 0}});
  auto order = cycle_order(relabeled);
  ASSERT_EQ(order.size(), 5u);
  for (std::size_t i = 0; i < order.size(); ++i) EXPECT_TRUE(relabeled.has_edge(order[i], order[(i + 1) % 5]));
}

void check_minimal(const Graph& g) {
  Graph h = minimal_2connected_spanning(g);
  EXPECT_EQ(h.vertex_count(), g.vertex_count());
  EXPECT_TRUE(reference::two_connected(h));
  for (const Edge& e : h.edges()) {
    EXPECT_TRUE(g.has_edge(e));
    EXPECT_FALSE(reference::two_connected(h.without_edge(e)));
  }
}

TEST(Structure, MinimalSpanningSubgraph) {
  Graph k4 = minimal_2connected_spanning(make_complete(4));
  EXPECT_EQ(k4.edge_count(), 4u);
  EXPECT_TRUE(is_cycle_graph(k4));
  EXPECT_EQ(minimal_2connected_spanning(make_cycle(9)), make_cycle(9));
  Graph k5 = minimal_2connected_spanning(make_complete(5));
  EXPECT_LE(k5.edge_count(), 2u * 5 - 3);
  check_minimal(make_complete(5));
  for (std::uint64_t seed = 0; seed < 25; ++seed) check_minimal(random_2connected(12, 10, seed));
  EXPECT_THROW(minimal_2connected_spanning(bowtie()), PreconditionError);
}

TEST(Structure, InducedSubgraph) {
  auto sub = induced_subgraph(make_complete(5), {1, 3, 4});
  EXPECT_EQ(sub.graph, make_complete(3));
  EXPECT_EQ(sub.to_parent, (std::vector<Vertex>{1, 3, 4}));
}

}  // namespace
}  // namespace rvc
