#include <gtest/gtest.h>

#include <algorithm>

#include "bunkbed/graph.hpp"
#include "support/oracles.hpp"

namespace bunkbed {
namespace {

Multigraph path_abc() { return parse_edge_list("a b\nb c\n"); }

TEST(ParseEdgeList, SingleEdge) {
  const Multigraph g = parse_edge_list("a b");
  EXPECT_EQ(g.num_vertices(), 2u);
  EXPECT_EQ(g.num_edges(), 1u);
}

TEST(ParseEdgeList, ParallelEdgesKept) {
  const Multigraph g = parse_edge_list("a b\na b");
  EXPECT_EQ(g.num_vertices(), 2u);
  ASSERT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.edges()[0].id, 0u);
  EXPECT_EQ(g.edges()[1].id, 1u);
}

TEST(ParseEdgeList, SelfLoopKept) {
  const Multigraph g = parse_edge_list("a a");
  EXPECT_EQ(g.num_vertices(), 1u);
  ASSERT_EQ(g.num_edges(), 1u);
  EXPECT_TRUE(g.edges()[0].is_loop());
}

TEST(ParseEdgeList, CommentsBlanksAndOrder) {
  const Multigraph g = parse_edge_list("# header\n\nc b\n  \nb a\n# tail\n");
  ASSERT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.name(0), "c");
  EXPECT_EQ(g.name(1), "b");
  EXPECT_EQ(g.name(2), "a");
  ASSERT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.edges()[1].id, 1u);
  EXPECT_EQ(g.edges()[1].a, 1u);
  EXPECT_EQ(g.edges()[1].b, 2u);
}

TEST(ParseEdgeList, MalformedLineReportsLineNumber) {
  try {
    parse_edge_list("a b\n# ok\nc\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_edge_list("a b c"), ParseError);
}

TEST(ParseEdgeList, RoundTrip) {
  const Multigraph g = parse_edge_list("x y\ny y\nx y\n");
  const Multigraph h = parse_edge_list(to_edge_list(g));
  EXPECT_EQ(h.vertex_names(), g.vertex_names());
  ASSERT_EQ(h.num_edges(), g.num_edges());
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    EXPECT_EQ(h.edges()[i].a, g.edges()[i].a);
    EXPECT_EQ(h.edges()[i].b, g.edges()[i].b);
  }
}

TEST(VertexList, ParseAndFormat) {
  const Multigraph g = path_abc();
  EXPECT_TRUE(parse_vertex_list(g, "").empty());
  EXPECT_EQ(parse_vertex_list(g, "c,a"), (VertexSet{0, 2}));
  EXPECT_EQ(format_vertex_list(g, {0, 2}), "a,c");
  EXPECT_THROW(parse_vertex_list(g, "a,zz"), std::invalid_argument);
}

TEST(ConnectedComponents, CutVertexRemoved) {
  const Multigraph g = path_abc();
  const auto blocks = connected_components(g, VertexSet{0, 2});
  EXPECT_EQ(blocks, (std::vector<std::vector<VertexIndex>>{{0}, {2}}));
}

TEST(ConnectedComponents, WholePath) {
  EXPECT_EQ(connected_components(path_abc()).size(), 1u);
}

TEST(ConnectedComponents, Edgeless) {
  Multigraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  EXPECT_EQ(connected_components(g), (std::vector<std::vector<VertexIndex>>{{0}, {1}}));
}

TEST(Minor, TriangleDeleteOneContractOne) {
  const Multigraph g = parse_edge_list("u v\nv w\nw u\n");
  const EdgeId del[] = {0};
  const EdgeId con[] = {1};
  const Minor m = minor(g, del, con);
  ASSERT_EQ(m.graph.num_vertices(), 2u);
  EXPECT_EQ(m.graph.name(0), "u");
  EXPECT_EQ(m.graph.name(1), "[v=w]");
  ASSERT_EQ(m.graph.num_edges(), 1u);
  EXPECT_EQ(m.graph.edges()[0].id, 2u);
  EXPECT_FALSE(m.graph.edges()[0].is_loop());
  EXPECT_EQ(m.projection, (ProjectionMap{0, 1, 1}));
}

TEST(Minor, ContractOnlyEdge) {
  const Multigraph g = parse_edge_list("a b");
  const EdgeId con[] = {0};
  const Minor m = minor(g, {}, con);
  EXPECT_EQ(m.graph.num_vertices(), 1u);
  EXPECT_EQ(m.graph.num_edges(), 0u);
}

TEST(Minor, ParallelEdgeBecomesLoop) {
  const Multigraph g = parse_edge_list("a b\na b");
  const EdgeId con[] = {0};
  const Minor m = minor(g, {}, con);
  ASSERT_EQ(m.graph.num_vertices(), 1u);
  ASSERT_EQ(m.graph.num_edges(), 1u);
  EXPECT_EQ(m.graph.edges()[0].id, 1u);
  EXPECT_TRUE(m.graph.edges()[0].is_loop());
}

TEST(Minor, OverlapAndUnknownIdsRejected) {
  const Multigraph g = parse_edge_list("a b\nb c");
  const EdgeId both[] = {1};
  EXPECT_THROW(minor(g, both, both), std::invalid_argument);
  const EdgeId unknown[] = {7};
  EXPECT_THROW(minor(g, unknown, {}), std::invalid_argument);
}

// Partition of the original vertices as a canonical list of blocks.
std::vector<std::vector<VertexIndex>> blocks_of(const ProjectionMap& proj) {
  std::vector<std::vector<VertexIndex>> blocks;
  std::vector<long> slot;
  for (VertexIndex v = 0; v < proj.size(); ++v) {
    if (proj[v] >= slot.size()) slot.resize(proj[v] + 1, -1);
    if (slot[proj[v]] < 0) {
      slot[proj[v]] = static_cast<long>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(slot[proj[v]])].push_back(v);
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

TEST(MinorProperties, ComposesAndMatchesComponents) {
  for (const Multigraph& g : testing::connected_multigraphs(4)) {
    const std::size_t m = g.num_edges();
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << m); ++a)
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
        if (a & b) continue;
        std::vector<EdgeId> ea, eb, eab;
        for (std::size_t i = 0; i < m; ++i) {
          if (a >> i & 1) ea.push_back(g.edges()[i].id);
          if (b >> i & 1) eb.push_back(g.edges()[i].id);
          if ((a | b) >> i & 1) eab.push_back(g.edges()[i].id);
        }
        const Minor one = minor(g, {}, eab);
        const Minor first = minor(g, {}, ea);
        const Minor second = minor(first.graph, {}, eb);
        ProjectionMap composed(g.num_vertices());
        for (VertexIndex v = 0; v < g.num_vertices(); ++v) composed[v] = second.projection[first.projection[v]];
        ASSERT_EQ(blocks_of(one.projection), blocks_of(composed)) << to_edge_list(g);

        Multigraph contracted;
        for (const auto& name : g.vertex_names()) contracted.add_vertex(name);
        for (std::size_t i = 0; i < m; ++i)
          if ((a | b) >> i & 1) contracted.add_edge(g.edges()[i].id, g.edges()[i].a, g.edges()[i].b);
        ASSERT_EQ(blocks_of(one.projection), connected_components(contracted));
        ASSERT_EQ(one.graph.num_edges(), m - eab.size());
      }
  }
}

TEST(VerticalFreeDistance, Examples) {
  const Multigraph g = path_abc();
  EXPECT_EQ(vertical_free_distance(g, 0, 2, {1}), std::nullopt);
  EXPECT_EQ(vertical_free_distance(g, 0, 2, {}), Distance(2));
  EXPECT_EQ(vertical_free_distance(g, 0, 0, {}), Distance(0));
  EXPECT_EQ(vertical_free_distance(g, 0, 0, {0}), std::nullopt);
  EXPECT_EQ(vertical_free_distance(g, 2, 0, {0}), std::nullopt);
}

TEST(VerticalFreeDistance, LoopsNeverShorten) {
  const Multigraph g = parse_edge_list("a a\na b\nb b\nb c\n");
  EXPECT_EQ(vertical_free_distance(g, 0, 2, {}), Distance(2));
}

TEST(VerticalFreeDistance, SymmetricAndMonotone) {
  for (const Multigraph& g : testing::connected_multigraphs(4)) {
    const auto subsets = testing::all_vertex_subsets(g);
    for (const VertexSet& t : subsets)
      for (VertexIndex u = 0; u < g.num_vertices(); ++u)
        for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
          const Distance d = vertical_free_distance(g, u, v, t);
          ASSERT_EQ(d, vertical_free_distance(g, v, u, t));
          for (VertexIndex w : t) {
            VertexSet smaller = t;
            smaller.erase(w);
            const Distance e = vertical_free_distance(g, u, v, smaller);
            if (d) {
              ASSERT_TRUE(e.has_value());
              ASSERT_LE(*e, *d);
            }
          }
        }
  }
}

TEST(CountGeodesics, ParallelEdgesCount) {
  const Multigraph g = parse_edge_list("a b\na b\nb c\n");
  const auto geo = count_geodesics(g, 0, 2);
  EXPECT_EQ(geo.distance, Distance(2));
  EXPECT_EQ(geo.count, 2u);
}

TEST(RollbackUnionFind, UndoRestoresPartition) {
  RollbackUnionFind uf(4);
  uf.unite(0, 1);
  const auto mark = uf.checkpoint();
  uf.unite(1, 2);
  uf.unite(2, 3);
  EXPECT_TRUE(uf.same(0, 3));
  uf.rollback(mark);
  EXPECT_TRUE(uf.same(0, 1));
  EXPECT_FALSE(uf.same(1, 2));
  EXPECT_FALSE(uf.same(2, 3));
}

TEST(GraphFamily, KnownSizesAndConnected) {
  const auto family = testing::connected_multigraphs(4);
  std::size_t with_loop = 0, with_parallel = 0;
  for (const Multigraph& g : family) {
    ASSERT_LE(g.num_edges(), 4u);
    ASSERT_EQ(connected_components(g).size(), 1u);
    bool loop = false, parallel = false;
    for (const Edge& e : g.edges()) {
      loop |= e.is_loop();
      for (const Edge& f : g.edges())
        if (e.id < f.id && std::minmax(e.a, e.b) == std::minmax(f.a, f.b)) parallel = true;
    }
    with_loop += loop;
    with_parallel += parallel;
  }
  // Simple connected graphs with at most 4 edges: K1, K2, P3, P4, K3, K1,3,
  // P5, C4, paw, spider S(2,1,1), K1,4. Eleven classes.
  std::size_t simple = 0;
  for (const Multigraph& g : family) {
    bool plain = true;
    for (const Edge& e : g.edges()) {
      plain &= !e.is_loop();
      for (const Edge& f : g.edges())
        if (e.id < f.id && std::minmax(e.a, e.b) == std::minmax(f.a, f.b)) plain = false;
    }
    simple += plain;
  }
  EXPECT_EQ(simple, 11u);
  EXPECT_GT(with_loop, 0u);
  EXPECT_GT(with_parallel, 0u);
}

}  // namespace
}  // namespace bunkbed
