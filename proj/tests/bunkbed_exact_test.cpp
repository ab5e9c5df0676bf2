#include <gtest/gtest.h>

#include "bunkbed/bunkbed_exact.hpp"
#include "bunkbed/parallel.hpp"
#include "support/oracles.hpp"

namespace bunkbed {
namespace {

using testing::brute_connection;

RationalPoly P(std::vector<Rational> c) { return RationalPoly(Variable::P, std::move(c)); }

Multigraph k2() { return parse_edge_list("u v"); }

TEST(Bunkbed, Shape) {
  const BunkbedGraph bb = bunkbed(k2());
  EXPECT_EQ(bb.graph.num_vertices(), 4u);
  EXPECT_EQ(bb.graph.num_edges(), 4u);
  EXPECT_EQ(bb.graph.name(bb.index({1, 1})), "v_1");

  Multigraph single;
  single.add_vertex("u");
  EXPECT_EQ(bunkbed(single).graph.num_vertices(), 2u);
  EXPECT_EQ(bunkbed(single).graph.num_edges(), 1u);

  const BunkbedGraph tri = bunkbed(parse_edge_list("a b\nb c\nc a"));
  EXPECT_EQ(tri.graph.num_vertices(), 6u);
  EXPECT_EQ(tri.graph.num_edges(), 9u);

  const BunkbedGraph loop = bunkbed(parse_edge_list("a a\na b\na b"));
  std::size_t horizontal = 0, vertical = 0, loops = 0;
  for (std::size_t i = 0; i < loop.kinds.size(); ++i) {
    if (loop.kinds[i].kind == BunkbedEdge::Kind::Horizontal) ++horizontal;
    else ++vertical;
    loops += loop.graph.edges()[i].is_loop();
  }
  EXPECT_EQ(horizontal, 6u);
  EXPECT_EQ(vertical, 2u);
  EXPECT_EQ(loops, 2u);
  EXPECT_EQ(loop.kinds[loop.horizontal_position(2, 1)].source, 2u);
  EXPECT_EQ(loop.kinds[loop.vertical_position(1)].vertex, 1u);
}

TEST(ConnectionPoly, Examples) {
  Multigraph single;
  single.add_vertex("u");
  EXPECT_EQ(connection_poly(single, {0, 0}, {0, 1}), P({0, 1}));
  EXPECT_EQ(connection_poly(k2(), {0, 0}, {1, 0}), P({0, 1, 0, 1, -1}));
  EXPECT_TRUE(connection_poly(k2(), {0, 0}, {1, 1}, VertexSet{}).is_zero());
}

TEST(ConnectionPoly, K2BruteForceOracle) {
  // Frozen from the 2^4 brute force over G x K2.
  EXPECT_EQ(brute_connection(k2(), {0, 0}, {1, 0}), P({0, 1, 0, 1, -1}));
  EXPECT_EQ(brute_connection(k2(), {0, 0}, {1, 1}), P({0, 0, 2, 0, -1}));
}

TEST(DifferencePoly, Examples) {
  EXPECT_EQ(difference_poly(k2(), 0, 1, VertexSet{}), P({0, 1}));
  EXPECT_TRUE(difference_poly(k2(), 0, 1, VertexSet{0, 1}).is_zero());
  EXPECT_EQ(connection_poly(k2(), {0, 0}, {1, 0}, VertexSet{0, 1}), P({0, 2, -1}));
  EXPECT_EQ(difference_poly(k2(), 0, 1), P({0, 1, -2, 1}));
}

TEST(ConnectionPoly, AgreesWithBruteForceAndBothEngines) {
  for (const Multigraph& g : testing::connected_multigraphs(3)) {
    std::vector<std::optional<VertexSet>> conditions = {std::nullopt};
    for (const VertexSet& t : testing::all_vertex_subsets(g)) conditions.emplace_back(t);
    for (const auto& pinned : conditions)
      for (VertexIndex u = 0; u < g.num_vertices(); ++u)
        for (VertexIndex v = 0; v < g.num_vertices(); ++v)
          for (int level = 0; level < 2; ++level) {
            const RationalPoly brute = brute_connection(g, {u, 0}, {v, level}, pinned);
            EnumerationOptions gray, scratch;
            scratch.gray_code = false;
            ASSERT_EQ(connection_poly(g, {u, 0}, {v, level}, pinned, gray), brute) << to_edge_list(g);
            ASSERT_EQ(connection_poly(g, {u, 0}, {v, level}, pinned, scratch), brute) << to_edge_list(g);
          }
  }
}

TEST(ConnectionPoly, EnginesAgreeOnLargerGraphs) {
  // 2*6 + 5 = 17 random edges; enough for several enumeration chunks.
  const Multigraph g = parse_edge_list("a b\nb c\nc d\nd a\na c\nd e");
  EnumerationOptions gray, scratch, threaded;
  scratch.gray_code = false;
  threaded.workers = 3;
  for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
    const ConnectionPolys x = connection_polys(g, 0, v, std::nullopt, gray);
    const ConnectionPolys y = connection_polys(g, 0, v, std::nullopt, scratch);
    const ConnectionPolys z = connection_polys(g, 0, v, std::nullopt, threaded);
    ASSERT_EQ(x.same_level, y.same_level);
    ASSERT_EQ(x.cross_level, y.cross_level);
    ASSERT_EQ(x.same_level, z.same_level);
    ASSERT_EQ(x.cross_level, z.cross_level);
  }
}

TEST(ConnectionPoly, SymmetryLevelSwapAndPointOne) {
  for (const Multigraph& g : testing::connected_multigraphs(4)) {
    for (const VertexSet& t : testing::all_vertex_subsets(g))
      for (VertexIndex u = 0; u < g.num_vertices(); ++u)
        for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
          const RationalPoly same = connection_poly(g, {u, 0}, {v, 0}, t);
          const RationalPoly cross = connection_poly(g, {u, 0}, {v, 1}, t);
          ASSERT_EQ(same, connection_poly(g, {v, 0}, {u, 0}, t));
          ASSERT_EQ(cross, connection_poly(g, {v, 1}, {u, 0}, t));
          ASSERT_EQ(same, connection_poly(g, {u, 1}, {v, 1}, t));
          ASSERT_EQ(cross, connection_poly(g, {u, 1}, {v, 0}, t));
          // At p = 1 every horizontal edge is open; the levels meet iff t is nonempty.
          ASSERT_EQ(same.eval(1), 1);
          ASSERT_EQ(cross.eval(1), t.empty() ? 0 : 1);
        }
    for (VertexIndex v = 0; v < g.num_vertices(); ++v) ASSERT_EQ(connection_poly(g, {0, 0}, {v, 1}).eval(1), 1);
  }
}

TEST(ConnectionPoly, MonotoneOnGrid) {
  for (const Multigraph& g : testing::connected_multigraphs(4))
    for (VertexIndex v = 0; v < g.num_vertices(); ++v)
      for (int level = 0; level < 2; ++level) {
        const RationalPoly a = connection_poly(g, {0, 0}, {v, level});
        Rational previous = a.eval(0);
        for (int k = 1; k <= 16; ++k) {
          const Rational now = a.eval(Rational(k, 16));
          ASSERT_LE(previous, now) << to_edge_list(g);
          previous = now;
        }
      }
}

TEST(ConnectionPoly, CapRefusal) {
  const Multigraph g = parse_edge_list("a b\nb c\nc a");
  EnumerationOptions tight;
  tight.max_config_bits = 8;  // needs 9
  try {
    connection_poly(g, {0, 0}, {1, 0}, std::nullopt, tight);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.required(), 9u);
    EXPECT_NE(std::string(e.what()).find("max-config-bits"), std::string::npos);
  }
  EXPECT_NO_THROW(connection_poly(g, {0, 0}, {1, 0}, VertexSet{}, tight));
}

TEST(ThresholdPoint, Values) {
  EXPECT_EQ(threshold_point(0), Rational(3, 4));
  EXPECT_EQ(threshold_point(1), Rational(7, 8));
  EXPECT_EQ(threshold_point(2), Rational(7, 8));
  EXPECT_EQ(threshold_point(3), Rational(15, 16));
  EXPECT_EQ(threshold_point(4), Rational(15, 16));
}

TEST(GeodesicCheck, Examples) {
  const GeodesicReport k = geodesic_check(k2(), 0, 1);
  EXPECT_EQ(k.distance, Distance(1));
  EXPECT_EQ(k.geodesics, 1u);
  EXPECT_TRUE(k.verdict);

  const GeodesicReport path = geodesic_check(testing::path_graph(2), 0, 2);
  EXPECT_EQ(path.distance, Distance(2));
  EXPECT_EQ(path.geodesics, 1u);
  EXPECT_TRUE(path.verdict);

  const GeodesicReport same = geodesic_check(k2(), 0, 0);
  EXPECT_EQ(same.distance, Distance(0));
  EXPECT_EQ(same.geodesics, 1u);
  EXPECT_TRUE(same.verdict);
  EXPECT_EQ(same.polynomial.coeff(0), 1);

  Multigraph apart;
  apart.add_vertex("a");
  apart.add_vertex("b");
  const GeodesicReport none = geodesic_check(apart, 0, 1);
  EXPECT_EQ(none.distance, std::nullopt);
  EXPECT_TRUE(none.verdict);
  EXPECT_TRUE(none.polynomial.is_zero());

  const GeodesicReport doubled = geodesic_check(parse_edge_list("a b\na b\nb c"), 0, 2);
  EXPECT_EQ(doubled.geodesics, 2u);
  EXPECT_TRUE(doubled.verdict);
}

}  // namespace
}  // namespace bunkbed
