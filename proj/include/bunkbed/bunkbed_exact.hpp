#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bunkbed/graph.hpp"
#include "bunkbed/poly.hpp"

namespace bunkbed {

/// (base vertex, level). Written v_0 / v_1.
struct BunkbedVertex {
  VertexIndex base;
  int level;

  friend bool operator==(const BunkbedVertex&, const BunkbedVertex&) = default;
};

struct BunkbedEdge {
  enum class Kind { Horizontal, Vertical };
  Kind kind;
  EdgeId source = 0;       // Horizontal: id of the edge of G
  int level = 0;           // Horizontal: 0 or 1
  VertexIndex vertex = 0;  // Vertical: base vertex
};

/// G x K2. Vertex (v, i) has index i * |V| + v and is named "v_i". The
/// horizontal copies of the edge at position k of G sit at positions 2k and
/// 2k + 1 (levels 0 and 1); the vertical edge of v sits at 2|E| + v.
struct BunkbedGraph {
  Multigraph graph;
  std::vector<BunkbedEdge> kinds;  // parallel to graph.edges()
  std::size_t base_vertices = 0;
  std::size_t base_edges = 0;

  VertexIndex index(BunkbedVertex w) const { return static_cast<VertexIndex>(w.level) * base_vertices + w.base; }
  std::size_t horizontal_position(std::size_t base_position, int level) const {
    return 2 * base_position + static_cast<std::size_t>(level);
  }
  std::size_t vertical_position(VertexIndex v) const { return 2 * base_edges + v; }
};

BunkbedGraph bunkbed(const Multigraph& g);

struct EnumerationOptions {
  /// Refuse enumerations over more than 2^max_config_bits assignments.
  unsigned max_config_bits = 26;
  unsigned workers = 1;
  /// Gray-code traversal with a rollback union-find; otherwise every
  /// assignment rebuilds its union-find from scratch. Both give the same counts.
  bool gray_code = true;
};

/// Bernoulli-p percolation on the bunkbed. When `pinned` is given the vertical
/// edges are fixed (open exactly at pinned vertices) and only the 2|E|
/// horizontal edges are random; otherwise all 2|E| + |V| edges are random.
/// Returns P(a <-> b) as a polynomial in p.
RationalPoly connection_poly(const Multigraph& g, BunkbedVertex a, BunkbedVertex b,
                             const std::optional<VertexSet>& pinned = std::nullopt,
                             const EnumerationOptions& options = {});

struct ConnectionPolys {
  RationalPoly same_level;   // P(u_0 <-> v_0)
  RationalPoly cross_level;  // P(u_0 <-> v_1)
  RationalPoly difference() const { return same_level - cross_level; }
};

/// Both connection polynomials from a single enumeration.
ConnectionPolys connection_polys(const Multigraph& g, VertexIndex u, VertexIndex v,
                                 const std::optional<VertexSet>& pinned = std::nullopt,
                                 const EnumerationOptions& options = {});

RationalPoly difference_poly(const Multigraph& g, VertexIndex u, VertexIndex v,
                             const std::optional<VertexSet>& pinned = std::nullopt,
                             const EnumerationOptions& options = {});

/// Raw enumeration result: counts[target][k] is the number of assignments
/// with k open random edges in which target pair `target` is connected.
struct ConnectionCounts {
  std::size_t random_edges = 0;
  std::vector<std::vector<mpz_class>> counts;
};

ConnectionCounts enumerate_connections(const Multigraph& g,
                                       const std::vector<std::pair<BunkbedVertex, BunkbedVertex>>& targets,
                                       const std::optional<VertexSet>& pinned,
                                       const EnumerationOptions& options);

/// Dyadic point 1 - 2^(-ceil(|E|/2) - 2), at or above 1 - 2^(-|E|/2 - 2).
Rational threshold_point(std::size_t num_edges);

struct GeodesicReport {
  Distance distance;
  unsigned long long geodesics = 0;
  bool verdict = false;
  RationalPoly polynomial;
};

/// Compares the lowest-order term of P(u_0 <-> v_0) with the number of
/// shortest u_0 - v_0 paths in the bunkbed.
GeodesicReport geodesic_check(const Multigraph& g, VertexIndex u, VertexIndex v,
                              const EnumerationOptions& options = {});

}  // namespace bunkbed
