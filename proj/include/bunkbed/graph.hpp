#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bunkbed {

using VertexIndex = std::size_t;
using EdgeId = std::size_t;

/// Sorted set of vertex indices of some host graph.
using VertexSet = std::set<VertexIndex>;

/// Graph distance; `std::nullopt` stands for an infinite distance.
using Distance = std::optional<std::size_t>;

struct Edge {
  EdgeId id;
  VertexIndex a;
  VertexIndex b;

  bool is_loop() const { return a == b; }
  VertexIndex other(VertexIndex w) const { return w == a ? b : a; }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Finite multigraph. Self-loops and parallel edges are allowed. Edge ids are
/// caller-chosen, unique, and kept by minors so that a surviving edge in a
/// minor can be matched with its edge in the host graph.
class Multigraph {
 public:
  Multigraph() = default;

  /// Returns the index of `name`, adding the vertex if it is new.
  VertexIndex add_vertex(std::string name);
  /// Adds an edge with the next free id (one past the largest id so far).
  EdgeId add_edge(VertexIndex a, VertexIndex b);
  void add_edge(EdgeId id, VertexIndex a, VertexIndex b);

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(VertexIndex v) const { return names_.at(v); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<VertexIndex> find_vertex(std::string_view name) const;
  /// Throws std::invalid_argument for unknown names.
  VertexIndex vertex(std::string_view name) const;

  /// Position of the edge with the given id in `edges()`.
  std::optional<std::size_t> edge_position(EdgeId id) const;

  /// Per-vertex list of incident edge positions; a self-loop is listed once.
  std::vector<std::vector<std::size_t>> incidence() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexIndex> index_;
  std::vector<Edge> edges_;
  std::unordered_map<EdgeId, std::size_t> edge_index_;
  EdgeId next_id_ = 0;
};

/// Parses "u v" lines. '#' comment lines and blank lines are skipped.
/// Vertices are indexed in first-mention order, edge ids are the 0-based
/// order of edge lines.
Multigraph parse_edge_list(std::string_view text);
std::string to_edge_list(const Multigraph& g);

/// Parses a comma-separated list of vertex tokens ("" is the empty set).
VertexSet parse_vertex_list(const Multigraph& g, std::string_view list);
std::string format_vertex_list(const Multigraph& g, const VertexSet& set);

/// Blocks of vertices joined by paths using only edges with both endpoints in
/// `allowed` (all vertices when absent). Blocks are sorted by their smallest
/// member and each block is sorted.
std::vector<std::vector<VertexIndex>> connected_components(
    const Multigraph& g, const std::optional<VertexSet>& allowed = std::nullopt);

/// True iff `a` and `b` are both in `allowed` and joined inside it.
bool connected_within(const Multigraph& g, VertexIndex a, VertexIndex b,
                      const std::optional<VertexSet>& allowed = std::nullopt);

/// Original vertex -> minor vertex.
using ProjectionMap = std::vector<VertexIndex>;

struct Minor {
  Multigraph graph;
  ProjectionMap projection;
};

/// Deletes `remove` and contracts `contract`. Minor vertices are the
/// components of the contracted edges, ordered by their first original
/// vertex, and named by the sorted list of merged tokens. Surviving edges keep
/// their ids; loops and parallel edges that arise are kept.
Minor minor(const Multigraph& g, std::span<const EdgeId> remove, std::span<const EdgeId> contract);

/// Shortest path from `from` to `to` through vertices outside `pinned`
/// (endpoints included). Self-loops are ignored.
Distance vertical_free_distance(const Multigraph& g, VertexIndex from, VertexIndex to,
                                const VertexSet& pinned);

/// Plain BFS distance with the number of shortest paths. Parallel edges give
/// distinct paths; self-loops are ignored.
struct GeodesicCount {
  Distance distance;
  unsigned long long count = 0;
};
GeodesicCount count_geodesics(const Multigraph& g, VertexIndex from, VertexIndex to);

/// Union-find over a fixed number of elements, with an undo log so that
/// unions can be rolled back in LIFO order. No path compression.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(std::size_t n = 0) { reset(n); }

  void reset(std::size_t n);
  VertexIndex find(VertexIndex x) const;
  /// Returns true if two distinct sets were merged.
  bool unite(VertexIndex a, VertexIndex b);
  bool same(VertexIndex a, VertexIndex b) const { return find(a) == find(b); }

  std::size_t checkpoint() const { return history_.size(); }
  void rollback(std::size_t mark);

 private:
  std::vector<VertexIndex> parent_;
  std::vector<unsigned char> rank_;
  // (absorbed root, rank bumped on the surviving root)
  std::vector<std::pair<VertexIndex, bool>> history_;
};

}  // namespace bunkbed
