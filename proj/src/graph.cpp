#include "bunkbed/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace bunkbed {

VertexIndex Multigraph::add_vertex(std::string name) {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  const VertexIndex v = names_.size();
  index_.emplace(name, v);
  names_.push_back(std::move(name));
  return v;
}

EdgeId Multigraph::add_edge(VertexIndex a, VertexIndex b) {
  const EdgeId id = next_id_;
  add_edge(id, a, b);
  return id;
}

void Multigraph::add_edge(EdgeId id, VertexIndex a, VertexIndex b) {
  if (a >= names_.size() || b >= names_.size())
    throw std::invalid_argument("edge endpoint is not a vertex of the graph");
  if (edge_index_.contains(id))
    throw std::invalid_argument("duplicate edge id " + std::to_string(id));
  edge_index_.emplace(id, edges_.size());
  edges_.push_back({id, a, b});
  next_id_ = std::max(next_id_, id + 1);
}

std::optional<VertexIndex> Multigraph::find_vertex(std::string_view name) const {
  if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
  return std::nullopt;
}

VertexIndex Multigraph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw std::invalid_argument("unknown vertex '" + std::string(name) + "'");
}

std::optional<std::size_t> Multigraph::edge_position(EdgeId id) const {
  if (auto it = edge_index_.find(id); it != edge_index_.end()) return it->second;
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> Multigraph::incidence() const {
  std::vector<std::vector<std::size_t>> inc(num_vertices());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    inc[edges_[i].a].push_back(i);
    if (!edges_[i].is_loop()) inc[edges_[i].b].push_back(i);
  }
  return inc;
}

Multigraph parse_edge_list(std::string_view text) {
  Multigraph g;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.size() != 2)
      throw ParseError(line_no, "expected 2 vertex tokens, found " + std::to_string(tokens.size()));
    const VertexIndex a = g.add_vertex(tokens[0]);
    const VertexIndex b = g.add_vertex(tokens[1]);
    g.add_edge(a, b);
  }
  return g;
}

std::string to_edge_list(const Multigraph& g) {
  std::string out;
  for (const Edge& e : g.edges()) out += g.name(e.a) + ' ' + g.name(e.b) + '\n';
  return out;
}

VertexSet parse_vertex_list(const Multigraph& g, std::string_view list) {
  VertexSet out;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string_view tok = list.substr(start, end - start);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    if (!tok.empty()) out.insert(g.vertex(tok));
    start = end + 1;
  }
  return out;
}

std::string format_vertex_list(const Multigraph& g, const VertexSet& set) {
  std::string out;
  for (VertexIndex v : set) {
    if (!out.empty()) out += ',';
    out += g.name(v);
  }
  return out;
}

namespace {

std::vector<char> membership(const Multigraph& g, const std::optional<VertexSet>& allowed) {
  std::vector<char> in(g.num_vertices(), allowed ? 0 : 1);
  if (allowed)
    for (VertexIndex v : *allowed) {
      if (v >= g.num_vertices()) throw std::invalid_argument("vertex set outside host graph");
      in[v] = 1;
    }
  return in;
}

}  // namespace

std::vector<std::vector<VertexIndex>> connected_components(const Multigraph& g,
                                                           const std::optional<VertexSet>& allowed) {
  const auto in = membership(g, allowed);
  RollbackUnionFind uf(g.num_vertices());
  for (const Edge& e : g.edges())
    if (in[e.a] && in[e.b]) uf.unite(e.a, e.b);

  std::vector<std::vector<VertexIndex>> blocks;
  std::vector<std::size_t> block_of(g.num_vertices(), SIZE_MAX);
  for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
    if (!in[v]) continue;
    const VertexIndex root = uf.find(v);
    if (block_of[root] == SIZE_MAX) {
      block_of[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of[root]].push_back(v);
  }
  return blocks;
}

bool connected_within(const Multigraph& g, VertexIndex a, VertexIndex b,
                      const std::optional<VertexSet>& allowed) {
  if (a >= g.num_vertices() || b >= g.num_vertices()) throw std::invalid_argument("unknown vertex");
  const auto in = membership(g, allowed);
  if (!in[a] || !in[b]) return false;
  RollbackUnionFind uf(g.num_vertices());
  for (const Edge& e : g.edges())
    if (in[e.a] && in[e.b]) uf.unite(e.a, e.b);
  return uf.same(a, b);
}

Minor minor(const Multigraph& g, std::span<const EdgeId> remove, std::span<const EdgeId> contract) {
  enum Fate : unsigned char { kKeep, kDelete, kContract };
  std::vector<Fate> fate(g.num_edges(), kKeep);
  auto mark = [&](std::span<const EdgeId> ids, Fate f) {
    for (EdgeId id : ids) {
      const auto pos = g.edge_position(id);
      if (!pos) throw std::invalid_argument("unknown edge id " + std::to_string(id));
      if (fate[*pos] != kKeep && fate[*pos] != f)
        throw std::invalid_argument("edge " + std::to_string(id) + " is both deleted and contracted");
      fate[*pos] = f;
    }
  };
  mark(remove, kDelete);
  mark(contract, kContract);

  RollbackUnionFind uf(g.num_vertices());
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    if (fate[i] == kContract) uf.unite(g.edges()[i].a, g.edges()[i].b);

  Minor out;
  out.projection.assign(g.num_vertices(), 0);
  std::vector<std::size_t> block_of(g.num_vertices(), SIZE_MAX);
  std::vector<std::vector<std::string>> members;
  for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
    const VertexIndex root = uf.find(v);
    if (block_of[root] == SIZE_MAX) {
      block_of[root] = members.size();
      members.emplace_back();
    }
    out.projection[v] = block_of[root];
    members[block_of[root]].push_back(g.name(v));
  }
  for (auto& tokens : members) {
    if (tokens.size() == 1) {
      out.graph.add_vertex(tokens.front());
      continue;
    }
    std::sort(tokens.begin(), tokens.end());
    std::string name = "[";
    for (std::size_t i = 0; i < tokens.size(); ++i) name += (i ? "=" : "") + tokens[i];
    out.graph.add_vertex(name + "]");
  }
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (fate[i] != kKeep) continue;
    const Edge& e = g.edges()[i];
    out.graph.add_edge(e.id, out.projection[e.a], out.projection[e.b]);
  }
  return out;
}

Distance vertical_free_distance(const Multigraph& g, VertexIndex from, VertexIndex to,
                                const VertexSet& pinned) {
  if (from >= g.num_vertices() || to >= g.num_vertices())
    throw std::invalid_argument("unknown vertex");
  if (pinned.contains(from) || pinned.contains(to)) return std::nullopt;
  if (from == to) return 0;
  const auto inc = g.incidence();
  std::vector<std::size_t> dist(g.num_vertices(), SIZE_MAX);
  std::deque<VertexIndex> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const VertexIndex w = queue.front();
    queue.pop_front();
    for (std::size_t pos : inc[w]) {
      const Edge& e = g.edges()[pos];
      if (e.is_loop()) continue;
      const VertexIndex x = e.other(w);
      if (dist[x] != SIZE_MAX || pinned.contains(x)) continue;
      dist[x] = dist[w] + 1;
      if (x == to) return dist[x];
      queue.push_back(x);
    }
  }
  return std::nullopt;
}

GeodesicCount count_geodesics(const Multigraph& g, VertexIndex from, VertexIndex to) {
  if (from >= g.num_vertices() || to >= g.num_vertices())
    throw std::invalid_argument("unknown vertex");
  const auto inc = g.incidence();
  std::vector<std::size_t> dist(g.num_vertices(), SIZE_MAX);
  std::vector<unsigned long long> paths(g.num_vertices(), 0);
  std::deque<VertexIndex> queue{from};
  dist[from] = 0;
  paths[from] = 1;
  while (!queue.empty()) {
    const VertexIndex w = queue.front();
    queue.pop_front();
    for (std::size_t pos : inc[w]) {
      const Edge& e = g.edges()[pos];
      if (e.is_loop()) continue;
      const VertexIndex x = e.other(w);
      if (dist[x] == SIZE_MAX) {
        dist[x] = dist[w] + 1;
        queue.push_back(x);
      }
      if (dist[x] == dist[w] + 1) paths[x] += paths[w];
    }
  }
  if (dist[to] == SIZE_MAX) return {std::nullopt, 0};
  return {dist[to], paths[to]};
}

void RollbackUnionFind::reset(std::size_t n) {
  parent_.resize(n);
  std::iota(parent_.begin(), parent_.end(), VertexIndex{0});
  rank_.assign(n, 0);
  history_.clear();
}

VertexIndex RollbackUnionFind::find(VertexIndex x) const {
  while (parent_[x] != x) x = parent_[x];
  return x;
}

bool RollbackUnionFind::unite(VertexIndex a, VertexIndex b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  const bool bump = rank_[a] == rank_[b];
  parent_[b] = a;
  if (bump) ++rank_[a];
  history_.emplace_back(b, bump);
  return true;
}

void RollbackUnionFind::rollback(std::size_t mark) {
  while (history_.size() > mark) {
    const auto [child, bump] = history_.back();
    history_.pop_back();
    const VertexIndex root = parent_[child];
    if (bump) --rank_[root];
    parent_[child] = child;
  }
}

}  // namespace bunkbed
