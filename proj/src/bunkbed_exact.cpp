#include "bunkbed/bunkbed_exact.hpp"

#include <string>

#include "bunkbed/parallel.hpp"

namespace bunkbed {

BunkbedGraph bunkbed(const Multigraph& g) {
  BunkbedGraph out;
  out.base_vertices = g.num_vertices();
  out.base_edges = g.num_edges();
  for (int level = 0; level < 2; ++level)
    for (VertexIndex v = 0; v < g.num_vertices(); ++v)
      out.graph.add_vertex(g.name(v) + "_" + std::to_string(level));
  for (const Edge& e : g.edges())
    for (int level = 0; level < 2; ++level) {
      out.graph.add_edge(out.index({e.a, level}), out.index({e.b, level}));
      out.kinds.push_back({BunkbedEdge::Kind::Horizontal, e.id, level, 0});
    }
  for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
    out.graph.add_edge(out.index({v, 0}), out.index({v, 1}));
    out.kinds.push_back({BunkbedEdge::Kind::Vertical, 0, 0, v});
  }
  return out;
}

namespace {

struct Target {
  VertexIndex a, b;
};

// Counts, per target and per number of open random edges, the assignments in
// which the target endpoints are joined. Random edges are split into a chunk
// prefix (the top bits of the binary counter) and an inner block.
class ConnectionEnumerator {
 public:
  ConnectionEnumerator(std::size_t num_vertices, std::vector<std::pair<VertexIndex, VertexIndex>> fixed_open,
                       std::vector<std::pair<VertexIndex, VertexIndex>> random, std::vector<Target> targets)
      : n_(num_vertices), fixed_(std::move(fixed_open)), random_(std::move(random)), targets_(std::move(targets)) {}

  std::vector<std::vector<std::uint64_t>> run(const EnumerationOptions& options) const {
    const std::size_t total = random_.size();
    const std::size_t chunk_bits = std::min<std::size_t>(total, 8);
    const std::size_t inner = total - chunk_bits;
    const std::size_t num_chunks = std::size_t{1} << chunk_bits;
    std::vector<std::vector<std::vector<std::uint64_t>>> partial(num_chunks);
    parallel_chunks(num_chunks, options.workers, [&](std::size_t chunk) {
      partial[chunk] = options.gray_code ? run_gray(chunk, inner) : run_scratch(chunk, inner);
    });
    auto merged = empty_counts();
    for (const auto& part : partial)
      for (std::size_t t = 0; t < merged.size(); ++t)
        for (std::size_t k = 0; k < merged[t].size(); ++k) merged[t][k] += part[t][k];
    return merged;
  }

 private:
  std::vector<std::vector<std::uint64_t>> empty_counts() const {
    return std::vector<std::vector<std::uint64_t>>(targets_.size(),
                                                   std::vector<std::uint64_t>(random_.size() + 1, 0));
  }

  void record(const RollbackUnionFind& uf, std::size_t open, std::vector<std::vector<std::uint64_t>>& counts) const {
    for (std::size_t t = 0; t < targets_.size(); ++t)
      if (uf.same(targets_[t].a, targets_[t].b)) ++counts[t][open];
  }

  // Opens the chunk-prefix edges selected by `chunk`; returns how many opened.
  std::size_t open_prefix(RollbackUnionFind& uf, std::size_t chunk, std::size_t inner) const {
    std::size_t open = 0;
    for (std::size_t i = inner; i < random_.size(); ++i)
      if ((chunk >> (i - inner)) & 1u) {
        uf.unite(random_[i].first, random_[i].second);
        ++open;
      }
    return open;
  }

  std::vector<std::vector<std::uint64_t>> run_scratch(std::size_t chunk, std::size_t inner) const {
    auto counts = empty_counts();
    RollbackUnionFind uf(n_);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inner); ++mask) {
      uf.reset(n_);
      for (const auto& [a, b] : fixed_) uf.unite(a, b);
      std::size_t open = open_prefix(uf, chunk, inner);
      for (std::size_t i = 0; i < inner; ++i)
        if ((mask >> i) & 1u) {
          uf.unite(random_[i].first, random_[i].second);
          ++open;
        }
      record(uf, open, counts);
    }
    return counts;
  }

  // Reflected Gray-code order: consecutive leaves differ in one edge, and the
  // union-find is rolled back to the deepest unchanged level between leaves.
  void walk(std::size_t depth, bool reversed, std::size_t open, RollbackUnionFind& uf,
            std::vector<std::vector<std::uint64_t>>& counts) const {
    if (depth == 0) {
      record(uf, open, counts);
      return;
    }
    const std::size_t i = depth - 1;
    for (int pass = 0; pass < 2; ++pass) {
      const bool take_open = (pass == 0) == reversed;
      if (take_open) {
        const auto mark = uf.checkpoint();
        uf.unite(random_[i].first, random_[i].second);
        walk(i, pass == 1, open + 1, uf, counts);
        uf.rollback(mark);
      } else {
        walk(i, pass == 1, open, uf, counts);
      }
    }
  }

  std::vector<std::vector<std::uint64_t>> run_gray(std::size_t chunk, std::size_t inner) const {
    auto counts = empty_counts();
    RollbackUnionFind uf(n_);
    for (const auto& [a, b] : fixed_) uf.unite(a, b);
    const std::size_t open = open_prefix(uf, chunk, inner);
    walk(inner, false, open, uf, counts);
    return counts;
  }

  std::size_t n_;
  std::vector<std::pair<VertexIndex, VertexIndex>> fixed_;
  std::vector<std::pair<VertexIndex, VertexIndex>> random_;
  std::vector<Target> targets_;
};

void check_vertex(const Multigraph& g, BunkbedVertex w) {
  if (w.base >= g.num_vertices() || (w.level != 0 && w.level != 1))
    throw std::invalid_argument("bunkbed vertex outside the graph");
}

}  // namespace

ConnectionCounts enumerate_connections(const Multigraph& g,
                                       const std::vector<std::pair<BunkbedVertex, BunkbedVertex>>& targets,
                                       const std::optional<VertexSet>& pinned,
                                       const EnumerationOptions& options) {
  const BunkbedGraph bb = bunkbed(g);
  std::vector<std::pair<VertexIndex, VertexIndex>> fixed, random;
  for (std::size_t i = 0; i < bb.graph.num_edges(); ++i) {
    const Edge& e = bb.graph.edges()[i];
    const BunkbedEdge& kind = bb.kinds[i];
    if (kind.kind == BunkbedEdge::Kind::Vertical && pinned) {
      if (pinned->contains(kind.vertex)) fixed.emplace_back(e.a, e.b);
      continue;
    }
    random.emplace_back(e.a, e.b);
  }
  if (pinned)
    for (VertexIndex v : *pinned)
      if (v >= g.num_vertices()) throw std::invalid_argument("pinned vertex outside the graph");
  if (random.size() > options.max_config_bits || random.size() >= 63)
    throw CapExceeded("enumeration needs 2^" + std::to_string(random.size()) + " assignments, above the cap 2^" +
                          std::to_string(options.max_config_bits) + "; raise --max-config-bits to " +
                          std::to_string(random.size()),
                      random.size());

  std::vector<Target> ts;
  for (const auto& [a, b] : targets) {
    check_vertex(g, a);
    check_vertex(g, b);
    ts.push_back({bb.index(a), bb.index(b)});
  }
  ConnectionEnumerator engine(bb.graph.num_vertices(), std::move(fixed), random, std::move(ts));
  const auto raw = engine.run(options);

  ConnectionCounts out;
  out.random_edges = random.size();
  for (const auto& row : raw) {
    auto& dst = out.counts.emplace_back();
    for (std::uint64_t c : row) dst.emplace_back(static_cast<unsigned long>(c));
  }
  return out;
}

RationalPoly connection_poly(const Multigraph& g, BunkbedVertex a, BunkbedVertex b,
                             const std::optional<VertexSet>& pinned, const EnumerationOptions& options) {
  const auto counts = enumerate_connections(g, {{a, b}}, pinned, options);
  return binomial_form(Variable::P, counts.counts[0], counts.random_edges);
}

ConnectionPolys connection_polys(const Multigraph& g, VertexIndex u, VertexIndex v,
                                 const std::optional<VertexSet>& pinned, const EnumerationOptions& options) {
  const auto counts = enumerate_connections(g, {{{u, 0}, {v, 0}}, {{u, 0}, {v, 1}}}, pinned, options);
  return {binomial_form(Variable::P, counts.counts[0], counts.random_edges),
          binomial_form(Variable::P, counts.counts[1], counts.random_edges)};
}

RationalPoly difference_poly(const Multigraph& g, VertexIndex u, VertexIndex v,
                             const std::optional<VertexSet>& pinned, const EnumerationOptions& options) {
  return connection_polys(g, u, v, pinned, options).difference();
}

Rational threshold_point(std::size_t num_edges) {
  const std::size_t exponent = (num_edges + 1) / 2 + 2;
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, exponent);
  Rational out(den - 1, den);
  out.canonicalize();
  return out;
}

GeodesicReport geodesic_check(const Multigraph& g, VertexIndex u, VertexIndex v,
                              const EnumerationOptions& options) {
  const BunkbedGraph bb = bunkbed(g);
  const auto geo = count_geodesics(bb.graph, bb.index({u, 0}), bb.index({v, 0}));
  GeodesicReport out;
  out.distance = geo.distance;
  out.geodesics = geo.count;
  out.polynomial = connection_poly(g, {u, 0}, {v, 0}, std::nullopt, options);
  if (!geo.distance) {
    out.verdict = out.polynomial.is_zero();
    return out;
  }
  const long d = static_cast<long>(*geo.distance);
  out.verdict = out.polynomial.valuation() == d && out.polynomial.coeff(*geo.distance) == Rational(mpz_class(static_cast<unsigned long>(geo.count)));
  return out;
}

}  // namespace bunkbed
