#include "bunkbed/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bunkbed/parallel.hpp"
#include "bunkbed/philox.hpp"

namespace bunkbed {

RetentionThreshold::RetentionThreshold(const Rational& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("retention probability must lie in [0, 1]");
  mpz_class scaled = p.get_num();
  scaled <<= 64;
  scaled /= p.get_den();  // floor(p * 2^64) <= 2^64
  const mpz_class high = scaled >> 64;
  const mpz_class low = scaled - (high << 64);
  const auto low_bits = static_cast<std::uint64_t>(mpz_get_ui(low.get_mpz_t()));
  threshold_ = (static_cast<unsigned __int128>(mpz_get_ui(high.get_mpz_t())) << 64) | low_bits;
}

namespace {

// Random-edge layout shared by sampling and estimation.
struct SamplingPlan {
  BunkbedGraph bb;
  std::vector<std::size_t> random_positions;
  std::vector<std::size_t> fixed_open_positions;

  SamplingPlan(const Multigraph& g, const std::optional<VertexSet>& pinned) : bb(bunkbed(g)) {
    if (pinned)
      for (VertexIndex v : *pinned)
        if (v >= g.num_vertices()) throw std::invalid_argument("pinned vertex outside the graph");
    for (std::size_t i = 0; i < bb.kinds.size(); ++i) {
      const BunkbedEdge& k = bb.kinds[i];
      if (k.kind == BunkbedEdge::Kind::Vertical && pinned) {
        if (pinned->contains(k.vertex)) fixed_open_positions.push_back(i);
        continue;
      }
      random_positions.push_back(i);
    }
  }
};

}  // namespace

BunkbedConfiguration sample_bunkbed(const Multigraph& g, const Rational& p, std::uint64_t seed,
                                    const std::optional<VertexSet>& pinned, std::uint64_t sample) {
  const SamplingPlan plan(g, pinned);
  const RetentionThreshold threshold(p);
  BunkbedConfiguration config;
  config.open.assign(plan.bb.graph.num_edges(), false);
  for (std::size_t i : plan.fixed_open_positions) config.open[i] = true;
  SampleStream stream(seed, sample);
  for (std::size_t i : plan.random_positions) config.open[i] = threshold.open(stream.next());
  return config;
}

Estimate Estimate::from_sums(long long sum, long long sum_squares, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("an estimate needs at least one sample");
  Estimate e;
  e.sum = sum;
  e.sum_squares = sum_squares;
  e.samples = samples;
  e.seed = seed;
  e.mean = static_cast<double>(sum) / static_cast<double>(samples);
  if (samples == 1) {
    e.standard_error = std::numeric_limits<double>::infinity();
    return e;
  }
  // v / n = (n S2 - S1^2) / (n^2 (n - 1)), numerator in exact integers.
  const auto n = static_cast<__int128>(samples);
  const __int128 centered = n * sum_squares - static_cast<__int128>(sum) * sum;
  const long double denom = static_cast<long double>(samples) * static_cast<long double>(samples) *
                            static_cast<long double>(samples - 1);
  e.standard_error = static_cast<double>(std::sqrt(static_cast<long double>(centered) / denom));
  return e;
}

DifferenceEstimate estimate_difference(const Multigraph& g, VertexIndex u, VertexIndex v, const Rational& p,
                                       std::uint64_t samples, std::uint64_t seed,
                                       const std::optional<VertexSet>& pinned, const MonteCarloOptions& options) {
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  if (u >= g.num_vertices() || v >= g.num_vertices()) throw std::invalid_argument("unknown vertex");
  const SamplingPlan plan(g, pinned);
  const RetentionThreshold threshold(p);
  const VertexIndex u0 = plan.bb.index({u, 0});
  const VertexIndex v0 = plan.bb.index({v, 0});
  const VertexIndex v1 = plan.bb.index({v, 1});

  // Sample i always uses stream i, so chunking never changes the draws.
  constexpr std::uint64_t kChunk = 4096;
  const std::size_t num_chunks = static_cast<std::size_t>((samples + kChunk - 1) / kChunk);
  struct Sums {
    long long same = 0, cross = 0, diff = 0, diff_sq = 0;
  };
  std::vector<Sums> parts(num_chunks);
  parallel_chunks(num_chunks, options.workers, [&](std::size_t chunk) {
    Sums s;
    RollbackUnionFind uf(plan.bb.graph.num_vertices());
    const std::uint64_t begin = chunk * kChunk;
    const std::uint64_t end = std::min(samples, begin + kChunk);
    for (std::uint64_t i = begin; i < end; ++i) {
      uf.reset(plan.bb.graph.num_vertices());
      for (std::size_t pos : plan.fixed_open_positions) {
        const Edge& e = plan.bb.graph.edges()[pos];
        uf.unite(e.a, e.b);
      }
      SampleStream stream(seed, i);
      for (std::size_t pos : plan.random_positions)
        if (threshold.open(stream.next())) {
          const Edge& e = plan.bb.graph.edges()[pos];
          uf.unite(e.a, e.b);
        }
      const int same = uf.same(u0, v0);
      const int cross = uf.same(u0, v1);
      s.same += same;
      s.cross += cross;
      s.diff += same - cross;
      s.diff_sq += (same - cross) * (same - cross);
    }
    parts[chunk] = s;
  });
  Sums total;
  for (const Sums& s : parts) {
    total.same += s.same;
    total.cross += s.cross;
    total.diff += s.diff;
    total.diff_sq += s.diff_sq;
  }
  DifferenceEstimate out;
  out.same_level = Estimate::from_sums(total.same, total.same, samples, seed);
  out.cross_level = Estimate::from_sums(total.cross, total.cross, samples, seed);
  out.difference = Estimate::from_sums(total.diff, total.diff_sq, samples, seed);
  out.unpaired_stderr = std::sqrt(out.same_level.standard_error * out.same_level.standard_error +
                                  out.cross_level.standard_error * out.cross_level.standard_error);
  return out;
}

bool agreement_check(const Estimate& est, const Rational& exact, double k) {
  if (!(k > 0)) throw std::invalid_argument("agreement factor must be positive");
  if (est.standard_error == 0) return Rational(est.mean) == exact;
  return std::fabs(est.mean - exact.get_d()) <= k * est.standard_error;
}

nlohmann::json to_json(const Estimate& est) {
  nlohmann::json j = {{"mean", est.mean},       {"samples", est.samples}, {"seed", est.seed},
                      {"sum", est.sum},         {"sum_squares", est.sum_squares}};
  if (std::isfinite(est.standard_error)) j["stderr"] = est.standard_error;
  else j["stderr"] = "inf";
  return j;
}

}  // namespace bunkbed
