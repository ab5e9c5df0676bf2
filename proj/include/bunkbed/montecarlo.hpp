#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bunkbed/bunkbed_exact.hpp"
#include "bunkbed/graph.hpp"
#include "bunkbed/poly.hpp"

#include <json.hpp>

namespace bunkbed {

/// Open/closed state of every bunkbed edge, in BunkbedGraph edge order.
struct BunkbedConfiguration {
  std::vector<bool> open;
};

/// Edge i is open iff draw_i < floor(p * 2^64), compared in 128 bits so
/// p = 1 opens every edge and p = 0 none.
class RetentionThreshold {
 public:
  explicit RetentionThreshold(const Rational& p);
  bool open(std::uint64_t draw) const { return static_cast<unsigned __int128>(draw) < threshold_; }

 private:
  unsigned __int128 threshold_;
};

/// Configuration number `sample` of the stream keyed by `seed`. Verticals are
/// fixed when `pinned` is given.
BunkbedConfiguration sample_bunkbed(const Multigraph& g, const Rational& p, std::uint64_t seed,
                                    const std::optional<VertexSet>& pinned = std::nullopt,
                                    std::uint64_t sample = 0);

struct Estimate {
  double mean = 0;
  /// sqrt(v / samples) with v the unbiased sample variance; +inf for one sample.
  double standard_error = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  long long sum = 0;
  long long sum_squares = 0;

  static Estimate from_sums(long long sum, long long sum_squares, std::uint64_t samples, std::uint64_t seed);
};

struct DifferenceEstimate {
  Estimate same_level;   // [u_0 <-> v_0]
  Estimate cross_level;  // [u_0 <-> v_1]
  Estimate difference;   // paired: both indicators from the same configuration
  /// sqrt(stderr_same^2 + stderr_cross^2), what independent runs would give
  double unpaired_stderr = 0;
};

struct MonteCarloOptions {
  unsigned workers = 1;
};

DifferenceEstimate estimate_difference(const Multigraph& g, VertexIndex u, VertexIndex v, const Rational& p,
                                       std::uint64_t samples, std::uint64_t seed,
                                       const std::optional<VertexSet>& pinned = std::nullopt,
                                       const MonteCarloOptions& options = {});

/// |mean - exact| <= k * stderr; a zero stderr requires exact equality.
bool agreement_check(const Estimate& est, const Rational& exact, double k);

nlohmann::json to_json(const Estimate& est);

}  // namespace bunkbed
