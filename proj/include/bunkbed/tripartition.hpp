#pragma once

#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bunkbed/bunkbed_exact.hpp"
#include "bunkbed/graph.hpp"
#include "bunkbed/poly.hpp"
#include "bunkbed/report.hpp"

namespace bunkbed {

/// Number of open horizontal copies of an edge: 0, 1 or 2.
enum class EdgeClass : unsigned char { Closed = 0, Single = 1, Double = 2 };

/// Labels indexed by edge position in the host graph. s0 / s1 / s2 are the
/// edges labelled Closed / Single / Double.
struct Tripartition {
  std::vector<EdgeClass> labels;

  std::vector<EdgeId> part(const Multigraph& g, EdgeClass cls) const;
  std::size_t count(EdgeClass cls) const;
  /// e.g. "s0={0} s1={1,2} s2={}" using edge ids.
  std::string describe(const Multigraph& g) const;

  friend bool operator==(const Tripartition&, const Tripartition&) = default;
};

/// Digit k of the ternary counter is the label of edge position k.
Tripartition tripartition_from_index(std::size_t num_edges, std::uint64_t index);

struct TripartitionLimits {
  /// Refuse 3^|E| above this count (3^16 by default).
  std::uint64_t max_tripartitions = 43046721;
  /// Refuse F(s) evaluations over more than 2^max_assignment_bits assignments.
  unsigned max_assignment_bits = 24;
};

/// 3^|E|, or CapExceeded when that is above `limits.max_tripartitions`.
std::uint64_t tripartition_count(const Multigraph& g, const TripartitionLimits& limits = {});

/// Lazy range over all tripartitions in ternary-counter order.
class TripartitionRange {
 public:
  class iterator {
   public:
    using value_type = Tripartition;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(std::size_t num_edges, std::uint64_t index) : edges_(num_edges), index_(index) {}
    Tripartition operator*() const { return tripartition_from_index(edges_, index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++index_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    std::size_t edges_ = 0;
    std::uint64_t index_ = 0;
  };

  TripartitionRange(std::size_t num_edges, std::uint64_t count) : edges_(num_edges), count_(count) {}
  iterator begin() const { return {edges_, 0}; }
  iterator end() const { return {edges_, count_}; }
  std::uint64_t size() const { return count_; }

 private:
  std::size_t edges_;
  std::uint64_t count_;
};

TripartitionRange enumerate_tripartitions(const Multigraph& g, const TripartitionLimits& limits = {});

/// (1-p)^(2|s0|) (2p(1-p))^|s1| p^(2|s2|)
RationalPoly weight_poly(const Tripartition& s);
RationalPoly weight_poly(std::size_t closed, std::size_t single, std::size_t doubled);

/// G(s): s0 deleted, s2 contracted, with the images of u, v and t.
struct ReducedModel {
  Minor minor;
  VertexIndex pu = 0;
  VertexIndex pv = 0;
  VertexSet pinned;
};

ReducedModel reduced_model(const Multigraph& g, const Tripartition& s, const VertexSet& t, VertexIndex u,
                           VertexIndex v);

enum class TripartClass { Infinite, AtMostOne, AtLeastTwo };
std::string_view to_string(TripartClass c);

struct Classification {
  TripartClass cls;
  Distance distance;
};

Classification classify(const Multigraph& g, const Tripartition& s, const VertexSet& t, VertexIndex u,
                        VertexIndex v);
TripartClass class_of(Distance d);

/// Statistics of the alternative bunkbed model on a reduced model. Every
/// non-loop edge of the minor is UP or DOWN; verticals are open exactly at
/// the pinned image.
struct AlternativeModelStats {
  std::size_t assignments_bits = 0;  // k, the number of random orientations
  std::uint64_t same_level = 0;      // #[pu_0 <-> pv_0]
  std::uint64_t cross_level = 0;     // #[pu_0 <-> pv_1]
  std::uint64_t upper_same = 0;      // #[pu_1 <-> pv_1]
  std::uint64_t upper_cross = 0;     // #[pu_1 <-> pv_0]
  int f_min = 0;
  int f_max = 0;
  long long f_sum = 0;

  /// F(s) = (same_level - cross_level) / 2^k
  Rational difference() const;
  /// E[f_uv] = f_sum / 2^k
  Rational f_mean() const;
};

/// Enumerates all UP/DOWN assignments. With `skip_loops` false the
/// self-loops are enumerated too (they never change a connection).
AlternativeModelStats alternative_model_stats(const ReducedModel& model, bool skip_loops = true,
                                              const TripartitionLimits& limits = {});

/// F(s) = Q(pu_0 <-> pv_0) - Q(pu_0 <-> pv_1); a dyadic rational.
Rational f_exact(const Multigraph& g, const Tripartition& s, const VertexSet& t, VertexIndex u, VertexIndex v,
                 const TripartitionLimits& limits = {});

struct SurveyOptions {
  TripartitionLimits limits;
  unsigned workers = 1;
};

/// One pass over every tripartition for fixed (G, t, u, v). Polynomial
/// quantities are kept as count tables over (|s0|, |s1|) and expanded at the
/// end.
struct TripartitionSurvey {
  std::size_t num_edges = 0;
  std::uint64_t total = 0;
  std::map<TripartClass, std::uint64_t> class_counts;
  std::map<TripartClass, RationalPoly> class_mass;  // P(S in class | T=t)
  RationalPoly expansion;                           // sum_s F(s) P(S=s)
  RationalPoly weight_total;                        // sum_s P(S=s), must be 1

  // Infinite class
  std::uint64_t infinite_nonzero_f = 0;
  std::optional<Tripartition> infinite_violation;

  // AtMostOne class
  std::uint64_t negative_f_assignments = 0;  // assignments with f_uv < 0
  std::optional<Rational> min_f;
  std::optional<Tripartition> min_witness;
  std::uint64_t safe_bound_failures = 0;   // F(s) < 2^-|s1|
  std::uint64_t strong_bound_failures = 0;  // F(s) < 2^(1-|s1|)
  std::optional<Tripartition> strong_bound_witness;
  std::optional<Rational> strong_bound_witness_f;

  // F(s) = E[f_uv] / 2 everywhere
  std::uint64_t symmetry_failures = 0;

  std::uint64_t distance_cache_hits = 0;
};

TripartitionSurvey survey_tripartitions(const Multigraph& g, const VertexSet& t, VertexIndex u, VertexIndex v,
                                        const SurveyOptions& options = {});

struct CheckOptions {
  SurveyOptions survey;
  EnumerationOptions enumeration;
};

/// Compares difference_poly(g, u, v, t) with sum_s F(s) weight_poly(s).
VerificationReport expansion_identity_check(const Multigraph& g, const VertexSet& t, VertexIndex u, VertexIndex v,
                                            const CheckOptions& options = {});

/// Flips every UP/DOWN value on E_v and checks f_uv(w') = -f_uv(w) for every
/// assignment, that the flip is an involution, and that F(s) = 0.
/// Throws std::invalid_argument unless d(s) is infinite.
VerificationReport mirroring_involution_check(const Multigraph& g, const Tripartition& s, const VertexSet& t,
                                              VertexIndex u, VertexIndex v,
                                              const TripartitionLimits& limits = {});

/// Per-class lower bounds on F and class-mass domination at the threshold
/// point. The weaker F >= 2^-|s1| bound is a hard check; F >= 2^(1-|s1|)
/// failing alone yields DISCREPANCY.
VerificationReport bound_report(const Multigraph& g, const VertexSet& t, VertexIndex u, VertexIndex v,
                                const CheckOptions& options = {});

/// Theorem sign at the threshold point: difference >= 0, strictly iff u and v
/// are joined in V \ t, and at least p0^|E| (1-p0)^|E| when joined.
VerificationReport theorem_sign_check(const Multigraph& g, const VertexSet& t, VertexIndex u, VertexIndex v,
                                      const EnumerationOptions& options = {});

}  // namespace bunkbed
