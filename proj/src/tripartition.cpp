#include "bunkbed/tripartition.hpp"

#include <algorithm>

#include "bunkbed/parallel.hpp"

namespace bunkbed {

std::vector<EdgeId> Tripartition::part(const Multigraph& g, EdgeClass cls) const {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == cls) out.push_back(g.edges().at(i).id);
  return out;
}

std::size_t Tripartition::count(EdgeClass cls) const {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), cls));
}

std::string Tripartition::describe(const Multigraph& g) const {
  std::string out;
  for (int c = 0; c < 3; ++c) {
    if (c) out += ' ';
    out += "s" + std::to_string(c) + "={";
    bool first = true;
    for (EdgeId id : part(g, static_cast<EdgeClass>(c))) {
      out += (first ? "" : ",") + std::to_string(id);
      first = false;
    }
    out += '}';
  }
  return out;
}

Tripartition tripartition_from_index(std::size_t num_edges, std::uint64_t index) {
  Tripartition s;
  s.labels.resize(num_edges);
  for (std::size_t k = 0; k < num_edges; ++k) {
    s.labels[k] = static_cast<EdgeClass>(index % 3);
    index /= 3;
  }
  return s;
}

std::uint64_t tripartition_count(const Multigraph& g, const TripartitionLimits& limits) {
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    if (count > limits.max_tripartitions / 3)
      throw CapExceeded("3^" + std::to_string(g.num_edges()) + " tripartitions exceed the cap of " +
                            std::to_string(limits.max_tripartitions) + "; raise --max-tripartitions",
                        g.num_edges());
    count *= 3;
  }
  if (count > limits.max_tripartitions)
    throw CapExceeded("3^" + std::to_string(g.num_edges()) + " tripartitions exceed the cap of " +
                          std::to_string(limits.max_tripartitions) + "; raise --max-tripartitions",
                      g.num_edges());
  return count;
}

TripartitionRange enumerate_tripartitions(const Multigraph& g, const TripartitionLimits& limits) {
  return {g.num_edges(), tripartition_count(g, limits)};
}

RationalPoly weight_poly(std::size_t closed, std::size_t single, std::size_t doubled) {
  const auto p = RationalPoly::monomial(Variable::P, 1);
  const auto q = RationalPoly::complement(Variable::P);
  return q.pow(static_cast<unsigned>(2 * closed)) * (Rational(2) * p * q).pow(static_cast<unsigned>(single)) *
         p.pow(static_cast<unsigned>(2 * doubled));
}

RationalPoly weight_poly(const Tripartition& s) {
  return weight_poly(s.count(EdgeClass::Closed), s.count(EdgeClass::Single), s.count(EdgeClass::Double));
}

ReducedModel reduced_model(const Multigraph& g, const Tripartition& s, const VertexSet& t, VertexIndex u,
                           VertexIndex v) {
  if (s.labels.size() != g.num_edges()) throw std::invalid_argument("tripartition does not match the graph");
  if (u >= g.num_vertices() || v >= g.num_vertices()) throw std::invalid_argument("unknown vertex");
  const auto closed = s.part(g, EdgeClass::Closed);
  const auto doubled = s.part(g, EdgeClass::Double);
  ReducedModel out{minor(g, closed, doubled), 0, 0, {}};
  out.pu = out.minor.projection[u];
  out.pv = out.minor.projection[v];
  for (VertexIndex w : t) {
    if (w >= g.num_vertices()) throw std::invalid_argument("pinned vertex outside the graph");
    out.pinned.insert(out.minor.projection[w]);
  }
  return out;
}

std::string_view to_string(TripartClass c) {
  switch (c) {
    case TripartClass::Infinite: return "inf";
    case TripartClass::AtMostOne: return "le1";
    case TripartClass::AtLeastTwo: return "ge2";
  }
  return "inf";
}

TripartClass class_of(Distance d) {
  if (!d) return TripartClass::Infinite;
  return *d <= 1 ? TripartClass::AtMostOne : TripartClass::AtLeastTwo;
}

Classification classify(const Multigraph& g, const Tripartition& s, const VertexSet& t, VertexIndex u,
                        VertexIndex v) {
  const auto model = reduced_model(g, s, t, u, v);
  const Distance d = vertical_free_distance(model.minor.graph, model.pu, model.pv, model.pinned);
  return {class_of(d), d};
}

Rational AlternativeModelStats::difference() const {
  Rational out(static_cast<long>(same_level) - static_cast<long>(cross_level));
  out /= Rational(mpz_class(1) << static_cast<mp_bitcnt_t>(assignments_bits));
  return out;
}

Rational AlternativeModelStats::f_mean() const {
  Rational out(static_cast<long>(f_sum));
  out /= Rational(mpz_class(1) << static_cast<mp_bitcnt_t>(assignments_bits));
  return out;
}

namespace {

// Two-level copy of the minor with verticals fixed at the pinned image.
struct AlternativeModel {
  std::size_t n = 0;  // minor vertices
  std::vector<std::pair<VertexIndex, VertexIndex>> domain;  // oriented edges
  VertexIndex pu = 0, pv = 0;
  RollbackUnionFind uf;

  AlternativeModel(const ReducedModel& model, bool skip_loops, const TripartitionLimits& limits)
      : n(model.minor.graph.num_vertices()), pu(model.pu), pv(model.pv), uf(2 * n) {
    for (const Edge& e : model.minor.graph.edges())
      if (!skip_loops || !e.is_loop()) domain.emplace_back(e.a, e.b);
    if (domain.size() > limits.max_assignment_bits || domain.size() >= 63)
      throw CapExceeded("F(s) needs 2^" + std::to_string(domain.size()) + " assignments, above the cap 2^" +
                            std::to_string(limits.max_assignment_bits),
                        domain.size());
    for (VertexIndex w : model.pinned) uf.unite(w, w + n);
  }

  std::uint64_t assignments() const { return std::uint64_t{1} << domain.size(); }

  // Bit i set: edge i is UP (its level-1 copy is open).
  template <class Visit>
  void evaluate(std::uint64_t mask, Visit&& visit) {
    const auto mark = uf.checkpoint();
    for (std::size_t i = 0; i < domain.size(); ++i) {
      const VertexIndex shift = ((mask >> i) & 1u) ? n : 0;
      uf.unite(domain[i].first + shift, domain[i].second + shift);
    }
    visit(uf.same(pu, pv), uf.same(pu, pv + n), uf.same(pu + n, pv + n), uf.same(pu + n, pv));
    uf.rollback(mark);
  }

  int f_of(std::uint64_t mask) {
    int f = 0;
    evaluate(mask, [&](bool a, bool b, bool c, bool d) { f = int(a) + int(c) - int(b) - int(d); });
    return f;
  }
};

}  // namespace

AlternativeModelStats alternative_model_stats(const ReducedModel& model, bool skip_loops,
                                              const TripartitionLimits& limits) {
  AlternativeModel alt(model, skip_loops, limits);
  AlternativeModelStats st;
  st.assignments_bits = alt.domain.size();
  st.f_min = 2;
  st.f_max = -2;
  for (std::uint64_t mask = 0; mask < alt.assignments(); ++mask) {
    alt.evaluate(mask, [&](bool same, bool cross, bool upper_same, bool upper_cross) {
      st.same_level += same;
      st.cross_level += cross;
      st.upper_same += upper_same;
      st.upper_cross += upper_cross;
      const int f = int(same) + int(upper_same) - int(cross) - int(upper_cross);
      st.f_min = std::min(st.f_min, f);
      st.f_max = std::max(st.f_max, f);
      st.f_sum += f;
    });
  }
  return st;
}

Rational f_exact(const Multigraph& g, const Tripartition& s, const VertexSet& t, VertexIndex u, VertexIndex v,
                 const TripartitionLimits& limits) {
  return alternative_model_stats(reduced_model(g, s, t, u, v), true, limits).difference();
}

namespace {

nlohmann::json tripartition_json(const Multigraph& g, const Tripartition& s) {
  return {{"s0", s.part(g, EdgeClass::Closed)},
          {"s1", s.part(g, EdgeClass::Single)},
          {"s2", s.part(g, EdgeClass::Double)}};
}

nlohmann::json vertex_json(const Multigraph& g, const VertexSet& t) {
  nlohmann::json out = nlohmann::json::array();
  for (VertexIndex w : t) out.push_back(g.name(w));
  return out;
}

nlohmann::json instance_json(const Multigraph& g, const VertexSet& t, VertexIndex u, VertexIndex v) {
  return {{"graph", to_edge_list(g)}, {"t", vertex_json(g, t)}, {"u", g.name(u)}, {"v", g.name(v)}};
}

// Per-chunk partial survey, merged in chunk order.
struct SurveyPart {
  // [class][n0][n1] -> count; sumF[n0][n1]
  std::vector<std::vector<std::vector<std::uint64_t>>> class_table;
  std::vector<std::vector<Rational>> f_table;
  std::vector<std::uint64_t> class_counts = std::vector<std::uint64_t>(3, 0);
  std::uint64_t infinite_nonzero_f = 0;
  std::optional<std::uint64_t> infinite_violation;
  std::uint64_t negative_f_assignments = 0;
  std::optional<Rational> min_f;
  std::optional<std::uint64_t> min_witness;
  std::uint64_t safe_failures = 0;
  std::uint64_t strong_failures = 0;
  std::optional<std::uint64_t> strong_witness;
  std::optional<Rational> strong_witness_f;
  std::uint64_t symmetry_failures = 0;
  std::uint64_t cache_hits = 0;
};

struct CachedModel {
  Distance distance;
  AlternativeModelStats stats;
};

Rational power_of_two(long exponent) {
  Rational out(1);
  if (exponent >= 0) out = Rational(mpz_class(1) << static_cast<mp_bitcnt_t>(exponent));
  else out = Rational(mpz_class(1), mpz_class(1) << static_cast<mp_bitcnt_t>(-exponent));
  return out;
}

}  // namespace

TripartitionSurvey survey_tripartitions(const Multigraph& g, const VertexSet& t, VertexIndex u, VertexIndex v,
                                        const SurveyOptions& options) {
  const std::uint64_t total = tripartition_count(g, options.limits);
  const std::size_t m = g.num_edges();
  const std::uint64_t chunk_size = std::max<std::uint64_t>(1, (total + 255) / 256);
  const std::size_t num_chunks = static_cast<std::size_t>((total + chunk_size - 1) / chunk_size);
  std::vector<SurveyPart> parts(num_chunks);

  parallel_chunks(num_chunks, options.workers, [&](std::size_t chunk) {
    SurveyPart& part = parts[chunk];
    part.class_table.assign(3, std::vector<std::vector<std::uint64_t>>(m + 1, std::vector<std::uint64_t>(m + 1, 0)));
    part.f_table.assign(m + 1, std::vector<Rational>(m + 1, Rational(0)));
    // d(s) and the alternative-model statistics only depend on the s2
    // partition and on s0 (s1 edges inside an s2 block become loops).
    std::map<std::vector<std::size_t>, CachedModel> cache;
    const std::uint64_t begin = chunk * chunk_size;
    const std::uint64_t end = std::min(total, begin + chunk_size);
    for (std::uint64_t index = begin; index < end; ++index) {
      const Tripartition s = tripartition_from_index(m, index);
      const std::size_t n0 = s.count(EdgeClass::Closed);
      const std::size_t n1 = s.count(EdgeClass::Single);
      const auto model = reduced_model(g, s, t, u, v);
      std::vector<std::size_t> key = model.minor.projection;
      for (std::size_t i = 0; i < m; ++i) key.push_back(s.labels[i] == EdgeClass::Closed);
      auto it = cache.find(key);
      if (it == cache.end()) {
        CachedModel entry{vertical_free_distance(model.minor.graph, model.pu, model.pv, model.pinned),
                          alternative_model_stats(model, true, options.limits)};
        it = cache.emplace(std::move(key), std::move(entry)).first;
      } else {
        ++part.cache_hits;
      }
      const CachedModel& entry = it->second;
      const TripartClass cls = class_of(entry.distance);
      const Rational f = entry.stats.difference();

      ++part.class_counts[static_cast<int>(cls)];
      ++part.class_table[static_cast<int>(cls)][n0][n1];
      part.f_table[n0][n1] += f;
      if (entry.stats.f_mean() != 2 * f) ++part.symmetry_failures;

      if (cls == TripartClass::Infinite && f != 0) {
        ++part.infinite_nonzero_f;
        if (!part.infinite_violation) part.infinite_violation = index;
      }
      if (cls == TripartClass::AtMostOne) {
        if (entry.stats.f_min < 0) ++part.negative_f_assignments;
        if (!part.min_f || f < *part.min_f) {
          part.min_f = f;
          part.min_witness = index;
        }
        if (f < power_of_two(-static_cast<long>(n1))) ++part.safe_failures;
        if (f < power_of_two(1 - static_cast<long>(n1))) {
          ++part.strong_failures;
          if (!part.strong_witness) {
            part.strong_witness = index;
            part.strong_witness_f = f;
          }
        }
      }
    }
  });

  TripartitionSurvey out;
  out.num_edges = m;
  out.total = total;
  std::vector<std::vector<std::vector<mpz_class>>> class_table(
      3, std::vector<std::vector<mpz_class>>(m + 1, std::vector<mpz_class>(m + 1, 0)));
  std::vector<std::vector<Rational>> f_table(m + 1, std::vector<Rational>(m + 1, Rational(0)));
  std::vector<std::uint64_t> class_counts(3, 0);
  for (const SurveyPart& part : parts) {
    for (int c = 0; c < 3; ++c) {
      class_counts[c] += part.class_counts[c];
      for (std::size_t a = 0; a <= m; ++a)
        for (std::size_t b = 0; b <= m; ++b)
          class_table[c][a][b] += static_cast<unsigned long>(part.class_table[c][a][b]);
    }
    for (std::size_t a = 0; a <= m; ++a)
      for (std::size_t b = 0; b <= m; ++b) f_table[a][b] += part.f_table[a][b];
    out.infinite_nonzero_f += part.infinite_nonzero_f;
    if (!out.infinite_violation && part.infinite_violation)
      out.infinite_violation = tripartition_from_index(m, *part.infinite_violation);
    out.negative_f_assignments += part.negative_f_assignments;
    if (part.min_f && (!out.min_f || *part.min_f < *out.min_f)) {
      out.min_f = part.min_f;
      out.min_witness = tripartition_from_index(m, *part.min_witness);
    }
    out.safe_bound_failures += part.safe_failures;
    out.strong_bound_failures += part.strong_failures;
    if (!out.strong_bound_witness && part.strong_witness) {
      out.strong_bound_witness = tripartition_from_index(m, *part.strong_witness);
      out.strong_bound_witness_f = part.strong_witness_f;
    }
    out.symmetry_failures += part.symmetry_failures;
    out.distance_cache_hits += part.cache_hits;
  }

  out.expansion = RationalPoly(Variable::P);
  out.weight_total = RationalPoly(Variable::P);
  for (int c = 0; c < 3; ++c) {
    out.class_counts[static_cast<TripartClass>(c)] = class_counts[c];
    out.class_mass[static_cast<TripartClass>(c)] = RationalPoly(Variable::P);
  }
  for (std::size_t a = 0; a <= m; ++a)
    for (std::size_t b = 0; a + b <= m; ++b) {
      const RationalPoly w = weight_poly(a, b, m - a - b);
      out.expansion += w * f_table[a][b];
      for (int c = 0; c < 3; ++c) {
        if (class_table[c][a][b] == 0) continue;
        const RationalPoly mass = w * Rational(class_table[c][a][b]);
        out.class_mass[static_cast<TripartClass>(c)] += mass;
        out.weight_total += mass;
      }
    }
  return out;
}

VerificationReport expansion_identity_check(const Multigraph& g, const VertexSet& t, VertexIndex u, VertexIndex v,
                                            const CheckOptions& options) {
  VerificationReport report;
  report.check = "expansion_identity";
  report.set_inputs(instance_json(g, t, u, v));
  const auto survey = survey_tripartitions(g, t, u, v, options.survey);
  const auto polys = connection_polys(g, u, v, t, options.enumeration);
  const RationalPoly lhs = polys.difference();
  report.quantities["same_level"] = to_json(polys.same_level);
  report.quantities["cross_level"] = to_json(polys.cross_level);
  report.quantities["lhs"] = to_json(lhs);
  report.quantities["rhs"] = to_json(survey.expansion);
  report.quantities["tripartitions"] = survey.total;
  report.require("identity", lhs == survey.expansion);
  report.require("weights_sum_to_one", survey.weight_total == RationalPoly::constant(Variable::P, 1));
  return report;
}

VerificationReport mirroring_involution_check(const Multigraph& g, const Tripartition& s, const VertexSet& t,
                                              VertexIndex u, VertexIndex v, const TripartitionLimits& limits) {
  const auto model = reduced_model(g, s, t, u, v);
  const Distance d = vertical_free_distance(model.minor.graph, model.pu, model.pv, model.pinned);
  if (d) throw std::invalid_argument("mirroring needs d(s) = infinity, got d(s) = " + std::to_string(*d));

  VerificationReport report;
  report.check = "mirroring_involution";
  auto in = instance_json(g, t, u, v);
  in["tripartition"] = tripartition_json(g, s);
  report.set_inputs(std::move(in));

  const Multigraph& h = model.minor.graph;
  // U: vertices with a vertical-free path to pu.
  std::vector<char> in_u(h.num_vertices(), 0);
  if (!model.pinned.contains(model.pu)) {
    VertexSet free;
    for (VertexIndex w = 0; w < h.num_vertices(); ++w)
      if (!model.pinned.contains(w)) free.insert(w);
    for (const auto& block : connected_components(h, free))
      if (std::find(block.begin(), block.end(), model.pu) != block.end())
        for (VertexIndex w : block) in_u[w] = 1;
  }
  // Domain is the non-loop edges in minor order, matching AlternativeModel.
  std::vector<std::size_t> domain;
  for (std::size_t i = 0; i < h.num_edges(); ++i)
    if (!h.edges()[i].is_loop()) domain.push_back(i);
  std::uint64_t flip_mask = 0;
  std::vector<char> touches_u(h.num_vertices(), 0), touches_v(h.num_vertices(), 0);
  nlohmann::json eu = nlohmann::json::array(), ev = nlohmann::json::array();
  for (std::size_t bit = 0; bit < domain.size(); ++bit) {
    const Edge& e = h.edges()[domain[bit]];
    const bool in_eu = in_u[e.a] || in_u[e.b];
    (in_eu ? touches_u : touches_v)[e.a] = 1;
    (in_eu ? touches_u : touches_v)[e.b] = 1;
    (in_eu ? eu : ev).push_back(e.id);
    if (!in_eu) flip_mask |= std::uint64_t{1} << bit;
  }
  bool boundary_pinned = true;
  for (VertexIndex w = 0; w < h.num_vertices(); ++w)
    if (touches_u[w] && touches_v[w] && !model.pinned.contains(w)) boundary_pinned = false;
  const bool endpoints_free = !model.pinned.contains(model.pu) && !model.pinned.contains(model.pv);
  const bool pu_side = !endpoints_free || !touches_v[model.pu];
  const bool pv_side = !endpoints_free || !touches_u[model.pv];

  AlternativeModel alt(model, true, limits);
  std::uint64_t negation_failures = 0, involution_failures = 0;
  for (std::uint64_t mask = 0; mask < alt.assignments(); ++mask) {
    const std::uint64_t mirrored = mask ^ flip_mask;
    if ((mirrored ^ flip_mask) != mask) ++involution_failures;
    if (alt.f_of(mirrored) != -alt.f_of(mask)) ++negation_failures;
  }
  const Rational f = alternative_model_stats(model, true, limits).difference();

  report.quantities["F"] = to_string(f);
  report.quantities["assignments"] = alt.assignments();
  report.quantities["negation_failures"] = negation_failures;
  report.witnesses["E_u"] = eu;
  report.witnesses["E_v"] = ev;
  report.require("f_negated_by_flip", negation_failures == 0);
  report.require("flip_is_involution", involution_failures == 0);
  report.require("boundary_vertices_pinned", boundary_pinned);
  report.require("u_edges_in_E_u", pu_side);
  report.require("v_edges_in_E_v", pv_side);
  report.require("F_is_zero", f == 0);
  return report;
}

VerificationReport bound_report(const Multigraph& g, const VertexSet& t, VertexIndex u, VertexIndex v,
                                const CheckOptions& options) {
  VerificationReport report;
  report.check = "bound_report";
  report.set_inputs(instance_json(g, t, u, v));
  const auto survey = survey_tripartitions(g, t, u, v, options.survey);
  const std::size_t m = g.num_edges();
  const Rational p0 = threshold_point(m);
  const Rational le1 = survey.class_mass.at(TripartClass::AtMostOne).eval(p0);
  const Rational ge2 = survey.class_mass.at(TripartClass::AtLeastTwo).eval(p0);
  const Rational scale = power_of_two(-static_cast<long>(m));

  report.quantities["p0"] = to_string(p0);
  nlohmann::json counts, masses, masses_at_p0;
  for (const auto& [cls, n] : survey.class_counts) counts[std::string(to_string(cls))] = n;
  for (const auto& [cls, poly] : survey.class_mass) {
    masses[std::string(to_string(cls))] = to_json(poly);
    masses_at_p0[std::string(to_string(cls))] = to_string(poly.eval(p0));
  }
  report.quantities["class_counts"] = counts;
  report.quantities["class_mass"] = masses;
  report.quantities["class_mass_at_p0"] = masses_at_p0;
  report.quantities["min_F_le1"] = survey.min_f ? nlohmann::json(to_string(*survey.min_f)) : nlohmann::json();
  report.quantities["strong_bound_failures"] = survey.strong_bound_failures;
  report.quantities["safe_bound_failures"] = survey.safe_bound_failures;
  if (survey.min_witness) report.witnesses["min_F"] = tripartition_json(g, *survey.min_witness);
  if (survey.strong_bound_witness) {
    report.witnesses["strong_bound"] = tripartition_json(g, *survey.strong_bound_witness);
    report.witnesses["strong_bound"]["F"] = to_string(*survey.strong_bound_witness_f);
  }

  report.require("F_zero_on_inf", survey.infinite_nonzero_f == 0);
  report.require("f_nonnegative_on_le1", survey.negative_f_assignments == 0);
  report.require("F_is_half_mean_f", survey.symmetry_failures == 0);
  report.require("F_safe_bound_le1", survey.safe_bound_failures == 0);
  report.require("F_strong_bound_le1", survey.strong_bound_failures == 0 ? Verdict::Pass : Verdict::Discrepancy);

  const bool dominated = le1 > 0 ? ge2 < scale * le1 : ge2 <= scale * le1;
  report.require("ge2_dominated_at_p0", dominated);
  // Sharper ratio with one more factor of two.
  report.require("ge2_dominated_sharp_at_p0", le1 > 0 ? ge2 < scale * le1 / 2 : ge2 <= 0);

  VertexSet free;
  for (VertexIndex w = 0; w < g.num_vertices(); ++w)
    if (!t.contains(w)) free.insert(w);
  const bool joined = connected_within(g, u, v, free);
  report.require("le1_positive_iff_joined", (le1 > 0) == joined);
  if (joined) {
    const Rational diff = difference_poly(g, u, v, t, options.enumeration).eval(p0);
    Rational floor_value = 1;
    for (std::size_t k = 0; k < m; ++k) floor_value *= p0 * (1 - p0);
    report.quantities["difference_at_p0"] = to_string(diff);
    report.quantities["difference_floor"] = to_string(floor_value);
    report.require("difference_floor_at_p0", diff >= floor_value);
  }
  return report;
}

VerificationReport theorem_sign_check(const Multigraph& g, const VertexSet& t, VertexIndex u, VertexIndex v,
                                      const EnumerationOptions& options) {
  VerificationReport report;
  report.check = "theorem_sign";
  report.set_inputs(instance_json(g, t, u, v));
  const std::size_t m = g.num_edges();
  const Rational p0 = threshold_point(m);
  const RationalPoly diff_poly = difference_poly(g, u, v, t, options);
  const Rational diff = diff_poly.eval(p0);
  VertexSet free;
  for (VertexIndex w = 0; w < g.num_vertices(); ++w)
    if (!t.contains(w)) free.insert(w);
  const bool joined = connected_within(g, u, v, free);
  report.quantities["p0"] = to_string(p0);
  report.quantities["difference"] = to_json(diff_poly);
  report.quantities["difference_at_p0"] = to_string(diff);
  report.quantities["joined_outside_t"] = joined;
  report.require("nonnegative", diff >= 0);
  report.require("strict_iff_joined", (diff > 0) == joined);
  if (joined) {
    Rational floor_value = 1;
    for (std::size_t k = 0; k < m; ++k) floor_value *= p0 * (1 - p0);
    report.quantities["difference_floor"] = to_string(floor_value);
    report.require("difference_floor", diff >= floor_value);
  }
  return report;
}

}  // namespace bunkbed
