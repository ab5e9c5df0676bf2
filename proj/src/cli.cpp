#include "bunkbed/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bunkbed/bunkbed_exact.hpp"
#include "bunkbed/graph.hpp"
#include "bunkbed/line_oracle.hpp"
#include "bunkbed/montecarlo.hpp"
#include "bunkbed/parallel.hpp"
#include "bunkbed/philox.hpp"
#include "bunkbed/report.hpp"
#include "bunkbed/tripartition.hpp"

namespace bunkbed::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  unsigned workers = 1;
  unsigned max_config_bits = 26;
  std::uint64_t max_tripartitions = 43046721;
  unsigned max_assignment_bits = 24;
  bool verbose = false;

  CheckOptions checks() const {
    CheckOptions o;
    o.survey.workers = workers;
    o.survey.limits.max_tripartitions = max_tripartitions;
    o.survey.limits.max_assignment_bits = max_assignment_bits;
    o.enumeration = enumeration();
    return o;
  }
  EnumerationOptions enumeration() const {
    EnumerationOptions o;
    o.workers = workers;
    o.max_config_bits = max_config_bits;
    return o;
  }
};

void add_common(CLI::App& sub, Common& c) {
  sub.add_option("--workers", c.workers, "worker threads (output does not depend on it)")
      ->envname("BUNKBED_WORKERS")
      ->check(CLI::Range(1u, 1024u));
  sub.add_option("--max-config-bits", c.max_config_bits, "cap on random bunkbed edges (2^bits assignments)")
      ->envname("BUNKBED_MAX_CONFIG_BITS");
  sub.add_option("--max-tripartitions", c.max_tripartitions, "cap on the number of tripartitions 3^|E|")
      ->envname("BUNKBED_MAX_TRIPARTITIONS");
  sub.add_option("--max-assignment-bits", c.max_assignment_bits, "cap on UP/DOWN edges per F(s) evaluation")
      ->envname("BUNKBED_MAX_ASSIGNMENT_BITS");
  sub.add_flag("--verbose", c.verbose, "print a summary table to stderr");
}

Multigraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

nlohmann::json names(const Multigraph& g, const VertexSet& set) {
  nlohmann::json out = nlohmann::json::array();
  for (VertexIndex v : set) out.push_back(g.name(v));
  return out;
}

VertexSet complement(const Multigraph& g, const VertexSet& t) {
  VertexSet out;
  for (VertexIndex w = 0; w < g.num_vertices(); ++w)
    if (!t.contains(w)) out.insert(w);
  return out;
}

int emit(const std::string& command, const std::vector<VerificationReport>& reports, const Common& common,
         std::ostream& out, std::ostream& err, nlohmann::json extra = nlohmann::json::object()) {
  Verdict overall = Verdict::Pass;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : reports) {
    overall = combine(overall, r.verdict);
    list.push_back(r.to_json());
  }
  nlohmann::json doc = {{"command", command}, {"verdict", std::string(to_string(overall))}, {"reports", list}};
  for (auto& [k, v] : extra.items()) doc[k] = v;
  out << doc.dump(2) << '\n';
  if (common.verbose) {
    for (const auto& r : reports) {
      err << r.check << "  " << to_string(r.verdict) << "  [" << r.inputs_digest << "]\n";
      for (auto& [name, v] : r.verdicts.items()) err << "    " << name << ": " << v.get<std::string>() << '\n';
    }
    err << command << ": " << to_string(overall) << '\n';
  }
  return exit_code(reports);
}

// --- exact ---------------------------------------------------------------

struct ExactArgs {
  std::string graph, u, v, pinned, out = "json";
  bool unconditioned = false;
};

int run_exact(const ExactArgs& a, CLI::Option* pinned_opt, const Common& common, std::ostream& out,
              std::ostream& err) {
  const Multigraph g = load_graph(a.graph);
  const VertexIndex u = g.vertex(a.u), v = g.vertex(a.v);
  std::optional<VertexSet> pinned;
  if (pinned_opt->count() > 0) pinned = parse_vertex_list(g, a.pinned);
  const auto polys = connection_polys(g, u, v, pinned, common.enumeration());
  const RationalPoly diff = polys.difference();
  const Rational p0 = threshold_point(g.num_edges());
  const bool joined = pinned ? connected_within(g, u, v, complement(g, *pinned)) : connected_within(g, u, v);

  if (a.out == "csv") {
    out << "quantity,degree,coefficient\n";
    auto rows = [&](const char* name, const RationalPoly& poly) {
      for (std::size_t k = 0; k < poly.coefficients().size(); ++k)
        out << name << ',' << k << ',' << to_string(poly.coefficients()[k]) << '\n';
    };
    rows("same_level", polys.same_level);
    rows("cross_level", polys.cross_level);
    rows("difference", diff);
    out << "p0,," << to_string(p0) << '\n';
    out << "difference_at_p0,," << to_string(diff.eval(p0)) << '\n';
    const Rational at = diff.eval(p0);
    return (at >= 0 && (at > 0) == joined) ? 0 : 1;
  }

  VerificationReport r;
  r.check = "exact";
  r.set_inputs({{"graph", to_edge_list(g)},
                {"u", a.u},
                {"v", a.v},
                {"pinned", pinned ? nlohmann::json(names(g, *pinned)) : nlohmann::json("unconditioned")}});
  r.quantities["same_level"] = to_json(polys.same_level);
  r.quantities["cross_level"] = to_json(polys.cross_level);
  r.quantities["difference"] = to_json(diff);
  r.quantities["p0"] = to_string(p0);
  r.quantities["same_level_at_p0"] = to_string(polys.same_level.eval(p0));
  r.quantities["cross_level_at_p0"] = to_string(polys.cross_level.eval(p0));
  r.quantities["difference_at_p0"] = to_string(diff.eval(p0));
  r.quantities["pretty"] = {{"same_level", polys.same_level.pretty()},
                            {"cross_level", polys.cross_level.pretty()},
                            {"difference", diff.pretty()}};
  const Rational at = diff.eval(p0);
  r.require("nonnegative_at_p0", at >= 0);
  r.require("strict_iff_joined_at_p0", (at > 0) == joined);
  return emit("exact", {r}, common, out, err);
}

// --- expand / verify-theorem ---------------------------------------------

struct PairArgs {
  std::string graph, u, v, pinned;
};

VerificationReport mirroring_summary(const Multigraph& g, const VertexSet& t, VertexIndex u, VertexIndex v,
                                     const Common& common) {
  VerificationReport r;
  r.check = "mirroring_summary";
  r.set_inputs({{"graph", to_edge_list(g)}, {"t", names(g, t)}, {"u", g.name(u)}, {"v", g.name(v)}});
  const TripartitionLimits limits = common.checks().survey.limits;
  std::uint64_t checked = 0, failed = 0;
  for (const Tripartition& s : enumerate_tripartitions(g, limits)) {
    if (classify(g, s, t, u, v).cls != TripartClass::Infinite) continue;
    ++checked;
    const auto rep = mirroring_involution_check(g, s, t, u, v, limits);
    if (rep.verdict != Verdict::Pass) {
      if (failed == 0) r.witnesses["first_failure"] = rep.to_json();
      ++failed;
    }
  }
  r.quantities["infinite_tripartitions"] = checked;
  r.quantities["failures"] = failed;
  r.require("mirroring", failed == 0);
  return r;
}

int run_expand(const PairArgs& a, const Common& common, std::ostream& out, std::ostream& err) {
  const Multigraph g = load_graph(a.graph);
  const VertexIndex u = g.vertex(a.u), v = g.vertex(a.v);
  const VertexSet t = parse_vertex_list(g, a.pinned);
  const auto opts = common.checks();
  std::vector<VerificationReport> reports{expansion_identity_check(g, t, u, v, opts), bound_report(g, t, u, v, opts),
                                          mirroring_summary(g, t, u, v, common)};
  return emit("expand", reports, common, out, err);
}

int run_verify_theorem(const PairArgs& a, bool has_pair, const Common& common, std::ostream& out,
                       std::ostream& err) {
  const Multigraph g = load_graph(a.graph);
  if (g.num_vertices() > 20) throw UsageError("verify-theorem enumerates all 2^|V| pinned sets; |V| <= 20");
  std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
  if (has_pair) {
    pairs.emplace_back(g.vertex(a.u), g.vertex(a.v));
  } else {
    for (VertexIndex u = 0; u < g.num_vertices(); ++u)
      for (VertexIndex v = 0; v < g.num_vertices(); ++v) pairs.emplace_back(u, v);
  }
  const auto opts = common.checks();
  std::vector<VerificationReport> reports;
  nlohmann::json table = nlohmann::json::array();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.num_vertices()); ++mask) {
    VertexSet t;
    for (VertexIndex w = 0; w < g.num_vertices(); ++w)
      if ((mask >> w) & 1u) t.insert(w);
    for (const auto& [u, v] : pairs) {
      auto expansion = expansion_identity_check(g, t, u, v, opts);
      auto bounds = bound_report(g, t, u, v, opts);
      auto sign = theorem_sign_check(g, t, u, v, opts.enumeration);
      auto mirror = mirroring_summary(g, t, u, v, common);
      table.push_back({{"t", names(g, t)},
                       {"u", g.name(u)},
                       {"v", g.name(v)},
                       {"expansion", std::string(to_string(expansion.verdict))},
                       {"bounds", std::string(to_string(bounds.verdict))},
                       {"theorem", std::string(to_string(sign.verdict))},
                       {"mirroring", std::string(to_string(mirror.verdict))},
                       {"difference_at_p0", sign.quantities["difference_at_p0"]}});
      for (auto* r : {&expansion, &bounds, &sign, &mirror}) reports.push_back(std::move(*r));
    }
  }
  // The table is the compact view; full reports only for non-PASS verdicts.
  std::vector<VerificationReport> shown;
  for (const auto& r : reports)
    if (r.verdict != Verdict::Pass) shown.push_back(r);
  VerificationReport suite;
  suite.check = "verify_theorem";
  suite.set_inputs({{"graph", to_edge_list(g)}, {"pairs", has_pair ? "given" : "all"}});
  std::map<std::string, std::uint64_t> tally;
  for (const auto& r : reports) ++tally[r.check + ":" + std::string(to_string(r.verdict))];
  suite.quantities["tally"] = tally;
  suite.quantities["pinned_sets"] = std::uint64_t{1} << g.num_vertices();
  suite.quantities["p0"] = to_string(threshold_point(g.num_edges()));
  for (const auto& r : reports) suite.require(r.check, r.verdict);
  shown.insert(shown.begin(), suite);
  return emit("verify-theorem", shown, common, out, err, {{"table", table}});
}

// --- line ----------------------------------------------------------------

struct LineArgs {
  std::size_t n = 0;
  std::string lambda;
  bool series = false, gap = false;
  std::string out = "json";
};

int run_line(const LineArgs& a, const Common& common, std::ostream& out, std::ostream& err) {
  const auto line = line_polys(a.n);
  std::vector<VerificationReport> reports;
  const bool any_check = a.series || a.gap || !a.lambda.empty();
  if (!any_check) {
    VerificationReport r;
    r.check = "line_polys";
    r.set_inputs({{"n", a.n}});
    r.quantities["A"] = to_json(line.a);
    r.quantities["B"] = to_json(line.b);
    r.quantities["C"] = to_json(line.c);
    r.quantities["D"] = to_json(line.d);
    r.quantities["tildeA"] = to_json(line.tilde_a);
    r.quantities["tildeB"] = to_json(line.tilde_b);
    r.require("sum_identity", line.a + line.b == Rational(2) * line.c + line.d);
    r.require("decomposition", line.a == line.tilde_a + line.c && line.b == line.tilde_b + line.c);
    reports.push_back(std::move(r));
  }
  if (a.gap) {
    VerificationReport r;
    r.check = "gap";
    r.set_inputs({{"n", a.n}});
    r.quantities["difference"] = to_json(line.a - line.b);
    r.quantities["expected"] = to_json(line_gap(a.n));
    r.require("gap_identity", gap_check(line));
    reports.push_back(std::move(r));
  }
  if (a.series) reports.push_back(series_check(a.n));
  if (!a.lambda.empty()) {
    const Rational lambda = parse_rational(a.lambda);
    const auto lim = gaussian_limit(line, lambda);
    VerificationReport r;
    r.check = "gaussian_limit";
    r.set_inputs({{"n", a.n}, {"lambda", to_string(lambda)}});
    r.quantities["q"] = to_string(lim.q);
    r.quantities["A_at_q"] = lim.value;
    r.quantities["limit"] = lim.target;
    r.quantities["abs_error"] = lim.error;
    r.quantities["gap_at_q"] = lim.gap;
    r.quantities["gap_log10"] = lim.gap_log10;
    r.require("evaluated", true);
    reports.push_back(std::move(r));
  }
  return emit("line", reports, common, out, err);
}

// --- mc ------------------------------------------------------------------

struct McArgs {
  std::string graph, u, v, p, pinned;
  std::uint64_t samples = 100000, seed = 1;
  double k = 4.0;
  bool check = false;
};

int run_mc(const McArgs& a, CLI::Option* pinned_opt, const Common& common, std::ostream& out, std::ostream& err) {
  const Multigraph g = load_graph(a.graph);
  const VertexIndex u = g.vertex(a.u), v = g.vertex(a.v);
  const Rational p = parse_rational(a.p);
  if (p < 0 || p > 1) throw UsageError("--p must lie in [0, 1]");
  std::optional<VertexSet> pinned;
  if (pinned_opt->count() > 0) pinned = parse_vertex_list(g, a.pinned);
  const auto est = estimate_difference(g, u, v, p, a.samples, a.seed, pinned, {common.workers});

  VerificationReport r;
  r.check = "monte_carlo";
  r.set_inputs({{"graph", to_edge_list(g)},
                {"u", a.u},
                {"v", a.v},
                {"p", to_string(p)},
                {"samples", a.samples},
                {"seed", a.seed},
                {"pinned", pinned ? nlohmann::json(names(g, *pinned)) : nlohmann::json("unconditioned")}});
  r.quantities["generator"] = Philox4x32::kName;
  r.quantities["same_level"] = to_json(est.same_level);
  r.quantities["cross_level"] = to_json(est.cross_level);
  r.quantities["difference"] = to_json(est.difference);
  if (std::isfinite(est.unpaired_stderr)) r.quantities["unpaired_stderr"] = est.unpaired_stderr;
  else r.quantities["unpaired_stderr"] = "inf";
  if (a.check) {
    const auto polys = connection_polys(g, u, v, pinned, common.enumeration());
    const Rational same = polys.same_level.eval(p), cross = polys.cross_level.eval(p);
    r.quantities["exact"] = {{"same_level", to_string(same)},
                             {"cross_level", to_string(cross)},
                             {"difference", to_string(same - cross)}};
    r.quantities["k"] = a.k;
    r.require("same_level_agrees", agreement_check(est.same_level, same, a.k));
    r.require("cross_level_agrees", agreement_check(est.cross_level, cross, a.k));
    r.require("difference_agrees", agreement_check(est.difference, same - cross, a.k));
  }
  return emit("mc", {r}, common, out, err);
}

// --- geodesic-check ------------------------------------------------------

int run_geodesic(const PairArgs& a, const Common& common, std::ostream& out, std::ostream& err) {
  const Multigraph g = load_graph(a.graph);
  const VertexIndex u = g.vertex(a.u), v = g.vertex(a.v);
  const auto geo = geodesic_check(g, u, v, common.enumeration());
  VerificationReport r;
  r.check = "geodesic";
  r.set_inputs({{"graph", to_edge_list(g)}, {"u", a.u}, {"v", a.v}});
  r.quantities["distance"] = geo.distance ? nlohmann::json(*geo.distance) : nlohmann::json("inf");
  r.quantities["geodesics"] = geo.geodesics;
  r.quantities["polynomial"] = to_json(geo.polynomial);
  r.quantities["lowest_degree"] = geo.polynomial.valuation();
  r.quantities["lowest_coefficient"] =
      geo.polynomial.is_zero() ? "0/1" : to_string(geo.polynomial.coeff(static_cast<std::size_t>(geo.polynomial.valuation())));
  r.require("leading_term", geo.verdict);
  return emit("geodesic-check", {r}, common, out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and sampled connection probabilities on bunkbed graphs"};
  app.require_subcommand(1);
  Common common;

  ExactArgs exact;
  auto* exact_cmd = app.add_subcommand("exact", "connection polynomials by exhaustive enumeration");
  exact_cmd->add_option("--graph", exact.graph, "edge-list file")->required();
  exact_cmd->add_option("--u", exact.u)->required();
  exact_cmd->add_option("--v", exact.v)->required();
  auto* exact_pinned = exact_cmd->add_option("--pinned", exact.pinned, "comma-separated open verticals");
  auto* exact_uncond = exact_cmd->add_flag("--unconditioned", exact.unconditioned, "randomize verticals (default)");
  exact_pinned->excludes(exact_uncond);
  exact_cmd->add_option("--out", exact.out)->check(CLI::IsMember({"json", "csv"}));
  add_common(*exact_cmd, common);

  PairArgs expand;
  auto* expand_cmd = app.add_subcommand("expand", "tripartition expansion and bounds for one pinned set");
  expand_cmd->add_option("--graph", expand.graph)->required();
  expand_cmd->add_option("--u", expand.u)->required();
  expand_cmd->add_option("--v", expand.v)->required();
  expand_cmd->add_option("--pinned", expand.pinned)->required();
  add_common(*expand_cmd, common);

  PairArgs verify;
  auto* verify_cmd = app.add_subcommand("verify-theorem", "expansion, bounds and sign over every pinned set");
  verify_cmd->add_option("--graph", verify.graph)->required();
  auto* verify_u = verify_cmd->add_option("--u", verify.u, "omit --u/--v for all pairs");
  auto* verify_v = verify_cmd->add_option("--v", verify.v);
  verify_u->needs(verify_v);
  verify_v->needs(verify_u);
  add_common(*verify_cmd, common);

  LineArgs line;
  auto* line_cmd = app.add_subcommand("line", "closed-form recursions for the path bunkbed");
  line_cmd->add_option("--n", line.n)->required();
  line_cmd->add_option("--lambda", line.lambda, "evaluate A_n at lambda / sqrt(n)");
  line_cmd->add_flag("--series", line.series);
  line_cmd->add_flag("--gap", line.gap);
  line_cmd->add_option("--out", line.out)->check(CLI::IsMember({"json"}));
  add_common(*line_cmd, common);

  McArgs mc;
  auto* mc_cmd = app.add_subcommand("mc", "paired Monte Carlo estimates");
  mc_cmd->add_option("--graph", mc.graph)->required();
  mc_cmd->add_option("--u", mc.u)->required();
  mc_cmd->add_option("--v", mc.v)->required();
  mc_cmd->add_option("--p", mc.p, "retention probability, e.g. 7/8")->required();
  mc_cmd->add_option("--samples", mc.samples)->check(CLI::PositiveNumber);
  mc_cmd->add_option("--seed", mc.seed);
  auto* mc_pinned = mc_cmd->add_option("--pinned", mc.pinned);
  mc_cmd->add_flag("--check", mc.check, "compare with exact polynomials");
  mc_cmd->add_option("--k", mc.k, "agreement factor for --check")->check(CLI::PositiveNumber);
  add_common(*mc_cmd, common);

  PairArgs geo;
  auto* geo_cmd = app.add_subcommand("geodesic-check", "lowest-order term versus geodesic count");
  geo_cmd->add_option("--graph", geo.graph)->required();
  geo_cmd->add_option("--u", geo.u)->required();
  geo_cmd->add_option("--v", geo.v)->required();
  add_common(*geo_cmd, common);

  std::vector<const char*> argv{"bunkbed"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (exact_cmd->parsed()) return run_exact(exact, exact_pinned, common, out, err);
    if (expand_cmd->parsed()) return run_expand(expand, common, out, err);
    if (verify_cmd->parsed()) return run_verify_theorem(verify, verify_u->count() > 0, common, out, err);
    if (line_cmd->parsed()) return run_line(line, common, out, err);
    if (mc_cmd->parsed()) return run_mc(mc, mc_pinned, common, out, err);
    if (geo_cmd->parsed()) return run_geodesic(geo, common, out, err);
  } catch (const CapExceeded& e) {
    err << "refused: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << app.help();
  return 2;
}

}  // namespace bunkbed::cli
