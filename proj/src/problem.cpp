#include "okbody/problem.hpp"

#include "okbody/errors.hpp"
#include "okbody/inequalities.hpp"
#include "okbody/okounkov.hpp"
#include "okbody/sagbi.hpp"
#include "okbody/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <set>
#include <sstream>

namespace okbody {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw ValidationError(what); }

const Json& require(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) invalid(std::string("missing field '") + key + "'");
  return obj.at(key);
}

const Json* optional_field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key) || obj.at(key).is_null()) return nullptr;
  return &obj.at(key);
}

std::uint64_t parse_count(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) invalid(std::string(what) + " must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

Json str(const BigRational& q) { return to_string(q); }
Json str(const BigInt& z) { return to_string(z); }

template <class T>
Json opt_str(const std::optional<T>& v) {
  return v ? str(*v) : Json(nullptr);
}

Json opt_float(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json exponent_list(const std::vector<ExponentVector>& v) {
  Json out = Json::array();
  for (auto& e : v) out.push_back(e);
  return out;
}

std::string decimal(const BigRational& q) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", q.get_d());
  return buf;
}

Json fit_to_json(const HilbertFit& f) {
  return {{"degree", f.degree},
          {"coefficient_float", f.coefficient},
          {"exact_coefficient", opt_str(f.exact_coefficient)},
          {"converged", f.converged},
          {"window_start", f.window_start}};
}

Json verdict_to_json(const Verdict& v) {
  return {{"holds", v.holds},         {"equality", v.equality},       {"exact", v.exact},
          {"lhs", opt_str(v.lhs)},    {"rhs", opt_str(v.rhs)},        {"lhs_float", v.lhs_float},
          {"rhs_float", v.rhs_float}, {"slack_float", v.slack}};
}

std::vector<RationalPoint> parse_points(const Json& j, std::size_t arity = 0) {
  if (!j.is_array() || j.empty()) invalid("point list must be a nonempty array");
  std::vector<RationalPoint> out;
  for (auto& p : j) {
    out.push_back(parse_point(p, arity));
    arity = out.back().size();
  }
  return out;
}

std::vector<ExponentVector> parse_support(const Json& j, std::size_t arity = 0) {
  if (!j.is_array() || j.empty()) invalid("support must be a nonempty array");
  std::vector<ExponentVector> out;
  for (auto& e : j) {
    out.push_back(parse_exponent(e, arity));
    arity = out.back().size();
  }
  return out;
}

CsvTable vertex_table(const Polytope& p, const std::string& name) {
  static const char* axes[] = {"x", "y"};
  CsvTable t{name, {}, {}};
  const std::size_t n = p.arity();
  if (n > 2) invalid("vertex CSV needs arity <= 2");
  for (std::size_t i = 0; i < n; ++i) t.header.push_back(axes[i]);
  for (std::size_t i = 0; i < n; ++i) t.header.push_back(std::string(axes[i]) + "_exact");
  for (auto& v : p.vertices()) {
    std::vector<std::string> row;
    for (auto& c : v) row.push_back(decimal(c));
    for (auto& c : v) row.push_back(to_string(c));
    t.rows.push_back(std::move(row));
  }
  return t;
}

CsvTable hilbert_table(const std::vector<std::size_t>& h) {
  CsvTable t{"hilbert", {"d", "H"}, {}};
  for (std::size_t d = 0; d < h.size(); ++d) t.rows.push_back({std::to_string(d + 1), std::to_string(h[d])});
  return t;
}

struct Common {
  VarietyModel model;
  std::vector<LaurentPolynomial> exprs;
  TermOrder order;
  unsigned d_max = 0;
};

Common parse_common(const Json& problem, const RunOptions& options, unsigned default_dmax) {
  Common c;
  c.model = parse_model(require(problem, "model"));
  const Json& sub = require(problem, "subspace");
  if (auto* m = optional_field(sub, "monomials")) {
    for (auto& e : parse_support(*m, c.model.arity)) c.exprs.push_back(LaurentPolynomial::monomial(e));
  } else if (auto* p = optional_field(sub, "polynomials")) {
    if (!p->is_array() || p->empty()) invalid("subspace polynomials must be a nonempty array");
    for (auto& q : *p) c.exprs.push_back(parse_polynomial(q, c.model.arity));
  } else {
    invalid("subspace needs 'monomials' or 'polynomials'");
  }
  c.order = parse_order(problem.contains("order") ? problem.at("order") : Json(nullptr), c.model.function_arity());
  c.d_max = default_dmax;
  if (auto* d = optional_field(problem, "d_max")) c.d_max = static_cast<unsigned>(parse_count(*d, "d_max"));
  if (options.d_max) c.d_max = *options.d_max;
  if (c.d_max < 1) invalid("d_max must be at least 1");
  return c;
}

const Json& params_of(const Json& problem) {
  static const Json empty = Json::object();
  auto* p = optional_field(problem, "params");
  if (!p) return empty;
  if (!p->is_object()) invalid("params must be an object");
  return *p;
}

std::uint64_t seed_of(const Json& problem, const RunOptions& options) {
  if (options.seed) return *options.seed;
  if (auto* s = optional_field(problem, "seed")) return parse_count(*s, "seed");
  return default_seed;
}

unsigned thread_count(const RunOptions& o) { return std::max(1u, o.threads); }

// [begin, end) chunks of [0, total), one per thread
std::vector<std::pair<std::size_t, std::size_t>> chunks(std::size_t total, unsigned threads) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t step = (total + threads - 1) / std::max<std::size_t>(threads, 1);
  for (std::size_t b = 0; b < total; b += std::max<std::size_t>(step, 1)) out.push_back({b, std::min(total, b + step)});
  return out;
}

RunResult run_body(const Json& problem, const RunOptions& options) {
  auto c = parse_common(problem, options, 16);
  const Json& params = params_of(problem);
  BigRational p = 1;
  if (auto* m = optional_field(params, "mapping_degree")) p = parse_scalar(*m);
  auto rep = okounkov_pipeline(c.model, c.exprs, c.order, c.d_max, p, options.cap_dim);
  RunResult out;
  out.report = {{"model", rep.model},
                {"subspace", rep.subspace},
                {"d_max", rep.d_max},
                {"dimension", rep.dimension},
                {"body", polytope_to_json(rep.body)},
                {"rank", rep.rank},
                {"index", str(rep.index)},
                {"hilbert", rep.hilbert},
                {"fit", rep.fit ? fit_to_json(*rep.fit) : Json(nullptr)},
                {"newton_gap_float", rep.newton_gap},
                {"mapping_degree", str(rep.mapping_degree)},
                {"prediction", str(rep.prediction)},
                {"prediction_float", rep.prediction_float},
                {"hilbert_prediction_float", opt_float(rep.hilbert_prediction)},
                {"relative_gap_float", opt_float(rep.relative_gap)},
                {"degenerate", rep.degenerate},
                {"consistent", rep.consistent},
                {"notes", rep.notes}};
  if (rep.body.arity() <= 2) out.tables.push_back(vertex_table(rep.body, "vertices"));
  out.tables.push_back(hilbert_table(rep.hilbert));
  return out;
}

RunResult run_hilbert(const Json& problem, const RunOptions& options) {
  auto c = parse_common(problem, options, 12);
  auto l = pull_back_subspace(c.model, c.exprs);
  auto g = from_subspace(l, c.order, c.d_max, options.cap_dim);
  std::vector<std::size_t> h;
  for (unsigned d = 1; d <= g.d_max(); ++d) h.push_back(hilbert_function(g, d));
  auto lat = difference_lattice(g);
  RunResult out;
  out.report = {{"d_max", c.d_max},
                {"hilbert", h},
                {"fit", c.d_max >= 8 ? fit_to_json(hilbert_fit(g)) : Json(nullptr)},
                {"rank", lat.rank},
                {"index", str(lat.index)},
                {"anchor", g.anchor()},
                {"newton_body", polytope_to_json(newton_body(g))},
                {"newton_gap_float", newton_body_gap(g)},
                {"additivity_violations", additivity_violations(g).size()}};
  out.tables.push_back(hilbert_table(h));
  return out;
}

RunResult run_mixedvol(const Json& problem, const RunOptions&) {
  const Json& params = params_of(problem);
  const Json& list = require(params, "polytopes");
  if (!list.is_array() || list.empty()) invalid("polytopes must be a nonempty array");
  std::vector<Polytope> bodies;
  std::size_t arity = 0;
  for (auto& pts : list) {
    bodies.push_back(hull(parse_points(pts, arity)));
    arity = bodies.back().arity();
  }
  if (bodies.size() != arity) invalid("mixed volume needs as many polytopes as the dimension");
  if (arity > max_polytope_arity) invalid("mixed volume needs dimension <= 4");
  Json vols = Json::array();
  for (auto& b : bodies) vols.push_back(str(b.volume()));
  BigRational mv = mixed_volume(bodies);
  BigRational normalized = BigRational(factorial(static_cast<unsigned>(arity))) * mv;
  RunResult out;
  out.report = {{"dimension", arity},
                {"volumes", vols},
                {"mixed_volume", str(mv)},
                {"normalized", str(normalized)},
                {"mixed_volume_float", mv.get_d()}};
  return out;
}

RunResult run_bkk(const Json& problem, const RunOptions& options) {
  const Json& params = params_of(problem);
  const Json& list = require(params, "supports");
  if (!list.is_array() || list.empty()) invalid("supports must be a nonempty array");
  std::vector<std::vector<ExponentVector>> supports;
  std::size_t arity = 0;
  for (auto& s : list) {
    supports.push_back(parse_support(s, arity));
    arity = supports.back().front().size();
  }
  if (supports.size() != arity) invalid("bkk needs one support per variable");
  const std::uint64_t seed = seed_of(problem, options);
  std::uint64_t samples = 20;
  if (auto* s = optional_field(params, "samples")) samples = parse_count(*s, "samples");

  BigRational count = bernstein_count(supports);
  RunResult out;
  out.report = {{"dimension", arity}, {"seed", seed}, {"count", str(count)}};
  bool same = std::all_of(supports.begin(), supports.end(), [&](auto& s) {
    return std::set<ExponentVector>(s.begin(), s.end()) ==
           std::set<ExponentVector>(supports[0].begin(), supports[0].end());
  });
  if (same) {
    auto k = kushnirenko_count(supports[0]);
    out.report["kushnirenko"] = {{"count", str(k.count)}, {"rank", k.rank}, {"index", opt_str(k.index)}};
  }
  if (arity == 2 && samples > 0) {
    std::vector<std::future<std::vector<RootCountSample>>> jobs;
    for (auto [b, e] : chunks(samples, thread_count(options)))
      jobs.push_back(std::async(std::launch::async, [&, b = b, e = e] {
        return sampled_root_counts(supports[0], supports[1], static_cast<unsigned>(e - b), seed + b);
      }));
    Json rows = Json::array();
    std::size_t agree = 0;
    for (auto& j : jobs)
      for (auto& s : j.get()) {
        bool ok = s.count && BigRational(static_cast<unsigned long>(*s.count)) == count;
        agree += ok;
        rows.push_back({{"seed", s.seed},
                        {"count", s.count ? Json(*s.count) : Json(nullptr)},
                        {"attempts", s.attempts}});
      }
    out.report["oracle"] = {{"samples", rows}, {"agreeing", agree}, {"total", samples}};
  }
  return out;
}

RunResult run_curve(const Json& problem, const RunOptions& options) {
  auto c = parse_common(problem, options, 12);
  const Json& params = params_of(problem);
  CurveOptions co;
  if (auto* p = optional_field(params, "point")) co.point = parse_scalar(*p);
  if (auto* m = optional_field(params, "mu")) co.mu = static_cast<std::int64_t>(parse_count(*m, "mu"));
  if (auto* d = optional_field(params, "mapping_degree")) co.degree = parse_scalar(*d);
  auto rep = curve_report(c.model, c.exprs, c.d_max, co, options.cap_dim);
  Json sections = Json::array();
  for (auto& s : rep.sections) sections.push_back({{"k", s.k}, {"low_gaps", s.low_gaps}, {"high_gaps", s.high_gaps}});
  auto opt_bool = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
  RunResult out;
  out.report = {{"segment", {str(rep.segment_low), str(rep.segment_high)}},
                {"length", str(rep.length)},
                {"index", rep.index},
                {"hilbert_slope", opt_str(rep.hilbert_slope)},
                {"degree", opt_str(rep.degree)},
                {"hilbert_constant", opt_str(rep.hilbert_constant)},
                {"hilbert", rep.dimensions},
                {"sections", sections},
                {"c0", rep.c0},
                {"c1", rep.c1},
                {"divisible_by_mu", opt_bool(rep.divisible_by_mu)},
                {"index_matches_mu", opt_bool(rep.index_matches_mu)},
                {"length_identity", opt_bool(rep.length_identity)},
                {"boundary_ray_hit", rep.boundary_ray_hit ? Json(*rep.boundary_ray_hit) : Json(nullptr)},
                {"gaps_confined", rep.gaps_confined},
                {"notes", rep.notes}};
  out.tables.push_back(vertex_table(hull({{rep.segment_low}, {rep.segment_high}}), "vertices"));
  out.tables.push_back(hilbert_table(rep.dimensions));
  return out;
}

RunResult run_inequalities(const Json& problem, const RunOptions& options) {
  const Json& params = params_of(problem);
  const std::uint64_t seed = seed_of(problem, options);
  RunResult out;
  out.report = {{"seed", seed}};

  if (auto* n_field = optional_field(params, "n")) {
    const std::size_t n = parse_count(*n_field, "n");
    std::uint64_t samples = 100, pairs = 0;
    if (auto* s = optional_field(params, "samples")) samples = parse_count(*s, "samples");
    if (auto* h = optional_field(params, "homothetic_pairs")) pairs = parse_count(*h, "homothetic_pairs");
    // sample i uses seed + i and pair h uses seed + samples + h in every split
    std::vector<std::future<SuiteReport>> jobs;
    for (auto [b, e] : chunks(samples, thread_count(options)))
      jobs.push_back(std::async(std::launch::async, [=, b = b, e = e] { return inequality_suite(n, e - b, seed + b); }));
    if (pairs > 0 || samples == 0)
      jobs.push_back(std::async(std::launch::async, [=] { return inequality_suite(n, 0, seed + samples, pairs); }));
    SuiteReport total;
    bool first = true;
    for (auto& j : jobs) {
      auto r = j.get();
      total.af_failures += r.af_failures;
      total.bm_failures += r.bm_failures;
      total.chain_failures += r.chain_failures;
      total.homothety_misses += r.homothety_misses;
      if (r.samples > 0) {
        total.min_af_slack = first ? r.min_af_slack : std::min(total.min_af_slack, r.min_af_slack);
        total.min_bm_slack = first ? r.min_bm_slack : std::min(total.min_bm_slack, r.min_bm_slack);
        first = false;
      }
    }
    out.report["suite"] = {{"n", n},
                           {"samples", samples},
                           {"homothetic_pairs", pairs},
                           {"af_failures", total.af_failures},
                           {"bm_failures", total.bm_failures},
                           {"chain_failures", total.chain_failures},
                           {"homothety_misses", total.homothety_misses},
                           {"min_af_slack_float", total.min_af_slack},
                           {"min_bm_slack_float", total.min_bm_slack},
                           {"passed", total.passed()}};
    out.verdict_failed |= !total.passed();
  }

  if (auto* list = optional_field(params, "bodies")) {
    if (!list->is_array() || list->size() < 2) invalid("bodies must list at least two polytopes");
    std::vector<Polytope> bodies;
    std::size_t arity = 0;
    for (auto& pts : *list) {
      bodies.push_back(hull(parse_points(pts, arity)));
      arity = bodies.back().arity();
    }
    Json checks;
    auto bm = brunn_minkowski_check(bodies[0], bodies[1]);
    checks["brunn_minkowski"] = verdict_to_json(bm.verdict);
    checks["homothetic"] = bm.homothetic;
    out.verdict_failed |= !bm.verdict.holds;
    if (bodies.size() == arity) {
      auto af = alexandrov_fenchel_check(bodies);
      checks["alexandrov_fenchel"] = verdict_to_json(af);
      out.verdict_failed |= !af.holds;
    }
    if (arity == 2) {
      auto iso = isoperimetric_check(bodies[0], bodies[1]);
      checks["isoperimetric"] = verdict_to_json(iso);
      out.verdict_failed |= !iso.holds;
    }
    out.report["bodies"] = checks;
  }

  if (auto* list = optional_field(params, "supports")) {
    if (!list->is_array() || list->size() != 2) invalid("supports must list two monomial supports");
    auto m1 = parse_support(list->at(0));
    auto m2 = parse_support(list->at(1), m1.front().size());
    unsigned m = 4;
    if (auto* mm = optional_field(params, "m")) m = static_cast<unsigned>(parse_count(*mm, "m"));
    auto a = algebraic_analogues_check(m1, m2, m);
    Json degrees = Json::array();
    for (auto& d : a.degrees) degrees.push_back(str(d));
    out.report["algebraic"] = {{"n", a.n},
                               {"l1_self", str(a.l1_self)},
                               {"l2_self", str(a.l2_self)},
                               {"product_self", str(a.product_self)},
                               {"brunn_minkowski", verdict_to_json(a.brunn_minkowski)},
                               {"hodge", verdict_to_json(a.hodge)},
                               {"degrees", degrees},
                               {"log_concave", a.log_concave}};
    out.verdict_failed |= !a.brunn_minkowski.holds || !a.hodge.holds || !a.log_concave;
  }
  if (out.report.size() == 1) invalid("inequalities needs 'n', 'bodies' or 'supports' in params");
  return out;
}

Json trace_to_json(const std::vector<TraceTerm>& trace) {
  Json out = Json::array();
  for (auto& t : trace) out.push_back({{"coefficient", str(t.coefficient)}, {"powers", t.powers}});
  return out;
}

RunResult run_sagbi(const Json& problem, const RunOptions& options) {
  const Json& params = params_of(problem);
  const Json& gens = require(params, "generators");
  if (!gens.is_array() || gens.empty()) invalid("generators must be a nonempty array");
  SagbiInstance inst;
  std::size_t arity = 0;
  for (auto& g : gens) {
    inst.generators.push_back(parse_polynomial(g, arity));
    arity = inst.generators.back().arity();
  }
  inst.order = parse_order(problem.contains("order") ? problem.at("order") : Json(nullptr), arity);
  inst.degree_bound = 8;
  if (auto* b = optional_field(params, "degree_bound")) inst.degree_bound = static_cast<unsigned>(parse_count(*b, "degree_bound"));
  if (options.d_max) inst.degree_bound = *options.d_max;
  auto rep = sagbi_check(inst, options.cap_dim);
  RunResult out;
  out.report = {{"bound", rep.bound},
                {"sagbi_up_to_bound", rep.sagbi_up_to_bound},
                {"generator_values", exponent_list(rep.generator_values)},
                {"value_count", rep.values.size()},
                {"semigroup_generators", exponent_list(rep.semigroup_generators)},
                {"witnesses", exponent_list(rep.witnesses)},
                {"candidate", rep.candidate ? polynomial_to_json(*rep.candidate) : Json(nullptr)}};
  if (auto* fs = optional_field(params, "subduce")) {
    if (!fs->is_array()) invalid("subduce must be an array of polynomials");
    Json rows = Json::array();
    for (auto& f : *fs) {
      auto r = subduction(parse_polynomial(f, arity), inst);
      rows.push_back({{"status", to_string(r.status)},
                      {"remainder", polynomial_to_json(r.remainder)},
                      {"trace", trace_to_json(r.trace)},
                      {"steps", r.steps}});
    }
    out.report["subductions"] = rows;
  }
  return out;
}

RunResult run_lattice(const Json& problem, const RunOptions& options) {
  const Json& params = params_of(problem);
  Polytope p = hull(parse_points(require(params, "polytope")));
  std::uint64_t lambda = 1;
  if (auto* l = optional_field(params, "lambda")) lambda = parse_count(*l, "lambda");
  if (lambda < 1) invalid("lambda must be at least 1");
  const std::size_t n = p.arity();
  Polytope scaled = p.scaled(BigRational(static_cast<unsigned long>(lambda)));
  std::uint64_t count = count_lattice_points(scaled, options.cap_points);
  BigRational ratio = BigRational(static_cast<unsigned long>(count)) /
                      pow(BigRational(static_cast<unsigned long>(lambda)), static_cast<unsigned>(n));
  BigRational gap = ratio - p.volume();
  if (gap < 0) gap = -gap;
  RunResult out;
  out.report = {{"polytope", polytope_to_json(p)},
                {"lambda", lambda},
                {"count", count},
                {"normalized", str(ratio)},
                {"gap", str(gap)},
                {"gap_float", gap.get_d()}};
  if (p.full_dimensional()) {
    auto cubes = classify_cubes(scaled);
    out.report["cubes"] = {{"n1", cubes.n1}, {"n2", cubes.n2}, {"volume", str(scaled.volume())}};
  }
  if (auto* f_field = optional_field(params, "f")) {
    auto f = parse_polynomial(*f_field, n);
    std::vector<std::uint64_t> lambdas{lambda};
    if (auto* ls = optional_field(params, "lambdas")) {
      if (!ls->is_array() || ls->empty()) invalid("lambdas must be a nonempty array");
      lambdas.clear();
      for (auto& l : *ls) lambdas.push_back(parse_count(l, "lambdas"));
    }
    auto r = riemann_limit_check(p, f, lambdas, std::nullopt, options.cap_points);
    Json steps = Json::array();
    for (auto& s : r.steps)
      steps.push_back({{"lambda", s.lambda}, {"sum", str(s.sum)}, {"normalized", str(s.normalized)}, {"gap_float", s.gap}});
    out.report["riemann"] = {{"alpha", r.alpha},      {"integral", str(r.integral)}, {"steps", steps},
                             {"tolerance_float", r.tolerance}, {"monotone", r.monotone}, {"passed", r.passed}};
  }
  if (n <= 2) out.tables.push_back(vertex_table(p, "vertices"));
  return out;
}

} // namespace

BigRational parse_scalar(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return BigRational(BigInt(j.dump()));
  invalid("exact values must be strings \"p/q\" or integers, got " + j.dump());
}

ExponentVector parse_exponent(const Json& j, std::size_t arity) {
  if (!j.is_array()) invalid("exponent must be an array of integers");
  ExponentVector e;
  for (auto& x : j) {
    if (!x.is_number_integer()) invalid("exponent entries must be integers");
    e.push_back(x.get<std::int64_t>());
  }
  if (e.empty()) invalid("exponent must be nonempty");
  if (arity && e.size() != arity) invalid("exponent " + j.dump() + " has the wrong length");
  return e;
}

LaurentPolynomial parse_polynomial(const Json& j, std::size_t arity) {
  if (!j.is_array()) invalid("polynomial must be an array of [coefficient, exponent] terms");
  if (j.empty()) {
    if (!arity) invalid("zero polynomial needs a known arity");
    return LaurentPolynomial(arity);
  }
  LaurentPolynomial p;
  bool first = true;
  for (auto& t : j) {
    if (!t.is_array() || t.size() != 2) invalid("polynomial term must be [coefficient, exponent]");
    auto e = parse_exponent(t[1], arity);
    if (first) {
      arity = e.size();
      p = LaurentPolynomial(arity);
      first = false;
    }
    p.add_term(e, parse_scalar(t[0]));
  }
  return p;
}

Json polynomial_to_json(const LaurentPolynomial& p) {
  Json out = Json::array();
  for (auto& [e, c] : p.terms()) out.push_back({str(c), e});
  return out;
}

RationalPoint parse_point(const Json& j, std::size_t arity) {
  if (!j.is_array() || j.empty()) invalid("point must be a nonempty array");
  RationalPoint p;
  for (auto& x : j) p.push_back(parse_scalar(x));
  if (arity && p.size() != arity) invalid("point " + j.dump() + " has the wrong length");
  return p;
}

Json point_to_json(const RationalPoint& p) {
  Json out = Json::array();
  for (auto& c : p) out.push_back(str(c));
  return out;
}

Json polytope_to_json(const Polytope& p) {
  auto halfspaces = [](const std::vector<Halfspace>& hs) {
    Json out = Json::array();
    for (auto& h : hs) {
      Json normal = Json::array();
      for (auto& a : h.normal) normal.push_back(str(a));
      out.push_back({{"normal", normal}, {"offset", str(h.offset)}});
    }
    return out;
  };
  Json verts = Json::array();
  for (auto& v : p.vertices()) verts.push_back(point_to_json(v));
  return {{"arity", p.arity()},
          {"dimension", p.affine_dimension()},
          {"vertices", verts},
          {"facets", halfspaces(p.facets())},
          {"equations", halfspaces(p.equations())},
          {"volume", str(p.volume())},
          {"lattice_volume", str(p.lattice_volume())}};
}

TermOrder parse_order(const Json& j, std::size_t arity) {
  TermOrder order;
  if (j.is_null() || (j.is_string() && j.get<std::string>() == "lex")) {
    order = TermOrder::lex(arity);
  } else if (j.is_string() && j.get<std::string>() == "grlex") {
    order = TermOrder::grlex(arity);
  } else if (j.is_array()) {
    std::vector<std::vector<std::int64_t>> w;
    for (auto& row : j) w.push_back(parse_exponent(row));
    order = TermOrder(w);
  } else {
    invalid("order must be \"lex\", \"grlex\" or a weight matrix");
  }
  if (order.arity() != arity) invalid("order has the wrong size");
  if (validate_order(order) == OrderStatus::invalid) invalid("order matrix is singular");
  return order;
}

VarietyModel parse_model(const Json& j) {
  const std::string kind = require(j, "kind").is_string() ? j.at("kind").get<std::string>() : "";
  if (kind == "torus" || kind == "affine") {
    auto n = parse_count(require(j, "n"), "n");
    if (n < 1) invalid("model dimension must be positive");
    return kind == "torus" ? VarietyModel::torus(n) : VarietyModel::affine(n);
  }
  if (kind == "parametrized") {
    auto k = parse_count(require(j, "parameters"), "parameters");
    if (k < 1) invalid("parameter count must be positive");
    const Json& coords = require(j, "coordinates");
    if (!coords.is_array() || coords.empty()) invalid("coordinates must be a nonempty array");
    std::vector<RationalFunction> fs;
    for (auto& c : coords) {
      if (c.is_object())
        fs.emplace_back(parse_polynomial(require(c, "numerator"), k), parse_polynomial(require(c, "denominator"), k));
      else
        fs.emplace_back(parse_polynomial(c, k));
    }
    return VarietyModel::parametrized(k, std::move(fs));
  }
  invalid("model kind must be torus, affine or parametrized");
}

std::string csv_text(const CsvTable& table) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << "\n";
  };
  line(table.header);
  for (auto& r : table.rows) line(r);
  return os.str();
}

RunResult run_problem(const std::string& subcommand, const Json& problem, const RunOptions& options) {
  if (!problem.is_object()) invalid("problem file must be a JSON object");
  const Json& version = require(problem, "schema_version");
  if (!version.is_number_integer() || version.get<int>() != problem_schema_version)
    invalid("unsupported schema_version " + version.dump());
  if (auto* s = optional_field(problem, "subcommand"))
    if (!s->is_string() || s->get<std::string>() != subcommand)
      invalid("problem file is for subcommand " + s->dump());

  RunResult out;
  if (subcommand == "body") out = run_body(problem, options);
  else if (subcommand == "hilbert") out = run_hilbert(problem, options);
  else if (subcommand == "mixedvol") out = run_mixedvol(problem, options);
  else if (subcommand == "bkk") out = run_bkk(problem, options);
  else if (subcommand == "curve") out = run_curve(problem, options);
  else if (subcommand == "inequalities") out = run_inequalities(problem, options);
  else if (subcommand == "sagbi") out = run_sagbi(problem, options);
  else if (subcommand == "lattice") out = run_lattice(problem, options);
  else invalid("unknown subcommand '" + subcommand + "'");

  out.report = {{"schema_version", problem_schema_version},
                {"subcommand", subcommand},
                {"verdict_failed", out.verdict_failed},
                {"result", std::move(out.report)}};
  return out;
}

} // namespace okbody
