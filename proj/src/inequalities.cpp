#include "okbody/inequalities.hpp"

#include "okbody/errors.hpp"
#include "okbody/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace okbody {

namespace {

Verdict exact_verdict(BigRational lhs, BigRational rhs) {
  Verdict v;
  v.holds = lhs <= rhs;
  v.equality = lhs == rhs;
  v.lhs_float = lhs.get_d();
  v.rhs_float = rhs.get_d();
  v.slack = BigRational(rhs - lhs).get_d();
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  return v;
}

void require_arity(const std::vector<const Polytope*>& bodies, std::size_t n) {
  for (auto* b : bodies)
    if (b->arity() != n) throw ValidationError("all bodies must live in the same R^n");
}

// V(P repeated i, Q repeated j, rest...)
BigRational mixed(const Polytope& p, unsigned i, const Polytope& q, unsigned j,
                  const std::vector<Polytope>& rest) {
  std::vector<Polytope> bodies(i, p);
  bodies.insert(bodies.end(), j, q);
  bodies.insert(bodies.end(), rest.begin(), rest.end());
  return mixed_volume(bodies);
}

double nth_root(const BigRational& x, std::size_t n) { return std::pow(x.get_d(), 1.0 / double(n)); }

} // namespace

Verdict isoperimetric_check(const Polytope& a, const Polytope& b) {
  if (a.arity() != 2 || b.arity() != 2) throw ValidationError("isoperimetric check needs bodies in R^2");
  BigRational vab = mixed_volume({a, b});
  return exact_verdict(a.volume() * b.volume(), vab * vab);
}

bool homothetic(const Polytope& a, const Polytope& b) {
  if (a.arity() != b.arity() || a.vertices().size() != b.vertices().size()) return false;
  if (a.affine_dimension() != b.affine_dimension()) return false;
  if (a.vertices().size() == 1) return true;
  const auto& va = a.vertices();
  const auto& vb = b.vertices();
  for (std::size_t j = 0; j < a.arity(); ++j) {
    BigRational rb = vb.back()[j] - vb.front()[j], ra = va.back()[j] - va.front()[j];
    // lex order of vertices is kept by positive homotheties, so first and last match
    if (rb == 0) {
      if (ra != 0) return false;
      continue;
    }
    BigRational lambda = ra / rb;
    if (lambda <= 0) return false;
    RationalPoint t(a.arity());
    for (std::size_t c = 0; c < a.arity(); ++c) t[c] = va.front()[c] - lambda * vb.front()[c];
    return b.scaled(lambda).translated(t) == a;
  }
  return false;
}

BrunnMinkowskiVerdict brunn_minkowski_check(const Polytope& a, const Polytope& b) {
  const std::size_t n = a.arity();
  require_arity({&a, &b}, n);
  if (n < 2 || n > max_polytope_arity) throw ValidationError("Brunn-Minkowski check needs 2 <= n <= 4");
  BrunnMinkowskiVerdict out;
  out.homothetic = homothetic(a, b);
  BigRational sum_vol = minkowski_sum(a, b).volume();
  double lhs = nth_root(a.volume(), n) + nth_root(b.volume(), n);
  double rhs = nth_root(sum_vol, n);
  if (n == 2) {
    out.verdict = isoperimetric_check(a, b);
  } else {
    auto& v = out.verdict;
    v.exact = false;
    double scale = std::max(1.0, rhs);
    v.holds = rhs - lhs >= -bm_tolerance * scale;
    v.equality = std::abs(rhs - lhs) <= bm_equality_tolerance * scale;
  }
  out.verdict.lhs_float = lhs;
  out.verdict.rhs_float = rhs;
  out.verdict.slack = rhs - lhs;
  return out;
}

Verdict alexandrov_fenchel_check(const std::vector<Polytope>& bodies) {
  const std::size_t n = bodies.size();
  if (n < 2 || n > max_polytope_arity) throw ValidationError("Alexandrov-Fenchel check needs 2 to 4 bodies");
  for (auto& b : bodies)
    if (b.arity() != n) throw ValidationError("Alexandrov-Fenchel check needs n bodies in R^n");
  std::vector<Polytope> rest(bodies.begin() + 2, bodies.end());
  BigRational v11 = mixed(bodies[0], 2, bodies[1], 0, rest);
  BigRational v22 = mixed(bodies[0], 0, bodies[1], 2, rest);
  BigRational v12 = mixed(bodies[0], 1, bodies[1], 1, rest);
  return exact_verdict(v11 * v22, v12 * v12);
}

AfCorollaries af_corollaries_check(const Polytope& p, const Polytope& q, const std::vector<Polytope>& deltas,
                                   const AfCorollaryParams& prm) {
  const std::size_t n = deltas.size();
  if (n < 1 || n > 3) throw ValidationError("corollary checks need 1 <= n <= 3");
  for (auto& d : deltas)
    if (d.arity() != n) throw ValidationError("corollary checks need n bodies in R^n");
  require_arity({&p, &q}, n);
  if (prm.m < 1 || prm.m > n || prm.i > prm.m) throw ValidationError("need 0 <= i <= m <= n, m >= 1");
  if (prm.k < 1 || prm.l < 1 || prm.k + prm.l > n) throw ValidationError("need k, l >= 1 and k + l <= n");

  AfCorollaries out;
  const unsigned m = prm.m;
  std::vector<Polytope> tail_m(deltas.begin() + m, deltas.end());
  {
    BigRational prod = 1;
    for (unsigned i = 0; i < m; ++i) prod *= mixed(deltas[i], m, deltas[i], 0, tail_m);
    out.a = exact_verdict(prod, pow(mixed_volume(deltas), m));
  }
  {
    BigRational prod = 1;
    for (auto& d : deltas) prod *= d.volume();
    out.b = exact_verdict(prod, pow(mixed_volume(deltas), static_cast<unsigned>(n)));
  }
  {
    BigRational lhs = pow(mixed(p, m, q, 0, tail_m), prm.i) * pow(mixed(p, 0, q, m, tail_m), m - prm.i);
    out.c = exact_verdict(lhs, pow(mixed(p, prm.i, q, m - prm.i, tail_m), m));
  }
  {
    std::vector<Polytope> tail(deltas.begin() + prm.k + prm.l, deltas.end());
    BigRational lhs = mixed(p, prm.k - 1, q, prm.l + 1, tail) * mixed(p, prm.k + 1, q, prm.l - 1, tail);
    out.d = exact_verdict(lhs, pow(mixed(p, prm.k, q, prm.l, tail), 2));
  }
  return out;
}

BigRational mixed_degree(const Polytope& a, const Polytope& b, unsigned k, unsigned j) {
  const auto n = static_cast<unsigned>(a.arity());
  require_arity({&a, &b}, n);
  BigRational total = 0;
  for (unsigned i = 0; i <= n; ++i) {
    BigRational coeff = BigRational(binomial(n, i)) * pow(BigRational(k), i) * pow(BigRational(j), n - i);
    if (coeff == 0) continue;
    total += coeff * mixed(a, i, b, n - i, {});
  }
  return BigRational(factorial(n)) * total;
}

AlgebraicAnalogues algebraic_analogues_check(const std::vector<ExponentVector>& m1,
                                             const std::vector<ExponentVector>& m2, unsigned m) {
  auto to_body = [](const std::vector<ExponentVector>& s) {
    if (s.empty()) throw ValidationError("support is empty");
    std::vector<RationalPoint> pts;
    for (auto& e : s) pts.emplace_back(e.begin(), e.end());
    return hull(pts);
  };
  Polytope p1 = to_body(m1), p2 = to_body(m2);
  const std::size_t n = p1.arity();
  if (n < 2 || n > 3) throw ValidationError("algebraic analogues need n = 2 or 3");
  require_arity({&p1, &p2}, n);
  if (m < 2) throw ValidationError("log-concavity needs m >= 2");
  Polytope p12 = minkowski_sum(p1, p2);
  const BigRational nf(factorial(static_cast<unsigned>(n)));

  AlgebraicAnalogues out;
  out.n = n;
  out.l1_self = nf * p1.volume();
  out.l2_self = nf * p2.volume();
  out.product_self = nf * p12.volume();
  const BigRational &a = out.l1_self, &b = out.l2_self, &c = out.product_self;
  if (n == 2) {
    BigRational d = c - a - b;
    out.brunn_minkowski = exact_verdict(4 * a * b, d * d);
    out.brunn_minkowski.holds = out.brunn_minkowski.holds && d >= 0;
  } else {
    auto& v = out.brunn_minkowski;
    v.exact = false;
    double rhs = nth_root(c, n);
    v.holds = rhs - (nth_root(a, n) + nth_root(b, n)) >= -bm_tolerance * std::max(1.0, rhs);
  }
  out.brunn_minkowski.lhs_float = nth_root(a, n) + nth_root(b, n);
  out.brunn_minkowski.rhs_float = nth_root(c, n);
  out.brunn_minkowski.slack = out.brunn_minkowski.rhs_float - out.brunn_minkowski.lhs_float;

  std::vector<Polytope> rest;
  if (n == 3) rest.push_back(p12);
  out.hodge = exact_verdict(nf * mixed(p1, 2, p2, 0, rest) * nf * mixed(p1, 0, p2, 2, rest),
                            pow(nf * mixed(p1, 1, p2, 1, rest), 2));

  for (unsigned k = 0; k <= m; ++k) out.degrees.push_back(mixed_degree(p1, p2, k, m - k));
  out.log_concave = true;
  for (unsigned k = 1; k < m; ++k)
    if (out.degrees[k] * out.degrees[k] < out.degrees[k - 1] * out.degrees[k + 1]) out.log_concave = false;
  return out;
}

Polytope random_lattice_polytope(std::mt19937_64& rng, std::size_t n, bool full_dimensional) {
  if (n < 1 || n > max_polytope_arity) throw ValidationError("random polytope needs 1 <= n <= 4");
  std::uniform_int_distribution<int> count(3, 8), coord(0, 6);
  for (;;) {
    std::vector<RationalPoint> pts(static_cast<std::size_t>(count(rng)));
    for (auto& p : pts)
      for (std::size_t j = 0; j < n; ++j) p.push_back(coord(rng));
    Polytope poly = hull(pts);
    if (!full_dimensional || poly.full_dimensional()) return poly;
  }
}

SuiteReport inequality_suite(std::size_t n, std::size_t samples, std::uint64_t seed, std::size_t homothetic_pairs) {
  if (n < 2 || n > 3) throw ValidationError("inequality suite needs n = 2 or 3");
  SuiteReport rep;
  rep.n = n;
  rep.samples = samples;
  rep.seed = seed;
  rep.min_af_slack = std::numeric_limits<double>::infinity();
  rep.min_bm_slack = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < samples; ++s) {
    std::mt19937_64 rng(seed + s);
    std::vector<Polytope> bodies;
    for (std::size_t i = 0; i < n; ++i) bodies.push_back(random_lattice_polytope(rng, n, true));
    auto af = alexandrov_fenchel_check(bodies);
    if (!af.holds) ++rep.af_failures;
    rep.min_af_slack = std::min(rep.min_af_slack, af.slack);
    auto bm = brunn_minkowski_check(bodies[0], bodies[1]);
    if (!bm.verdict.holds) ++rep.bm_failures;
    rep.min_bm_slack = std::min(rep.min_bm_slack, bm.verdict.slack);
    for (auto& b : bodies) {
      auto cc = classify_cubes(b);
      BigRational n1(static_cast<unsigned long>(cc.n1)), n12(static_cast<unsigned long>(cc.n1 + cc.n2));
      if (!(n1 <= b.volume() && b.volume() <= n12)) ++rep.chain_failures;
    }
  }
  for (std::size_t h = 0; h < homothetic_pairs; ++h) {
    std::mt19937_64 rng(seed + samples + h);
    Polytope a = random_lattice_polytope(rng, n, true);
    std::uniform_int_distribution<int> num(1, 4), den(1, 3), shift(-3, 3);
    BigRational lambda = make_rational(num(rng), den(rng));
    RationalPoint t;
    for (std::size_t j = 0; j < n; ++j) t.push_back(shift(rng));
    Polytope b = a.scaled(lambda).translated(t);
    auto bm = brunn_minkowski_check(a, b);
    if (!bm.verdict.holds) ++rep.bm_failures;
    if (!bm.homothetic || !bm.verdict.equality) ++rep.homothety_misses;
  }
  return rep;
}

} // namespace okbody
