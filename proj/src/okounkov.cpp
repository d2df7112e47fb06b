#include "okbody/okounkov.hpp"

#include "okbody/errors.hpp"
#include "okbody/matrix.hpp"
#include "okbody/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace okbody {

namespace {

std::string describe(const VarietyModel& model) {
  std::ostringstream os;
  os << to_string(model.kind) << "(" << model.arity;
  if (model.kind == VarietyModel::Kind::parametrized) {
    os << "; ";
    for (std::size_t i = 0; i < model.coordinates.size(); ++i)
      os << (i ? ", " : "") << to_string(model.coordinates[i], {"t"});
  }
  os << ")";
  return os.str();
}

std::string describe(const FunctionSubspace& l) {
  std::ostringstream os;
  os << "span{";
  auto basis = l.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) os << (i ? ", " : "") << to_string(basis[i]);
  os << "}";
  return os.str();
}

} // namespace

OkounkovReport okounkov_pipeline(const VarietyModel& model, const std::vector<LaurentPolynomial>& exprs,
                                 const TermOrder& order, unsigned d_max, const BigRational& p,
                                 std::size_t cap) {
  return okounkov_pipeline(model, pull_back_subspace(model, exprs), order, d_max, p, cap);
}

OkounkovReport okounkov_pipeline(const VarietyModel& model, const FunctionSubspace& l,
                                 const TermOrder& order, unsigned d_max, const BigRational& p,
                                 std::size_t cap) {
  const std::size_t n = model.function_arity();
  if (l.arity() != n) throw ValidationError("subspace arity does not match the model");
  if (p <= 0) throw ValidationError("mapping degree must be positive");
  OkounkovReport rep;
  rep.model = describe(model);
  rep.subspace = describe(l);
  rep.d_max = d_max;
  rep.dimension = n;
  rep.mapping_degree = p;

  auto g = from_subspace(l, order, d_max, cap);
  auto lat = difference_lattice(g);
  rep.rank = lat.rank;
  rep.index = lat.index;
  rep.body = newton_body(g);
  for (auto& sec : g.sections()) rep.hilbert.push_back(sec.size());
  rep.newton_gap = newton_body_gap(g);
  if (d_max >= 8) rep.fit = hilbert_fit(g);
  else rep.notes.push_back("d_max < 8: no Hilbert fit");

  const BigRational nfact(factorial(static_cast<unsigned>(n)));
  if (rep.rank < n) {
    rep.degenerate = true;
    rep.prediction = 0;
    rep.notes.push_back("image has dimension smaller than n: predicted self-intersection 0");
    rep.consistent = rep.fit && rep.fit->degree == rep.rank;
  } else {
    BigRational vol = rep.body.volume();
    rep.prediction = nfact * vol * p / BigRational(rep.index);
    if (rep.fit) {
      rep.hilbert_prediction = nfact.get_d() * rep.fit->coefficient * p.get_d();
      double lhs = nfact.get_d() * rep.fit->coefficient * rep.index.get_d();
      double rhs = BigRational(nfact * vol).get_d();
      rep.relative_gap = std::abs(lhs - rhs) / rhs;
      rep.consistent = rep.fit->degree == n && *rep.relative_gap < consistency_tolerance;
    }
  }
  rep.prediction_float = rep.prediction.get_d();
  if (rep.fit && !rep.fit->converged) rep.notes.push_back("Hilbert difference table did not stabilize");
  return rep;
}

KushnirenkoResult kushnirenko_count(const std::vector<ExponentVector>& m) {
  if (m.empty()) throw ValidationError("support is empty");
  const std::size_t n = m.front().size();
  if (n == 0 || n > max_polytope_arity) throw ValidationError("kushnirenko_count needs 1 <= n <= 4");
  std::vector<RationalPoint> pts;
  for (auto& e : m) {
    if (e.size() != n) throw ValidationError("support has mixed arity");
    pts.emplace_back(e.begin(), e.end());
  }
  KushnirenkoResult out;
  out.count = BigRational(factorial(static_cast<unsigned>(n))) * hull(pts).volume();
  IntegerMatrix gens(m.size(), n);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) gens(i, j) = static_cast<long>(m[i][j] - m[0][j]);
  auto sat = saturation(gens);
  out.rank = sat.rank;
  if (sat.rank == n) out.index = sat.index;
  return out;
}

BigRational bernstein_count(const std::vector<std::vector<ExponentVector>>& supports) {
  const std::size_t n = supports.size();
  if (n == 0 || n > max_polytope_arity) throw ValidationError("bernstein_count needs 1 to 4 supports");
  std::vector<Polytope> bodies;
  for (auto& s : supports) {
    if (s.empty()) throw ValidationError("support is empty");
    std::vector<RationalPoint> pts;
    for (auto& e : s) {
      if (e.size() != n) throw ValidationError("support arity must equal the number of supports");
      pts.emplace_back(e.begin(), e.end());
    }
    bodies.push_back(hull(pts));
  }
  return BigRational(factorial(static_cast<unsigned>(n))) * mixed_volume(bodies);
}

namespace {

// Bivariate polynomial as coefficient table c[i][j] of x^i y^j.
using Table = std::vector<std::vector<BigRational>>;

Table to_table(const LaurentPolynomial& f, bool swap) {
  auto lo = f.min_exponent(), hi = f.max_exponent();
  std::size_t ix = swap ? 1 : 0, iy = swap ? 0 : 1;
  Table t(static_cast<std::size_t>(hi[ix] - lo[ix] + 1),
          std::vector<BigRational>(static_cast<std::size_t>(hi[iy] - lo[iy] + 1)));
  for (auto& [e, c] : f.terms()) t[e[ix] - lo[ix]][e[iy] - lo[iy]] = c;
  return t;
}

// coefficient of y^j as a polynomial in x
UniPoly y_coeff(const Table& t, std::size_t j) {
  std::vector<BigRational> c;
  for (auto& row : t) c.push_back(row[j]);
  return UniPoly(std::move(c));
}

UniPoly at_y0(const Table& t) { return y_coeff(t, 0); }

std::vector<BigRational> eval_in_y(const Table& t, const BigRational& x) {
  std::vector<BigRational> out(t.front().size());
  BigRational pw = 1;
  for (auto& row : t) {
    for (std::size_t j = 0; j < row.size(); ++j) out[j] += row[j] * pw;
    pw *= x;
  }
  return out;
}

// Sylvester resultant with formal degrees (coefficient vectors, low first).
BigRational sylvester(const std::vector<BigRational>& f, const std::vector<BigRational>& g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1;
  RationalMatrix s(m + n, m + n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s(i, i + j) = f[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s(n + i, i + j) = g[n - j];
  return determinant(s);
}

UniPoly strip_x(UniPoly p) {
  std::size_t k = 0;
  while (k < p.coeffs().size() && p.coeffs()[k] == 0) ++k;
  return UniPoly(std::vector<BigRational>(p.coeffs().begin() + static_cast<long>(k), p.coeffs().end()));
}

bool squarefree(const UniPoly& p) { return gcd(p, p.derivative()).degree() <= 0; }

std::size_t distinct_roots(const UniPoly& p) {
  if (p.degree() <= 0) return 0;
  return static_cast<std::size_t>(divmod(p, gcd(p, p.derivative())).quotient.degree());
}

struct Projection {
  std::optional<std::size_t> count;
  std::string reason;
};

// Eliminate y, count nonzero x-roots of Res_y, drop those over y = 0.
Projection project(const LaurentPolynomial& f0, const LaurentPolynomial& g0, bool swap) {
  Table f = to_table(f0, swap), g = to_table(g0, swap);
  const std::size_t m = f.front().size() - 1, n = g.front().size() - 1;
  if (m == 0 && n == 0) return {std::nullopt, "neither polynomial involves the eliminated variable"};
  const std::size_t bound = (f.size() - 1) * n + (g.size() - 1) * m;
  std::vector<BigRational> xs, ys;
  for (std::size_t i = 0; i <= bound; ++i) {
    BigRational x(static_cast<long>(i + 1));
    xs.push_back(x);
    ys.push_back(sylvester(eval_in_y(f, x), eval_in_y(g, x)));
  }
  UniPoly r = interpolate(xs, ys);
  if (r.is_zero()) return {std::nullopt, "resultant vanishes identically"};
  UniPoly rs = strip_x(r);
  if (!squarefree(rs)) return {std::nullopt, "resultant is not squarefree"};
  UniPoly common_lead = gcd(y_coeff(f, m), y_coeff(g, n));
  if (gcd(rs, common_lead).degree() > 0) return {std::nullopt, "leading coefficients vanish together at a root"};
  std::size_t boundary = distinct_roots(strip_x(gcd(at_y0(f), at_y0(g))));
  return {static_cast<std::size_t>(rs.degree()) - boundary, ""};
}

} // namespace

namespace {

// Torus automorphism x^a y^b -> x^(a + s b) y^b (or the transpose).
LaurentPolynomial shear(const LaurentPolynomial& f, std::int64_t s, bool transpose) {
  LaurentPolynomial out(2);
  for (auto& [e, c] : f.terms())
    out.add_term(transpose ? ExponentVector{e[0], e[1] + s * e[0]} : ExponentVector{e[0] + s * e[1], e[1]}, c);
  return out;
}

} // namespace

RootCount resultant_root_count(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (f.arity() != 2 || g.arity() != 2) throw ValidationError("resultant_root_count needs bivariate polynomials");
  if (f.is_zero() || g.is_zero()) return {std::nullopt, "zero polynomial"};
  // Projections along coordinate directions of a few sheared coordinate
  // systems; two successful ones must agree. Shears separate roots that
  // share a coordinate because of symmetric supports.
  std::vector<std::size_t> counts;
  std::string reason;
  for (std::int64_t s : {0, 1, -1, 2, 3})
    for (bool transpose : {false, true}) {
      if (s == 0 && transpose) continue;
      auto fs = shear(f, s, transpose), gs = shear(g, s, transpose);
      for (bool swap : {false, true}) {
        auto p = project(fs, gs, swap);
        if (p.count) counts.push_back(*p.count);
        else if (reason.empty()) reason = p.reason;
        if (counts.size() == 2) {
          if (counts[0] != counts[1]) return {std::nullopt, "projections disagree"};
          return {counts[0], ""};
        }
      }
    }
  if (counts.size() == 1) return {counts[0], ""};
  return {std::nullopt, reason};
}

std::vector<RootCountSample> sampled_root_counts(const std::vector<ExponentVector>& m1,
                                                 const std::vector<ExponentVector>& m2,
                                                 unsigned samples, std::uint64_t seed) {
  std::vector<RootCountSample> out;
  for (unsigned i = 0; i < samples; ++i) {
    RootCountSample s;
    s.seed = seed + i;
    std::mt19937_64 rng(s.seed);
    std::uniform_int_distribution<int> co(-50, 49);
    auto draw = [&](const std::vector<ExponentVector>& m) {
      LaurentPolynomial p(2);
      for (auto& e : m) {
        int c = co(rng);
        p.add_term(e, c >= 0 ? c + 1 : c);
      }
      return p;
    };
    while (s.attempts < max_resamples && !s.count) {
      ++s.attempts;
      s.count = resultant_root_count(draw(m1), draw(m2)).count;
    }
    out.push_back(s);
  }
  return out;
}

namespace {

LaurentPolynomial translate(const LaurentPolynomial& p, const BigRational& a) {
  LaurentPolynomial out(1);
  for (auto& [e, c] : p.terms()) {
    if (e[0] < 0) throw ValidationError("valuation at a nonzero point needs polynomial coordinates");
    const auto k = static_cast<unsigned>(e[0]);
    for (unsigned j = 0; j <= k; ++j)
      out.add_term({static_cast<std::int64_t>(j)}, c * BigRational(binomial(k, j)) * pow(a, k - j));
  }
  return out;
}

} // namespace

CurveReport curve_report(const VarietyModel& model, const std::vector<LaurentPolynomial>& exprs,
                         unsigned d_max, const CurveOptions& options, std::size_t cap) {
  if (model.function_arity() != 1) throw ValidationError("curve_report needs a one-parameter model");
  if (d_max < 8) throw ValidationError("curve_report needs d_max >= 8");
  if (options.mu && *options.mu < 1) throw ValidationError("mu must be positive");
  FunctionSubspace l = pull_back_subspace(model, exprs);
  if (options.point != 0) {
    std::vector<RationalFunction> moved;
    for (auto& f : l.basis())
      moved.emplace_back(translate(f.numerator(), options.point), translate(f.denominator(), options.point));
    l = FunctionSubspace::span(moved);
  }
  auto g = from_subspace(l, TermOrder::lex(1), d_max, cap);
  CurveReport rep;
  auto body = newton_body(g);
  rep.segment_low = body.vertices().front()[0];
  rep.segment_high = body.vertices().back()[0];
  rep.length = rep.segment_high - rep.segment_low;
  auto lat = difference_lattice(g);
  rep.index = lat.rank == 0 ? 0 : lat.index.get_ui();
  for (auto& s : g.sections()) rep.dimensions.push_back(s.size());

  auto fit = hilbert_fit(g);
  if (fit.converged && fit.degree == 1) {
    rep.hilbert_slope = *fit.exact_coefficient;
    rep.degree = *rep.hilbert_slope * options.degree.value_or(BigRational(1));
    BigRational c = BigRational(static_cast<unsigned long>(rep.dimensions.back())) -
                    *rep.hilbert_slope * static_cast<long>(d_max);
    rep.hilbert_constant = c;
  } else if (fit.converged && fit.degree == 0) {
    rep.hilbert_slope = BigRational(0);
    rep.degree = BigRational(0);
    rep.hilbert_constant = *fit.exact_coefficient;
  } else {
    rep.notes.push_back("Hilbert function is not eventually linear on the fit window");
  }

  std::int64_t low_all = 0, low_half = 0;
  for (unsigned k = 1; k <= d_max; ++k) {
    CurveSection sec;
    sec.k = k;
    BigRational lo = rep.segment_low * k, hi = rep.segment_high * k, mid = (lo + hi) / 2;
    const std::int64_t anchor = g.anchor()[0] * static_cast<std::int64_t>(k);
    std::int64_t c1 = 0;
    for (auto x = to_int64(ceil(lo)); x <= to_int64(floor(hi)); ++x) {
      if (rep.index == 0 || (x - anchor) % static_cast<std::int64_t>(rep.index) != 0) continue;
      if (g.contains(k, {x})) continue;
      if (BigRational(x) < mid) {
        sec.low_gaps.push_back(x);
        std::int64_t off = to_int64(floor(BigRational(x) - lo)) + 1;
        low_all = std::max(low_all, off);
        if (k <= d_max / 2) low_half = std::max(low_half, off);
      } else {
        sec.high_gaps.push_back(x);
        c1 = std::max(c1, to_int64(ceil(hi - BigRational(x))) + 1);
      }
    }
    rep.c1.push_back(c1);
    rep.sections.push_back(std::move(sec));
    if (!rep.boundary_ray_hit && hi.get_den() == 1 && g.contains(k, {to_int64(hi.get_num())}))
      rep.boundary_ray_hit = k;
  }
  rep.c0 = low_all;
  const unsigned half = d_max / 2;
  rep.gaps_confined = low_all == low_half &&
                      make_rational(rep.c1[d_max - 1], d_max) <= make_rational(rep.c1[half - 1], half);
  rep.notes.push_back("upper gap bound read as k deg L - C1(k)");

  if (options.mu) {
    const std::int64_t mu = *options.mu;
    bool divisible = true;
    for (unsigned k = 1; k <= d_max; ++k)
      for (auto& m : g.section(k))
        if ((m[0] - g.anchor()[0] * static_cast<std::int64_t>(k)) % mu != 0) divisible = false;
    rep.divisible_by_mu = divisible;
    rep.index_matches_mu = static_cast<std::int64_t>(rep.index) == mu;
    if (options.degree && rep.degree)
      rep.length_identity = rep.length * *options.degree / BigRational(mu) == *rep.degree;
  }
  return rep;
}

} // namespace okbody
