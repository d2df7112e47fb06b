#include "okbody/semigroup.hpp"

#include "okbody/errors.hpp"
#include "okbody/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace okbody {

GradedSemigroup::GradedSemigroup(std::size_t arity, std::vector<std::vector<ExponentVector>> sections,
                                 ExponentVector anchor, Provenance provenance)
    : arity_(arity), sections_(std::move(sections)), anchor_(std::move(anchor)), provenance_(provenance) {
  if (sections_.empty()) throw ValidationError("graded semigroup needs d_max >= 1");
  for (std::size_t d = 0; d < sections_.size(); ++d) {
    auto& s = sections_[d];
    if (s.empty()) throw ValidationError("section G(" + std::to_string(d + 1) + ") is empty");
    for (auto& m : s)
      if (m.size() != arity_) throw ValidationError("section element has the wrong arity");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  if (anchor_.size() != arity_ || !contains(1, anchor_))
    throw ValidationError("anchor must be an element of G(1)");
}

const std::vector<ExponentVector>& GradedSemigroup::section(unsigned d) const {
  if (d < 1 || d > sections_.size())
    throw ValidationError("degree " + std::to_string(d) + " outside 1.." + std::to_string(sections_.size()));
  return sections_[d - 1];
}

bool GradedSemigroup::contains(unsigned d, const ExponentVector& m) const {
  auto& s = section(d);
  return std::binary_search(s.begin(), s.end(), m);
}

std::string to_string(GradedSemigroup::Provenance p) {
  switch (p) {
  case GradedSemigroup::Provenance::from_subspace: return "from-subspace";
  case GradedSemigroup::Provenance::from_generators: return "from-generators";
  case GradedSemigroup::Provenance::sum: return "sum";
  }
  return "sum";
}

GradedSemigroup from_subspace(const FunctionSubspace& l, const TermOrder& order, unsigned d_max,
                              std::size_t cap) {
  if (d_max == 0) throw ValidationError("d_max must be at least 1");
  if (l.dimension() == 0) throw ValidationError("subspace is zero");
  if (order.arity() != l.arity()) throw ValidationError("term order arity does not match the subspace");
  if (validate_order(order) == OrderStatus::invalid) throw ValidationError("term order is not a valid order");
  auto powers = subspace_powers(l, d_max, cap);
  std::vector<std::vector<ExponentVector>> sections;
  sections.reserve(d_max);
  ExponentVector anchor;
  for (auto& p : powers) {
    auto values = value_set(order, p);
    if (sections.empty()) anchor = values.front(); // ascending in the order
    sections.push_back(std::move(values));
  }
  return GradedSemigroup(l.arity(), std::move(sections), std::move(anchor),
                         GradedSemigroup::Provenance::from_subspace);
}

std::vector<ExponentVector> sumset(const std::vector<ExponentVector>& a,
                                   const std::vector<ExponentVector>& b) {
  std::set<ExponentVector> out;
  for (auto& x : a)
    for (auto& y : b) out.insert(x + y);
  return {out.begin(), out.end()};
}

GradedSemigroup from_generators(const std::vector<ExponentVector>& a, unsigned d_max) {
  if (a.empty()) throw ValidationError("generator set is empty");
  if (d_max == 0) throw ValidationError("d_max must be at least 1");
  std::vector<ExponentVector> base(a.begin(), a.end());
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  std::vector<std::vector<ExponentVector>> sections{base};
  for (unsigned d = 2; d <= d_max; ++d) sections.push_back(sumset(sections.back(), base));
  return GradedSemigroup(base.front().size(), std::move(sections), base.front(),
                         GradedSemigroup::Provenance::from_generators);
}

std::size_t hilbert_function(const GradedSemigroup& g, unsigned d) { return g.section(d).size(); }

std::vector<std::pair<unsigned, unsigned>> additivity_violations(const GradedSemigroup& g) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned d1 = 1; d1 <= g.d_max(); ++d1)
    for (unsigned d2 = d1; d1 + d2 <= g.d_max(); ++d2) {
      bool ok = true;
      for (auto& x : g.section(d1)) {
        for (auto& y : g.section(d2))
          if (!g.contains(d1 + d2, x + y)) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (!ok) out.emplace_back(d1, d2);
    }
  return out;
}

DifferenceLattice difference_lattice(const GradedSemigroup& g) {
  // Grow an echelon basis, recomputing it only when a vector falls outside;
  // each recomputation strictly enlarges the lattice.
  std::vector<ExponentVector> gens;
  IntegerMatrix basis(0, g.arity());
  for (unsigned d = 1; d <= g.d_max(); ++d) {
    auto shift = scaled(g.anchor(), static_cast<std::int64_t>(d));
    for (auto& m : g.section(d)) {
      auto v = m - shift;
      if (in_lattice(basis, v)) continue;
      gens.push_back(v);
      IntegerMatrix rows(gens.size(), g.arity());
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < g.arity(); ++j) rows(i, j) = static_cast<long>(gens[i][j]);
      basis = hermite_row_basis(rows);
      gens.clear();
      for (std::size_t i = 0; i < basis.rows(); ++i) {
        ExponentVector r(g.arity());
        for (std::size_t j = 0; j < g.arity(); ++j) r[j] = to_int64(basis(i, j));
        gens.push_back(std::move(r));
      }
    }
  }
  auto sat = saturation(basis);
  DifferenceLattice out;
  out.rank = sat.rank;
  out.index = sat.index;
  out.basis = std::move(sat.basis);
  out.saturation = std::move(sat.saturation);
  return out;
}

bool in_lattice(const IntegerMatrix& basis, ExponentVector v) {
  std::vector<BigInt> w(v.begin(), v.end());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t p = 0;
    while (p < basis.cols() && basis(i, p) == 0) ++p;
    if (p == basis.cols()) continue;
    if (w[p] % basis(i, p) != 0) return false;
    BigInt q = w[p] / basis(i, p);
    if (q == 0) continue;
    for (std::size_t j = p; j < basis.cols(); ++j) w[j] -= q * basis(i, j);
  }
  return std::all_of(w.begin(), w.end(), [](const BigInt& x) { return x == 0; });
}

namespace {

std::vector<RationalPoint> normalized_points(const GradedSemigroup& g, unsigned up_to) {
  std::vector<RationalPoint> pts;
  for (unsigned d = 1; d <= up_to; ++d)
    for (auto& m : g.section(d)) {
      RationalPoint p;
      p.reserve(m.size());
      for (auto x : m) p.push_back(make_rational(x, d));
      pts.push_back(std::move(p));
    }
  return pts;
}

BigRational support(const Polytope& p, const std::vector<BigInt>& u) {
  BigRational best;
  bool first = true;
  for (auto& v : p.vertices()) {
    BigRational s = 0;
    for (std::size_t j = 0; j < u.size(); ++j) s += u[j] * v[j];
    if (first || s > best) best = s;
    first = false;
  }
  return best;
}

double norm(const std::vector<BigInt>& u) {
  double s = 0;
  for (auto& x : u) s += x.get_d() * x.get_d();
  return std::sqrt(s);
}

} // namespace

Polytope newton_body(const GradedSemigroup& g) { return hull(normalized_points(g, g.d_max())); }

double newton_body_gap(const GradedSemigroup& g) {
  if (g.d_max() < 2) return 0;
  Polytope big = newton_body(g);
  Polytope small = hull(normalized_points(g, g.d_max() / 2));
  std::vector<std::vector<BigInt>> dirs;
  for (auto* p : {&big, &small}) {
    for (auto& f : p->facets()) dirs.push_back(f.normal);
    for (auto& e : p->equations()) {
      dirs.push_back(e.normal);
      std::vector<BigInt> neg;
      for (auto& x : e.normal) neg.push_back(-x);
      dirs.push_back(std::move(neg));
    }
  }
  double gap = 0;
  for (auto& u : dirs) {
    double diff = BigRational(support(big, u) - support(small, u)).get_d() / norm(u);
    gap = std::max(gap, std::abs(diff));
  }
  return gap;
}

HilbertFit hilbert_fit(const std::vector<std::size_t>& h) {
  const unsigned dmax = static_cast<unsigned>(h.size());
  if (dmax < 8) throw ValidationError("hilbert_fit needs d_max >= 8");
  HilbertFit fit;
  fit.window_start = (dmax + 1) / 2;
  std::vector<BigInt> row;
  for (unsigned d = fit.window_start; d <= dmax; ++d) row.push_back(static_cast<unsigned long>(h[d - 1]));
  for (unsigned j = 0; row.size() >= 2; ++j) {
    if (std::all_of(row.begin(), row.end(), [&](const BigInt& x) { return x == row.front(); })) {
      fit.degree = j;
      fit.exact_coefficient = BigRational(row.front()) / BigRational(factorial(j));
      fit.coefficient = fit.exact_coefficient->get_d();
      fit.converged = true;
      return fit;
    }
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
  const double top = static_cast<double>(h[dmax - 1]);
  const unsigned half = dmax / 2;
  const double mid = static_cast<double>(h[half - 1]);
  double m = std::round(std::log(top / mid) / std::log(static_cast<double>(dmax) / half));
  fit.degree = static_cast<unsigned>(std::max(0.0, m));
  double c1 = top / std::pow(double(dmax), fit.degree);
  double c2 = mid / std::pow(double(half), fit.degree);
  // error ~ 1/d: c1 + (c1 - c2) * half / (dmax - half)
  fit.coefficient = c1 + (c1 - c2) * half / double(dmax - half);
  return fit;
}

HilbertFit hilbert_fit(const GradedSemigroup& g) {
  std::vector<std::size_t> h;
  for (auto& s : g.sections()) h.push_back(s.size());
  return hilbert_fit(h);
}

GradedSemigroup oplus_t(const GradedSemigroup& g1, const GradedSemigroup& g2) {
  if (g1.arity() != g2.arity()) throw ValidationError("oplus_t needs equal arity");
  unsigned d = std::min(g1.d_max(), g2.d_max());
  std::vector<std::vector<ExponentVector>> sections;
  for (unsigned k = 1; k <= d; ++k) sections.push_back(sumset(g1.section(k), g2.section(k)));
  return GradedSemigroup(g1.arity(), std::move(sections), g1.anchor() + g2.anchor(),
                         GradedSemigroup::Provenance::sum);
}

RegularizationReport regularization_constant(const std::vector<ExponentVector>& a, unsigned k_max) {
  if (a.empty() || a.size() > 8) throw ValidationError("regularization needs 1 <= |A| <= 8");
  if (a.front().size() > 2 || a.front().empty()) throw ValidationError("regularization needs arity 1 or 2");
  if (k_max < 1 || k_max > 12) throw ValidationError("regularization needs 1 <= k_max <= 12");
  auto g = from_generators(a, k_max);
  auto lat = difference_lattice(g);
  std::vector<RationalPoint> pts;
  for (auto& x : g.section(1)) pts.emplace_back(x.begin(), x.end());
  Polytope body = hull(pts);

  RegularizationReport rep;
  rep.k_max = k_max;
  for (unsigned k = 1; k <= k_max; ++k) {
    auto shift = scaled(g.anchor(), k);
    for (auto& x : lattice_points(body.scaled(static_cast<long>(k)))) {
      if (g.contains(k, x) || !in_lattice(lat.basis, x - shift)) continue;
      std::optional<BigInt> slack;
      RationalPoint q(x.begin(), x.end());
      for (auto& f : body.facets()) {
        BigRational s = f.offset * static_cast<long>(k) - f.evaluate(q);
        BigInt si = floor(s);
        if (!slack || si < *slack) slack = si;
      }
      GapWitness w{k, x, slack.value_or(BigInt(0))};
      rep.p = std::max<std::size_t>(rep.p, w.slack.get_ui() + 1);
      rep.gaps.push_back(std::move(w));
    }
  }
  return rep;
}

ApproximationSpec approximation_spec(const GradedSemigroup& g) {
  return {newton_body(g), difference_lattice(g).basis, g.anchor()};
}

namespace {

// |n'| where n' is the projection of n onto the direction space of aff(body).
double relative_norm(const Polytope& body, const std::vector<BigInt>& n) {
  const auto& eqs = body.equations();
  std::vector<BigRational> v(n.begin(), n.end());
  if (!eqs.empty()) {
    // Gram-Schmidt on the equation normals, then remove their components.
    std::vector<std::vector<BigRational>> basis;
    for (auto& e : eqs) {
      std::vector<BigRational> w(e.normal.begin(), e.normal.end());
      for (auto& b : basis) {
        BigRational dot = 0, bb = 0;
        for (std::size_t j = 0; j < w.size(); ++j) {
          dot += w[j] * b[j];
          bb += b[j] * b[j];
        }
        for (std::size_t j = 0; j < w.size(); ++j) w[j] -= dot / bb * b[j];
      }
      basis.push_back(std::move(w));
    }
    for (auto& b : basis) {
      BigRational dot = 0, bb = 0;
      for (std::size_t j = 0; j < v.size(); ++j) {
        dot += v[j] * b[j];
        bb += b[j] * b[j];
      }
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= dot / bb * b[j];
    }
  }
  BigRational s = 0;
  for (auto& x : v) s += x * x;
  return std::sqrt(s.get_d());
}

} // namespace

ResidualPoint approximation_residual(const GradedSemigroup& g, const ApproximationSpec& spec, unsigned d) {
  if (d < 1 || d > g.d_max()) throw ValidationError("residual degree outside the stored range");
  ResidualPoint out;
  out.d = d;
  out.residual = std::numeric_limits<double>::infinity();
  Polytope cd = spec.body.scaled(static_cast<long>(d));
  std::vector<double> norms;
  for (auto& f : cd.facets()) norms.push_back(relative_norm(cd, f.normal));
  auto shift = scaled(spec.anchor, static_cast<std::int64_t>(d));
  for (auto& x : lattice_points(cd)) {
    if (g.contains(d, x) || !in_lattice(spec.lattice, x - shift)) continue;
    ++out.missing;
    RationalPoint q(x.begin(), x.end());
    for (std::size_t i = 0; i < cd.facets().size(); ++i) {
      auto& f = cd.facets()[i];
      double dist = BigRational(f.offset - f.evaluate(q)).get_d() / norms[i];
      out.residual = std::min(out.residual, dist);
    }
  }
  return out;
}

std::vector<ResidualPoint> residual_trend(const GradedSemigroup& g, const ApproximationSpec& spec) {
  std::vector<ResidualPoint> out;
  for (unsigned d = 1; d <= g.d_max(); ++d) out.push_back(approximation_residual(g, spec, d));
  return out;
}

SemigroupDiagnostics diagnose(const GradedSemigroup& g) {
  SemigroupDiagnostics out;
  auto lat = difference_lattice(g);
  out.rank = lat.rank;
  out.index = lat.index;
  out.anchor = g.anchor();
  out.newton_body = newton_body(g);
  out.newton_gap = newton_body_gap(g);
  if (g.d_max() >= 8) out.fit = hilbert_fit(g);
  if (g.arity() >= 1 && g.arity() <= 2 && g.section(1).size() <= 8)
    out.regularization = regularization_constant(g.section(1), 10);
  return out;
}

} // namespace okbody
