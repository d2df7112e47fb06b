#include "okbody/lattice.hpp"

#include "okbody/errors.hpp"
#include "okbody/matrix.hpp"
#include "okbody/simplex_lp.hpp"

#include <algorithm>
#include <functional>

namespace okbody {

namespace {

struct Bounds {
  std::vector<BigInt> lo, hi;
};

Bounds bounding_box(const Polytope& p) {
  Bounds b;
  const std::size_t n = p.arity();
  for (std::size_t i = 0; i < n; ++i) {
    BigRational mn = p.vertices()[0][i], mx = mn;
    for (auto& v : p.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    b.lo.push_back(ceil(mn));
    b.hi.push_back(floor(mx));
  }
  return b;
}

// Calls visit(prefix, lo, hi) for every integer line {prefix} x [lo, hi]
// of the last coordinate that lies in P.
void for_each_line(const Polytope& p,
                   const std::function<void(const ExponentVector&, std::int64_t, std::int64_t)>& visit) {
  const std::size_t n = p.arity();
  Bounds box = bounding_box(p);
  for (std::size_t i = 0; i < n; ++i)
    if (box.lo[i] > box.hi[i]) return;
  ExponentVector prefix(n, 0);
  std::vector<BigRational> partial; // per halfspace: offset - sum over fixed coordinates
  std::vector<const Halfspace*> rows;
  std::vector<bool> is_eq;
  for (auto& e : p.equations()) {
    rows.push_back(&e);
    is_eq.push_back(true);
  }
  for (auto& f : p.facets()) {
    rows.push_back(&f);
    is_eq.push_back(false);
  }

  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth + 1 < n) {
      for (std::int64_t x = to_int64(box.lo[depth]); x <= to_int64(box.hi[depth]); ++x) {
        prefix[depth] = x;
        rec(depth + 1);
      }
      return;
    }
    BigRational lo = box.lo[n - 1], hi = box.hi[n - 1];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Halfspace& h = *rows[r];
      BigRational rest = h.offset;
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (h.normal[i] != 0) rest -= h.normal[i] * prefix[i];
      const BigInt& a = h.normal[n - 1];
      if (a == 0) {
        if (is_eq[r] ? rest != 0 : rest < 0) return;
        continue;
      }
      BigRational bound = rest / a;
      if (is_eq[r]) {
        lo = std::max(lo, bound);
        hi = std::min(hi, bound);
      } else if (a > 0) {
        hi = std::min(hi, bound);
      } else {
        lo = std::max(lo, bound);
      }
    }
    BigInt l = ceil(lo), u = floor(hi);
    if (l > u) return;
    visit(prefix, to_int64(l), to_int64(u));
  };
  rec(0);
}

} // namespace

std::uint64_t count_lattice_points(const Polytope& p, std::uint64_t cap) {
  std::uint64_t total = 0;
  for_each_line(p, [&](const ExponentVector&, std::int64_t lo, std::int64_t hi) {
    total += static_cast<std::uint64_t>(hi - lo + 1);
    if (total > cap)
      throw ResourceError("lattice point count exceeds cap " + std::to_string(cap));
  });
  return total;
}

std::vector<ExponentVector> lattice_points(const Polytope& p, std::uint64_t cap) {
  count_lattice_points(p, cap);
  std::vector<ExponentVector> out;
  for_each_line(p, [&](const ExponentVector& prefix, std::int64_t lo, std::int64_t hi) {
    ExponentVector e = prefix;
    for (std::int64_t x = lo; x <= hi; ++x) {
      e.back() = x;
      out.push_back(e);
    }
  });
  return out;
}

namespace {

bool contains_int(const Polytope& p, const ExponentVector& x) {
  RationalPoint q(x.begin(), x.end());
  return p.contains(q);
}

// Exact test whether the half-open cube at anchor a meets P.
bool cube_meets(const Polytope& p, const ExponentVector& a, const std::vector<ExponentVector>& corners) {
  const std::size_t n = p.arity();
  if (contains_int(p, a)) return true;
  for (auto& v : p.vertices()) {
    bool in = true;
    for (std::size_t i = 0; i < n && in; ++i) in = v[i] >= a[i] && v[i] < a[i] + 1;
    if (in) return true;
  }
  for (auto& f : p.facets()) {
    bool all_out = true;
    for (auto& c : corners) {
      BigRational s = 0;
      for (std::size_t i = 0; i < n; ++i) s += f.normal[i] * (a[i] + c[i]);
      if (s <= f.offset) {
        all_out = false;
        break;
      }
    }
    if (all_out) return false;
  }
  // maximize t subject to x = a + y in P, 0 <= y, y_i + t <= 1
  std::vector<std::vector<BigRational>> rows;
  std::vector<BigRational> rhs;
  auto add = [&](const std::vector<BigInt>& normal, const BigRational& offset, int sign) {
    std::vector<BigRational> row(n + 1, 0);
    BigRational r = offset;
    for (std::size_t i = 0; i < n; ++i) {
      row[i] = sign * normal[i];
      r -= normal[i] * a[i];
    }
    rows.push_back(std::move(row));
    rhs.push_back(sign * r);
  };
  for (auto& f : p.facets()) add(f.normal, f.offset, 1);
  for (auto& e : p.equations()) {
    add(e.normal, e.offset, 1);
    add(e.normal, e.offset, -1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<BigRational> row(n + 1, 0);
    row[i] = 1;
    row[n] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(1);
  }
  std::vector<BigRational> obj(n + 1, 0);
  obj[n] = 1;
  auto lp = maximize<BigRational>(rows, rhs, obj);
  return lp.status == LpStatus::optimal && lp.value > 0;
}

} // namespace

CubeClassification classify_cubes(const Polytope& p) {
  const std::size_t n = p.arity();
  if (n > 3) throw ValidationError("cube classification supports arity <= 3");
  std::vector<BigInt> lo, hi;
  for (std::size_t i = 0; i < n; ++i) {
    BigRational mn = p.vertices()[0][i], mx = mn;
    for (auto& v : p.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo.push_back(floor(mn));
    hi.push_back(floor(mx));
  }
  std::vector<ExponentVector> corners;
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    ExponentVector c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = (mask >> i) & 1;
    corners.push_back(c);
  }
  CubeClassification out;
  ExponentVector a(n);
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth < n) {
      for (std::int64_t x = to_int64(lo[depth]); x <= to_int64(hi[depth]); ++x) {
        a[depth] = x;
        rec(depth + 1);
      }
      return;
    }
    bool inside = true;
    for (auto& c : corners)
      if (!contains_int(p, a + c)) {
        inside = false;
        break;
      }
    if (inside) out.inside_anchors.push_back(a);
    else if (cube_meets(p, a, corners)) out.boundary_anchors.push_back(a);
  };
  rec(0);
  out.n1 = out.inside_anchors.size();
  out.n2 = out.boundary_anchors.size();
  return out;
}

namespace {

void require_polynomial(const LaurentPolynomial& f, std::size_t n) {
  if (f.arity() != n) throw ValidationError("function arity does not match polytope");
  for (auto& [e, c] : f.terms())
    for (auto x : e)
      if (x < 0) throw ValidationError("function must be a polynomial (no negative exponents)");
}

unsigned total_degree(const ExponentVector& e) {
  std::int64_t d = 0;
  for (auto x : e) d += x;
  return static_cast<unsigned>(d);
}

BigRational eval_at(const LaurentPolynomial& f, const RationalPoint& x) { return f.evaluate(x); }

} // namespace

BigRational sum_over_lattice(const Polytope& p, const LaurentPolynomial& f, std::uint64_t lambda,
                             std::uint64_t cap) {
  require_polynomial(f, p.arity());
  if (lambda == 0) throw ValidationError("lambda must be positive");
  Polytope scaled = p.scaled(BigRational(static_cast<unsigned long>(lambda)));
  count_lattice_points(scaled, cap);
  BigRational total = 0;
  const std::size_t n = p.arity();
  for_each_line(scaled, [&](const ExponentVector& prefix, std::int64_t lo, std::int64_t hi) {
    RationalPoint x(n);
    for (std::size_t i = 0; i + 1 < n; ++i) x[i] = prefix[i];
    for (std::int64_t t = lo; t <= hi; ++t) {
      x[n - 1] = t;
      total += eval_at(f, x);
    }
  });
  return total;
}

BigRational integral_over_polytope(const Polytope& p, const LaurentPolynomial& f) {
  const std::size_t n = p.arity();
  require_polynomial(f, n);
  if (n > 3) throw ValidationError("integration supports arity <= 3");
  for (auto& [e, c] : f.terms())
    if (total_degree(e) > 2) throw ValidationError("exact integration supports degree <= 2 only");
  if (!p.full_dimensional()) throw DomainError("integration needs a full-dimensional body");
  // quadrature exact for quadratics on an n-simplex
  const BigRational nn = static_cast<long>(n);
  const BigRational w_vertex = (2 - nn) / ((nn + 1) * (nn + 2));
  const BigRational w_edge = BigRational(4) / ((nn + 1) * (nn + 2));
  BigRational total = 0;
  for (auto& cell : p.cells()) {
    RationalMatrix m(n, n);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i - 1, j) = cell[i][j] - cell[0][j];
    BigRational vol = abs(determinant(m)) / BigRational(factorial(static_cast<unsigned>(n)));
    BigRational acc = 0;
    for (auto& v : cell) acc += w_vertex * eval_at(f, v);
    for (std::size_t i = 0; i < cell.size(); ++i)
      for (std::size_t j = i + 1; j < cell.size(); ++j) {
        RationalPoint mid(n);
        for (std::size_t c = 0; c < n; ++c) mid[c] = (cell[i][c] + cell[j][c]) / 2;
        acc += w_edge * eval_at(f, mid);
      }
    total += vol * acc;
  }
  return total;
}

RiemannReport riemann_limit_check(const Polytope& p, const LaurentPolynomial& f,
                                  const std::vector<std::uint64_t>& lambdas,
                                  std::optional<double> tolerance, std::uint64_t cap) {
  if (lambdas.empty()) throw ValidationError("empty lambda schedule");
  const std::size_t n = p.arity();
  require_polynomial(f, n);
  if (f.is_zero()) throw ValidationError("function must be nonzero");
  RiemannReport rep;
  for (auto& [e, c] : f.terms()) rep.alpha = std::max(rep.alpha, total_degree(e));
  LaurentPolynomial top(n);
  for (auto& [e, c] : f.terms())
    if (total_degree(e) == rep.alpha) top.add_term(e, c);
  rep.integral = integral_over_polytope(p, top);

  std::uint64_t lmax = *std::max_element(lambdas.begin(), lambdas.end());
  if (tolerance) {
    rep.tolerance = *tolerance;
  } else {
    double bm = n == 1 ? 2.0 : boundary_measure(p);
    rep.tolerance = 3.0 * bm / static_cast<double>(lmax);
  }
  for (auto lambda : lambdas) {
    RiemannStep step;
    step.lambda = lambda;
    step.sum = sum_over_lattice(p, f, lambda, cap);
    BigRational scale = pow(BigRational(static_cast<unsigned long>(lambda)),
                            rep.alpha + static_cast<unsigned>(n));
    step.normalized = step.sum / scale;
    step.gap = BigRational(abs(step.normalized - rep.integral)).get_d();
    if (!rep.steps.empty() && step.gap > rep.steps.back().gap) rep.monotone = false;
    rep.steps.push_back(std::move(step));
  }
  rep.passed = rep.steps.back().gap < rep.tolerance;
  return rep;
}

} // namespace okbody
