#include "okbody/polytope.hpp"

#include "okbody/errors.hpp"
#include "okbody/matrix.hpp"
#include "okbody/simplex_lp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace okbody {

std::string to_string(const RationalPoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += to_string(p[i]);
  }
  return s + ")";
}

BigRational Halfspace::evaluate(const RationalPoint& x) const {
  BigRational s = 0;
  for (std::size_t i = 0; i < normal.size(); ++i)
    if (normal[i] != 0) s += normal[i] * x[i];
  return s;
}

namespace {

using i128 = __int128;

BigInt to_big(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  BigInt r = (hi << 64) + lo;
  return neg ? BigInt(-r) : r;
}
const BigInt& to_big(const BigInt& v) { return v; }

i128 abs_val(i128 v) { return v < 0 ? -v : v; }

i128 gcd_val(i128 a, i128 b) {
  a = abs_val(a);
  b = abs_val(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
BigInt gcd_val(const BigInt& a, const BigInt& b) { return gcd(a, b); }

template <class Int>
using IPoint = std::vector<Int>;

template <class Int>
Int dot(const IPoint<Int>& a, const IPoint<Int>& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class Int>
Int small_det(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (n == 3)
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  Int s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Int>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      sub.push_back(std::move(row));
    }
    Int t = m[0][j] * small_det(sub);
    if (j % 2) s -= t;
    else s += t;
  }
  return s;
}

// Vector orthogonal to the k-1 rows of d (k columns).
template <class Int>
IPoint<Int> generalized_cross(const std::vector<IPoint<Int>>& d, std::size_t k) {
  IPoint<Int> n(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::vector<Int>> minor;
    for (auto& row : d) {
      std::vector<Int> r;
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) r.push_back(row[c]);
      minor.push_back(std::move(r));
    }
    Int v = small_det(minor);
    n[j] = (j % 2) ? Int(-v) : v;
  }
  return n;
}

template <class Int>
struct CoreFacet {
  IPoint<Int> normal;
  Int offset;
  std::vector<std::vector<std::size_t>> simplices;
};

template <class Int>
struct CoreHull {
  std::vector<CoreFacet<Int>> facets;
  std::vector<std::size_t> extreme;
};

template <class Int>
void make_primitive(IPoint<Int>& normal, Int& offset) {
  Int g = 0;
  for (auto& x : normal) g = gcd_val(g, x);
  if (g > 1) {
    for (auto& x : normal) x /= g;
    offset /= g;
  }
}

std::size_t affine_rank(const std::vector<RationalPoint>& pts) {
  if (pts.size() <= 1) return 0;
  RationalMatrix d(pts.size() - 1, pts[0].size());
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts[0].size(); ++j) d(i - 1, j) = pts[i][j] - pts[0][j];
  return rref(d).rank;
}

template <class Int>
CoreHull<Int> hull_1d(const std::vector<IPoint<Int>>& pts) {
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i][0] < pts[lo][0]) lo = i;
    if (pts[i][0] > pts[hi][0]) hi = i;
  }
  CoreHull<Int> h;
  h.facets.push_back({{Int(-1)}, Int(-pts[lo][0]), {{lo}}});
  h.facets.push_back({{Int(1)}, pts[hi][0], {{hi}}});
  h.extreme = {lo, hi};
  return h;
}

template <class Int>
CoreHull<Int> hull_2d(const std::vector<IPoint<Int>>& pts) {
  std::vector<std::size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
  auto cross = [&](std::size_t o, std::size_t a, std::size_t b) -> Int {
    return (pts[a][0] - pts[o][0]) * (pts[b][1] - pts[o][1]) -
           (pts[a][1] - pts[o][1]) * (pts[b][0] - pts[o][0]);
  };
  std::vector<std::size_t> chain(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    while (k >= 2 && cross(chain[k - 2], chain[k - 1], idx[i]) <= 0) --k;
    chain[k++] = idx[i];
  }
  for (std::size_t i = idx.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(chain[k - 2], chain[k - 1], idx[i - 1]) <= 0) --k;
    chain[k++] = idx[i - 1];
  }
  chain.resize(k - 1); // counter-clockwise, no repetition
  CoreHull<Int> h;
  h.extreme = chain;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    std::size_t p = chain[i], q = chain[(i + 1) % chain.size()];
    IPoint<Int> n{pts[q][1] - pts[p][1], pts[p][0] - pts[q][0]};
    Int off = dot(n, pts[p]);
    make_primitive(n, off);
    h.facets.push_back({n, off, {{p, q}}});
  }
  return h;
}

template <class Int>
CoreHull<Int> hull_beneath_beyond(const std::vector<IPoint<Int>>& pts, std::size_t k,
                                  const std::vector<RationalPoint>& rational) {
  // initial simplex: greedy affinely independent points in input order
  std::vector<std::size_t> simplex{0};
  std::vector<RationalPoint> chosen{rational[0]};
  for (std::size_t i = 1; i < pts.size() && simplex.size() < k + 1; ++i) {
    chosen.push_back(rational[i]);
    if (affine_rank(chosen) == simplex.size()) simplex.push_back(i);
    else chosen.pop_back();
  }
  IPoint<Int> centre(k, Int(0)); // (k+1) times an interior point
  for (auto i : simplex)
    for (std::size_t j = 0; j < k; ++j) centre[j] += pts[i][j];
  const Int scale = static_cast<long>(k + 1);

  struct Facet {
    std::vector<std::size_t> verts;
    IPoint<Int> normal;
    Int offset;
    bool alive = true;
  };
  std::vector<Facet> facets;
  auto make_facet = [&](std::vector<std::size_t> verts) {
    std::vector<IPoint<Int>> d;
    for (std::size_t i = 1; i < verts.size(); ++i) {
      IPoint<Int> row(k);
      for (std::size_t j = 0; j < k; ++j) row[j] = pts[verts[i]][j] - pts[verts[0]][j];
      d.push_back(std::move(row));
    }
    IPoint<Int> n = generalized_cross(d, k);
    Int off = dot(n, pts[verts[0]]);
    if (dot(n, centre) > scale * off) {
      for (auto& x : n) x = -x;
      off = -off;
    }
    std::sort(verts.begin(), verts.end());
    facets.push_back({std::move(verts), std::move(n), off, true});
  };
  for (std::size_t skip = 0; skip <= k; ++skip) {
    std::vector<std::size_t> verts;
    for (std::size_t i = 0; i <= k; ++i)
      if (i != skip) verts.push_back(simplex[i]);
    make_facet(verts);
  }
  std::vector<bool> in_simplex(pts.size(), false);
  for (auto i : simplex) in_simplex[i] = true;

  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (in_simplex[p]) continue;
    std::vector<std::size_t> visible;
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (facets[f].alive && dot(facets[f].normal, pts[p]) > facets[f].offset) visible.push_back(f);
    if (visible.empty()) continue;
    std::map<std::vector<std::size_t>, int> ridges;
    for (auto f : visible) {
      const auto& v = facets[f].verts;
      for (std::size_t skip = 0; skip < v.size(); ++skip) {
        std::vector<std::size_t> r;
        for (std::size_t i = 0; i < v.size(); ++i)
          if (i != skip) r.push_back(v[i]);
        ++ridges[r];
      }
      facets[f].alive = false;
    }
    for (auto& [r, count] : ridges) {
      if (count != 1) continue;
      auto verts = r;
      verts.push_back(p);
      make_facet(std::move(verts));
    }
  }

  CoreHull<Int> h;
  std::map<std::pair<IPoint<Int>, Int>, std::size_t> merged;
  for (auto& f : facets) {
    if (!f.alive) continue;
    IPoint<Int> n = f.normal;
    Int off = f.offset;
    make_primitive(n, off);
    auto key = std::make_pair(n, off);
    auto it = merged.find(key);
    if (it == merged.end()) {
      it = merged.emplace(key, h.facets.size()).first;
      h.facets.push_back({n, off, {}});
    }
    h.facets[it->second].simplices.push_back(f.verts);
  }
  // extreme points: the incident facet normals span R^k
  std::vector<std::size_t> candidates;
  for (auto& f : h.facets)
    for (auto& s : f.simplices) candidates.insert(candidates.end(), s.begin(), s.end());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (auto p : candidates) {
    std::vector<const CoreFacet<Int>*> incident;
    for (auto& f : h.facets)
      if (dot(f.normal, pts[p]) == f.offset) incident.push_back(&f);
    RationalMatrix m(incident.size(), k);
    for (std::size_t i = 0; i < incident.size(); ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = BigRational(to_big(incident[i]->normal[j]));
    if (rref(m).rank == k) h.extreme.push_back(p);
  }
  return h;
}

template <class Int>
CoreHull<Int> hull_core(const std::vector<IPoint<Int>>& pts, std::size_t k,
                        const std::vector<RationalPoint>& projected) {
  if (k == 1) return hull_1d(pts);
  if (k == 2) return hull_2d(pts);
  return hull_beneath_beyond(pts, k, projected);
}

// Sum of |det| over the fan cells, in projected integer coordinates.
template <class Int>
BigInt fan_determinant_sum(const std::vector<IPoint<Int>>& pts, std::size_t k,
                           const std::vector<std::vector<std::size_t>>& cells) {
  BigInt total = 0;
  for (auto& cell : cells) {
    std::vector<std::vector<Int>> m;
    for (std::size_t i = 1; i < cell.size(); ++i) {
      std::vector<Int> row(k);
      for (std::size_t j = 0; j < k; ++j) row[j] = pts[cell[i]][j] - pts[cell[0]][j];
      m.push_back(std::move(row));
    }
    total += abs(to_big(small_det(m)));
  }
  return total;
}

struct Assembled {
  std::vector<std::size_t> extreme;
  std::vector<std::pair<std::vector<BigInt>, BigInt>> facets; // k-dim normal, scaled offset
  std::vector<std::vector<std::vector<std::size_t>>> facet_simplices;
  BigInt det_sum;
  std::vector<std::vector<std::size_t>> cells;
};

template <class Int>
Assembled run_hull(const std::vector<IPoint<Int>>& pts, std::size_t k,
                   const std::vector<RationalPoint>& projected,
                   const std::vector<RationalPoint>& originals) {
  CoreHull<Int> core = hull_core(pts, k, projected);
  Assembled out;
  out.extreme = core.extreme;
  std::sort(out.extreme.begin(), out.extreme.end(),
            [&](std::size_t a, std::size_t b) { return originals[a] < originals[b]; });
  const std::size_t apex = out.extreme.front();
  for (auto& f : core.facets) {
    std::vector<BigInt> n;
    for (auto& x : f.normal) n.push_back(to_big(x));
    out.facets.emplace_back(std::move(n), to_big(f.offset));
    out.facet_simplices.push_back(f.simplices);
    if (dot(f.normal, pts[apex]) == f.offset) continue;
    for (auto& s : f.simplices) {
      std::vector<std::size_t> cell{apex};
      cell.insert(cell.end(), s.begin(), s.end());
      out.cells.push_back(std::move(cell));
    }
  }
  out.det_sum = fan_determinant_sum(pts, k, out.cells);
  return out;
}

BigInt lcm_denominators(const std::vector<RationalPoint>& pts) {
  BigInt l = 1;
  for (auto& p : pts)
    for (auto& x : p) l = lcm(l, BigInt(x.get_den()));
  return l;
}

std::vector<BigInt> primitive(const std::vector<BigRational>& v) {
  BigInt l = 1;
  for (auto& x : v) l = lcm(l, BigInt(x.get_den()));
  std::vector<BigInt> out;
  BigInt g = 0;
  for (auto& x : v) {
    BigInt z = BigInt(x * l);
    out.push_back(z);
    g = gcd(g, z);
  }
  if (g > 1)
    for (auto& z : out) z /= g;
  return out;
}

} // namespace

Polytope Polytope::hull(const std::vector<RationalPoint>& input) {
  if (input.empty()) throw ValidationError("convex hull of an empty point set");
  const std::size_t n = input.front().size();
  if (n == 0 || n > max_polytope_arity)
    throw ValidationError("polytope arity must be between 1 and 4");
  for (auto& p : input)
    if (p.size() != n) throw ValidationError("points of different arity in one hull");
  std::vector<RationalPoint> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Polytope poly;
  poly.arity_ = n;
  const RationalPoint& base = pts.front();

  RationalMatrix diff(pts.size() - 1, n);
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) diff(i - 1, j) = pts[i][j] - base[j];
  RrefResult rr = rref(diff);
  const std::size_t k = rr.rank;
  poly.dim_ = k;

  std::vector<bool> is_pivot(n, false);
  for (auto c : rr.pivot_columns) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<BigRational> a(n, 0);
    a[f] = 1;
    for (std::size_t r = 0; r < k; ++r) a[rr.pivot_columns[r]] = -rr.reduced(r, f);
    Halfspace eq{primitive(a), 0};
    eq.offset = eq.evaluate(base);
    poly.equations_.push_back(std::move(eq));
  }
  std::sort(poly.equations_.begin(), poly.equations_.end(),
            [](const Halfspace& a, const Halfspace& b) { return a.normal < b.normal; });

  if (k == 0) {
    poly.vertices_ = {base};
    poly.cells_ = {{base}};
    poly.volume_ = 0;
    poly.lattice_volume_ = 1;
    return poly;
  }

  std::vector<RationalPoint> projected;
  for (auto& p : pts) {
    RationalPoint y;
    for (auto c : rr.pivot_columns) y.push_back(p[c]);
    projected.push_back(std::move(y));
  }
  const BigInt scale = lcm_denominators(projected);
  std::vector<IPoint<BigInt>> big(pts.size());
  BigInt maxabs = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (auto& y : projected[i]) {
      BigInt z = BigInt(y * scale);
      maxabs = std::max(maxabs, BigInt(abs(z)));
      big[i].push_back(z);
    }
  const unsigned bits = k <= 2 ? 40 : (k == 3 ? 30 : 24);
  Assembled as;
  if (maxabs < (BigInt(1) << bits)) {
    std::vector<IPoint<i128>> small(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (auto& z : big[i]) small[i].push_back(static_cast<i128>(z.get_si()));
    as = run_hull(small, k, projected, pts);
  } else {
    as = run_hull(big, k, projected, pts);
  }

  for (auto i : as.extreme) poly.vertices_.push_back(pts[i]);

  // lift facets to ambient coordinates and sort them
  std::vector<std::size_t> order(as.facets.size());
  std::vector<Halfspace> lifted;
  for (auto& [nk, off] : as.facets) {
    Halfspace h;
    h.normal.assign(n, 0);
    for (std::size_t r = 0; r < k; ++r) h.normal[rr.pivot_columns[r]] = nk[r];
    h.offset = make_rational(off, scale);
    lifted.push_back(std::move(h));
  }
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (lifted[a].normal != lifted[b].normal) return lifted[a].normal < lifted[b].normal;
    return lifted[a].offset < lifted[b].offset;
  });
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    std::size_t f = order[pos];
    poly.facets_.push_back(lifted[f]);
    for (auto& s : as.facet_simplices[f]) {
      BoundaryPiece piece;
      piece.facet = pos;
      for (auto i : s) piece.simplex.push_back(pts[i]);
      poly.boundary_.push_back(std::move(piece));
    }
  }
  for (auto& cell : as.cells) {
    std::vector<RationalPoint> c;
    for (auto i : cell) c.push_back(pts[i]);
    poly.cells_.push_back(std::move(c));
  }

  // projected volume = det_sum / (k! scale^k)
  BigInt scale_k = 1;
  for (std::size_t i = 0; i < k; ++i) scale_k *= scale;
  BigRational projected_volume = make_rational(as.det_sum, factorial(k) * scale_k);
  poly.volume_ = (k == n) ? projected_volume : BigRational(0);

  IntegerMatrix gens(pts.size() - 1, n);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<BigRational> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = pts[i][j] - base[j];
    auto prim = primitive(row);
    for (std::size_t j = 0; j < n; ++j) gens(i - 1, j) = prim[j];
  }
  auto sat = saturation(gens);
  IntegerMatrix proj(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < k; ++r) proj(i, r) = sat.saturation(i, rr.pivot_columns[r]);
  BigInt covolume = abs(determinant(proj));
  poly.lattice_volume_ = make_rational(as.det_sum, scale_k * covolume);
  return poly;
}

bool Polytope::contains(const RationalPoint& x) const {
  if (x.size() != arity_) throw ValidationError("point arity does not match polytope");
  for (auto& e : equations_)
    if (e.evaluate(x) != e.offset) return false;
  for (auto& f : facets_)
    if (f.evaluate(x) > f.offset) return false;
  return true;
}

Polytope Polytope::scaled(const BigRational& s) const {
  std::vector<RationalPoint> pts = vertices_;
  for (auto& p : pts)
    for (auto& x : p) x *= s;
  return Polytope::hull(pts);
}

Polytope Polytope::translated(const RationalPoint& v) const {
  if (v.size() != arity_) throw ValidationError("translation arity does not match polytope");
  std::vector<RationalPoint> pts = vertices_;
  for (auto& p : pts)
    for (std::size_t i = 0; i < arity_; ++i) p[i] += v[i];
  return Polytope::hull(pts);
}

Polytope hull(const std::vector<RationalPoint>& points) { return Polytope::hull(points); }

BigRational volume(const Polytope& p) { return p.volume(); }

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.arity() != q.arity()) throw ValidationError("Minkowski sum of bodies of different arity");
  std::vector<RationalPoint> pts;
  pts.reserve(p.vertices().size() * q.vertices().size());
  for (auto& a : p.vertices())
    for (auto& b : q.vertices()) {
      RationalPoint s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      pts.push_back(std::move(s));
    }
  return Polytope::hull(pts);
}

BigRational mixed_volume(const std::vector<Polytope>& bodies) {
  const std::size_t n = bodies.size();
  if (n == 0 || n > max_polytope_arity) throw ValidationError("mixed volume needs 1 to 4 bodies");
  for (auto& b : bodies)
    if (b.arity() != n) throw ValidationError("mixed volume needs n bodies in R^n");
  std::vector<Polytope> sums(std::size_t(1) << n);
  BigRational total = 0;
  for (std::size_t mask = 1; mask < sums.size(); ++mask) {
    std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    std::size_t rest = mask & (mask - 1);
    sums[mask] = rest == 0 ? bodies[low] : minkowski_sum(sums[rest], bodies[low]);
    std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if ((n - size) % 2) total -= sums[mask].volume();
    else total += sums[mask].volume();
  }
  return total / BigRational(factorial(static_cast<unsigned>(n)));
}

namespace {

double norm(const std::vector<BigInt>& v) {
  BigInt s = 0;
  for (auto& x : v) s += x * x;
  return std::sqrt(s.get_d());
}

} // namespace

MetricReport metric_report(const Polytope& p) {
  if (!p.full_dimensional()) throw DomainError("metric report needs a full-dimensional body");
  const std::size_t n = p.arity();
  MetricReport rep;
  BigRational best = 0;
  const auto& vs = p.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      BigRational d = 0;
      for (std::size_t c = 0; c < n; ++c) d += (vs[i][c] - vs[j][c]) * (vs[i][c] - vs[j][c]);
      best = std::max(best, d);
    }
  rep.diameter = std::sqrt(best.get_d());

  std::vector<double> centre(n, 0.0);
  for (auto& v : vs)
    for (std::size_t c = 0; c < n; ++c) centre[c] += v[c].get_d() / static_cast<double>(vs.size());
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  for (auto& f : p.facets()) {
    std::vector<double> row(2 * n + 1);
    double slack = f.offset.get_d();
    for (std::size_t c = 0; c < n; ++c) {
      double x = f.normal[c].get_d();
      row[c] = x;
      row[n + c] = -x;
      slack -= x * centre[c];
    }
    row[2 * n] = norm(f.normal);
    a.push_back(std::move(row));
    b.push_back(slack);
  }
  std::vector<double> obj(2 * n + 1, 0.0);
  obj[2 * n] = 1.0;
  auto lp = maximize<double>(a, b, obj, LpTolerance<double>{1e-12});
  if (lp.status != LpStatus::optimal) throw DomainError("Chebyshev centre program failed");
  rep.inradius = lp.x[2 * n];
  rep.incenter.resize(n);
  for (std::size_t c = 0; c < n; ++c) rep.incenter[c] = centre[c] + lp.x[c] - lp.x[n + c];
  rep.stretch_ratio = rep.diameter / rep.inradius;
  return rep;
}

namespace {

// Solves the square system by Gaussian elimination with partial pivoting.
bool solve_dense(std::vector<std::vector<double>> m, std::vector<double> rhs, std::vector<double>& x) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
    if (std::fabs(m[piv][c]) < 1e-12) return false;
    std::swap(m[piv], m[c]);
    std::swap(rhs[piv], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      double f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
      rhs[r] -= f * rhs[c];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return true;
}

} // namespace

FloatPolytope inner_parallel_body(const Polytope& p, double r) {
  if (!p.full_dimensional()) throw DomainError("inner parallel body needs a full-dimensional body");
  if (r < 0) throw ValidationError("inner parallel body needs r >= 0");
  const std::size_t n = p.arity();
  const double tol = 1e-9;
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  for (auto& f : p.facets()) {
    std::vector<double> row;
    for (auto& x : f.normal) row.push_back(x.get_d());
    a.push_back(row);
    b.push_back(f.offset.get_d() - r * norm(f.normal));
  }
  FloatPolytope out;
  out.arity = n;
  const std::size_t m = a.size();
  std::vector<std::size_t> pick(n);
  std::vector<bool> sel(m, false);
  std::fill(sel.begin(), sel.begin() + static_cast<long>(std::min(n, m)), true);
  do {
    std::vector<std::vector<double>> sys;
    std::vector<double> rhs;
    for (std::size_t i = 0; i < m; ++i)
      if (sel[i]) {
        sys.push_back(a[i]);
        rhs.push_back(b[i]);
      }
    std::vector<double> x;
    if (!solve_dense(sys, rhs, x)) continue;
    bool feasible = true;
    for (std::size_t i = 0; i < m && feasible; ++i) {
      double s = 0;
      for (std::size_t c = 0; c < n; ++c) s += a[i][c] * x[c];
      feasible = s <= b[i] + tol;
    }
    if (!feasible) continue;
    bool duplicate = false;
    for (auto& v : out.vertices) {
      double d = 0;
      for (std::size_t c = 0; c < n; ++c) d = std::max(d, std::fabs(v[c] - x[c]));
      if (d < tol) duplicate = true;
    }
    if (!duplicate) out.vertices.push_back(x);
  } while (std::prev_permutation(sel.begin(), sel.end()));
  std::sort(out.vertices.begin(), out.vertices.end());
  out.empty = out.vertices.empty();
  if (out.vertices.size() > n) {
    std::vector<RationalPoint> exact;
    for (auto& v : out.vertices) {
      RationalPoint q;
      for (double x : v) q.push_back(BigRational(x));
      exact.push_back(std::move(q));
    }
    out.volume = Polytope::hull(exact).volume().get_d();
  }
  return out;
}

double boundary_measure(const Polytope& p) {
  const std::size_t n = p.arity();
  if (n != 2 && n != 3) throw DomainError("boundary measure is defined for n = 2 and n = 3");
  if (!p.full_dimensional()) throw DomainError("boundary measure needs a full-dimensional body");
  double total = 0;
  for (auto& piece : p.boundary()) {
    const auto& s = piece.simplex;
    if (n == 2) {
      BigRational d = 0;
      for (std::size_t c = 0; c < 2; ++c) d += (s[1][c] - s[0][c]) * (s[1][c] - s[0][c]);
      total += std::sqrt(d.get_d());
    } else {
      RationalPoint u(3), v(3);
      for (std::size_t c = 0; c < 3; ++c) {
        u[c] = s[1][c] - s[0][c];
        v[c] = s[2][c] - s[0][c];
      }
      BigRational x = u[1] * v[2] - u[2] * v[1];
      BigRational y = u[2] * v[0] - u[0] * v[2];
      BigRational z = u[0] * v[1] - u[1] * v[0];
      total += std::sqrt(BigRational(x * x + y * y + z * z).get_d()) / 2.0;
    }
  }
  return total;
}

} // namespace okbody
