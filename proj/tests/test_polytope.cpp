#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "okbody/errors.hpp"
#include "okbody/polytope.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace okbody;
using gen::point;

namespace {

Polytope unit_square() { return hull({point({0, 0}), point({1, 0}), point({0, 1}), point({1, 1})}); }
Polytope triangle() { return hull({point({0, 0}), point({1, 0}), point({0, 1})}); }

Polytope cube() {
  std::vector<RationalPoint> pts;
  for (long x = 0; x <= 1; ++x)
    for (long y = 0; y <= 1; ++y)
      for (long z = 0; z <= 1; ++z) pts.push_back(point({x, y, z}));
  return hull(pts);
}

RationalPoint sum(const RationalPoint& a, const RationalPoint& b) {
  RationalPoint s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

} // namespace

TEST_CASE("hull examples") {
  auto t = hull({point({0, 0}), point({1, 0}), point({0, 1}), {BigRational(1, 2), BigRational(1, 4)}});
  CHECK(t.vertices() == std::vector<RationalPoint>{point({0, 0}), point({0, 1}), point({1, 0})});
  CHECK(t.affine_dimension() == 2);

  auto seg = hull({point({0}), point({1}), point({3})});
  CHECK(seg.vertices() == std::vector<RationalPoint>{point({0}), point({3})});

  auto c = cube();
  CHECK(c.vertices().size() == 8);
  CHECK(c.facets().size() == 6);
  CHECK(c.volume() == 1);

  CHECK_THROWS_AS(hull({}), ValidationError);
  CHECK_THROWS_AS(hull({point({0, 0, 0, 0, 0})}), ValidationError);
}

TEST_CASE("lower-dimensional bodies") {
  auto seg = hull({point({0, 0}), point({2, 1}), point({4, 2})});
  CHECK(seg.affine_dimension() == 1);
  CHECK(seg.volume() == 0);
  CHECK(seg.vertices().size() == 2);
  CHECK(seg.equations().size() == 1);
  CHECK(seg.contains(point({2, 1})));
  CHECK_FALSE(seg.contains(point({1, 1})));
  // lattice points on the segment: (0,0),(2,1),(4,2); normalized length 2
  CHECK(seg.lattice_volume() == 2);

  auto pt = hull({point({1, 2, 3})});
  CHECK(pt.affine_dimension() == 0);
  CHECK(pt.lattice_volume() == 1);

  // triangle in a plane of R^3 with lattice-area 1/2 of a unimodular basis
  auto tri = hull({point({0, 0, 0}), point({1, 0, 0}), point({0, 1, 1})});
  CHECK(tri.affine_dimension() == 2);
  CHECK(tri.lattice_volume() == 1);
  auto big = hull({point({0, 0, 0}), point({3, 0, 0}), point({0, 3, 3})});
  CHECK(big.lattice_volume() == 9);
}

TEST_CASE("volume examples") {
  CHECK(unit_square().volume() == 1);
  CHECK(triangle().volume() == BigRational(1, 2));
  CHECK(hull({point({0, 0}), point({2, 1}), point({1, 2})}).volume() == BigRational(3, 2));
  CHECK(unit_square().lattice_volume() == 2);
}

TEST_CASE("minkowski sum examples") {
  auto e1 = hull({point({0, 0}), point({1, 0})});
  auto e2 = hull({point({0, 0}), point({0, 1})});
  CHECK(minkowski_sum(e1, e2) == unit_square());
  auto t = triangle();
  CHECK(minkowski_sum(t, t) == t.scaled(2));
  auto pent = minkowski_sum(t, unit_square());
  CHECK(pent.vertices().size() == 5);
  CHECK(pent.volume() == BigRational(7, 2));
}

TEST_CASE("mixed volume examples") {
  CHECK(mixed_volume({unit_square(), unit_square()}) == 1);
  auto e1 = hull({point({0, 0}), point({1, 0})});
  auto e2 = hull({point({0, 0}), point({0, 1})});
  CHECK(mixed_volume({e1, e2}) == BigRational(1, 2));
  CHECK(mixed_volume({triangle(), unit_square()}) == 1);
  CHECK(mixed_volume({cube(), cube(), cube()}) == 1);
}

TEST_CASE("hull agrees with brute-force vertex and volume oracles") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 2 + trial % 2;
    std::uniform_int_distribution<int> c(-4, 4), cnt(4, 11);
    std::vector<RationalPoint> pts;
    int count = cnt(rng);
    for (int i = 0; i < count; ++i) {
      RationalPoint p;
      for (std::size_t j = 0; j < n; ++j) p.push_back(make_rational(c(rng), 1 + rng() % 2));
      pts.push_back(p);
    }
    auto poly = hull(pts);
    if (!poly.full_dimensional()) continue;
    CHECK(poly.vertices() == oracle::brute_vertices(pts));
    CHECK(poly.volume() == oracle::brute_volume(pts));
    CHECK(poly.facets().size() == oracle::brute_facets(pts).size());
    for (auto& p : pts) CHECK(poly.contains(p));
  }
}

TEST_CASE("four-dimensional hull") {
  std::vector<RationalPoint> pts;
  for (int mask = 0; mask < 16; ++mask)
    pts.push_back(point({mask & 1, (mask >> 1) & 1, (mask >> 2) & 1, (mask >> 3) & 1}));
  pts.push_back({BigRational(1, 2), BigRational(1, 2), BigRational(1, 2), BigRational(1, 2)});
  auto t = hull(pts);
  CHECK(t.vertices().size() == 16);
  CHECK(t.facets().size() == 8);
  CHECK(t.volume() == 1);
  auto simplex = hull({point({0, 0, 0, 0}), point({1, 0, 0, 0}), point({0, 1, 0, 0}),
                       point({0, 0, 1, 0}), point({0, 0, 0, 1})});
  CHECK(simplex.volume() == BigRational(1, 24));
  CHECK(simplex.scaled(3).volume() == BigRational(27, 8));
}

TEST_CASE("large coordinates take the arbitrary precision path") {
  BigRational big = BigRational(BigInt(1) << 50);
  auto t = hull({{0, 0, 0}, {big, 0, 0}, {0, big, 0}, {0, 0, big}, {1, 1, 1}});
  CHECK(t.vertices().size() == 4);
  CHECK(t.volume() == big * big * big / 6);
}

TEST_CASE("mixed volume symmetry, multilinearity and monotonicity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 2;
    auto a = gen::random_lattice_polytope(rng, n, false, 4);
    auto a2 = gen::random_lattice_polytope(rng, n, false, 4);
    auto b = gen::random_lattice_polytope(rng, n, false, 4);
    std::vector<Polytope> rest{b};
    if (n == 3) rest.push_back(gen::random_lattice_polytope(rng, n, false, 4));
    auto mv = [&](const Polytope& first) {
      std::vector<Polytope> bodies{first};
      bodies.insert(bodies.end(), rest.begin(), rest.end());
      return mixed_volume(bodies);
    };
    CHECK(mv(minkowski_sum(a, a2)) == mv(a) + mv(a2));
    std::vector<Polytope> perm = rest;
    perm.push_back(a);
    CHECK(mixed_volume(perm) == mv(a));
    // a is contained in hull(a ∪ a2)
    std::vector<RationalPoint> both = a.vertices();
    both.insert(both.end(), a2.vertices().begin(), a2.vertices().end());
    CHECK(mv(a) <= mv(hull(both)));
    CHECK(mixed_volume(std::vector<Polytope>(n, a)) == a.volume());
  }
}

TEST_CASE("mixed area agrees with the edge oracle") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = gen::random_lattice_polytope(rng, 2, false);
    auto q = gen::random_lattice_polytope(rng, 2, true);
    CHECK(mixed_volume({p, q}) == oracle::mixed_area(p.vertices(), q.vertices()));
  }
}

TEST_CASE("metric report") {
  auto sq = metric_report(unit_square());
  CHECK(sq.diameter == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(sq.inradius == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(sq.stretch_ratio == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-9));
  CHECK(sq.incenter[0] == doctest::Approx(0.5));

  auto tr = metric_report(triangle());
  CHECK(tr.inradius == doctest::Approx((2 - std::sqrt(2.0)) / 2).epsilon(1e-9));

  auto t2 = metric_report(triangle().scaled(2));
  CHECK(t2.stretch_ratio == doctest::Approx(tr.stretch_ratio).epsilon(1e-9));

  auto c = metric_report(cube());
  CHECK(c.inradius == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(c.diameter == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

  CHECK_THROWS_AS(metric_report(hull({point({0, 0}), point({1, 1})})), DomainError);
}

TEST_CASE("inner parallel body") {
  auto a = inner_parallel_body(unit_square(), 0.25);
  CHECK_FALSE(a.empty);
  CHECK(a.vertices.size() == 4);
  CHECK(a.volume == doctest::Approx(0.25).epsilon(1e-9));
  auto z = inner_parallel_body(triangle(), 0.0);
  CHECK(z.volume == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(inner_parallel_body(unit_square(), 0.6).empty);
  auto c = inner_parallel_body(cube(), 0.1);
  CHECK(c.volume == doctest::Approx(0.512).epsilon(1e-9));
}

TEST_CASE("boundary measure") {
  CHECK(boundary_measure(unit_square()) == doctest::Approx(4.0));
  CHECK(boundary_measure(triangle()) == doctest::Approx(2 + std::sqrt(2.0)));
  CHECK(boundary_measure(cube()) == doctest::Approx(6.0));
  CHECK(boundary_measure(triangle().scaled(2)) == doctest::Approx(2 * boundary_measure(triangle())));
  CHECK(boundary_measure(cube().scaled(2)) == doctest::Approx(4 * boundary_measure(cube())));
}

TEST_CASE("volume lost to the inner parallel body is bounded by r times the boundary") {
  std::mt19937_64 rng(84);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + trial % 2;
    auto p = gen::random_lattice_polytope(rng, n, true);
    double vol = p.volume().get_d();
    double bm = boundary_measure(p);
    for (double r : {0.1, 0.5, 1.0}) {
      auto inner = inner_parallel_body(p, r);
      CHECK(vol - inner.volume <= r * bm + 1e-6);
    }
  }
}

TEST_CASE("inner bodies plus a ball stay inside the sum") {
  std::mt19937_64 rng(85);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = gen::random_lattice_polytope(rng, 2, true);
    auto b = gen::random_lattice_polytope(rng, 2, true);
    double r1 = 0.1 * (1 + trial % 3), r2 = 0.15;
    auto ia = inner_parallel_body(a, r1), ib = inner_parallel_body(b, r2);
    if (ia.empty || ib.empty) continue;
    auto s = minkowski_sum(a, b);
    for (auto& u : ia.vertices)
      for (auto& v : ib.vertices)
        for (auto& f : s.facets()) {
          double lhs = 0, nn = 0;
          for (std::size_t c = 0; c < 2; ++c) {
            lhs += f.normal[c].get_d() * (u[c] + v[c]);
            nn += f.normal[c].get_d() * f.normal[c].get_d();
          }
          CHECK(lhs + (r1 + r2) * std::sqrt(nn) <= f.offset.get_d() + 1e-6);
        }
  }
}

TEST_CASE("volume lower bound from diameter and inradius") {
  // Vol >= D R^(n-1) Omega_(n-1) / (2 (n-1)!), Omega_(n-1) = volume of the unit (n-1)-ball
  std::mt19937_64 rng(86);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + trial % 2;
    auto p = gen::random_lattice_polytope(rng, n, true);
    auto m = metric_report(p);
    double omega = n == 2 ? 2.0 : M_PI;
    double fact = n == 2 ? 1.0 : 2.0;
    double bound = m.diameter * std::pow(m.inradius, double(n - 1)) * omega / (2 * fact);
    CHECK(p.volume().get_d() >= bound - 1e-6);
    CHECK(m.diameter >= m.inradius);
    CHECK(m.stretch_ratio >= 1.0);
  }
}

TEST_CASE("translation and scaling") {
  auto t = triangle().translated({BigRational(1, 3), BigRational(-2)});
  CHECK(t.volume() == BigRational(1, 2));
  CHECK(t.contains({BigRational(1, 3), BigRational(-2)}));
  CHECK(triangle().scaled(0).affine_dimension() == 0);
  CHECK(sum(point({1, 2}), point({3, 4})) == point({4, 6}));
}
