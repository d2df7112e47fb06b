#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "okbody/errors.hpp"
#include "okbody/semigroup.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numeric>

using namespace okbody;
using gen::point;

namespace {

LaurentPolynomial mono(ExponentVector e, BigRational c = 1) { return LaurentPolynomial::monomial(e, c); }

std::vector<ExponentVector> range1(std::int64_t lo, std::int64_t hi) {
  std::vector<ExponentVector> out;
  for (auto i = lo; i <= hi; ++i) out.push_back({i});
  return out;
}

std::vector<ExponentVector> square_points(std::int64_t k) {
  std::vector<ExponentVector> out;
  for (std::int64_t i = 0; i <= k; ++i)
    for (std::int64_t j = 0; j <= k; ++j) out.push_back({i, j});
  return out;
}

const std::vector<ExponentVector> unit_square{{0, 0}, {0, 1}, {1, 0}, {1, 1}};

FunctionSubspace cusp() { return FunctionSubspace::monomials({{0}, {2}, {3}}); }

std::vector<TermOrder> orders2() {
  return {TermOrder::lex(2), TermOrder::grlex(2), TermOrder({{2, 3}, {0, 1}}), TermOrder({{-1, 1}, {1, 0}}),
          TermOrder({{0, -1}, {-1, 0}})};
}

Polytope conv(const std::vector<ExponentVector>& m) {
  std::vector<RationalPoint> pts;
  for (auto& e : m) pts.emplace_back(e.begin(), e.end());
  return hull(pts);
}

std::vector<std::vector<std::int64_t>> differences(const GradedSemigroup& g) {
  std::vector<std::vector<std::int64_t>> out;
  for (unsigned d = 1; d <= g.d_max(); ++d)
    for (auto& m : g.section(d)) out.push_back(m - scaled(g.anchor(), d));
  return out;
}

} // namespace

TEST_CASE("from_subspace examples") {
  auto g = from_subspace(FunctionSubspace::monomials({{0}, {1}}), TermOrder::lex(1), 3);
  CHECK(g.section(1) == range1(0, 1));
  CHECK(g.section(2) == range1(0, 2));
  CHECK(g.section(3) == range1(0, 3));
  CHECK(g.provenance() == GradedSemigroup::Provenance::from_subspace);

  auto c = from_subspace(cusp(), TermOrder::lex(1), 3);
  CHECK(c.section(1) == std::vector<ExponentVector>{{0}, {2}, {3}});
  CHECK(c.section(2) == std::vector<ExponentVector>{{0}, {2}, {3}, {4}, {5}, {6}});
  auto s3 = range1(2, 9);
  s3.insert(s3.begin(), ExponentVector{0});
  CHECK(c.section(3) == s3);

  auto sq = from_subspace(FunctionSubspace::monomials(unit_square), TermOrder::lex(2), 2);
  CHECK(sq.section(2) == square_points(2));
  CHECK_THROWS_AS(sq.section(3), ValidationError);
  CHECK_THROWS_AS(from_subspace(cusp(), TermOrder(std::vector<std::vector<std::int64_t>>{{0}}), 2), ValidationError);
}

TEST_CASE("monomial sections are iterated sumsets under every order") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    auto m = gen::random_support(rng, 2, 5, -2, 2);
    std::set<ExponentVector> ms(m.begin(), m.end());
    auto l = FunctionSubspace::monomials(m);
    for (auto& order : orders2()) {
      auto g = from_subspace(l, order, 3);
      for (unsigned d = 1; d <= 3; ++d) {
        auto expect = oracle::sumset(ms, d);
        CHECK(g.section(d) == std::vector<ExponentVector>(expect.begin(), expect.end()));
      }
      CHECK(groebner_value(order, LaurentPolynomial(2, [&] {
                             LaurentPolynomial::Terms t;
                             for (auto& e : m) t[e] = 1;
                             return t;
                           }())) == g.anchor());
    }
  }
}

TEST_CASE("section sizes equal power dimensions and sections are additive") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 1 + trial % 2;
    std::vector<LaurentPolynomial> polys;
    for (int i = 0; i < 3; ++i) polys.push_back(gen::random_poly(rng, n, 3, -1, 2));
    auto l = FunctionSubspace::span(polys);
    auto g = from_subspace(l, n == 1 ? TermOrder::lex(1) : TermOrder::grlex(2), 3);
    std::vector<LaurentPolynomial> prod = polys;
    for (unsigned d = 1; d <= 3; ++d) {
      CHECK(hilbert_function(g, d) == gen::dense_rank(prod));
      std::vector<LaurentPolynomial> next;
      for (auto& p : prod)
        for (auto& q : polys) next.push_back(p * q);
      prod = std::move(next);
    }
    CHECK(additivity_violations(g).empty());
  }
}

TEST_CASE("additivity check detects a non-additive truncation") {
  GradedSemigroup g(1, {{{0}, {1}}, {{0}, {2}}}, {0}, GradedSemigroup::Provenance::from_generators);
  auto v = additivity_violations(g);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == std::pair<unsigned, unsigned>{1, 1});
  CHECK_THROWS_AS(GradedSemigroup(1, {{{0}}, {}}, {0}, GradedSemigroup::Provenance::sum), ValidationError);
}

TEST_CASE("Hilbert function examples") {
  auto c = from_subspace(cusp(), TermOrder::lex(1), 4);
  CHECK(hilbert_function(c, 4) == 12);
  auto sq = from_generators(unit_square, 6);
  for (unsigned k = 1; k <= 6; ++k) CHECK(hilbert_function(sq, k) == (k + 1) * (k + 1));
  auto simplex = from_subspace(FunctionSubspace::span({LaurentPolynomial::constant(2, 1), mono({1, 0}), mono({0, 1})}),
                               TermOrder::grlex(2), 6);
  for (unsigned k = 1; k <= 6; ++k) CHECK(hilbert_function(simplex, k) == (k + 1) * (k + 2) / 2);
  CHECK_THROWS_AS(hilbert_function(c, 5), ValidationError);
}

TEST_CASE("difference lattice examples") {
  auto a = difference_lattice(from_subspace(cusp(), TermOrder::lex(1), 4));
  CHECK(a.rank == 1);
  CHECK(a.index == 1);
  auto b = difference_lattice(from_subspace(FunctionSubspace::monomials({{0}, {2}}), TermOrder::lex(1), 4));
  CHECK(b.rank == 1);
  CHECK(b.index == 2);
  auto c = difference_lattice(from_generators(unit_square, 3));
  CHECK(c.rank == 2);
  CHECK(c.index == 1);
  // rank-deficient: a line of slope 1 with step 2
  auto d = difference_lattice(from_generators({{0, 0}, {2, 2}}, 3));
  CHECK(d.rank == 1);
  CHECK(d.index == 2);
  CHECK(d.saturation.rows() == 1);
}

TEST_CASE("difference lattice index matches the gcd of maximal minors") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + trial % 3;
    auto m = gen::random_support(rng, n, n == 3 ? 4 : 5, -3, 3);
    auto g = from_generators(m, 2);
    auto lat = difference_lattice(g);
    auto [rank, index] = oracle::minor_gcd_index(differences(g), n);
    CHECK(lat.rank == rank);
    CHECK(lat.index == index);
    for (auto& v : differences(g)) CHECK(in_lattice(lat.basis, v));
  }
}

TEST_CASE("lattice membership") {
  IntegerMatrix b(2, 2);
  b(0, 0) = 2;
  b(0, 1) = 1;
  b(1, 1) = 3;
  CHECK(in_lattice(b, {2, 4}));
  CHECK(in_lattice(b, {0, -3}));
  CHECK_FALSE(in_lattice(b, {1, 0}));
  CHECK_FALSE(in_lattice(b, {2, 2}));
  CHECK(in_lattice(IntegerMatrix(0, 2), {0, 0}));
  CHECK_FALSE(in_lattice(IntegerMatrix(0, 2), {0, 1}));
}

TEST_CASE("Newton body examples") {
  CHECK(newton_body(from_subspace(FunctionSubspace::monomials({{0}, {1}}), TermOrder::lex(1), 3)) ==
        hull({point({0}), point({1})}));
  auto c = from_subspace(cusp(), TermOrder::lex(1), 6);
  CHECK(newton_body(c) == hull({point({0}), point({3})}));
  CHECK(newton_body_gap(c) == 0);
}

TEST_CASE("Newton body of a monomial space is conv(M) under every valid order") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = gen::random_support(rng, 2, 6, -2, 3);
    auto l = FunctionSubspace::monomials(m);
    for (auto& order : orders2())
      for (unsigned dmax : {1u, 3u}) {
        auto g = from_subspace(l, order, dmax);
        CHECK(newton_body(g) == conv(m));
        CHECK(newton_body_gap(g) == 0);
      }
  }
}

TEST_CASE("Newton body of a non-monomial space") {
  // L = span{1 + x, y} under lex: v(1 + x) = 0, v(y) = e2
  auto l = FunctionSubspace::span({LaurentPolynomial::constant(2, 1) + mono({1, 0}), mono({0, 1})});
  auto g = from_subspace(l, TermOrder::lex(2), 4);
  CHECK(newton_body(g) == hull({point({0, 0}), point({0, 1})}));
  // under the reversed order the leading term of 1 + x is x
  auto h = from_subspace(l, TermOrder({{-1, 0}, {0, -1}}), 4);
  CHECK(newton_body(h) == hull({point({1, 0}), point({0, 1})}));
}

TEST_CASE("Newton body gap is positive while the hull still grows") {
  // G(d) = {0, ..., 2d - 1}: the normalized hull grows toward [0, 2]
  std::vector<std::vector<ExponentVector>> sections;
  for (std::int64_t d = 1; d <= 8; ++d) sections.push_back(range1(0, 2 * d - 1));
  GradedSemigroup g(1, sections, {0}, GradedSemigroup::Provenance::from_generators);
  CHECK(additivity_violations(g).empty());
  CHECK(newton_body(g) == hull({{0}, {BigRational(15, 8)}}));
  CHECK(newton_body_gap(g) == doctest::Approx(0.125));
  std::vector<std::vector<ExponentVector>> thin;
  for (std::int64_t d = 1; d <= 8; ++d) thin.push_back({{0}, {d * d}});
  GradedSemigroup t(1, thin, {0}, GradedSemigroup::Provenance::from_generators);
  CHECK(newton_body_gap(t) == doctest::Approx(8.0 - 4.0));
}

TEST_CASE("Hilbert fit examples") {
  std::vector<std::size_t> tri, cubic, square;
  for (std::size_t d = 1; d <= 16; ++d) {
    tri.push_back((d + 1) * (d + 2) / 2);
    cubic.push_back(3 * d);
    square.push_back((d + 1) * (d + 1));
  }
  auto a = hilbert_fit(tri);
  CHECK(a.degree == 2);
  CHECK(a.converged);
  CHECK(*a.exact_coefficient == BigRational(1, 2));
  auto b = hilbert_fit(cubic);
  CHECK(b.degree == 1);
  CHECK(b.coefficient == 3.0);
  auto c = hilbert_fit(square);
  CHECK(c.degree == 2);
  CHECK(c.coefficient == 1.0);
  CHECK_THROWS_AS(hilbert_fit(std::vector<std::size_t>{1, 2, 3}), ValidationError);

  // eventually polynomial only past the window start: fallback path
  std::vector<std::size_t> wobble;
  for (std::size_t d = 1; d <= 16; ++d) wobble.push_back(d * d + d % 2);
  auto w = hilbert_fit(wobble);
  CHECK_FALSE(w.converged);
  CHECK(w.degree == 2);
  CHECK(w.coefficient == doctest::Approx(1.0).epsilon(0.05));

  auto cg = hilbert_fit(from_subspace(cusp(), TermOrder::lex(1), 12));
  CHECK(cg.degree == 1);
  CHECK(*cg.exact_coefficient == 3);
}

TEST_CASE("fit coefficient times index times k! matches the lattice volume") {
  std::mt19937_64 rng(35);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + trial % 2;
    auto m = gen::random_support(rng, n, 6, 0, n == 1 ? 9 : 3);
    auto g = from_generators(m, 24);
    auto lat = difference_lattice(g);
    auto body = newton_body(g);
    CHECK(body == conv(m));
    if (lat.rank == 0) continue;
    auto fit = hilbert_fit(g);
    CHECK(fit.degree == lat.rank);
    double lhs = fit.coefficient * lat.index.get_d() * factorial(static_cast<unsigned>(lat.rank)).get_d();
    double rhs = body.lattice_volume().get_d();
    CHECK(std::abs(lhs - rhs) <= 0.05 * rhs);
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("oplus_t") {
  auto g = from_subspace(FunctionSubspace::monomials({{0}, {1}}), TermOrder::lex(1), 4);
  auto s = oplus_t(g, g);
  for (unsigned d = 1; d <= 4; ++d) CHECK(s.section(d) == range1(0, 2 * d));
  CHECK(s.provenance() == GradedSemigroup::Provenance::sum);
  CHECK_THROWS_AS(oplus_t(g, from_generators(unit_square, 2)), ValidationError);
}

TEST_CASE("oplus_t of two value semigroups sits inside the product semigroup") {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<LaurentPolynomial> p1, p2;
    for (int i = 0; i < 2; ++i) p1.push_back(gen::random_poly(rng, 2, 3, 0, 2));
    for (int i = 0; i < 2; ++i) p2.push_back(gen::random_poly(rng, 2, 2, -1, 1));
    auto l1 = FunctionSubspace::span(p1), l2 = FunctionSubspace::span(p2);
    auto order = TermOrder::grlex(2);
    auto g1 = from_subspace(l1, order, 3), g2 = from_subspace(l2, order, 3);
    auto prod = from_subspace(subspace_product(l1, l2), order, 3);
    auto sum = oplus_t(g1, g2);
    for (unsigned d = 1; d <= 3; ++d)
      for (auto& x : sum.section(d)) CHECK(prod.contains(d, x));
    auto body = newton_body(sum);
    auto mink = minkowski_sum(newton_body(g1), newton_body(g2));
    for (auto& v : body.vertices()) CHECK(mink.contains(v));
  }
}

TEST_CASE("oplus_t of monomial semigroups: bodies add exactly") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    auto m1 = gen::random_support(rng, 2, 4, -2, 2), m2 = gen::random_support(rng, 2, 4, -2, 2);
    auto l1 = FunctionSubspace::monomials(m1), l2 = FunctionSubspace::monomials(m2);
    auto order = TermOrder::lex(2);
    auto sum = oplus_t(from_subspace(l1, order, 3), from_subspace(l2, order, 3));
    auto prod = from_subspace(subspace_product(l1, l2), order, 3);
    CHECK(sum.sections() == prod.sections());
    CHECK(newton_body(sum) == minkowski_sum(conv(m1), conv(m2)));
  }
}

TEST_CASE("regularization examples") {
  auto a = regularization_constant({{0}, {2}, {3}}, 10);
  CHECK(a.p == 2);
  REQUIRE(a.gaps.size() == 10);
  for (auto& w : a.gaps) {
    CHECK(w.point == ExponentVector{1});
    CHECK(w.slack == 1);
  }
  CHECK(regularization_constant({{0}, {1}}, 10).p == 0);
  auto even = regularization_constant({{0}, {2}}, 10);
  CHECK(even.p == 0);
  CHECK(even.gaps.empty());
  CHECK(regularization_constant({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 6).p == 0);
  CHECK_THROWS_AS(regularization_constant({{0}, {1}}, 13), ValidationError);
  CHECK_THROWS_AS(regularization_constant({{0, 0, 0}}, 3), ValidationError);
}

TEST_CASE("regularization gaps agree with a k-sum recursion in one dimension") {
  std::mt19937_64 rng(38);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = gen::random_support(rng, 1, 5, 0, 9);
    std::vector<std::int64_t> flat;
    for (auto& e : a) flat.push_back(e[0]);
    auto rep = regularization_constant(a, 8);
    std::int64_t lo = *std::min_element(flat.begin(), flat.end());
    std::int64_t hi = *std::max_element(flat.begin(), flat.end());
    std::int64_t step = 0;
    for (auto x : flat) step = std::gcd(step, x - lo);
    std::size_t expected_p = 0, expected_count = 0;
    for (unsigned k = 1; k <= 8; ++k) {
      auto sums = oracle::k_sums(flat, k);
      for (std::int64_t x = k * lo; x <= k * hi; ++x) {
        if (step == 0 || (x - k * lo) % step != 0 || sums.count(x)) continue;
        ++expected_count;
        std::int64_t slack = std::min(x - k * lo, k * hi - x);
        expected_p = std::max<std::size_t>(expected_p, static_cast<std::size_t>(slack) + 1);
      }
    }
    CHECK(rep.p == expected_p);
    CHECK(rep.gaps.size() == expected_count);
  }
}

TEST_CASE("regularization constant makes deep points sums in two dimensions") {
  std::mt19937_64 rng(39);
  for (int trial = 0; trial < 15; ++trial) {
    auto a = gen::random_support(rng, 2, 5, 0, 3);
    auto rep = regularization_constant(a, 6);
    for (auto& w : rep.gaps) CHECK(w.slack < static_cast<long>(rep.p));
    auto g = from_generators(a, 6);
    for (auto& w : rep.gaps) CHECK_FALSE(g.contains(w.k, w.point));
  }
}

TEST_CASE("approximation residuals") {
  auto sq = from_generators(unit_square, 5);
  for (auto& r : residual_trend(sq, approximation_spec(sq))) {
    CHECK(std::isinf(r.residual));
    CHECK(r.missing == 0);
  }
  auto c = from_subspace(cusp(), TermOrder::lex(1), 10);
  auto spec = approximation_spec(c);
  for (auto& r : residual_trend(c, spec)) {
    CHECK(r.residual <= 2.0);
    CHECK(r.missing == 1);
  }
  auto rd = residual_trend(c, spec);
  CHECK(rd.back().residual / 10 < rd[1].residual / 2);

  auto even = from_subspace(FunctionSubspace::monomials({{0}, {2}}), TermOrder::lex(1), 8);
  for (auto& r : residual_trend(even, approximation_spec(even))) CHECK(std::isinf(r.residual));

  // a segment in the plane: distance measured inside the line
  auto seg = from_generators({{0, 0}, {2, 2}, {3, 3}}, 4);
  auto r = approximation_residual(seg, approximation_spec(seg), 3);
  CHECK(r.missing == 1);
  CHECK(r.residual == doctest::Approx(std::sqrt(2.0)));
  CHECK_THROWS_AS(approximation_residual(seg, approximation_spec(seg), 5), ValidationError);
}

TEST_CASE("diagnostics") {
  auto c = diagnose(from_subspace(cusp(), TermOrder::lex(1), 12));
  CHECK(c.rank == 1);
  CHECK(c.index == 1);
  CHECK(c.anchor == ExponentVector{0});
  CHECK(c.newton_body == hull({point({0}), point({3})}));
  REQUIRE(c.fit);
  CHECK(c.fit->degree == c.rank);
  REQUIRE(c.regularization);
  CHECK(c.regularization->p == 2);
  auto small = diagnose(from_generators(unit_square, 3));
  CHECK_FALSE(small.fit);
}
