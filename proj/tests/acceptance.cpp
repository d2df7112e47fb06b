// One line per acceptance criterion; exit status 1 if any is red.

#include "generators.hpp"
#include "okbody/inequalities.hpp"
#include "okbody/lattice.hpp"
#include "okbody/okounkov.hpp"
#include "okbody/sagbi.hpp"
#include "okbody/semigroup.hpp"
#include "okbody/valuation.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace okbody;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

using Criterion = std::function<void(Outcome&)>;

const std::vector<ExponentVector> unit_square{{0, 0}, {1, 0}, {0, 1}, {1, 1}};

Polytope hull_of(const std::vector<ExponentVector>& pts) {
  std::vector<RationalPoint> rp;
  for (auto& e : pts) rp.emplace_back(e.begin(), e.end());
  return hull(rp);
}

void ac1(Outcome& o) {
  auto rep = okounkov_pipeline(VarietyModel::torus(2), FunctionSubspace::monomials(unit_square), TermOrder::lex(2), 16);
  o.require(rep.body == hull_of(unit_square), "body is the unit square");
  o.require(rep.index == 1, "index 1");
  o.require(rep.fit.has_value() && std::abs(rep.fit->coefficient - 1.0) <= 0.05, "fit within 5% of 1");
  o.require(rep.prediction == 2, "prediction 2");
  std::size_t agree = 0;
  for (auto& s : sampled_root_counts(unit_square, unit_square, 20, 1))
    agree += s.count && *s.count == 2;
  o.require(agree == 20, "resultant oracle 20/20");
  o.detail << "c=" << (rep.fit ? rep.fit->coefficient : 0.0) << " prediction=" << to_string(rep.prediction)
           << " oracle=" << agree << "/20";
}

void ac2(Outcome& o) {
  std::size_t ok = 0;
  for (std::int64_t d1 = 1; d1 <= 4; ++d1)
    for (std::int64_t d2 = 1; d2 <= 4; ++d2) {
      std::vector<ExponentVector> s1{{0, 0}, {d1, 0}, {0, d1}}, s2{{0, 0}, {d2, 0}, {0, d2}};
      bool good = bernstein_count({s1, s2}) == d1 * d2;
      o.require(good, "d1=" + std::to_string(d1) + " d2=" + std::to_string(d2));
      ok += good;
    }
  o.detail << ok << "/16 exact";
}

void ac3(Outcome& o) {
  auto t = LaurentPolynomial::variable(1, 0);
  auto model = VarietyModel::parametrized(1, {RationalFunction(t.pow(2)), RationalFunction(t.pow(3))});
  std::vector<LaurentPolynomial> exprs{LaurentPolynomial::constant(2, 1), LaurentPolynomial::variable(2, 0),
                                       LaurentPolynomial::variable(2, 1)};
  auto rep = okounkov_pipeline(model, exprs, TermOrder::lex(1), 12);
  o.require(rep.body == hull({{BigRational(0)}, {BigRational(3)}}), "body [0, 3]");
  bool dims = rep.hilbert.size() == 12;
  for (std::size_t k = 1; dims && k <= 12; ++k) dims = rep.hilbert[k - 1] == 3 * k;
  o.require(dims, "dim L^k = 3k");
  o.require(rep.prediction == 3, "prediction 3");
  o.detail << "body=[" << to_string(rep.body.vertices().front()) << ", " << to_string(rep.body.vertices().back())
           << "] prediction=" << to_string(rep.prediction);
}

void ac4(Outcome& o) {
  auto a = regularization_constant({{0}, {2}, {3}}, 10);
  auto b = regularization_constant({{0}, {1}}, 10);
  o.require(a.p == 2, "P({0,2,3}) = 2");
  o.require(b.p == 0, "P({0,1}) = 0");
  o.detail << "P({0,2,3})=" << a.p << " P({0,1})=" << b.p;
}

void ac5(Outcome& o) {
  auto gap_at = [](const Polytope& p, std::uint64_t lambda, BigRational* ratio) {
    auto count = count_lattice_points(p.scaled(BigRational(static_cast<unsigned long>(lambda))));
    *ratio = BigRational(static_cast<unsigned long>(count)) / BigRational(static_cast<unsigned long>(lambda * lambda));
    BigRational gap = *ratio - p.volume();
    return gap < 0 ? BigRational(-gap) : gap;
  };
  BigRational r1, r2;
  auto g1 = gap_at(hull_of(unit_square), 100, &r1);
  auto g2 = gap_at(hull_of({{0, 0}, {1, 0}, {0, 1}}), 100, &r2);
  o.require(r1 == make_rational(10201, 10000), "square ratio 1.0201");
  o.require(g1 == make_rational(201, 10000) && g1 < make_rational(3, 100), "square gap 0.0201 < 0.03");
  o.require(g2 < make_rational(2, 100), "triangle gap < 0.02");
  o.detail << "square " << to_string(r1) << " gap " << g1.get_d() << "; triangle gap " << g2.get_d();
}

void ac6(Outcome& o) {
  auto segment = hull({{BigRational(0)}, {BigRational(1)}});
  auto x1 = LaurentPolynomial::variable(1, 0);
  BigRational s1 = sum_over_lattice(segment, x1, 100) / BigRational(100 * 100);
  o.require(s1 == make_rational(505, 1000), "segment 0.505");
  auto tri = hull_of({{0, 0}, {1, 0}, {0, 1}});
  auto x2 = LaurentPolynomial::variable(2, 0);
  BigRational s2 = sum_over_lattice(tri, x2, 50) / BigRational(50 * 50 * 50);
  double gap = std::abs(BigRational(s2 - make_rational(1, 6)).get_d());
  o.require(gap < 0.02, "triangle gap < 0.02");
  o.detail << "segment " << to_string(s1) << "; triangle " << to_string(s2) << " gap " << gap;
}

void ac7(Outcome& o) {
  auto two = inequality_suite(2, 1000, 7001);
  auto three = inequality_suite(3, 100, 7002);
  auto pairs2 = inequality_suite(2, 0, 7003, 25);
  auto pairs3 = inequality_suite(3, 0, 7004, 25);
  for (auto* r : {&two, &three, &pairs2, &pairs3}) {
    std::string tag = "n=" + std::to_string(r->n);
    o.require(r->af_failures == 0, tag + " AF");
    o.require(r->bm_failures == 0, tag + " BM");
    o.require(r->chain_failures == 0, tag + " cube chain");
    o.require(r->homothety_misses == 0, tag + " homothetic equality");
  }
  o.detail << "AF/BM/chain on 1000 (n=2) + 100 (n=3), 50 homothetic pairs; min AF slack n=2 " << two.min_af_slack
           << ", n=3 " << three.min_af_slack;
}

void ac8(Outcome& o) {
  std::mt19937_64 rng(8008);
  std::size_t hodge = 0, concave = 0, total = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto m1 = gen::random_support(rng, 2, 6, 0, 4);
    auto m2 = gen::random_support(rng, 2, 6, 0, 4);
    auto a = algebraic_analogues_check(m1, m2, 6);
    bool h = a.hodge.exact && a.hodge.holds;
    bool lc = true;
    for (unsigned m = 2; m <= 6; ++m) lc = lc && algebraic_analogues_check(m1, m2, m).log_concave;
    hodge += h;
    concave += lc;
    ++total;
  }
  o.require(hodge == total, "Hodge index form");
  o.require(concave == total, "log-concavity m <= 6");
  o.detail << "Hodge " << hodge << "/" << total << ", log-concave " << concave << "/" << total;
}

void ac9(Outcome& o) {
  std::mt19937_64 rng(9009);
  const std::vector<TermOrder> orders{TermOrder::lex(2), TermOrder::grlex(2),
                                      TermOrder(std::vector<std::vector<std::int64_t>>{{2, 3}, {0, 1}}),
                                      TermOrder(std::vector<std::vector<std::int64_t>>{{-1, 1}, {1, 0}})};
  std::size_t mult = 0, ultra = 0;
  for (int trial = 0; trial < 500; ++trial) {
    auto& order = orders[trial % orders.size()];
    auto f = gen::random_rational(rng, 2), g = gen::random_rational(rng, 2);
    auto vf = value_of_rational(order, f), vg = value_of_rational(order, g);
    mult += value_of_rational(order, f * g) == vf + vg;
    auto s = f + g;
    if (s.is_zero()) {
      ++ultra;
      continue;
    }
    auto vs = value_of_rational(order, s);
    auto lo = order.less(vf, vg) ? vf : vg;
    ultra += order.compare(vs, lo) >= 0 && (vf == vg || vs == lo);
  }
  std::size_t dims = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RationalFunction> fs;
    std::size_t count = 1 + rng() % 6;
    for (std::size_t i = 0; i < count; ++i) fs.push_back(gen::random_rational(rng, 2));
    dims += echelonize(orders[trial % orders.size()], FunctionSubspace::span(fs)).size() == gen::dense_rank(fs);
  }
  o.require(mult == 500, "multiplicativity");
  o.require(ultra == 500, "ultrametric");
  o.require(dims == 200, "|echelonize| = dim");
  o.detail << "multiplicative " << mult << "/500, ultrametric " << ultra << "/500, echelon size " << dims << "/200";
}

void ac10(Outcome& o) {
  auto x = LaurentPolynomial::variable(2, 0), y = LaurentPolynomial::variable(2, 1);
  SagbiInstance inst{{x + y, x * y}, TermOrder::lex(2), 8};
  auto rep = sagbi_check(inst);
  o.require(rep.sagbi_up_to_bound, "sagbi at bound 8");
  auto f = x * x + y * y;
  auto r = subduction(f, inst);
  o.require(r.remainder.is_zero(), "x^2 + y^2 subducts to 0");
  o.require(expand_trace(r.trace, inst.generators) == f, "trace re-expands");
  auto rx = subduction(x, inst);
  o.require(!rx.remainder.is_zero(), "x leaves a remainder");
  o.detail << "values " << rep.values.size() << ", trace terms " << r.trace.size() << ", x -> "
           << to_string(rx.status);
}

} // namespace

int main() {
  struct Entry {
    const char* id;
    const char* name;
    double limit_s;
    Criterion run;
  };
  const std::vector<Entry> entries{
      {"AC1", "Kushnirenko consistency", 10, ac1}, {"AC2", "Bernstein/Bezout", 1, ac2},
      {"AC3", "curve body", 5, ac3},              {"AC4", "regularization", 1, ac4},
      {"AC5", "lattice asymptotics", 5, ac5},     {"AC6", "Riemann sums", 5, ac6},
      {"AC7", "inequality suites", 60, ac7},      {"AC8", "algebraic analogues", 30, ac8},
      {"AC9", "valuation laws", 30, ac9},         {"AC10", "SAGBI", 10, ac10},
  };
  int failed = 0;
  for (auto& e : entries) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      e.run(o);
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail << " [exception: " << ex.what() << "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > e.limit_s) {
      o.pass = false;
      o.detail << " [over time limit " << e.limit_s << " s]";
    }
    failed += !o.pass;
    std::printf("%-4s %s  %s: %s (%.2f s)\n", e.id, o.pass ? "PASS" : "FAIL", e.name, o.detail.str().c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(entries.size()) - failed, entries.size());
  return failed ? 1 : 0;
}
