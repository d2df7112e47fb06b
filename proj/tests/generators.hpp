#pragma once

// Seeded random instances shared by unit and acceptance tests.

#include "okbody/laurent.hpp"
#include "okbody/matrix.hpp"

#include <random>
#include <set>

namespace gen {

using namespace okbody;

inline LaurentPolynomial random_poly(std::mt19937_64& rng, std::size_t arity, int terms,
                                     int lo, int hi, bool allow_zero = false) {
  std::uniform_int_distribution<int> ex(lo, hi), co(-5, 5), nt(1, terms);
  for (;;) {
    LaurentPolynomial p(arity);
    int count = nt(rng);
    for (int i = 0; i < count; ++i) {
      ExponentVector e(arity);
      for (auto& x : e) x = ex(rng);
      p.add_term(e, make_rational(co(rng), 1 + static_cast<int>(rng() % 3)));
    }
    if (allow_zero || !p.is_zero()) return p;
  }
}

inline RationalFunction random_rational(std::mt19937_64& rng, std::size_t arity) {
  LaurentPolynomial num = random_poly(rng, arity, 4, -2, 3);
  LaurentPolynomial den = rng() % 3 == 0 ? LaurentPolynomial::constant(arity, 1)
                                         : random_poly(rng, arity, 3, 0, 2);
  return RationalFunction(num, den);
}

inline std::vector<ExponentVector> random_support(std::mt19937_64& rng, std::size_t arity,
                                                  std::size_t max_size, int lo, int hi) {
  std::uniform_int_distribution<int> ex(lo, hi);
  std::uniform_int_distribution<std::size_t> sz(1, max_size);
  std::set<ExponentVector> s;
  std::size_t target = sz(rng);
  while (s.size() < target) {
    ExponentVector e(arity);
    for (auto& x : e) x = ex(rng);
    s.insert(e);
  }
  return {s.begin(), s.end()};
}

// Dense rank of the coefficient matrix of polynomials (union of supports
// as columns).
inline std::size_t dense_rank(const std::vector<LaurentPolynomial>& polys) {
  std::set<ExponentVector> cols;
  for (auto& p : polys)
    for (auto& [e, c] : p.terms()) cols.insert(e);
  std::vector<ExponentVector> idx(cols.begin(), cols.end());
  RationalMatrix m(polys.size(), idx.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = polys[i].coefficient(idx[j]);
  return rref(m).rank;
}

// Rank of a list of rational functions after clearing to the product of
// their denominators.
inline std::size_t dense_rank(const std::vector<RationalFunction>& fs) {
  std::size_t arity = fs.front().arity();
  LaurentPolynomial common = LaurentPolynomial::constant(arity, 1);
  for (auto& f : fs) common = common * f.denominator();
  std::vector<LaurentPolynomial> polys;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    LaurentPolynomial p = fs[i].numerator();
    for (std::size_t j = 0; j < fs.size(); ++j)
      if (j != i) p = p * fs[j].denominator();
    polys.push_back(p);
  }
  return dense_rank(polys);
}

} // namespace gen

#include "okbody/polytope.hpp"

namespace gen {

inline RationalPoint point(std::initializer_list<long> xs) {
  RationalPoint p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

// Coordinates p/q with q in {1, 2, 3}.
inline RationalPoint random_rational_point(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
  RationalPoint p;
  for (std::size_t j = 0; j < n; ++j) p.push_back(make_rational(num(rng), den(rng)));
  return p;
}

// Hull of 3..8 uniform lattice points in [0, side]^n.
inline Polytope random_lattice_polytope(std::mt19937_64& rng, std::size_t n, bool full, int side = 6) {
  std::uniform_int_distribution<int> c(0, side), cnt(3, 8);
  for (;;) {
    std::vector<RationalPoint> pts;
    int count = cnt(rng);
    for (int i = 0; i < count; ++i) {
      RationalPoint p;
      for (std::size_t j = 0; j < n; ++j) p.emplace_back(c(rng));
      pts.push_back(std::move(p));
    }
    auto poly = Polytope::hull(pts);
    if (!full || poly.full_dimensional()) return poly;
  }
}

} // namespace gen
