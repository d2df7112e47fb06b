#pragma once

#include "okbody/laurent.hpp"
#include "okbody/polytope.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace okbody {

// lhs <= rhs style verdict. Exact checks fill the rationals; toleranced
// checks fill only the floats.
struct Verdict {
  bool holds = false;
  bool equality = false;
  bool exact = true;
  std::optional<BigRational> lhs, rhs;
  double lhs_float = 0, rhs_float = 0;
  double slack = 0; // rhs - lhs
};

inline constexpr double bm_tolerance = 1e-9;
inline constexpr double bm_equality_tolerance = 1e-12;

// V(A) V(B) <= V(A, B)^2, n = 2.
Verdict isoperimetric_check(const Polytope& a, const Polytope& b);

// A = lambda B + t for some lambda > 0 (exact). Two points are homothetic.
bool homothetic(const Polytope& a, const Polytope& b);

struct BrunnMinkowskiVerdict {
  Verdict verdict; // Vol(A)^(1/n) + Vol(B)^(1/n) <= Vol(A + B)^(1/n)
  bool homothetic = false;
};

// Exact for n = 2 (as V(A)V(B) <= V(A,B)^2), float with tolerance for n = 3, 4.
BrunnMinkowskiVerdict brunn_minkowski_check(const Polytope& a, const Polytope& b);

// V(D1, D1, D3..) V(D2, D2, D3..) <= V(D1, D2, D3..)^2; 2 <= n <= 4.
Verdict alexandrov_fenchel_check(const std::vector<Polytope>& bodies);

struct AfCorollaryParams {
  unsigned i = 1, m = 2; // (a), (c)
  unsigned k = 1, l = 1; // (d)
};

struct AfCorollaries {
  Verdict a, b, c, d;
};

// deltas has n bodies (n <= 3). (a) and (b) use deltas; (c) replaces the
// first m bodies by P (i times) and Q (m - i times); (d) replaces the first
// k + l by P (k) and Q (l). Each inequality is stated homogeneously, all
// powers taken exactly.
AfCorollaries af_corollaries_check(const Polytope& p, const Polytope& q, const std::vector<Polytope>& deltas,
                                   const AfCorollaryParams& params);

struct AlgebraicAnalogues {
  std::size_t n = 0;
  BigRational l1_self, l2_self, product_self; // [L..L] for L1, L2, L1L2
  Verdict brunn_minkowski;                    // [L1]^(1/n) + [L2]^(1/n) <= [L1L2]^(1/n)
  Verdict hodge;                              // [L1,L1,..][L2,L2,..] <= [L1,L2,..]^2
  std::vector<BigRational> degrees;           // a_k = deg(L1^k L2^(m-k)), k = 0..m
  bool log_concave = false;                   // a_k^2 >= a_(k-1) a_(k+1)
};

// Intersection indices of monomial spaces via n! mixed volumes; n <= 3.
// For n = 3 the Hodge-type check uses L1 L2 as the third space.
AlgebraicAnalogues algebraic_analogues_check(const std::vector<ExponentVector>& m1,
                                             const std::vector<ExponentVector>& m2, unsigned m = 4);

// n! Vol(k A + j B) by the binomial expansion in mixed volumes.
BigRational mixed_degree(const Polytope& a, const Polytope& b, unsigned k, unsigned j);

// Hull of 3..8 uniform lattice points in [0, 6]^n; with full_dimensional
// the draw is repeated until the hull is n-dimensional.
Polytope random_lattice_polytope(std::mt19937_64& rng, std::size_t n, bool full_dimensional);

struct SuiteReport {
  std::size_t n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t af_failures = 0;
  std::size_t bm_failures = 0;
  std::size_t chain_failures = 0; // N1 <= Vol <= N1 + N2
  std::size_t homothety_misses = 0; // homothetic pairs without detected equality
  double min_af_slack = 0;
  double min_bm_slack = 0;
  bool passed() const { return af_failures + bm_failures + chain_failures + homothety_misses == 0; }
};

// Random AF (n bodies) and BM (pairs) checks, plus the cube chain on every
// body; sample i is drawn from seed + i. homothetic_pairs extra BM
// equality checks on pairs (A, lambda A + t).
SuiteReport inequality_suite(std::size_t n, std::size_t samples, std::uint64_t seed,
                             std::size_t homothetic_pairs = 0);

} // namespace okbody
