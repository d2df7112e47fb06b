#pragma once

#include "okbody/laurent.hpp"
#include "okbody/matrix.hpp"
#include "okbody/polytope.hpp"
#include "okbody/valuation.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace okbody {

// Finite truncation of a graded subsemigroup of Z x Z^n: sections G(d)
// for 1 <= d <= d_max, each a nonempty sorted set of exponent vectors.
class GradedSemigroup {
public:
  enum class Provenance { from_subspace, from_generators, sum };

  GradedSemigroup() = default;
  // Throws ValidationError on an empty section or ragged exponents.
  GradedSemigroup(std::size_t arity, std::vector<std::vector<ExponentVector>> sections,
                  ExponentVector anchor, Provenance provenance);

  std::size_t arity() const { return arity_; }
  unsigned d_max() const { return static_cast<unsigned>(sections_.size()); }
  // 1 <= d <= d_max, otherwise ValidationError.
  const std::vector<ExponentVector>& section(unsigned d) const;
  const std::vector<std::vector<ExponentVector>>& sections() const { return sections_; }
  // Distinguished element of G(1).
  const ExponentVector& anchor() const { return anchor_; }
  Provenance provenance() const { return provenance_; }
  bool contains(unsigned d, const ExponentVector& m) const;

private:
  std::size_t arity_ = 0;
  std::vector<std::vector<ExponentVector>> sections_;
  ExponentVector anchor_;
  Provenance provenance_ = Provenance::from_generators;
};

std::string to_string(GradedSemigroup::Provenance p);

// G(d) = v(L^d \ 0). The anchor is the order-minimal value of L.
GradedSemigroup from_subspace(const FunctionSubspace& l, const TermOrder& order, unsigned d_max,
                              std::size_t cap = default_dimension_cap);
// G(d) = d*A (d-fold sumset). Anchor = lexicographically smallest element of A.
GradedSemigroup from_generators(const std::vector<ExponentVector>& a, unsigned d_max);

std::vector<ExponentVector> sumset(const std::vector<ExponentVector>& a,
                                   const std::vector<ExponentVector>& b);

std::size_t hilbert_function(const GradedSemigroup& g, unsigned d);

// Pairs (d1, d2) with d1 + d2 <= d_max whose sumset escapes G(d1 + d2);
// empty when the stored data is additive.
std::vector<std::pair<unsigned, unsigned>> additivity_violations(const GradedSemigroup& g);

struct DifferenceLattice {
  std::size_t rank = 0;
  BigInt index = 1;         // [M : T], M = saturation of T
  IntegerMatrix basis;      // basis of T, rank rows
  IntegerMatrix saturation; // basis of M, rank rows
  bool full_rank(std::size_t n) const { return rank == n; }
};

// T generated by m - d*anchor over all stored (d, m).
DifferenceLattice difference_lattice(const GradedSemigroup& g);

// Membership test for the row lattice of an echelon integer basis.
bool in_lattice(const IntegerMatrix& echelon_basis, ExponentVector v);

// Hull of m/d over all stored (d, m).
Polytope newton_body(const GradedSemigroup& g);
// Support-function gap between the hulls built from d <= d_max and from
// d <= floor(d_max/2), maximized over the facet normals of both (unit
// normalized). 0 when d_max < 2.
double newton_body_gap(const GradedSemigroup& g);

struct HilbertFit {
  unsigned degree = 0;                    // m
  double coefficient = 0;                 // c, H(d) ~ c d^m
  std::optional<BigRational> exact_coefficient; // when H is polynomial on the window
  bool converged = false;                 // difference table stabilized
  unsigned window_start = 0;              // first d of the window used
};

// Exact finite differences of H on [ceil(d_max/2), d_max]; the smallest j
// whose j-th differences are constant there gives m = j and c = diff/j!.
// Otherwise m is estimated from log H(d_max)/H(d_max/2) and c is a
// Richardson extrapolation, with converged = false.
// Requires d_max >= 8.
HilbertFit hilbert_fit(const GradedSemigroup& g);
HilbertFit hilbert_fit(const std::vector<std::size_t>& h); // h[d-1] = H(d)

// Pointwise sumsets over the common degree range.
GradedSemigroup oplus_t(const GradedSemigroup& g1, const GradedSemigroup& g2);

struct GapWitness {
  unsigned k = 0;
  ExponentVector point;
  BigInt slack; // lattice steps to the nearest facet of k*conv(A)
};

struct RegularizationReport {
  std::size_t p = 0;
  unsigned k_max = 0;
  std::vector<GapWitness> gaps; // every point of k conv(A) cap (k a0 + T) missing from k*A
};

// Smallest P such that for all k <= k_max every point of k*conv(A) in
// k*a0 + T whose facet-wise integer slack is >= P lies in k*A. Slack of x
// is the minimum over facets (normal primitive) of k*offset - normal.x.
// Requires |A| <= 8, arity <= 2, k_max <= 12.
RegularizationReport regularization_constant(const std::vector<ExponentVector>& a, unsigned k_max);

// Model semigroup M: the cone over `body` intersected with d*anchor + T.
struct ApproximationSpec {
  Polytope body;
  IntegerMatrix lattice; // echelon basis of T
  ExponentVector anchor;
};

ApproximationSpec approximation_spec(const GradedSemigroup& g);

struct ResidualPoint {
  unsigned d = 0;
  double residual = 0; // +inf when M(d) = G(d)
  std::size_t missing = 0;
};

// Euclidean distance (within the affine span) from the nearest point of
// M(d) \ G(d) to the boundary of d*body. Requires d <= d_max.
ResidualPoint approximation_residual(const GradedSemigroup& g, const ApproximationSpec& spec,
                                     unsigned d);
std::vector<ResidualPoint> residual_trend(const GradedSemigroup& g, const ApproximationSpec& spec);

struct SemigroupDiagnostics {
  std::size_t rank = 0;
  BigInt index = 1;
  ExponentVector anchor;
  Polytope newton_body;
  double newton_gap = 0;
  std::optional<HilbertFit> fit; // absent when d_max < 8
  // absent when G(1) is outside the brute-force limits of regularization
  std::optional<RegularizationReport> regularization;
};

SemigroupDiagnostics diagnose(const GradedSemigroup& g);

} // namespace okbody
