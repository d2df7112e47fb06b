#pragma once

#include "okbody/laurent.hpp"
#include "okbody/polytope.hpp"
#include "okbody/semigroup.hpp"
#include "okbody/valuation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace okbody {

struct OkounkovReport {
  std::string model;
  std::string subspace;
  unsigned d_max = 0;
  std::size_t dimension = 0; // n, dimension of the variety
  Polytope body;
  std::size_t rank = 0;
  BigInt index = 1;
  std::vector<std::size_t> hilbert; // H(d), d = 1..d_max
  std::optional<HilbertFit> fit;
  double newton_gap = 0;
  BigRational mapping_degree = 1; // p(L), user supplied
  BigRational prediction;         // n! V_n(body) p / ind, 0 when rank < n
  double prediction_float = 0;
  std::optional<double> hilbert_prediction; // n! c p
  std::optional<double> relative_gap;       // |n! c ind - n! V| / (n! V)
  bool degenerate = false;                  // rank < n
  bool consistent = false;
  std::vector<std::string> notes;
};

inline constexpr double consistency_tolerance = 0.05;

// exprs are written in the model's coordinates and pulled back.
OkounkovReport okounkov_pipeline(const VarietyModel& model, const std::vector<LaurentPolynomial>& exprs,
                                 const TermOrder& order, unsigned d_max, const BigRational& p = 1,
                                 std::size_t cap = default_dimension_cap);
OkounkovReport okounkov_pipeline(const VarietyModel& model, const FunctionSubspace& l,
                                 const TermOrder& order, unsigned d_max, const BigRational& p = 1,
                                 std::size_t cap = default_dimension_cap);

struct KushnirenkoResult {
  BigRational count;           // n! Vol(conv M)
  std::size_t rank = 0;        // rank of the lattice of differences of M
  std::optional<BigInt> index; // its index in Z^n when rank = n
};

// n <= 4.
KushnirenkoResult kushnirenko_count(const std::vector<ExponentVector>& m);

// n! V(conv M1, ..., conv Mn); one support per coordinate, n <= 4.
BigRational bernstein_count(const std::vector<std::vector<ExponentVector>>& supports);

struct RootCount {
  std::optional<std::size_t> count; // empty when degenerate
  std::string reason;               // why the instance was rejected
};

// Common roots in (C*)^2 of bivariate Laurent f, g by exact elimination.
RootCount resultant_root_count(const LaurentPolynomial& f, const LaurentPolynomial& g);

struct RootCountSample {
  std::uint64_t seed = 0;
  std::optional<std::size_t> count;
  unsigned attempts = 0;
};

inline constexpr unsigned max_resamples = 50;

// Random coefficients in [-50, 50] \ {0} on the given supports; sample i is
// drawn from seed + i and resampled on degeneracy up to max_resamples times.
std::vector<RootCountSample> sampled_root_counts(const std::vector<ExponentVector>& m1,
                                                 const std::vector<ExponentVector>& m2,
                                                 unsigned samples, std::uint64_t seed);

struct CurveSection {
  unsigned k = 0;
  std::vector<std::int64_t> low_gaps;  // below k s / 2
  std::vector<std::int64_t> high_gaps; // at or above k s / 2
};

struct CurveReport {
  BigRational segment_low, segment_high; // Newton segment
  BigRational length;
  std::size_t index = 1;                     // of the value group in Z
  std::optional<BigRational> hilbert_slope;  // exact when H is eventually linear
  std::optional<BigRational> degree;         // slope times mapping degree
  std::optional<BigRational> hilbert_constant; // H(k) = slope k + C on the fit window
  std::vector<std::size_t> dimensions;       // dim L^k, k = 1..d_max
  std::vector<CurveSection> sections;
  std::int64_t c0 = 0;                       // 1 + largest low gap over all k
  std::vector<std::int64_t> c1;              // per k: k s - smallest high gap + 1, or 0
  std::optional<bool> divisible_by_mu;       // every section value divisible by mu_a
  std::optional<bool> index_matches_mu;      // index == mu_a
  std::optional<bool> length_identity;       // length * d / mu_a == degree
  std::optional<unsigned> boundary_ray_hit;  // smallest k with k s in G(k)
  bool gaps_confined = false;                // low offsets stop growing, c1(k)/k shrinks
  std::vector<std::string> notes;
};

struct CurveOptions {
  BigRational point = 0;               // valuation = order of vanishing at t = point
  std::optional<std::int64_t> mu;      // local mapping degree at the point
  std::optional<BigRational> degree;   // mapping degree d of Phi_L
};

// Requires a one-parameter model and d_max >= 8.
CurveReport curve_report(const VarietyModel& model, const std::vector<LaurentPolynomial>& exprs,
                         unsigned d_max, const CurveOptions& options = {},
                         std::size_t cap = default_dimension_cap);

} // namespace okbody
