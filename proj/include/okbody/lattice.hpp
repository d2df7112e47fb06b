#pragma once

#include "okbody/laurent.hpp"
#include "okbody/polytope.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace okbody {

inline constexpr std::uint64_t default_point_cap = 100000000;

// Integer points of P, sorted lexicographically. ResourceError beyond cap.
std::vector<ExponentVector> lattice_points(const Polytope& p, std::uint64_t cap = default_point_cap);
std::uint64_t count_lattice_points(const Polytope& p, std::uint64_t cap = default_point_cap);

// Unit cubes K_a = [a_1, a_1 + 1) x ... x [a_n, a_n + 1).
struct CubeClassification {
  std::size_t n1 = 0; // K_a inside P
  std::size_t n2 = 0; // K_a meets P but is not inside
  std::vector<ExponentVector> inside_anchors;
  std::vector<ExponentVector> boundary_anchors;
};

CubeClassification classify_cubes(const Polytope& p);

// f must be a polynomial (no negative exponents) of P's arity.
BigRational sum_over_lattice(const Polytope& p, const LaurentPolynomial& f, std::uint64_t lambda,
                             std::uint64_t cap = default_point_cap);
// Exact for deg f <= 2 on full-dimensional P; ValidationError otherwise.
BigRational integral_over_polytope(const Polytope& p, const LaurentPolynomial& f);

struct RiemannStep {
  std::uint64_t lambda = 0;
  BigRational sum;        // sum of f over lambda P
  BigRational normalized; // sum / lambda^(alpha + n)
  double gap = 0;         // |normalized - integral|
};

struct RiemannReport {
  unsigned alpha = 0; // degree of the top homogeneous component
  BigRational integral; // integral over P of the top component
  std::vector<RiemannStep> steps;
  double tolerance = 0;
  bool monotone = true; // gaps never increase along the schedule
  bool passed = false;  // final gap < tolerance
};

// Default tolerance: 3 * boundary_measure(P) / lambda_max (for n = 1 the
// boundary measure is the number of endpoints, 2).
RiemannReport riemann_limit_check(const Polytope& p, const LaurentPolynomial& f,
                                  const std::vector<std::uint64_t>& lambdas,
                                  std::optional<double> tolerance = std::nullopt,
                                  std::uint64_t cap = default_point_cap);

} // namespace okbody
