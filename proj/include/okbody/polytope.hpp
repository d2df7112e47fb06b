#pragma once

#include "okbody/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace okbody {

using RationalPoint = std::vector<BigRational>;

std::string to_string(const RationalPoint& p);

// normal . x <= offset for facets, normal . x = offset for equations.
// Normals are primitive integer vectors.
struct Halfspace {
  std::vector<BigInt> normal;
  BigRational offset;

  BigRational evaluate(const RationalPoint& x) const; // normal . x
};

inline constexpr std::size_t max_polytope_arity = 4;

// Convex hull of finitely many rational points in R^n, n <= 4, computed
// exactly at construction. For a k-dimensional body with k < n the facets
// are relative: they are valid inequalities whose restriction to the
// affine hull (given by the equations) cuts out the body.
class Polytope {
public:
  struct BoundaryPiece {
    std::size_t facet = 0;             // index into facets()
    std::vector<RationalPoint> simplex; // k points on that facet
  };

  Polytope() = default;
  // Throws ValidationError on an empty list, ragged points or arity > 4.
  static Polytope hull(const std::vector<RationalPoint>& points);

  std::size_t arity() const { return arity_; }
  std::size_t affine_dimension() const { return dim_; }
  bool full_dimensional() const { return dim_ == arity_; }

  // Extreme points, sorted lexicographically.
  const std::vector<RationalPoint>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  const std::vector<Halfspace>& equations() const { return equations_; }
  // Simplices (k+1 points each) triangulating the body.
  const std::vector<std::vector<RationalPoint>>& cells() const { return cells_; }
  const std::vector<BoundaryPiece>& boundary() const { return boundary_; }

  bool contains(const RationalPoint& x) const;

  // Euclidean n-volume; 0 when the body is lower dimensional.
  const BigRational& volume() const { return volume_; }
  // k! times the k-volume measured in the lattice (direction of aff P) cap Z^n.
  const BigRational& lattice_volume() const { return lattice_volume_; }

  Polytope scaled(const BigRational& s) const;
  Polytope translated(const RationalPoint& v) const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.arity_ == b.arity_ && a.vertices_ == b.vertices_;
  }

private:
  std::size_t arity_ = 0;
  std::size_t dim_ = 0;
  std::vector<RationalPoint> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<Halfspace> equations_;
  std::vector<std::vector<RationalPoint>> cells_;
  std::vector<BoundaryPiece> boundary_;
  BigRational volume_;
  BigRational lattice_volume_;
};

Polytope hull(const std::vector<RationalPoint>& points);
BigRational volume(const Polytope& p);
Polytope minkowski_sum(const Polytope& p, const Polytope& q);
// Polarization formula over all nonempty subsets; bodies.size() == arity.
BigRational mixed_volume(const std::vector<Polytope>& bodies);

struct MetricReport {
  double diameter = 0;
  double inradius = 0;
  std::vector<double> incenter;
  double stretch_ratio = 0;
};

// Requires a full-dimensional body (DomainError otherwise).
MetricReport metric_report(const Polytope& p);

struct FloatPolytope {
  std::size_t arity = 0;
  bool empty = true;
  std::vector<std::vector<double>> vertices;
  double volume = 0;
};

// Points at distance >= r from the boundary: every facet moved inward by r.
FloatPolytope inner_parallel_body(const Polytope& p, double r);

// Perimeter (n = 2) or surface area (n = 3).
double boundary_measure(const Polytope& p);

} // namespace okbody
