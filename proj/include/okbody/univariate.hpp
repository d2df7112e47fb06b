#pragma once

#include "okbody/rational.hpp"

#include <vector>

namespace okbody {

// Dense univariate polynomial over Q; coeffs[i] multiplies x^i.
// The coefficient vector never ends in a zero.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigRational> coeffs);
  static UniPoly constant(const BigRational& c);
  static UniPoly monomial(const BigRational& c, unsigned degree);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigRational& leading() const { return coeffs_.back(); }
  BigRational coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : BigRational(0); }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  BigRational evaluate(const BigRational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
  void trim();
  std::vector<BigRational> coeffs_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// Lagrange/Newton interpolation through (xs[i], ys[i]); xs distinct.
UniPoly interpolate(const std::vector<BigRational>& xs, const std::vector<BigRational>& ys);

} // namespace okbody
