#pragma once

#include "okbody/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace okbody {

using ExponentVector = std::vector<std::int64_t>;

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);
ExponentVector scaled(const ExponentVector& a, std::int64_t k);
std::string to_string(const ExponentVector& e);

class LaurentPolynomial {
public:
  using Terms = std::map<ExponentVector, BigRational>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::size_t arity) : arity_(arity) {}
  LaurentPolynomial(std::size_t arity, Terms terms);

  static LaurentPolynomial constant(std::size_t arity, const BigRational& c);
  static LaurentPolynomial monomial(const ExponentVector& e, const BigRational& c = 1);
  static LaurentPolynomial variable(std::size_t arity, std::size_t index);

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::vector<ExponentVector> support() const;
  BigRational coefficient(const ExponentVector& e) const;
  bool is_monomial() const { return terms_.size() == 1; }

  // Adds c * x^e, dropping the term if it cancels.
  void add_term(const ExponentVector& e, const BigRational& c);
  // this += c * x^shift * other
  void add_multiple(const LaurentPolynomial& other, const BigRational& c,
                    const ExponentVector* shift = nullptr);

  LaurentPolynomial shifted(const ExponentVector& e) const;
  LaurentPolynomial pow(unsigned k) const;
  ExponentVector min_exponent() const; // componentwise; requires nonzero
  ExponentVector max_exponent() const;

  // Requires nonzero values wherever a negative exponent occurs.
  BigRational evaluate(const std::vector<BigRational>& point) const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const BigRational& c);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const BigRational& c) { return a *= c; }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

private:
  std::size_t arity_ = 0;
  Terms terms_;
};

// Variables print as x0, x1, ... (or the names given).
std::string to_string(const LaurentPolynomial& p, const std::vector<std::string>& names = {});

class RationalFunction {
public:
  RationalFunction() = default;
  explicit RationalFunction(LaurentPolynomial numerator);
  // Throws DomainError on a zero denominator.
  RationalFunction(LaurentPolynomial numerator, LaurentPolynomial denominator);

  std::size_t arity() const { return num_.arity(); }
  const LaurentPolynomial& numerator() const { return num_; }
  const LaurentPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.size() == 1; }

  // Same element of the fraction field (cross-multiplication).
  bool equivalent(const RationalFunction& o) const;

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

private:
  void normalize();
  LaurentPolynomial num_;
  LaurentPolynomial den_;
};

std::string to_string(const RationalFunction& f, const std::vector<std::string>& names = {});

// Semi-echelon form: each surviving polynomial has a distinct lead, where
// lead(p) picks one exponent of supp(p) and every other exponent of p is
// "after" the lead in the sense that subtracting a multiple of p from a
// polynomial with the same lead strictly advances its lead. Inputs are
// processed in order; earlier ones become pivots.
struct EchelonEntry {
  ExponentVector lead;
  LaurentPolynomial poly;
  std::size_t source = 0; // index of the input that produced this pivot
};

template <class LeadFn>
std::vector<EchelonEntry> semi_echelon(const std::vector<LaurentPolynomial>& polys, LeadFn lead) {
  std::vector<EchelonEntry> out;
  std::map<ExponentVector, std::size_t> pivots;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    LaurentPolynomial p = polys[i];
    while (!p.is_zero()) {
      ExponentVector e = lead(p);
      auto it = pivots.find(e);
      if (it == pivots.end()) {
        pivots.emplace(e, out.size());
        out.push_back({std::move(e), std::move(p), i});
        break;
      }
      const EchelonEntry& q = out[it->second];
      p.add_multiple(q.poly, -p.coefficient(e) / q.poly.coefficient(e));
    }
  }
  return out;
}

inline constexpr std::size_t default_dimension_cap = 20000;

// Finite-dimensional span of rational functions, stored over a single
// common denominator with independent numerators.
class FunctionSubspace {
public:
  FunctionSubspace() = default;
  // Throws DomainError if every function is zero or the list is empty.
  static FunctionSubspace span(const std::vector<RationalFunction>& functions);
  static FunctionSubspace span(const std::vector<LaurentPolynomial>& polys);
  static FunctionSubspace monomials(const std::vector<ExponentVector>& support);

  std::size_t arity() const { return arity_; }
  std::size_t dimension() const { return numerators_.size(); }
  const LaurentPolynomial& denominator() const { return denominator_; }
  const std::vector<LaurentPolynomial>& numerators() const { return numerators_; }
  std::vector<RationalFunction> basis() const;
  bool contains(const RationalFunction& f) const;

private:
  static FunctionSubspace from_common(std::size_t arity, LaurentPolynomial den,
                                      const std::vector<LaurentPolynomial>& nums);
  std::size_t arity_ = 0;
  LaurentPolynomial denominator_;
  std::vector<LaurentPolynomial> numerators_; // semi-echelon under max key
  friend FunctionSubspace subspace_product(const FunctionSubspace&, const FunctionSubspace&,
                                           std::size_t);
};

RationalFunction multiply(const RationalFunction& f, const RationalFunction& g);

FunctionSubspace subspace_product(const FunctionSubspace& a, const FunctionSubspace& b,
                                  std::size_t cap = default_dimension_cap);
FunctionSubspace subspace_power(const FunctionSubspace& l, unsigned k,
                                std::size_t cap = default_dimension_cap);
// L^1, ..., L^dmax.
std::vector<FunctionSubspace> subspace_powers(const FunctionSubspace& l, unsigned dmax,
                                              std::size_t cap = default_dimension_cap);
std::size_t subspace_dim(const FunctionSubspace& l);

struct VarietyModel {
  enum class Kind { torus, affine, parametrized };
  Kind kind = Kind::torus;
  std::size_t arity = 0;           // number of coordinates
  std::size_t parameter_arity = 0; // parametrized only
  std::vector<RationalFunction> coordinates;

  static VarietyModel torus(std::size_t n);
  static VarietyModel affine(std::size_t n);
  static VarietyModel parametrized(std::size_t parameter_arity,
                                   std::vector<RationalFunction> coordinates);

  // Arity of the functions the model produces.
  std::size_t function_arity() const {
    return kind == Kind::parametrized ? parameter_arity : arity;
  }
};

std::string to_string(VarietyModel::Kind kind);

RationalFunction pull_back(const VarietyModel& model, const LaurentPolynomial& expr);
FunctionSubspace pull_back_subspace(const VarietyModel& model,
                                    const std::vector<LaurentPolynomial>& exprs);

} // namespace okbody
