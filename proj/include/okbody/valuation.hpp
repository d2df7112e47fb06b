#pragma once

#include "okbody/laurent.hpp"

#include <string>
#include <vector>

namespace okbody {

// Matrix term order on Z^n: a < b iff W a < W b lexicographically.
class TermOrder {
public:
  TermOrder() = default;
  // Square n x n weight matrix, row-major rows. Throws ValidationError on
  // a ragged or non-square matrix; rank is checked by validate_order.
  explicit TermOrder(std::vector<std::vector<std::int64_t>> weights);

  static TermOrder lex(std::size_t n);
  // total degree first, ties by lex
  static TermOrder grlex(std::size_t n);

  std::size_t arity() const { return weights_.size(); }
  const std::vector<std::vector<std::int64_t>>& weights() const { return weights_; }

  // -1, 0, 1
  int compare(const ExponentVector& a, const ExponentVector& b) const;
  bool less(const ExponentVector& a, const ExponentVector& b) const { return compare(a, b) < 0; }

private:
  std::vector<std::vector<std::int64_t>> weights_;
};

enum class OrderStatus { ok_well_order, ok_total_not_well, invalid };
std::string to_string(OrderStatus s);

OrderStatus validate_order(const TermOrder& order);

// Minimal exponent of supp(f). Throws DomainError for f = 0.
ExponentVector groebner_value(const TermOrder& order, const LaurentPolynomial& f);
// v(P) - v(Q) for r = P/Q.
ExponentVector value_of_rational(const TermOrder& order, const RationalFunction& r);

struct ValuedElement {
  ExponentVector value;
  RationalFunction representative;
};

// One representative per value, values distinct and sorted ascending in the
// order; the count equals dim L.
std::vector<ValuedElement> echelonize(const TermOrder& order, const FunctionSubspace& l);
// Same values without building representatives.
std::vector<ExponentVector> value_set(const TermOrder& order, const FunctionSubspace& l);

} // namespace okbody
