#include "okbody/valuation.hpp"

#include "okbody/errors.hpp"
#include "okbody/matrix.hpp"

#include <algorithm>

namespace okbody {

TermOrder::TermOrder(std::vector<std::vector<std::int64_t>> weights) : weights_(std::move(weights)) {
  for (auto& row : weights_)
    if (row.size() != weights_.size())
      throw ValidationError("term order weight matrix must be square (n rows of length n)");
}

TermOrder TermOrder::lex(std::size_t n) {
  std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) w[i][i] = 1;
  return TermOrder(std::move(w));
}

TermOrder TermOrder::grlex(std::size_t n) {
  std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n, 0));
  if (n == 0) return TermOrder(std::move(w));
  std::fill(w[0].begin(), w[0].end(), 1);
  for (std::size_t i = 1; i < n; ++i) w[i][i - 1] = 1;
  return TermOrder(std::move(w));
}

int TermOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
  if (a.size() != arity() || b.size() != arity())
    throw ValidationError("exponent arity does not match term order");
  for (auto& row : weights_) {
    __int128 s = 0;
    for (std::size_t j = 0; j < row.size(); ++j)
      s += static_cast<__int128>(row[j]) * (static_cast<__int128>(a[j]) - b[j]);
    if (s < 0) return -1;
    if (s > 0) return 1;
  }
  return 0;
}

std::string to_string(OrderStatus s) {
  switch (s) {
  case OrderStatus::ok_well_order: return "ok_well_order";
  case OrderStatus::ok_total_not_well: return "ok_total_not_well";
  case OrderStatus::invalid: return "invalid";
  }
  return "invalid";
}

OrderStatus validate_order(const TermOrder& order) {
  const std::size_t n = order.arity();
  RationalMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w(i, j) = order.weights()[i][j];
  if (rref(w).rank < n) return OrderStatus::invalid;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      auto x = order.weights()[i][j];
      if (x == 0) continue;
      if (x < 0) return OrderStatus::ok_total_not_well;
      break;
    }
  return OrderStatus::ok_well_order;
}

namespace {

struct MinLead {
  const TermOrder* order;
  ExponentVector operator()(const LaurentPolynomial& p) const {
    const ExponentVector* best = nullptr;
    for (auto& [e, c] : p.terms())
      if (!best || order->less(e, *best)) best = &e;
    return *best;
  }
};

} // namespace

ExponentVector groebner_value(const TermOrder& order, const LaurentPolynomial& f) {
  if (f.is_zero()) throw DomainError("valuation of the zero polynomial");
  if (f.arity() != order.arity()) throw ValidationError("polynomial arity does not match term order");
  return MinLead{&order}(f);
}

ExponentVector value_of_rational(const TermOrder& order, const RationalFunction& r) {
  if (r.is_zero()) throw DomainError("valuation of the zero function");
  return groebner_value(order, r.numerator()) - groebner_value(order, r.denominator());
}

namespace {

std::vector<EchelonEntry> echelon_entries(const TermOrder& order, const FunctionSubspace& l) {
  if (l.arity() != order.arity()) throw ValidationError("subspace arity does not match term order");
  auto entries = semi_echelon(l.numerators(), MinLead{&order});
  std::sort(entries.begin(), entries.end(),
            [&](const EchelonEntry& a, const EchelonEntry& b) { return order.less(a.lead, b.lead); });
  return entries;
}

} // namespace

std::vector<ValuedElement> echelonize(const TermOrder& order, const FunctionSubspace& l) {
  auto entries = echelon_entries(order, l);
  ExponentVector shift = groebner_value(order, l.denominator());
  std::vector<ValuedElement> out;
  out.reserve(entries.size());
  for (auto& e : entries)
    out.push_back({e.lead - shift, RationalFunction(std::move(e.poly), l.denominator())});
  return out;
}

std::vector<ExponentVector> value_set(const TermOrder& order, const FunctionSubspace& l) {
  auto entries = echelon_entries(order, l);
  ExponentVector shift = groebner_value(order, l.denominator());
  std::vector<ExponentVector> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.push_back(e.lead - shift);
  return out;
}

} // namespace okbody
