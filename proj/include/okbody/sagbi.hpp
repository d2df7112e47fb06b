#pragma once

#include "okbody/laurent.hpp"
#include "okbody/valuation.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace okbody {

struct SagbiInstance {
  std::vector<LaurentPolynomial> generators; // polynomials (exponents >= 0)
  TermOrder order;                           // must be a well-order
  unsigned degree_bound = 8;
};

// Throws ValidationError on zero or non-polynomial generators, mixed arity
// or an order that is not a well-order.
void validate(const SagbiInstance& inst);

// coefficient * prod g_i^powers[i]
struct TraceTerm {
  BigRational coefficient;
  std::vector<unsigned> powers;
};

enum class SubductionStatus {
  reduced_to_zero,
  no_match,        // v(remainder) is not an N-combination of generator values
  bound_exhausted  // the search or the step budget ran out at degree_bound
};

std::string to_string(SubductionStatus s);

struct SubductionResult {
  LaurentPolynomial remainder;
  std::vector<TraceTerm> trace; // one entry per distinct power vector
  SubductionStatus status = SubductionStatus::no_match;
  std::size_t steps = 0;
};

inline constexpr std::size_t max_subduction_steps = 10000;

// powers with sum(powers) <= bound and sum powers[i] values[i] = target,
// found by depth-first search in generator order, largest power first.
// Zero values are never used. exhausted is set when the depth bound cut a
// branch that could still reach the target.
std::optional<std::vector<unsigned>> match_value(const ExponentVector& target,
                                                 const std::vector<ExponentVector>& values, unsigned bound,
                                                 bool* exhausted = nullptr);

SubductionResult subduction(const LaurentPolynomial& f, const SagbiInstance& inst);

LaurentPolynomial expand_trace(const std::vector<TraceTerm>& trace,
                               const std::vector<LaurentPolynomial>& generators);

struct SagbiReport {
  bool sagbi_up_to_bound = false;
  unsigned bound = 0;
  std::vector<ExponentVector> generator_values;
  std::vector<ExponentVector> values;               // v(R) in filtration degree <= bound
  std::vector<ExponentVector> semigroup_generators; // minimal among the nonzero values
  std::vector<ExponentVector> witnesses;            // values outside the N-span
  std::optional<LaurentPolynomial> candidate;       // element of R with the first witness value
};

// Requires degree_bound <= 12.
SagbiReport sagbi_check(const SagbiInstance& inst, std::size_t cap = default_dimension_cap);

} // namespace okbody
