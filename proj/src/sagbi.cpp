#include "okbody/sagbi.hpp"

#include "okbody/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace okbody {

void validate(const SagbiInstance& inst) {
  if (inst.generators.empty()) throw ValidationError("SAGBI instance needs at least one generator");
  const std::size_t n = inst.generators.front().arity();
  for (auto& g : inst.generators) {
    if (g.is_zero()) throw ValidationError("generators must be nonzero");
    if (g.arity() != n) throw ValidationError("generators have mixed arity");
    for (auto x : g.min_exponent())
      if (x < 0) throw ValidationError("generators must be polynomials");
  }
  if (inst.order.arity() != n) throw ValidationError("term order arity does not match the generators");
  if (validate_order(inst.order) != OrderStatus::ok_well_order)
    throw ValidationError("subduction needs a well-order");
  if (inst.degree_bound < 1) throw ValidationError("degree bound must be at least 1");
}

std::string to_string(SubductionStatus s) {
  switch (s) {
  case SubductionStatus::reduced_to_zero: return "reduced_to_zero";
  case SubductionStatus::no_match: return "no_match";
  case SubductionStatus::bound_exhausted: return "bound_exhausted";
  }
  return "no_match";
}

namespace {

bool leq(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

bool is_zero_vec(const ExponentVector& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

bool search(const ExponentVector& target, const std::vector<ExponentVector>& values, std::size_t i,
            ExponentVector& partial, unsigned budget, std::vector<unsigned>& powers, bool& exhausted) {
  if (partial == target) return true;
  if (i == values.size()) return false;
  if (is_zero_vec(values[i])) return search(target, values, i + 1, partial, budget, powers, exhausted);
  // largest feasible power first
  unsigned max_c = 0;
  ExponentVector probe = partial;
  while (max_c < budget && leq(probe + values[i], target)) {
    probe = probe + values[i];
    ++max_c;
  }
  if (max_c == budget && leq(probe + values[i], target)) exhausted = true;
  for (unsigned c = max_c + 1; c-- > 0;) {
    ExponentVector next = partial + scaled(values[i], c);
    powers[i] = c;
    if (search(target, values, i + 1, next, budget - c, powers, exhausted)) return true;
  }
  powers[i] = 0;
  return false;
}

LaurentPolynomial power_product(const std::vector<LaurentPolynomial>& gens, const std::vector<unsigned>& powers,
                                std::map<std::pair<std::size_t, unsigned>, LaurentPolynomial>& cache) {
  LaurentPolynomial h = LaurentPolynomial::constant(gens.front().arity(), 1);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (powers[i] == 0) continue;
    auto key = std::make_pair(i, powers[i]);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, gens[i].pow(powers[i])).first;
    h = h * it->second;
  }
  return h;
}

} // namespace

std::optional<std::vector<unsigned>> match_value(const ExponentVector& target,
                                                 const std::vector<ExponentVector>& values, unsigned bound,
                                                 bool* exhausted) {
  for (auto& v : values)
    for (auto x : v)
      if (x < 0) throw ValidationError("match_value needs nonnegative values");
  std::vector<unsigned> powers(values.size(), 0);
  ExponentVector partial(target.size(), 0);
  bool ex = false;
  bool found = search(target, values, 0, partial, bound, powers, ex);
  if (exhausted) *exhausted = !found && ex;
  if (!found) return std::nullopt;
  return powers;
}

SubductionResult subduction(const LaurentPolynomial& f, const SagbiInstance& inst) {
  validate(inst);
  if (f.arity() != inst.generators.front().arity()) throw ValidationError("f has the wrong arity");
  std::vector<ExponentVector> values;
  for (auto& g : inst.generators) values.push_back(groebner_value(inst.order, g));
  // constants are always in the algebra
  std::vector<LaurentPolynomial> gens = inst.generators;
  std::map<std::pair<std::size_t, unsigned>, LaurentPolynomial> cache;
  std::map<std::vector<unsigned>, BigRational> trace;

  SubductionResult out;
  LaurentPolynomial r = f;
  const ExponentVector zero(f.arity(), 0);
  while (!r.is_zero()) {
    if (out.steps == max_subduction_steps) {
      out.status = SubductionStatus::bound_exhausted;
      break;
    }
    ExponentVector target = groebner_value(inst.order, r);
    std::vector<unsigned> powers(gens.size(), 0);
    if (target != zero) {
      bool exhausted = false;
      auto m = match_value(target, values, inst.degree_bound, &exhausted);
      if (!m) {
        out.status = exhausted ? SubductionStatus::bound_exhausted : SubductionStatus::no_match;
        break;
      }
      powers = *m;
    }
    LaurentPolynomial h = power_product(gens, powers, cache);
    BigRational c = r.coefficient(target) / h.coefficient(target);
    r.add_multiple(h, -c);
    trace[powers] += c;
    ++out.steps;
  }
  if (r.is_zero()) out.status = SubductionStatus::reduced_to_zero;
  out.remainder = std::move(r);
  for (auto& [p, c] : trace)
    if (c != 0) out.trace.push_back({c, p});
  return out;
}

LaurentPolynomial expand_trace(const std::vector<TraceTerm>& trace, const std::vector<LaurentPolynomial>& generators) {
  if (generators.empty()) throw ValidationError("no generators");
  std::map<std::pair<std::size_t, unsigned>, LaurentPolynomial> cache;
  LaurentPolynomial sum(generators.front().arity());
  for (auto& t : trace) {
    if (t.powers.size() != generators.size()) throw ValidationError("trace term has the wrong length");
    sum.add_multiple(power_product(generators, t.powers, cache), t.coefficient);
  }
  return sum;
}

SagbiReport sagbi_check(const SagbiInstance& inst, std::size_t cap) {
  validate(inst);
  if (inst.degree_bound > 12) throw ValidationError("sagbi_check needs degree_bound <= 12");
  const std::size_t n = inst.generators.front().arity();
  SagbiReport rep;
  rep.bound = inst.degree_bound;
  for (auto& g : inst.generators) rep.generator_values.push_back(groebner_value(inst.order, g));

  std::vector<LaurentPolynomial> span{LaurentPolynomial::constant(n, 1)};
  span.insert(span.end(), inst.generators.begin(), inst.generators.end());
  auto power = subspace_power(FunctionSubspace::span(span), inst.degree_bound, cap);
  auto elements = echelonize(inst.order, power);

  std::set<ExponentVector> nonzero;
  for (auto& e : elements) {
    rep.values.push_back(e.value);
    if (!is_zero_vec(e.value)) nonzero.insert(e.value);
  }
  for (auto& e : elements) {
    if (is_zero_vec(e.value)) continue;
    std::int64_t total = 0;
    for (auto x : e.value) total += x;
    // every nonzero generator value has positive total degree, so this
    // depth cannot cut a valid combination
    if (match_value(e.value, rep.generator_values, static_cast<unsigned>(total))) continue;
    rep.witnesses.push_back(e.value);
    if (!rep.candidate) {
      // representatives of a polynomial span have monomial denominators
      auto& q = e.representative;
      auto& [de, dc] = *q.denominator().terms().begin();
      rep.candidate = q.numerator().shifted(scaled(de, -1)) * (BigRational(1) / dc);
    }
  }
  for (auto& w : nonzero) {
    bool decomposable = false;
    for (auto& u : nonzero) {
      if (u == w || !leq(u, w)) continue;
      if (nonzero.count(w - u)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) rep.semigroup_generators.push_back(w);
  }
  rep.sagbi_up_to_bound = rep.witnesses.empty();
  return rep;
}

} // namespace okbody
