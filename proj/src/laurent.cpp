#include "okbody/laurent.hpp"

#include "okbody/errors.hpp"

#include <algorithm>
#include <sstream>

namespace okbody {

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

ExponentVector scaled(const ExponentVector& a, std::int64_t k) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

std::string to_string(const ExponentVector& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

LaurentPolynomial::LaurentPolynomial(std::size_t arity, Terms terms) : arity_(arity) {
  for (auto& [e, c] : terms) {
    if (e.size() != arity) throw ValidationError("exponent length does not match arity");
    if (c != 0) terms_.emplace(e, c);
  }
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t arity, const BigRational& c) {
  LaurentPolynomial p(arity);
  p.add_term(ExponentVector(arity, 0), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const ExponentVector& e, const BigRational& c) {
  LaurentPolynomial p(e.size());
  p.add_term(e, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t arity, std::size_t index) {
  ExponentVector e(arity, 0);
  e.at(index) = 1;
  return monomial(e);
}

std::vector<ExponentVector> LaurentPolynomial::support() const {
  std::vector<ExponentVector> s;
  s.reserve(terms_.size());
  for (auto& [e, c] : terms_) s.push_back(e);
  return s;
}

BigRational LaurentPolynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRational(0) : it->second;
}

void LaurentPolynomial::add_term(const ExponentVector& e, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPolynomial::add_multiple(const LaurentPolynomial& other, const BigRational& c,
                                     const ExponentVector* shift) {
  if (c == 0) return;
  for (auto& [e, d] : other.terms_) add_term(shift ? e + *shift : e, c * d);
}

LaurentPolynomial LaurentPolynomial::shifted(const ExponentVector& s) const {
  LaurentPolynomial r(arity_);
  for (auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + s, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial result = constant(arity_, 1);
  LaurentPolynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

ExponentVector LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw DomainError("min exponent of the zero polynomial");
  ExponentVector m = terms_.begin()->first;
  for (auto& [e, c] : terms_)
    for (std::size_t i = 0; i < arity_; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

ExponentVector LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw DomainError("max exponent of the zero polynomial");
  ExponentVector m = terms_.begin()->first;
  for (auto& [e, c] : terms_)
    for (std::size_t i = 0; i < arity_; ++i) m[i] = std::max(m[i], e[i]);
  return m;
}

BigRational LaurentPolynomial::evaluate(const std::vector<BigRational>& point) const {
  if (point.size() != arity_) throw ValidationError("evaluation point has wrong arity");
  BigRational sum = 0;
  for (auto& [e, c] : terms_) {
    BigRational term = c;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] >= 0) {
        term *= okbody::pow(point[i], static_cast<unsigned>(e[i]));
      } else {
        if (point[i] == 0) throw DomainError("negative exponent evaluated at zero");
        term /= okbody::pow(point[i], static_cast<unsigned>(-e[i]));
      }
    }
    sum += term;
  }
  return sum;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  add_multiple(o, 1);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  add_multiple(o, -1);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, d] : terms_) d *= c;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.arity_ != b.arity_) throw ValidationError("arity mismatch in product");
  LaurentPolynomial r(a.arity_);
  for (auto& [e, c] : a.terms_) r.add_multiple(b, c, &e);
  return r;
}

std::string to_string(const LaurentPolynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    BigRational mag = abs(c);
    out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool constant = std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
    bool printed = false;
    if (mag != 1 || constant) {
      out << to_string(mag);
      printed = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) out << "*";
      out << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (e[i] != 1) out << "^" << e[i];
      printed = true;
    }
  }
  return out.str();
}

RationalFunction::RationalFunction(LaurentPolynomial numerator)
    : num_(std::move(numerator)), den_(LaurentPolynomial::constant(num_.arity(), 1)) {}

RationalFunction::RationalFunction(LaurentPolynomial numerator, LaurentPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.arity() != den_.arity()) throw ValidationError("numerator/denominator arity mismatch");
  normalize();
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  const std::size_t n = den_.arity();
  if (num_.is_zero()) {
    den_ = LaurentPolynomial::constant(n, 1);
    return;
  }
  ExponentVector shift = scaled(den_.min_exponent(), -1);
  num_ = num_.shifted(shift);
  den_ = den_.shifted(shift);
  BigRational lc = den_.terms().rbegin()->second;
  if (lc != 1) {
    num_ *= 1 / lc;
    den_ *= 1 / lc;
  }
  if (den_.size() > 1 && num_.size() == den_.size()) {
    // numerator a constant multiple of the denominator
    auto a = num_.terms().begin();
    auto b = den_.terms().begin();
    BigRational ratio = a->second / b->second;
    bool proportional = true;
    for (; a != num_.terms().end(); ++a, ++b)
      if (a->first != b->first || a->second != ratio * b->second) {
        proportional = false;
        break;
      }
    if (proportional) {
      num_ = LaurentPolynomial::constant(n, ratio);
      den_ = LaurentPolynomial::constant(n, 1);
    }
  }
}

bool RationalFunction::equivalent(const RationalFunction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

std::string to_string(const RationalFunction& f, const std::vector<std::string>& names) {
  std::string num = to_string(f.numerator(), names);
  if (f.denominator() == LaurentPolynomial::constant(f.arity(), 1)) return num;
  return "(" + num + ")/(" + to_string(f.denominator(), names) + ")";
}

RationalFunction multiply(const RationalFunction& f, const RationalFunction& g) { return f * g; }

namespace {

const ExponentVector& max_key(const LaurentPolynomial& p) { return p.terms().rbegin()->first; }

} // namespace

FunctionSubspace FunctionSubspace::from_common(std::size_t arity, LaurentPolynomial den,
                                               const std::vector<LaurentPolynomial>& nums) {
  FunctionSubspace s;
  s.arity_ = arity;
  s.denominator_ = std::move(den);
  for (auto& e : semi_echelon(nums, max_key)) s.numerators_.push_back(std::move(e.poly));
  if (s.numerators_.empty()) throw DomainError("function subspace is zero");
  return s;
}

FunctionSubspace FunctionSubspace::span(const std::vector<RationalFunction>& functions) {
  if (functions.empty()) throw DomainError("function subspace needs at least one function");
  const std::size_t n = functions.front().arity();
  std::vector<LaurentPolynomial> dens;
  for (auto& f : functions) {
    if (f.arity() != n) throw ValidationError("functions of different arity in one subspace");
    if (std::find(dens.begin(), dens.end(), f.denominator()) == dens.end())
      dens.push_back(f.denominator());
  }
  LaurentPolynomial common = LaurentPolynomial::constant(n, 1);
  for (auto& d : dens) common = common * d;
  std::vector<LaurentPolynomial> nums;
  nums.reserve(functions.size());
  for (auto& f : functions) {
    LaurentPolynomial p = f.numerator();
    for (auto& d : dens)
      if (!(d == f.denominator())) p = p * d;
    nums.push_back(std::move(p));
  }
  return from_common(n, std::move(common), nums);
}

FunctionSubspace FunctionSubspace::span(const std::vector<LaurentPolynomial>& polys) {
  if (polys.empty()) throw DomainError("function subspace needs at least one function");
  const std::size_t n = polys.front().arity();
  for (auto& p : polys)
    if (p.arity() != n) throw ValidationError("functions of different arity in one subspace");
  return from_common(n, LaurentPolynomial::constant(n, 1), polys);
}

FunctionSubspace FunctionSubspace::monomials(const std::vector<ExponentVector>& support) {
  std::vector<LaurentPolynomial> polys;
  for (auto& e : support) polys.push_back(LaurentPolynomial::monomial(e));
  return span(polys);
}

std::vector<RationalFunction> FunctionSubspace::basis() const {
  std::vector<RationalFunction> out;
  for (auto& p : numerators_) out.emplace_back(p, denominator_);
  return out;
}

bool FunctionSubspace::contains(const RationalFunction& f) const {
  if (f.arity() != arity_) throw ValidationError("arity mismatch in membership test");
  if (f.is_zero()) return true;
  std::vector<LaurentPolynomial> polys;
  for (auto& p : numerators_) polys.push_back(p * f.denominator());
  polys.push_back(f.numerator() * denominator_);
  return semi_echelon(polys, max_key).size() == numerators_.size();
}

FunctionSubspace subspace_product(const FunctionSubspace& a, const FunctionSubspace& b,
                                  std::size_t cap) {
  if (a.arity() != b.arity()) throw ValidationError("arity mismatch in subspace product");
  std::vector<LaurentPolynomial> nums;
  nums.reserve(a.dimension() * b.dimension());
  for (auto& p : a.numerators())
    for (auto& q : b.numerators()) nums.push_back(p * q);
  auto result = FunctionSubspace::from_common(a.arity(), a.denominator() * b.denominator(), nums);
  if (result.dimension() > cap)
    throw ResourceError("dimension " + std::to_string(result.dimension()) +
                        " of subspace product exceeds cap " + std::to_string(cap));
  return result;
}

std::vector<FunctionSubspace> subspace_powers(const FunctionSubspace& l, unsigned dmax,
                                              std::size_t cap) {
  std::vector<FunctionSubspace> out;
  if (dmax == 0) return out;
  out.push_back(l);
  for (unsigned d = 2; d <= dmax; ++d) out.push_back(subspace_product(out.back(), l, cap));
  return out;
}

FunctionSubspace subspace_power(const FunctionSubspace& l, unsigned k, std::size_t cap) {
  if (k == 0) throw ValidationError("subspace power needs k >= 1");
  FunctionSubspace acc = l;
  for (unsigned i = 1; i < k; ++i) acc = subspace_product(acc, l, cap);
  return acc;
}

std::size_t subspace_dim(const FunctionSubspace& l) { return l.dimension(); }

VarietyModel VarietyModel::torus(std::size_t n) {
  VarietyModel m;
  m.kind = Kind::torus;
  m.arity = n;
  return m;
}

VarietyModel VarietyModel::affine(std::size_t n) {
  VarietyModel m;
  m.kind = Kind::affine;
  m.arity = n;
  return m;
}

VarietyModel VarietyModel::parametrized(std::size_t parameter_arity,
                                        std::vector<RationalFunction> coordinates) {
  if (coordinates.empty()) throw ValidationError("parametrized model needs coordinate functions");
  for (auto& f : coordinates)
    if (f.arity() != parameter_arity)
      throw ValidationError("coordinate function arity differs from parameter arity");
  VarietyModel m;
  m.kind = Kind::parametrized;
  m.arity = coordinates.size();
  m.parameter_arity = parameter_arity;
  m.coordinates = std::move(coordinates);
  return m;
}

std::string to_string(VarietyModel::Kind kind) {
  switch (kind) {
  case VarietyModel::Kind::torus: return "torus";
  case VarietyModel::Kind::affine: return "affine";
  case VarietyModel::Kind::parametrized: return "parametrized";
  }
  return "unknown";
}

namespace {

// Cached integer powers of one polynomial.
class PowerCache {
public:
  explicit PowerCache(LaurentPolynomial base)
      : base_(std::move(base)), powers_{LaurentPolynomial::constant(base_.arity(), 1)} {}
  const LaurentPolynomial& get(unsigned k) {
    while (powers_.size() <= k) powers_.push_back(powers_.back() * base_);
    return powers_[k];
  }

private:
  LaurentPolynomial base_;
  std::vector<LaurentPolynomial> powers_;
};

} // namespace

RationalFunction pull_back(const VarietyModel& model, const LaurentPolynomial& expr) {
  if (expr.arity() != model.arity)
    throw ValidationError("expression arity " + std::to_string(expr.arity()) +
                          " does not match model with " + std::to_string(model.arity) +
                          " coordinates");
  if (model.kind == VarietyModel::Kind::affine) {
    for (auto& [e, c] : expr.terms())
      for (auto x : e)
        if (x < 0) throw ValidationError("affine model functions must be polynomials");
  }
  if (model.kind != VarietyModel::Kind::parametrized) return RationalFunction(expr);

  const std::size_t c = model.arity;
  std::vector<std::int64_t> pmax(c, 0), nmax(c, 0);
  for (auto& [e, coef] : expr.terms())
    for (std::size_t i = 0; i < c; ++i) {
      pmax[i] = std::max(pmax[i], e[i]);
      nmax[i] = std::max(nmax[i], -e[i]);
    }
  std::vector<PowerCache> num_pows, den_pows;
  for (std::size_t i = 0; i < c; ++i) {
    const auto& f = model.coordinates[i];
    if (f.is_zero() && nmax[i] > 0)
      throw DomainError("negative power of a coordinate function that is identically zero");
    num_pows.emplace_back(f.numerator());
    den_pows.emplace_back(f.denominator());
  }
  const std::size_t m = model.parameter_arity;
  LaurentPolynomial common = LaurentPolynomial::constant(m, 1);
  for (std::size_t i = 0; i < c; ++i)
    common = common * den_pows[i].get(pmax[i]) * num_pows[i].get(nmax[i]);
  LaurentPolynomial numerator(m);
  for (auto& [e, coef] : expr.terms()) {
    LaurentPolynomial term = LaurentPolynomial::constant(m, coef);
    for (std::size_t i = 0; i < c; ++i) {
      term = term * num_pows[i].get(static_cast<unsigned>(e[i] + nmax[i]));
      term = term * den_pows[i].get(static_cast<unsigned>(pmax[i] - e[i]));
    }
    numerator += term;
  }
  return RationalFunction(std::move(numerator), std::move(common));
}

FunctionSubspace pull_back_subspace(const VarietyModel& model,
                                    const std::vector<LaurentPolynomial>& exprs) {
  std::vector<RationalFunction> fs;
  for (auto& e : exprs) fs.push_back(pull_back(model, e));
  return FunctionSubspace::span(fs);
}

} // namespace okbody
