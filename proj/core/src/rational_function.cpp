#include "crnreduce/rational_function.hpp"

#include <utility>

#include "crnreduce/error.hpp"

namespace crnreduce {

namespace {

// Removes a common monomial factor and an exact quotient, if either exists.
void cancel_pair(Polynomial& a, Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return;
  Monomial g = gcd(a.monomial_content(), b.monomial_content());
  if (!g.is_one()) {
    a = a.divided_by(g);
    b = b.divided_by(g);
  }
  if (!b.is_constant()) {
    if (auto q = a.divide_exact(b)) {
      a = std::move(*q);
      b = Polynomial(Rational(1));
      return;
    }
  }
  if (!a.is_constant()) {
    if (auto q = b.divide_exact(a)) {
      b = std::move(*q);
      a = Polynomial(Rational(1));
    }
  }
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::division_by_zero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  cancel_pair(num_, den_);
  Rational c = den_.content();
  if (den_.leading().coefficient < 0) c = -c;
  if (c != 1) {
    Rational inv = 1 / c;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

std::set<Symbol> RationalFunction::symbols() const {
  auto out = num_.symbols();
  auto d = den_.symbols();
  out.insert(d.begin(), d.end());
  return out;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  if (a.is_polynomial()) return RationalFunction(a.num_ * b.den_ + b.num_, b.den_);
  if (b.is_polynomial()) return RationalFunction(a.num_ + b.num_ * a.den_, a.den_);
  if (auto m = b.den_.divide_exact(a.den_)) {
    return RationalFunction(a.num_ * *m + b.num_, b.den_);
  }
  if (auto m = a.den_.divide_exact(b.den_)) {
    return RationalFunction(a.num_ + b.num_ * *m, a.den_);
  }
  // Share the common monomial part of the denominators.
  Monomial g = gcd(a.den_.monomial_content(), b.den_.monomial_content());
  Polynomial da = a.den_.divided_by(g);
  Polynomial db = b.den_.divided_by(g);
  return RationalFunction(a.num_ * db + b.num_ * da, da * db.times(g));
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  Polynomial n1 = a.num_;
  Polynomial d1 = a.den_;
  Polynomial n2 = b.num_;
  Polynomial d2 = b.den_;
  cancel_pair(n1, d2);
  cancel_pair(n2, d1);
  return RationalFunction(n1 * n2, d1 * d2);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorCode::division_by_zero, "division by the zero rational function");
  RationalFunction inv;
  inv.num_ = b.den_;
  inv.den_ = b.num_;  // a * inv renormalizes
  if (inv.den_.leading().coefficient < 0) {
    inv.num_ = -inv.num_;
    inv.den_ = -inv.den_;
  }
  return a * inv;
}

Rational RationalFunction::evaluate(const Assignment& values) const {
  Rational d = den_.evaluate(values);
  if (d == 0) throw Error(ErrorCode::division_by_zero, "denominator vanishes at the given point");
  return num_.evaluate(values) / d;
}

bool RationalFunction::equivalent(const RationalFunction& other) const {
  if (*this == other) return true;
  // A mismatch at one point settles inequality without expanding products.
  Assignment probe;
  long next = 2;
  for (const auto& s : symbols()) probe[s] = Rational(next++, 7);
  for (const auto& s : other.symbols()) {
    if (!probe.count(s)) probe[s] = Rational(next++, 7);
  }
  Rational da = den_.evaluate(probe);
  Rational db = other.den_.evaluate(probe);
  if (da != 0 && db != 0 && num_.evaluate(probe) * db != other.num_.evaluate(probe) * da) return false;
  return num_ * other.den_ == other.num_ * den_;
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction substitute(const Polynomial& p, const Binding& binding) {
  if (binding.empty()) return RationalFunction(p);
  // Bound symbols sharing a denominator share its powers in the common
  // denominator, which is the product of each distinct one at its top power.
  std::vector<const Polynomial*> dens;
  std::map<Symbol, std::size_t> den_of;
  for (const auto& [sym, value] : binding) {
    if (value.is_polynomial() || !p.contains(sym)) continue;
    std::size_t k = 0;
    while (k < dens.size() && !(*dens[k] == value.den())) ++k;
    if (k == dens.size()) dens.push_back(&value.den());
    den_of[sym] = k;
  }
  bool touched = false;
  std::vector<unsigned> top(dens.size(), 0);
  std::vector<std::vector<unsigned>> need(p.size(), std::vector<unsigned>(dens.size(), 0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (const auto& [sym, e] : p.terms()[i].monomial.factors()) {
      if (!binding.count(sym)) continue;
      touched = true;
      auto it = den_of.find(sym);
      if (it != den_of.end()) need[i][it->second] += e;
    }
    for (std::size_t k = 0; k < dens.size(); ++k) top[k] = std::max(top[k], need[i][k]);
  }
  if (!touched) return RationalFunction(p);

  std::map<std::pair<Symbol, unsigned>, Polynomial> num_pow;
  std::map<std::pair<std::size_t, unsigned>, Polynomial> den_pow;
  auto num_power = [&](const Symbol& s, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(s, e);
    auto it = num_pow.find(key);
    if (it == num_pow.end()) it = num_pow.emplace(key, binding.at(s).num().pow(e)).first;
    return it->second;
  };
  auto den_power = [&](std::size_t k, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(k, e);
    auto it = den_pow.find(key);
    if (it == den_pow.end()) it = den_pow.emplace(key, dens[k]->pow(e)).first;
    return it->second;
  };
  Polynomial common(Rational(1));
  for (std::size_t k = 0; k < dens.size(); ++k) common = common * den_power(k, top[k]);
  Polynomial numerator;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Term& t = p.terms()[i];
    Polynomial part(Rational(1));
    std::vector<Monomial::Factor> kept;
    for (const auto& [sym, e] : t.monomial.factors()) {
      if (binding.count(sym)) {
        part = part * num_power(sym, e);
      } else {
        kept.emplace_back(sym, e);
      }
    }
    for (std::size_t k = 0; k < dens.size(); ++k) {
      if (need[i][k] < top[k]) part = part * den_power(k, top[k] - need[i][k]);
    }
    numerator += part.times(Monomial(std::move(kept))).scaled(t.coefficient);
  }
  return RationalFunction(std::move(numerator), std::move(common));
}

RationalFunction substitute(const RationalFunction& f, const Binding& binding) {
  if (binding.empty()) return f;
  RationalFunction n = substitute(f.num(), binding);
  if (f.is_polynomial()) return n;
  return n / substitute(f.den(), binding);
}

}  // namespace crnreduce
