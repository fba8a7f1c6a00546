#include "crnreduce/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "crnreduce/error.hpp"

namespace crnreduce {

// ---- Monomial ------------------------------------------------------------

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (auto& f : factors) {
    if (f.second == 0) continue;
    if (!factors_.empty() && factors_.back().first == f.first) {
      factors_.back().second += f.second;
    } else {
      factors_.push_back(f);
    }
    degree_ += f.second;
  }
}

Monomial::Monomial(const Symbol& s, unsigned exponent) {
  if (exponent > 0) {
    factors_.emplace_back(s, exponent);
    degree_ = exponent;
  }
}

unsigned Monomial::exponent(const Symbol& s) const noexcept {
  for (const auto& [sym, e] : factors_) {
    if (sym == s) return e;
  }
  return 0;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  auto it = other.factors_.begin();
  for (const auto& [sym, e] : factors_) {
    while (it != other.factors_.end() && it->first < sym) ++it;
    if (it == other.factors_.end() || !(it->first == sym) || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  auto it = divisor.factors_.begin();
  for (const auto& [sym, e] : factors_) {
    unsigned d = 0;
    if (it != divisor.factors_.end() && it->first == sym) {
      d = it->second;
      ++it;
    }
    if (e > d) {
      out.factors_.emplace_back(sym, e - d);
      out.degree_ += e - d;
    }
  }
  return out;
}

Monomial Monomial::without(const Symbol& s) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (f.first == s) continue;
    out.factors_.push_back(f);
    out.degree_ += f.second;
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Factor> common;
  auto j = b.factors().begin();
  for (const auto& [sym, e] : a.factors()) {
    while (j != b.factors().end() && j->first < sym) ++j;
    if (j != b.factors().end() && j->first == sym) common.emplace_back(sym, std::min(e, j->second));
  }
  return Monomial(std::move(common));
}

namespace {

int display_rank(SymbolKind k) {
  switch (k) {
    case SymbolKind::rate_constant: return 0;
    case SymbolKind::total_amount: return 1;
    case SymbolKind::concentration: return 2;
  }
  return 3;
}

}  // namespace

std::string Monomial::to_string() const {
  // Parameters print before concentrations; the term order is unaffected.
  std::vector<Factor> shown = factors_;
  std::stable_sort(shown.begin(), shown.end(), [](const Factor& a, const Factor& b) {
    return display_rank(a.first.kind()) < display_rank(b.first.kind());
  });
  std::string out;
  for (const auto& [sym, e] : shown) {
    if (!out.empty()) out += '*';
    out += sym.to_string();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool precedes(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(fa[i].first == fb[i].first)) return fa[i].first < fb[i].first;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  return fa.size() > fb.size();
}

// ---- Polynomial ----------------------------------------------------------

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

Polynomial::Polynomial(const Symbol& s) { terms_.push_back({Monomial(s), Rational(1)}); }

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.push_back({m, c});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return precedes(a.monomial, b.monomial); });
  Polynomial out;
  out.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial) {
      out.terms_.back().coefficient += t.coefficient;
      if (out.terms_.back().coefficient == 0) out.terms_.pop_back();
    } else if (t.coefficient != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

bool Polynomial::is_one() const noexcept {
  return terms_.size() == 1 && terms_.front().monomial.is_one() && terms_.front().coefficient == 1;
}

Rational Polynomial::constant_value() const {
  for (const auto& t : terms_) {
    if (t.monomial.is_one()) return t.coefficient;
  }
  return Rational(0);
}

unsigned Polynomial::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

unsigned Polynomial::degree_in(const Symbol& s) const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(s));
  return d;
}

bool Polynomial::contains(const Symbol& s) const noexcept { return degree_in(s) > 0; }

std::set<Symbol> Polynomial::symbols() const {
  std::set<Symbol> out;
  for (const auto& t : terms_) {
    for (const auto& f : t.monomial.factors()) out.insert(f.first);
  }
  return out;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_.front().monomial;
  for (std::size_t i = 1; i < terms_.size() && !g.is_one(); ++i) g = gcd(g, terms_[i].monomial);
  return g;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return Rational(1);
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coefficient.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

namespace {

Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.terms().begin();
  auto j = b.terms().begin();
  while (i != a.terms().end() || j != b.terms().end()) {
    if (j == b.terms().end() || (i != a.terms().end() && precedes(i->monomial, j->monomial))) {
      out.push_back(*i++);
    } else if (i == a.terms().end() || precedes(j->monomial, i->monomial)) {
      out.push_back({j->monomial, subtract ? Rational(-j->coefficient) : j->coefficient});
      ++j;
    } else {
      Rational c = subtract ? Rational(i->coefficient - j->coefficient)
                            : Rational(i->coefficient + j->coefficient);
      if (c != 0) out.push_back({i->monomial, c});
      ++i;
      ++j;
    }
  }
  // Already canonical; from_terms re-sorts cheaply on sorted input.
  return Polynomial::from_terms(std::move(out));
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return merge(a, b, false);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) return a;
  return merge(a, b, true);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.size() == 1) return b.times(a.leading().monomial).scaled(a.leading().coefficient);
  if (b.size() == 1) return a.times(b.leading().monomial).scaled(b.leading().coefficient);
  // Accumulate first so that only distinct monomials get sorted.
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      auto [it, fresh] = acc.try_emplace(s.monomial * t.monomial);
      if (fresh) {
        it->second = s.coefficient * t.coefficient;
      } else {
        it->second += s.coefficient * t.coefficient;
      }
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back({m, std::move(c)});
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial();
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coefficient *= c;
  return out;
}

Polynomial Polynomial::times(const Monomial& m) const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.monomial = t.monomial * m;
  return out;  // multiplying by a monomial preserves the term order
}

Polynomial Polynomial::divided_by(const Monomial& m) const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.monomial = t.monomial.quotient(m);
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::division_by_zero, "division by the zero polynomial");
  if (is_zero()) return Polynomial();
  if (divisor.is_constant()) return scaled(1 / divisor.leading().coefficient);
  const Term& lead = divisor.leading();
  if (!lead.monomial.divides(leading().monomial)) return std::nullopt;
  if (divisor.total_degree() > total_degree()) return std::nullopt;
  for (const auto& sym : divisor.symbols()) {
    if (divisor.degree_in(sym) > degree_in(sym)) return std::nullopt;
  }
  std::vector<Term> quotient;
  Polynomial rest = *this;
  while (!rest.is_zero()) {
    const Term& r = rest.leading();
    if (!lead.monomial.divides(r.monomial)) return std::nullopt;
    Term q{r.monomial.quotient(lead.monomial), r.coefficient / lead.coefficient};
    Polynomial step = divisor.times(q.monomial).scaled(q.coefficient);
    quotient.push_back(std::move(q));
    rest = rest - step;
  }
  return from_terms(std::move(quotient));
}

Rational Polynomial::evaluate(const Assignment& values) const {
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational v = t.coefficient;
    for (const auto& [sym, e] : t.monomial.factors()) {
      auto it = values.find(sym);
      if (it == values.end()) {
        throw Error(ErrorCode::missing_assignment, "no value for symbol " + sym.to_string());
      }
      for (unsigned k = 0; k < e; ++k) v *= it->second;
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::specialize(const Assignment& values) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    std::vector<Monomial::Factor> kept;
    for (const auto& [sym, e] : t.monomial.factors()) {
      auto it = values.find(sym);
      if (it == values.end()) {
        kept.emplace_back(sym, e);
      } else {
        for (unsigned k = 0; k < e; ++k) c *= it->second;
      }
    }
    if (c != 0) out.push_back({Monomial(std::move(kept)), c});
  }
  return from_terms(std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational mag = abs(t.coefficient);
    bool negative = t.coefficient < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += crnreduce::to_string(mag);
    } else {
      if (mag != 1) out += crnreduce::to_string(mag) + "*";
      out += t.monomial.to_string();
    }
  }
  return out;
}

}  // namespace crnreduce
