#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crnreduce/rational.hpp"
#include "crnreduce/symbol.hpp"

namespace crnreduce {

using Assignment = std::map<Symbol, Rational>;

/// Product of symbol powers. Factors are sorted by symbol with positive
/// exponents; the empty product is the unit monomial.
class Monomial {
 public:
  using Factor = std::pair<Symbol, unsigned>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  explicit Monomial(const Symbol& s, unsigned exponent = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  unsigned degree() const noexcept { return degree_; }
  unsigned exponent(const Symbol& s) const noexcept;
  bool is_one() const noexcept { return factors_.empty(); }

  bool divides(const Monomial& other) const noexcept;
  /// Requires divides(*this, other) to hold for `divisor`.
  Monomial quotient(const Monomial& divisor) const;
  Monomial without(const Symbol& s) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.factors_ == b.factors_;
  }

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

Monomial gcd(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0;
    for (const auto& [s, e] : m.factors()) h = (h ^ s.hash()) * 1099511628211ULL + e;
    return h;
  }
};

/// Canonical term order: higher total degree first, then lexicographic with
/// smaller symbols acting as larger variables. True if `a` precedes `b`.
bool precedes(const Monomial& a, const Monomial& b) noexcept;

struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return precedes(a, b); }
};

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term& a, const Term& b) {
    return a.monomial == b.monomial && a.coefficient == b.coefficient;
  }
};

/// Multivariate polynomial with rational coefficients. Terms are kept in
/// canonical order with nonzero coefficients, so == is structural equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const Symbol& s);    // NOLINT(google-explicit-constructor)
  Polynomial(const Monomial& m, const Rational& c);

  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const noexcept;
  /// Value of a constant polynomial; zero for the zero polynomial.
  Rational constant_value() const;
  /// Requires !is_zero().
  const Term& leading() const { return terms_.front(); }

  unsigned total_degree() const noexcept;
  unsigned degree_in(const Symbol& s) const noexcept;
  bool contains(const Symbol& s) const noexcept;
  std::set<Symbol> symbols() const;

  /// Greatest monomial dividing every term; unit for zero.
  Monomial monomial_content() const;
  /// Positive rational c such that p / c has coprime integer coefficients;
  /// one for zero.
  Rational content() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial scaled(const Rational& c) const;
  Polynomial times(const Monomial& m) const;
  /// Requires m to divide every term.
  Polynomial divided_by(const Monomial& m) const;
  Polynomial pow(unsigned e) const;

  /// Quotient if `divisor` divides this polynomial exactly, nullopt otherwise.
  /// Throws Error(division_by_zero) for a zero divisor.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  /// Throws Error(missing_assignment) when a symbol has no value.
  Rational evaluate(const Assignment& values) const;
  /// Replaces the listed symbols by constants; others are kept.
  Polynomial specialize(const Assignment& values) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Grammar-compatible rendering, e.g. `k1*k3*[S1] - 3/2*[S2]^2`.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace crnreduce
