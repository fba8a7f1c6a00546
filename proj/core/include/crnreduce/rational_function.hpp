#pragma once

#include <map>
#include <string>

#include "crnreduce/polynomial.hpp"

namespace crnreduce {

/// Quotient of polynomials kept in normalized form:
///  - no common monomial factor between numerator and denominator;
///  - when one side divides the other exactly, the quotient is taken;
///  - the denominator has coprime integer coefficients and a positive
///    leading coefficient;
///  - zero is 0/1.
/// Common polynomial factors that divide neither side as a whole may remain,
/// so semantic comparison goes through equivalent().
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  RationalFunction(const Rational& c) : RationalFunction(Polynomial(c)) {}  // NOLINT
  RationalFunction(int c) : RationalFunction(Polynomial(c)) {}  // NOLINT
  RationalFunction(const Symbol& s) : RationalFunction(Polynomial(s)) {}  // NOLINT
  /// Throws Error(division_by_zero) if den is the zero polynomial.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }
  bool contains(const Symbol& s) const noexcept { return num_.contains(s) || den_.contains(s); }
  std::set<Symbol> symbols() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws Error(division_by_zero) if b is zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

  /// Throws Error(missing_assignment) or Error(division_by_zero).
  Rational evaluate(const Assignment& values) const;

  /// Equality as functions: num_a * den_b == num_b * den_a.
  bool equivalent(const RationalFunction& other) const;

  /// Structural equality of the normalized representation.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// `num` alone for polynomials, `(num)/(den)` otherwise.
  std::string to_string() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

using Binding = std::map<Symbol, RationalFunction>;

/// Replaces each bound symbol by its value; unbound symbols pass through.
RationalFunction substitute(const Polynomial& p, const Binding& binding);
RationalFunction substitute(const RationalFunction& f, const Binding& binding);

}  // namespace crnreduce
