#pragma once

#include <map>
#include <string>
#include <string_view>

#include "alde/mpoly.hpp"

namespace alde {

class RatFn;
using RatBindings = std::map<Var, RatFn>;

/// Quotient num/den of polynomials, kept gcd-reduced with a monic
/// denominator. Zero is 0/1. Symbolic parameters (alpha, a0, ...) live here
/// as ordinary variables, so a RatFn also serves as a parametric scalar.
class RatFn {
 public:
  RatFn() : den_(1) {}
  RatFn(MPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RatFn(Rat c) : num_(std::move(c)), den_(1) {}    // NOLINT
  template <std::integral T>
  RatFn(T c) : RatFn(Rat(c)) {}  // NOLINT

  /// Throws DomainError if den is zero.
  static RatFn make(MPoly num, MPoly den);
  static RatFn var(std::string_view name) { return RatFn(MPoly::var(name)); }
  static RatFn var(Var v) { return RatFn(MPoly::var(v)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool has_var(Var v) const { return num_.has_var(v) || den_.has_var(v); }

  /// Throws DomainError unless the value is a polynomial / a constant.
  MPoly to_poly() const;
  Rat to_rat() const;

  RatFn derivative(Var v) const;
  RatFn substitute(const RatBindings& b) const;
  RatFn substitute(const Bindings& b) const;
  /// Throws DomainError on an unbound variable or a vanishing denominator.
  Rat evaluate(const std::map<Var, Rat>& values) const;
  /// Partial evaluation at rational values.
  RatFn specialize(const std::map<Var, Rat>& values) const;

  RatFn inverse() const;
  RatFn pow(int e) const;

  /// "num" or "(num)/(den)"; parse_ratfn reads it back.
  std::string str() const;

  RatFn operator-() const;
  RatFn& operator+=(const RatFn& o);
  RatFn& operator-=(const RatFn& o);
  RatFn& operator*=(const RatFn& o);
  RatFn& operator/=(const RatFn& o);

  friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
  friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
  friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
  friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }
  friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  MPoly num_;
  MPoly den_;
};

/// Evaluates p at rational-function arguments.
RatFn substitute_ratfn(const MPoly& p, const RatBindings& b);

/// Parses an arithmetic expression over rationals and identifiers with
/// + - * / ^ (nonnegative integer exponents) and parentheses.
RatFn parse_ratfn(std::string_view text);
/// As parse_ratfn, but the result must be a polynomial.
MPoly parse_poly(std::string_view text);

}  // namespace alde
