#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alde/rat.hpp"
#include "alde/var.hpp"

namespace alde {

/// Exponent vector indexed by interned variable id.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  unsigned degree() const;
  unsigned exponent(Var v) const { return e[v.id()]; }
  bool is_one() const;
  bool divides(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
};

/// Graded lexicographic comparison: -1, 0, 1.
int grlex_compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

class MPoly;
using Bindings = std::map<Var, MPoly>;

/// Sparse multivariate polynomial over Rat. Terms are kept sorted by
/// decreasing graded-lex order with no zero coefficients, so structural
/// equality is mathematical equality.
class MPoly {
 public:
  using Term = std::pair<Monomial, Rat>;

  MPoly() = default;
  MPoly(Rat c);  // NOLINT: constants promote implicitly
  template <std::integral T>
  MPoly(T c) : MPoly(Rat(c)) {}  // NOLINT

  static MPoly var(Var v, unsigned exponent = 1);
  static MPoly var(std::string_view name, unsigned exponent = 1) { return var(Var::named(name), exponent); }
  static MPoly monomial(const Monomial& m, Rat c);
  /// Combines like terms and sorts.
  static MPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Throws DomainError if not constant.
  Rat constant_value() const;
  Rat constant_term() const;

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Term& leading_term() const { return terms_.front(); }
  const Rat& leading_coeff() const { return terms_.front().second; }

  unsigned total_degree() const;
  unsigned degree(Var v) const;
  bool has_var(Var v) const;
  /// Variables that occur, ordered by id.
  std::vector<Var> variables() const;
  /// Coefficient of v^k, a polynomial free of v.
  MPoly coeff(Var v, unsigned k) const;
  /// Coefficients indexed by the power of v.
  std::vector<MPoly> coeffs(Var v) const;
  /// Groups terms by their exponents on `vs`; values are free of `vs`.
  std::vector<MPoly> coeffs_wrt(const std::vector<Var>& vs) const;
  Rat coeff_of(const Monomial& m) const;

  MPoly derivative(Var v) const;
  /// Simultaneous substitution; unbound variables pass through.
  MPoly substitute(const Bindings& b) const;
  /// Full evaluation; throws DomainError if a variable is left unbound.
  Rat evaluate(const std::map<Var, Rat>& values) const;

  /// Scaled so the leading coefficient is 1 (zero stays zero).
  MPoly monic() const;
  MPoly pow(unsigned e) const;

  std::string str() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rat& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);

 private:
  std::vector<Term> terms_;
};

/// Exact quotient f/g if g divides f in Q[vars]; empty otherwise.
/// Throws DomainError when g is zero.
std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g);

/// Quotient and remainder of f by g viewed as univariate polynomials in v.
/// The leading coefficient of g in v must be a nonzero constant.
std::pair<MPoly, MPoly> divmod_univariate(const MPoly& f, const MPoly& g, Var v);

/// Monic greatest common divisor in Q[vars]; gcd(0, 0) = 0.
MPoly gcd(const MPoly& a, const MPoly& b);

/// Monomial with the minimum exponent of every variable over the terms of p.
Monomial monomial_content(const MPoly& p);

}  // namespace alde
