#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "alde/ratfn.hpp"

namespace alde {

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) < 0; }
};

/// Linear partial differential operator sum_mu c_mu(x) d^mu. The derivative
/// multi-index mu is stored as a Monomial (exponent = order in that variable).
class DiffOp {
 public:
  using Terms = std::map<Monomial, RatFn, GrlexLess>;

  DiffOp() = default;
  static DiffOp identity() { return scalar(RatFn(1)); }
  static DiffOp scalar(const RatFn& c);
  /// c * d_v^k
  static DiffOp partial(Var v, unsigned k = 1, const RatFn& c = RatFn(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned order() const;
  /// Differentiation variables that occur, ordered by id.
  std::vector<Var> variables() const;
  /// Coefficient of d^mu (zero if absent).
  RatFn coeff(const Monomial& mu) const;

  RatFn apply(const RatFn& f) const;
  /// Throws DomainError if the image is not a polynomial.
  MPoly apply(const MPoly& f) const;

  DiffOp specialize(const std::map<Var, Rat>& values) const;
  DiffOp substitute(const Bindings& b) const;
  std::string str() const;

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp& operator*=(const RatFn& c);

  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(DiffOp a, const RatFn& c) { return a *= c; }
  friend DiffOp operator*(const RatFn& c, DiffOp a) { return a *= c; }
  /// Composition: (a * b)[f] = a[b[f]].
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& mu, const RatFn& c);
  Terms terms_;
};

inline DiffOp op_compose(const DiffOp& a, const DiffOp& b) { return a * b; }
inline DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }
DiffOp op_pow(const DiffOp& a, unsigned e);

/// p(t) (1-t)^s with s a nonnegative integer.
struct WeightedPoly {
  MPoly p;
  unsigned s = 0;
  friend bool operator==(const WeightedPoly&, const WeightedPoly&) = default;
};

/// Applies o to p(1-t)^s and divides the weight back out. Throws
/// DomainError if the result leaves the weighted space.
WeightedPoly op_apply(const DiffOp& o, const WeightedPoly& w, Var t);
inline MPoly op_apply(const DiffOp& o, const MPoly& p) { return o.apply(p); }

/// Element sum c_{a,b} G1^a G2^b of the algebra with G2 G1 = G1 G2 + G2,
/// in normal order (G1 on the left).
class AlgElem {
 public:
  using Key = std::pair<unsigned, unsigned>;
  using Terms = std::map<Key, RatFn>;

  AlgElem() = default;
  static AlgElem scalar(const RatFn& c);
  static AlgElem identity() { return scalar(RatFn(1)); }
  static AlgElem g1() { return monomial(1, 0); }
  static AlgElem g2() { return monomial(0, 1); }
  static AlgElem monomial(unsigned a, unsigned b, const RatFn& c = RatFn(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFn coeff(unsigned a, unsigned b) const;
  /// Max a + 2b over the terms (the order of the 1-D realization).
  unsigned weight() const;

  AlgElem specialize(const std::map<Var, Rat>& values) const;
  AlgElem substitute(const RatBindings& b) const;
  std::string str() const;

  AlgElem operator-() const;
  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);
  AlgElem& operator*=(const RatFn& c);

  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator*(AlgElem a, const RatFn& c) { return a *= c; }
  friend AlgElem operator*(const RatFn& c, AlgElem a) { return a *= c; }
  friend AlgElem operator*(const AlgElem& a, const AlgElem& b);
  friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(Key k, const RatFn& c);
  Terms terms_;
};

inline AlgElem alg_mul(const AlgElem& a, const AlgElem& b) { return a * b; }
AlgElem alg_pow(const AlgElem& a, unsigned e);
/// f(x) with x an algebra element; f is a polynomial in `var`, its other
/// variables are treated as scalars.
AlgElem alg_eval_poly(const MPoly& f, Var var, const AlgElem& x);

/// Realization G1 -> g1, G2 -> g2 as a composed operator.
DiffOp realize(const AlgElem& e, const DiffOp& g1, const DiffOp& g2);
/// e(g1, g2)[f] without forming the operator.
RatFn apply_realized(const AlgElem& e, const DiffOp& g1, const DiffOp& g2, const RatFn& f);

// ------------------------------------------------------------ named operators

Var var_t();
Var var_x(int i);  ///< x_i, 1-based

/// D1 = (t-1) d_t
DiffOp op_D1();
/// D2 = (1-t) d_t^2 - (alpha+1) d_t
DiffOp op_D2(const RatFn& alpha);
/// D_{2,s} = D2 - s(s+alpha)/(1-t)
DiffOp op_D2s(const RatFn& alpha, const RatFn& s);
/// Hypergeometric operator t(1-t) d^2 + [(beta+1) - (alpha+beta+2)t] d
DiffOp op_M1(const RatFn& alpha, const RatFn& beta);
/// D_{2,s} - D1^2 - (alpha+beta+1) D1
DiffOp op_M1s(const RatFn& alpha, const RatFn& beta, const RatFn& s);

/// Multivariable D1-hat and D2-hat in x1..xd; gamma has d+1 entries.
DiffOp op_Dh1(int d);
DiffOp op_Dh2(const std::vector<RatFn>& gamma, int d);
/// M_{j,d}^gamma, 1 <= j <= d.
DiffOp op_Mjd(const std::vector<RatFn>& gamma, int j, int d);
inline DiffOp op_Md(const std::vector<RatFn>& gamma, int d) { return op_Mjd(gamma, 1, d); }
/// H_{i,j}, 1 <= i < j <= d+1.
DiffOp op_H(const std::vector<RatFn>& gamma, int i, int j, int d);

/// The two representations of the algebra.
DiffOp rep_1d(const AlgElem& e, const RatFn& alpha);
DiffOp rep_1d_s(const AlgElem& e, const RatFn& alpha, const RatFn& s);
DiffOp rep_multi(const AlgElem& e, const std::vector<RatFn>& gamma, int d);

/// Symbolic parameter vector g1..g_{d+1}.
std::vector<RatFn> symbolic_gamma(int d);
RatFn sum_of(const std::vector<RatFn>& v, std::size_t from = 0);

}  // namespace alde
