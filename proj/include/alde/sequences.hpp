#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "alde/ratfn.hpp"

namespace alde {

/// The index variable n.
Var var_n();

/// Rising factorial of a symbolic argument.
RatFn pochhammer(const RatFn& x, unsigned m);

/// lambda_n^xi = -n(n + xi) for symbolic n and xi.
RatFn lambda_expr(const RatFn& n, const RatFn& xi);

/// Coefficients of f as a polynomial in v (index = power). The denominator
/// of f must be free of v; throws DomainError otherwise.
std::vector<RatFn> coeffs_in(const RatFn& f, Var v);

/// Quotient and remainder of a by b as polynomials in v over the field of
/// the remaining variables. Denominators must be free of v.
std::pair<RatFn, RatFn> divmod_in(const RatFn& a, const RatFn& b, Var v);

/// A sequence n -> (-1)^n body(n). The body is a polynomial in n whose
/// coefficients may be rational functions of symbolic parameters.
struct SignedSeq {
  RatFn body;

  /// body(n + k)
  RatFn body_at(const RatFn& n) const;
  /// (-1)^n body(n) at an integer n (negative allowed).
  RatFn value(long n) const;
  SignedSeq shifted(long k) const;
};

/// phi^{branch,j} for branch 1 or 2. Throws DomainError when j >= beta on
/// branch 1 (vanishing (1-beta)_j) or when beta < 1.
SignedSeq phi_seq(int branch, unsigned j, const RatFn& alpha, long beta);

/// psi^{(j)} = phi^{2,j} + sum_{l<=j} a_{j-l} phi^{1,l}; requires j < a.size().
SignedSeq psi_seq(unsigned j, const RatFn& alpha, long beta, const std::vector<RatFn>& a);

/// The full family psi^{(0)}..psi^{(k-1)} with k = a.size().
std::vector<SignedSeq> psi_family(const RatFn& alpha, long beta, const std::vector<RatFn>& a);

/// Coefficients c_m with body(n) = sum c_m lambda^m, lambda = -n(n+sigma),
/// or empty if body is not a polynomial in lambda.
std::optional<std::vector<RatFn>> lambda_coefficients(const RatFn& body, const RatFn& sigma);
bool is_lambda_polynomial(const SignedSeq& s, const RatFn& sigma);

/// tau_n = det(body^{(i)}(n-j+1)), a polynomial in n.
RatFn tau_poly(const std::vector<SignedSeq>& psis);

}  // namespace alde
