#pragma once

#include <array>
#include <vector>

#include "alde/operators.hpp"
#include "alde/sequences.hpp"

namespace alde {

/// Jacobi parameters; either may be symbolic.
struct JacobiParams {
  RatFn alpha;
  RatFn beta;
};

/// p_n^{alpha,beta}(t) from the terminating 2F1 series at t. Negative n
/// gives 0. The result is a polynomial in t (coefficients may involve
/// symbolic parameters). Throws DomainError if (alpha+1)_n vanishes.
RatFn jacobi_poly(long n, const JacobiParams& p);
/// The Pfaff form (alpha+beta+1)_n/n! 2F1(-n, n+alpha+beta+1; alpha+1; 1-t).
RatFn jacobi_poly_pfaff(long n, const JacobiParams& p);
bool pfaff_check(long n, const JacobiParams& p);
/// Coefficients of p_n in powers of u = t - 1 (index = power); empty for n < 0.
std::vector<RatFn> jacobi_coeffs_u(long n, const JacobiParams& p);

struct Recurrence {
  RatFn A, B, C;
};
/// A_n, B_n, C_n of the three-term recurrence. C_0 is 0 when its formula is
/// 0/0. Throws DomainError on any other vanishing denominator.
Recurrence recurrence_coeffs(long n, const JacobiParams& p);

/// -n(n + xi)
Rat lambda_val(const Rat& n, const Rat& xi);
RatFn lambda_val(const RatFn& n, const RatFn& xi);

/// The discrete Wronskian of psi_{m+s}^{(0..k-1)} and p_m^{alpha+2s,beta}(t)
/// at m = n; with s = 0 this is q_n. With no psis it is p_n.
RatFn qhat_poly(long n, long s, const JacobiParams& p, const std::vector<SignedSeq>& psis);
/// Weights w_j with qhat_{n,s} = sum_j w_j p_{n-j}^{alpha+2s,beta}, j = 0..k
/// (cofactors of the last row of the Wronskian).
std::vector<RatFn> wronskian_weights(long n, long s, const std::vector<SignedSeq>& psis);
/// qhat_{n,s} in powers of u = t - 1.
std::vector<RatFn> qhat_coeffs_u(long n, long s, const JacobiParams& p, const std::vector<SignedSeq>& psis);
inline RatFn q_poly(long n, const JacobiParams& p, const std::vector<SignedSeq>& psis) {
  return qhat_poly(n, 0, p, psis);
}

/// (A, B, C) with t q_n = A q_{n+1} + B q_n + C q_{n-1}, by exact solve on
/// the coefficients in t. C is 0 when q_{n-1} vanishes. Throws SolveError if
/// the system is singular or has no solution.
Recurrence recover_recurrence(long n, const JacobiParams& p, const std::vector<SignedSeq>& psis);

// Identity residuals; each is identically zero when the identity holds.

/// M1[p_n] - lambda_n p_n
RatFn spectral_residual(long n, const JacobiParams& p);
/// t p_n - (A p_{n+1} + B p_n + C p_{n-1})
RatFn recurrence_residual(long n, const JacobiParams& p);
/// p_n + p_{n-1} - (2n+alpha+beta)/(alpha+beta) p_n^{alpha,beta-1}
RatFn n5_residual(long n, const JacobiParams& p);
/// p_{n-1} + D2[p_n^{alpha,beta-2}] / ((alpha+beta)(alpha+beta-1))
RatFn n1_residual(long n, const JacobiParams& p);
/// M1^{alpha,beta;s}[p_n^{alpha+2s,beta}(1-t)^s] - lambda_{n+s} (same), divided by (1-t)^s
RatFn m1s_residual(long n, long s, const JacobiParams& p);
/// Weighted versions of n5 and n1, divided by (1-t)^s.
RatFn n5s_residual(long n, long s, const JacobiParams& p);
RatFn n1s_residual(long n, long s, const JacobiParams& p);
/// M1^{alpha,beta+s} - (D2 - D1^2 - (alpha+beta+s+1) D1) as operators.
DiffOp n3_residual(const JacobiParams& p, const RatFn& s);

/// The variable used for the perturbation of degenerate parameters.
Var var_eps();

}  // namespace alde
