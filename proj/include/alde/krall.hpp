#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "alde/jacobi1d.hpp"

namespace alde {

/// Data of one Darboux step: Jacobi parameters with integer beta, the
/// free parameters a_0..a_{k-1}, and the derived psi family and tau_n.
struct KrallContext {
  RatFn alpha;
  long beta = 1;
  std::vector<RatFn> a;  ///< k = a.size()
  std::vector<SignedSeq> psis;
  RatFn tau;  ///< polynomial in n

  /// Builds psis and tau. Throws DomainError if k > beta, if some psi is not
  /// a lambda-polynomial, or if tau_n vanishes for an integer n in [0, check_to].
  static KrallContext make(const RatFn& alpha, long beta, std::vector<RatFn> a, long check_to = 64);

  unsigned k() const { return static_cast<unsigned>(a.size()); }
  JacobiParams params() const { return {alpha, RatFn(beta)}; }
  /// alpha + beta + 1
  RatFn sigma() const { return alpha + RatFn(beta + 1); }
};

/// f(x) for a polynomial f in `var` whose coefficients may be rational in
/// the parameters.
RatFn eval_in(const RatFn& f, Var var, const RatFn& x);

/// f(lambda_{n-k/2}^{alpha+beta+1}) as a polynomial in n.
RatFn krall_eigenvalue(const RatFn& f, Var var, const KrallContext& ctx);

struct Membership {
  bool member = false;
  RatFn quotient;   ///< (f(lambda_{n-k/2}) - f(lambda_{n-k/2-1})) / tau_{n-1}
  RatFn remainder;  ///< zero iff member
};
Membership algebra_member(const RatFn& f, const KrallContext& ctx, Var var = var_t());

/// A basis, modulo constants, of the members of degree <= max_degree (each
/// has zero constant term).
std::vector<RatFn> member_basis(const KrallContext& ctx, unsigned max_degree, Var var = var_t());

/// f2 and f3 generating the algebra for k = 1, beta = 1, as polynomials in var.
std::pair<RatFn, RatFn> f2_f3_generators(const RatFn& alpha, const RatFn& a0, Var var = var_t());

/// c_{n,k}^{sigma}; sigma stands for alpha + beta.
RatFn c_factor(long n, unsigned k, const RatFn& sigma);
/// chat_{n,k,s}^{sigma}. Throws DomainError if some sigma + 2s - j vanishes.
RatFn chat_factor(long n, unsigned k, long s, const RatFn& sigma);

/// One sample of an eigen-type equation scale * B[g_n] = h_n, with g_n and
/// h_n given by their coefficients in u = t - 1.
struct EquationSample {
  std::vector<RatFn> g;
  std::vector<RatFn> h;
  RatFn scale = RatFn(1);
};
using SampleFn = std::function<EquationSample(long n)>;

struct SynthesisResult {
  AlgElem op;
  unsigned weight = 0;       ///< ansatz bound a + 2b <= weight
  std::size_t unknowns = 0;  ///< number of ansatz words
  long n_det = 0;            ///< equations from n = 0..n_det-1 entered the solve
  long certified_to = 0;     ///< the equation also holds for n_det..certified_to
};

/// Finds B in the algebra, realized with D1, D2^alpha, such that the sampled
/// equations hold for all n. The ansatz bound grows from min_weight to
/// max_weight; each solve uses n_det = #words + extra equations and is then
/// certified on 2 n_det further values of n. Throws SolveError when no
/// bound up to max_weight works or the solution stays ambiguous.
SynthesisResult synthesize_eigen(const RatFn& alpha, const SampleFn& sample, unsigned min_weight, unsigned max_weight,
                                 long extra);

/// B_f with B_f[q_n] = f(lambda_{n-k/2}) q_n. Throws DomainError if f is not
/// a member, SolveError as synthesize_eigen.
SynthesisResult synthesize_Bf(const RatFn& f, const KrallContext& ctx, unsigned max_wordlen, Var var = var_t());

/// Bhat_psi with q_n = c_{n,k} Bhat_psi[p_n^{alpha,beta-k}].
SynthesisResult intertwiner_Bpsi(const KrallContext& ctx, unsigned max_wordlen);

/// For r a polynomial in n: the operator B with
/// r(n) p_n + r(-n-alpha-beta) p_{n-1} = B[p_n + p_{n-1}]   (sum form), or
/// the same left side = (2n+alpha+beta) B[p_n^{alpha,beta-1}]   (lowered form).
SynthesisResult synthesize_sum_form(const RatFn& r, const JacobiParams& p, unsigned max_wordlen);
SynthesisResult synthesize_lowered_form(const RatFn& r, const JacobiParams& p, unsigned max_wordlen);

/// f(M1^{alpha,beta-k} + lambda_{k/2}^{-alpha-beta-1}) as an algebra element.
AlgElem shifted_hypergeometric(const RatFn& f, const KrallContext& ctx, Var var = var_t());

struct IntertwiningReport {
  bool pass = false;
  DiffOp residual;  ///< lhs - rhs
  AlgElem algebra_residual;
};
/// rep_1d(Bf) rep_1d(Bpsi) against rep_1d(Bpsi) f(M1^{alpha,beta-k} + lambda_{k/2}^{-alpha-beta-1}).
IntertwiningReport verify_intertwining_1d(const AlgElem& bf, const AlgElem& bpsi, const RatFn& f, const KrallContext& ctx,
                                          Var var = var_t());

/// qhat_{n,s}(1-t)^s - chat rep_1d_s(Bpsi)[p_n^{alpha+2s,beta-k}(1-t)^s],
/// divided by (1-t)^s.
RatFn weighted_intertwiner_residual(const AlgElem& bpsi, const KrallContext& ctx, long n, long s);

/// Applies e realized with D1, D2^alpha to a polynomial given in u = t - 1.
std::vector<RatFn> apply_in_u(const AlgElem& e, const RatFn& alpha, const std::vector<RatFn>& g);
/// Coefficient lists in u = t - 1 and back.
std::vector<RatFn> to_u_coeffs(const RatFn& p);
RatFn from_u_coeffs(const std::vector<RatFn>& c);

}  // namespace alde
