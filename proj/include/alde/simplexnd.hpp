#pragma once

#include <string>
#include <vector>

#include "alde/krall.hpp"
#include "alde/report.hpp"

namespace alde {

/// Dimension d and gamma_1..gamma_{d+1}; entries may be symbolic.
struct SimplexParams {
  int d = 1;
  std::vector<RatFn> gamma;

  /// d = gamma.size() - 1; throws DomainError when that is below 1.
  static SimplexParams make(std::vector<RatFn> gamma);

  /// gamma_2 + ... + gamma_{d+1} + d - 1
  RatFn alpha() const;
  RatFn beta() const { return gamma[0]; }
  /// |gamma^j| = gamma_j + ... + gamma_{d+1}, 1-based j
  RatFn gamma_tail(int j) const;
  /// gamma - k e_1
  SimplexParams shifted(long k) const;
  /// (gamma_2, ..., gamma_{d+1}) in dimension d - 1; requires d >= 2
  SimplexParams inner() const;
  std::string str() const;
};

using MultiIndex = std::vector<long>;

/// |eta^j| = eta_j + ... + eta_d, 1-based j (j = 1 gives |eta|).
long index_tail(const MultiIndex& eta, int j = 1);
std::string index_str(const MultiIndex& eta);
/// All eta with |eta| = n, eta_1 descending first.
std::vector<MultiIndex> multi_indices(int d, long n);
/// All eta with |eta| <= nmax, graded.
std::vector<MultiIndex> multi_indices_upto(int d, long nmax);
/// C(n + d - 1, d - 1)
long dimension_count(int d, long n);

Var var_z(int i);  ///< z_i, 1-based

/// f(z) rewritten in x via z_1 = x_1, z_j = x_j/(1-x_1).
RatFn z_to_x(const RatFn& f, int d);
/// (1-x_1)^s f(z) in x. Throws DomainError unless every (1-x_1) denominator
/// is cleared.
RatFn chvar_to_x(const RatFn& f, int d, unsigned s);
/// q(x_1..x_{d-1}) read as a function of z_2..z_d.
RatFn inner_to_z(const RatFn& q, int d);

/// Jacobi polynomial on the simplex in x_1..x_d (coefficients rational in
/// the parameters). Throws DomainError on a degenerate inner Jacobi factor.
RatFn simplex_jacobi(const MultiIndex& eta, const SimplexParams& sp);
/// The terminating Lauricella series G_eta(x; gamma).
RatFn lauricella_poly(const MultiIndex& eta, const SimplexParams& sp);
/// Q_eta. ctx must carry alpha = sp.alpha() and beta = gamma_1; throws
/// DomainError otherwise.
RatFn Q_poly(const MultiIndex& eta, const SimplexParams& sp, const KrallContext& ctx);

/// Coefficients of a polynomial in x_1..x_d, keyed by the x-monomial.
std::map<Monomial, RatFn, GrlexLess> x_coefficients(const RatFn& p, int d);

/// M_{j,d}[P_eta] = lambda P_eta for |eta| <= nmax, j = 1..d, plus the
/// check that the j = 1 eigenvalue depends only on |eta|.
Report verify_simplex_spectra(const SimplexParams& sp, long nmax);
/// M_d[G_eta] = -|eta|(|eta| + |gamma| + d) G_eta for |eta| <= nmax.
Report verify_lauricella(const SimplexParams& sp, long nmax);

/// Operators attached to one Darboux step in the simplex setting.
struct DarbouxData {
  KrallContext ctx;
  AlgElem bpsi;
  RatFn f;  ///< polynomial in `var`
  AlgElem bf;
  Var var = var_t();
};

/// The intertwiner, Q_eta against P_eta, the operator intertwining relation,
/// the eigen-equations of Q_eta and, for k = 1, the closed form of the
/// image of the intertwiner.
Report verify_multivariable_darboux(const SimplexParams& sp, const DarbouxData& dd, long nmax);
/// f(M_d^{gamma - k e_1} + lambda_{k/2}^{-|gamma|-d}) as a composed operator.
DiffOp shifted_appell_lauricella(const RatFn& f, Var var, const SimplexParams& sp, unsigned k);

/// Commutation identities: [D2h, D1h] = D2h, [M_{j,d}, D1h] = [M_{j,d}, D2h] = 0
/// and M_{j,d}^{gamma - k e_1} = M_{j,d}^gamma for j >= 2, [H_{i,j}, M_d] = 0,
/// [H_{i,j}, B_f] = 0 for 2 <= i < j <= d+1, and pairwise commutativity of
/// the B_f and the M_{j,d}, j >= 2.
Report verify_commutants(const SimplexParams& sp, const std::vector<AlgElem>& bfs, unsigned k);

/// Separated-variable identities under the change of variables: the split of
/// M_d, M_{2,d} = M_{d-1}(z'), and the actions of D1h and D2h on
/// p(z_1) q(z_2..z_d), on monomials of degree <= max_degree.
Report verify_decompositions(const SimplexParams& sp, unsigned max_degree);

/// Rank of the coefficient matrix of {Q_eta : |eta| <= nmax} and the
/// count of each degree block.
Report verify_basis(const SimplexParams& sp, const KrallContext& ctx, long nmax);

}  // namespace alde
