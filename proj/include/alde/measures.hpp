#pragma once

#include <string>
#include <vector>

#include "alde/simplexnd.hpp"

namespace alde {

/// Which constant a moment value multiplies.
enum class Scale {
  unit,     ///< an exact rational
  base,     ///< the integral of the weight itself (a Gamma quotient)
  c_prime,  ///< the (d-1)-simplex integral of x_2^g2 ... (1-|x'|)^g_{d+1}
};
std::string scale_name(Scale s);

struct MomentValue {
  Rat value;
  Scale scale = Scale::unit;

  /// Throws DomainError when the scales differ.
  MomentValue& operator+=(const MomentValue& o);
  friend MomentValue operator+(MomentValue a, const MomentValue& b) { return a += b; }
  friend MomentValue operator*(const Rat& c, MomentValue a) {
    a.value *= c;
    return a;
  }
  friend bool operator==(const MomentValue&, const MomentValue&) = default;
  std::string str() const;
};

/// Moment of t^m for the weight (1-t)^alpha t^beta on [0,1]. Normalized:
/// (beta+1)_m/(alpha+beta+2)_m. Unnormalized: exact (unit scale) when beta
/// is a nonnegative integer, otherwise the normalized ratio on the base
/// scale. Throws DomainError unless alpha, beta > -1.
MomentValue beta_moment(unsigned m, const Rat& alpha, const Rat& beta, bool normalized);

/// Moment of x^kappa (1-|x|)^{kappa_{d+1}} for the Dirichlet weight with
/// parameters gamma (d+1 entries); kappa has d or d+1 entries. Normalized:
/// prod (gamma_i+1)_{kappa_i} / (|gamma|+d+1)_{|kappa|}; unnormalized values
/// carry the base scale. Throws DomainError unless every gamma_i > -1.
MomentValue dirichlet_moment(const std::vector<unsigned>& kappa, const std::vector<Rat>& gamma, bool normalized);

/// gamma as rationals; throws DomainError if an entry is symbolic.
std::vector<Rat> rational_gamma(const SimplexParams& sp);

/// Normalized Dirichlet integral of a polynomial in x_1..x_d.
Rat dirichlet_integral(const RatFn& f, const SimplexParams& sp);
inline Rat dirichlet_inner(const RatFn& f, const RatFn& g, const SimplexParams& sp) {
  return dirichlet_integral(f * g, sp);
}

/// int_0^1 p(t) (1-t)^alpha dt for a polynomial p in t, using
/// int t^j (1-t)^alpha dt = j!/(alpha+1)_{j+1}.
Rat beta_integral(const RatFn& p, const Rat& alpha);

/// The two-term form for q_n, q_m (k = 1, beta = 1); zero for n != m.
Rat orth_check_q(const KrallContext& ctx, long n, long m);
/// The weighted form for qhat_{n,s}, qhat_{m,s}; s = 0 gives orth_check_q.
Rat orth_check_qhat(const KrallContext& ctx, long s, long n, long m);
/// 1 + s(alpha+s)/(a0(alpha+1))
Rat qhat_prefactor(const KrallContext& ctx, long s);

/// C/C' = 1/(|gamma^2| + d): the bulk base constant in units of the
/// boundary one, from the Pochhammer quotient of the two Dirichlet integrals.
Rat sobolev_base_ratio(const SimplexParams& sp);
/// Bulk moment int_{T^d} x^kappa x_2^g2 ... (1-|x|)^g_{d+1} dx in units of C'.
Rat sobolev_bulk_moment(const std::vector<unsigned>& kappa, const SimplexParams& sp);
/// Boundary moment over T^{d-1} of x_2^k2 ... x_d^kd in units of C'.
Rat sobolev_boundary_moment(const std::vector<unsigned>& kappa, const SimplexParams& sp);

/// The Sobolev form <f, g> with bulk, boundary (x_1 = 0) and M_{2,d} terms,
/// in units of C'. Throws DomainError unless gamma_2.. > -1 and a0 != 0.
MomentValue sobolev_inner(const RatFn& f, const RatFn& g, const SimplexParams& sp, const Rat& a0);

struct Gram {
  std::vector<MultiIndex> index;
  std::vector<std::vector<Rat>> entries;

  bool symmetric() const;
  bool diagonal() const;
  bool diagonal_nonzero() const;
};

/// Gram matrix of {Q_eta : |eta| <= nmax} under the Sobolev form (units of C').
Gram sobolev_gram(const SimplexParams& sp, const KrallContext& ctx, long nmax);
/// Gram matrix of {P_eta : |eta| <= nmax} under the normalized Dirichlet weight.
Gram dirichlet_gram(const SimplexParams& sp, long nmax);

/// Orthogonality of q_n and qhat_{n,s} for n != m <= nmax, s <= smax, and
/// positivity of the diagonal.
Report verify_orthogonality_1d(const KrallContext& ctx, long nmax, long smax);
/// <Q_eta, Q_xi> = 0 for eta != xi, the two cases of the argument checked
/// separately, the factorization of <Q_eta, Q_xi>, and nonzero norms.
Report verify_sobolev(const SimplexParams& sp, const KrallContext& ctx, long nmax);
/// The Dirichlet Gram matrix of the P_eta is diagonal with positive entries.
Report verify_dirichlet_gram(const SimplexParams& sp, long nmax);

}  // namespace alde
