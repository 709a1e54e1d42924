#include "alde/sequences.hpp"

#include "alde/error.hpp"
#include "alde/linalg.hpp"

namespace alde {

Var var_n() {
  static const Var n = Var::named("n");
  return n;
}

RatFn pochhammer(const RatFn& x, unsigned m) {
  RatFn r(1);
  for (unsigned i = 0; i < m; ++i) r *= x + RatFn(static_cast<long>(i));
  return r;
}

RatFn lambda_expr(const RatFn& n, const RatFn& xi) { return -(n * (n + xi)); }

std::vector<RatFn> coeffs_in(const RatFn& f, Var v) {
  if (f.den().has_var(v)) throw DomainError("not a polynomial in " + v.name() + ": " + f.str());
  const auto parts = f.num().coeffs(v);
  std::vector<RatFn> out;
  out.reserve(parts.size());
  for (const auto& c : parts) out.push_back(RatFn::make(c, f.den()));
  if (out.empty()) out.emplace_back();
  return out;
}

std::pair<RatFn, RatFn> divmod_in(const RatFn& a, const RatFn& b, Var v) {
  std::vector<RatFn> r = coeffs_in(a, v);
  std::vector<RatFn> d = coeffs_in(b, v);
  while (!d.empty() && d.back().is_zero()) d.pop_back();
  if (d.empty()) throw DomainError("divmod_in: division by zero");
  const RatFn x = RatFn::var(v);
  const RatFn lead_inv = d.back().inverse();
  RatFn q;
  while (true) {
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    if (r.size() < d.size()) break;
    const std::size_t shift = r.size() - d.size();
    const RatFn f = r.back() * lead_inv;
    q += f * x.pow(static_cast<int>(shift));
    for (std::size_t i = 0; i < d.size(); ++i)
      if (!d[i].is_zero()) r[i + shift] -= f * d[i];
  }
  RatFn rem;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!r[i].is_zero()) rem += r[i] * x.pow(static_cast<int>(i));
  return {q, rem};
}

RatFn SignedSeq::body_at(const RatFn& n) const { return body.substitute(RatBindings{{var_n(), n}}); }

RatFn SignedSeq::value(long n) const {
  const RatFn b = body_at(RatFn(n));
  return (n % 2 == 0) ? b : -b;
}

SignedSeq SignedSeq::shifted(long k) const { return {body_at(RatFn::var(var_n()) + RatFn(k))}; }

SignedSeq phi_seq(int branch, unsigned j, const RatFn& alpha, long beta) {
  if (beta < 1) throw DomainError("phi: beta must be a positive integer");
  const RatFn n = RatFn::var(var_n());
  const RatFn b(beta);
  if (branch == 1) {
    if (j >= static_cast<unsigned long>(beta))
      throw DomainError("phi^{1,j} needs j < beta (got j=" + std::to_string(j) + ", beta=" + std::to_string(beta) + ")");
    const RatFn num = pochhammer(n + 1, j) * pochhammer(-n - alpha - b, j);
    const RatFn den = RatFn(factorial(j)) * pochhammer(1 - b, j);
    return {num / den};
  }
  if (branch != 2) throw DomainError("phi: branch must be 1 or 2");
  const auto ub = static_cast<unsigned>(beta);
  const RatFn den = RatFn(factorial(j) * factorial(ub)) * pochhammer(1 + b, j) * pochhammer(1 + alpha, ub);
  if (den.is_zero()) throw DomainError("phi^{2,j}: (1+alpha)_beta vanishes");
  const RatFn num = pochhammer(n + 1, ub) * pochhammer(n + alpha + 1, ub) * pochhammer(-n, j) *
                    pochhammer(n + alpha + b + 1, j);
  return {num / den};
}

SignedSeq psi_seq(unsigned j, const RatFn& alpha, long beta, const std::vector<RatFn>& a) {
  if (j >= a.size()) throw DomainError("psi^{(j)} needs j < k");
  SignedSeq s = phi_seq(2, j, alpha, beta);
  for (unsigned l = 0; l <= j; ++l)
    if (!a[j - l].is_zero()) s.body += a[j - l] * phi_seq(1, l, alpha, beta).body;
  return s;
}

std::vector<SignedSeq> psi_family(const RatFn& alpha, long beta, const std::vector<RatFn>& a) {
  std::vector<SignedSeq> out;
  for (unsigned j = 0; j < a.size(); ++j) out.push_back(psi_seq(j, alpha, beta, a));
  return out;
}

std::optional<std::vector<RatFn>> lambda_coefficients(const RatFn& body, const RatFn& sigma) {
  if (body.den().has_var(var_n()) || sigma.has_var(var_n())) return std::nullopt;
  // Work with the coefficient list in n and divide by lambda = -n^2 - sigma n.
  std::vector<RatFn> c = coeffs_in(body, var_n());
  std::vector<RatFn> out;
  while (true) {
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
    if (c.size() <= 2) {
      if (c.size() == 2 && !c[1].is_zero()) return std::nullopt;
      out.push_back(c[0]);
      return out;
    }
    // Synthetic division by -(n^2 + sigma n).
    std::vector<RatFn> q(c.size() - 2);
    for (std::size_t d = c.size() - 1; d >= 2; --d) {
      const RatFn f = c[d];
      q[d - 2] = -f;
      c[d] = RatFn();
      c[d - 1] -= f * sigma;
    }
    if (!c[1].is_zero()) return std::nullopt;
    out.push_back(c[0]);
    c = std::move(q);
  }
}

bool is_lambda_polynomial(const SignedSeq& s, const RatFn& sigma) { return lambda_coefficients(s.body, sigma).has_value(); }

RatFn tau_poly(const std::vector<SignedSeq>& psis) {
  const std::size_t k = psis.size();
  const RatFn n = RatFn::var(var_n());
  RatMatrix m(k, std::vector<RatFn>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = psis[i].body_at(n - RatFn(static_cast<long>(j)));
  return det(m);
}

}  // namespace alde
