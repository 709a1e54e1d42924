#include "alde/krall.hpp"

#include <map>

#include "alde/error.hpp"
#include "alde/linalg.hpp"

namespace alde {

namespace {

Var var_u() {
  static const Var u = Var::named("u");
  return u;
}

RatFn at_n(const RatFn& f, const RatFn& n) { return f.substitute(RatBindings{{var_n(), n}}); }

// prod_{i<b} -(m-i)(m-i+alpha), the factor of D2^b on u^m
RatFn lowering(long m, unsigned b, const RatFn& alpha) {
  RatFn r(1);
  for (unsigned i = 0; i < b; ++i) {
    const long mi = m - static_cast<long>(i);
    if (mi == 0) return RatFn();
    r *= -(RatFn(mi) * (RatFn(mi) + alpha));
  }
  return r;
}

std::vector<AlgElem::Key> ansatz_words(unsigned weight) {
  std::vector<AlgElem::Key> w;
  for (unsigned b = 0; 2 * b <= weight; ++b)
    for (unsigned a = 0; a + 2 * b <= weight; ++a) w.emplace_back(a, b);
  return w;
}

RatFn at(const std::vector<RatFn>& v, std::size_t i) { return i < v.size() ? v[i] : RatFn(); }

bool same_coeffs(const std::vector<RatFn>& x, const std::vector<RatFn>& y) {
  const std::size_t m = std::max(x.size(), y.size());
  for (std::size_t i = 0; i < m; ++i)
    if (!(at(x, i) == at(y, i))) return false;
  return true;
}

}  // namespace

KrallContext KrallContext::make(const RatFn& alpha, long beta, std::vector<RatFn> a, long check_to) {
  KrallContext ctx;
  ctx.alpha = alpha;
  ctx.beta = beta;
  if (static_cast<long>(a.size()) > beta)
    throw DomainError("k = " + std::to_string(a.size()) + " exceeds beta = " + std::to_string(beta));
  ctx.a = std::move(a);
  ctx.psis = psi_family(alpha, beta, ctx.a);
  for (std::size_t j = 0; j < ctx.psis.size(); ++j)
    if (!is_lambda_polynomial(ctx.psis[j], ctx.sigma()))
      throw DomainError("psi^(" + std::to_string(j) + ") is not a polynomial in lambda");
  ctx.tau = ctx.psis.empty() ? RatFn(1) : tau_poly(ctx.psis);
  for (long n = 0; n <= check_to; ++n)
    if (at_n(ctx.tau, RatFn(n)).is_zero()) throw DomainError("tau_n vanishes at n = " + std::to_string(n));
  return ctx;
}

RatFn eval_in(const RatFn& f, Var var, const RatFn& x) {
  const auto cs = coeffs_in(f, var);
  RatFn r;
  for (std::size_t i = cs.size(); i-- > 0;) r = r * x + cs[i];
  return r;
}

RatFn krall_eigenvalue(const RatFn& f, Var var, const KrallContext& ctx) {
  const RatFn shift(Rat(static_cast<long>(ctx.k()), 2));
  return eval_in(f, var, lambda_expr(RatFn::var(var_n()) - shift, ctx.sigma()));
}

Membership algebra_member(const RatFn& f, const KrallContext& ctx, Var var) {
  const RatFn n = RatFn::var(var_n());
  const RatFn e = krall_eigenvalue(f, var, ctx);
  const RatFn diff = e - at_n(e, n - 1);
  const auto [q, r] = divmod_in(diff, at_n(ctx.tau, n - 1), var_n());
  return {r.is_zero(), q, r};
}

std::vector<RatFn> member_basis(const KrallContext& ctx, unsigned max_degree, Var var) {
  const RatFn n = RatFn::var(var_n());
  const RatFn tau1 = at_n(ctx.tau, n - 1);
  const RatFn shift(Rat(static_cast<long>(ctx.k()), 2));
  const RatFn l0 = lambda_expr(n - shift, ctx.sigma());
  const RatFn l1 = lambda_expr(n - shift - 1, ctx.sigma());
  std::vector<std::vector<RatFn>> rems;
  std::size_t rows = 0;
  for (unsigned i = 1; i <= max_degree; ++i) {
    const RatFn r = divmod_in(l0.pow(static_cast<int>(i)) - l1.pow(static_cast<int>(i)), tau1, var_n()).second;
    rems.push_back(coeffs_in(r, var_n()));
    rows = std::max(rows, rems.back().size());
  }
  if (max_degree == 0) return {};
  RatMatrix m(rows, std::vector<RatFn>(max_degree));
  for (std::size_t r = 0; r < rows; ++r)
    for (unsigned i = 0; i < max_degree; ++i) m[r][i] = at(rems[i], r);
  std::vector<RatFn> out;
  const RatFn x = RatFn::var(var);
  for (const auto& v : nullspace(m)) {
    RatFn f;
    for (unsigned i = 0; i < max_degree; ++i) f += v[i] * x.pow(static_cast<int>(i + 1));
    out.push_back(f);
  }
  return out;
}

std::pair<RatFn, RatFn> f2_f3_generators(const RatFn& alpha, const RatFn& a0, Var var) {
  const RatFn t = RatFn::var(var);
  const RatFn f2 = t * t - RatFn(Rat(1, 2)) * (3 + 4 * a0 + 4 * alpha + 4 * a0 * alpha) * t;
  const RatFn f3 = t * t * t - RatFn(Rat(1, 4)) * (1 + 6 * a0 + 6 * alpha + 6 * a0 * alpha) * t * t -
                   RatFn(Rat(1, 16)) * (21 + 12 * a0 + 28 * alpha + 12 * a0 * alpha + 4 * alpha * alpha) * t;
  return {f2, f3};
}

RatFn c_factor(long n, unsigned k, const RatFn& sigma) {
  const long nk = n * static_cast<long>(k);
  const RatFn sign = (nk % 2 == 0) ? RatFn(1) : RatFn(-1);
  if (k % 4 == 0 || k % 4 == 3) return sign;
  return sign * (RatFn(2 * n - static_cast<long>(k) + 1) + sigma);
}

RatFn chat_factor(long n, unsigned k, long s, const RatFn& sigma) {
  RatFn r = c_factor(n + s, k, sigma);
  for (unsigned j = 0; j < k; ++j) {
    const RatFn den = sigma + RatFn(2 * s - static_cast<long>(j));
    if (den.is_zero()) throw DomainError("chat: alpha+beta+2s-j vanishes for j = " + std::to_string(j));
    r *= (sigma - RatFn(static_cast<long>(j))) / den;
  }
  return r;
}

std::vector<RatFn> to_u_coeffs(const RatFn& p) {
  auto c = coeffs_in(p.substitute(RatBindings{{var_t(), RatFn::var(var_u()) + 1}}), var_u());
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  return c;
}

RatFn from_u_coeffs(const std::vector<RatFn>& c) {
  const RatFn u = RatFn::var(var_t()) - 1;
  RatFn r;
  for (std::size_t i = c.size(); i-- > 0;) r = r * u + c[i];
  return r;
}

std::vector<RatFn> apply_in_u(const AlgElem& e, const RatFn& alpha, const std::vector<RatFn>& g) {
  std::vector<RatFn> out(g.size());
  for (const auto& [key, c] : e.terms()) {
    const auto [a, b] = key;
    for (std::size_t j = 0; j + b < g.size(); ++j) {
      const RatFn& gj = g[j + b];
      if (gj.is_zero()) continue;
      const RatFn lo = lowering(static_cast<long>(j + b), b, alpha);
      if (lo.is_zero()) continue;
      out[j] += c * RatFn(pow(Rat(static_cast<long>(j)), a)) * lo * gj;
    }
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

SynthesisResult synthesize_eigen(const RatFn& alpha, const SampleFn& sample, unsigned min_weight, unsigned max_weight,
                                 long extra) {
  std::map<long, EquationSample> cache;
  auto get = [&](long n) -> const EquationSample& {
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, sample(n)).first;
    return it->second;
  };
  std::string last_failure = "no ansatz tried";
  for (unsigned weight = min_weight; weight <= max_weight; ++weight) {
    const auto words = ansatz_words(weight);
    const std::size_t nw = words.size();
    const long n_det = static_cast<long>(nw) + extra;
    IncrementalSolver solver(nw);
    auto add_equations = [&](long n) {
      const EquationSample& smp = get(n);
      const std::size_t len = std::max(smp.g.size(), smp.h.size());
      for (std::size_t j = 0; j < len; ++j) {
        std::vector<RatFn> row(nw);
        bool any = false;
        for (std::size_t w = 0; w < nw; ++w) {
          const auto [a, b] = words[w];
          const RatFn gj = at(smp.g, j + b);
          if (gj.is_zero()) continue;
          const RatFn lo = lowering(static_cast<long>(j + b), b, alpha);
          if (lo.is_zero()) continue;
          row[w] = smp.scale * RatFn(pow(Rat(static_cast<long>(j)), a)) * lo * gj;
          any = any || !row[w].is_zero();
        }
        const RatFn rhs = at(smp.h, j);
        if (!any && rhs.is_zero()) continue;
        if (!solver.add_row(std::move(row), rhs)) return false;
      }
      return true;
    };
    bool ok = true;
    long n = 0;
    for (; n < n_det && ok; ++n) ok = add_equations(n);
    // Keep feeding equations while the solve is still underdetermined.
    for (; ok && !solver.full_rank() && n < 3 * n_det; ++n) ok = add_equations(n);
    if (!ok) {
      last_failure = "inconsistent for a+2b <= " + std::to_string(weight);
      continue;
    }
    if (!solver.full_rank())
      throw SolveError("ambiguous solution for a+2b <= " + std::to_string(weight) + " (rank " +
                       std::to_string(solver.rank()) + " of " + std::to_string(nw) + ")");
    const auto x = solver.solution();
    AlgElem op;
    for (std::size_t w = 0; w < nw; ++w)
      if (!x[w].is_zero()) op += AlgElem::monomial(words[w].first, words[w].second, x[w]);
    const long used = n;
    const long last = used + 2 * n_det - 1;
    bool certified = true;
    for (long m = used; m <= last && certified; ++m) {
      const EquationSample& smp = get(m);
      std::vector<RatFn> lhs = apply_in_u(op, alpha, smp.g);
      for (auto& c : lhs) c *= smp.scale;
      certified = same_coeffs(lhs, smp.h);
      if (!certified) last_failure = "certification failed at n = " + std::to_string(m);
    }
    cache.clear();
    if (!certified) continue;
    return {op, weight, nw, used, last};
  }
  throw SolveError("no operator with a+2b <= " + std::to_string(max_weight) + ": " + last_failure);
}

SynthesisResult synthesize_Bf(const RatFn& f, const KrallContext& ctx, unsigned max_wordlen, Var var) {
  if (!algebra_member(f, ctx, var).member) throw DomainError("f is not in the algebra: " + f.str());
  const RatFn e = krall_eigenvalue(f, var, ctx);
  const JacobiParams p = ctx.params();
  const auto deg = static_cast<unsigned>(coeffs_in(f, var).size() - 1);
  SampleFn sample = [&](long n) {
    EquationSample s;
    s.g = qhat_coeffs_u(n, 0, p, ctx.psis);
    const RatFn ev = at_n(e, RatFn(n));
    for (const auto& c : s.g) s.h.push_back(ev * c);
    return s;
  };
  return synthesize_eigen(ctx.alpha, sample, 2 * deg, std::max(max_wordlen, 2 * deg), static_cast<long>(ctx.k()) + 2);
}

SynthesisResult intertwiner_Bpsi(const KrallContext& ctx, unsigned max_wordlen) {
  const JacobiParams p = ctx.params();
  const JacobiParams lowered{ctx.alpha, RatFn(ctx.beta - static_cast<long>(ctx.k()))};
  const RatFn ab = ctx.alpha + RatFn(ctx.beta);
  SampleFn sample = [&](long n) {
    EquationSample s;
    s.g = jacobi_coeffs_u(n, lowered);
    s.h = qhat_coeffs_u(n, 0, p, ctx.psis);
    s.scale = c_factor(n, ctx.k(), ab);
    return s;
  };
  return synthesize_eigen(ctx.alpha, sample, 0, max_wordlen, static_cast<long>(ctx.k()) + 2);
}

namespace {

std::vector<RatFn> combine(const RatFn& x, const std::vector<RatFn>& a, const RatFn& y, const std::vector<RatFn>& b) {
  std::vector<RatFn> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x * at(a, i) + y * at(b, i);
  return out;
}

std::vector<RatFn> reflected_pair(const RatFn& r, const JacobiParams& p, long n) {
  const RatFn rn = at_n(r, RatFn(n));
  const RatFn rr = at_n(r, RatFn(-n) - p.alpha - p.beta);
  return combine(rn, jacobi_coeffs_u(n, p), rr, jacobi_coeffs_u(n - 1, p));
}

}  // namespace

SynthesisResult synthesize_sum_form(const RatFn& r, const JacobiParams& p, unsigned max_wordlen) {
  SampleFn sample = [&](long n) {
    EquationSample s;
    s.g = combine(RatFn(1), jacobi_coeffs_u(n, p), RatFn(1), jacobi_coeffs_u(n - 1, p));
    s.h = reflected_pair(r, p, n);
    return s;
  };
  return synthesize_eigen(p.alpha, sample, 0, max_wordlen, 2);
}

SynthesisResult synthesize_lowered_form(const RatFn& r, const JacobiParams& p, unsigned max_wordlen) {
  SampleFn sample = [&](long n) {
    EquationSample s;
    s.g = jacobi_coeffs_u(n, {p.alpha, p.beta - 1});
    s.h = reflected_pair(r, p, n);
    s.scale = RatFn(2 * n) + p.alpha + p.beta;
    return s;
  };
  return synthesize_eigen(p.alpha, sample, 0, max_wordlen, 2);
}

AlgElem shifted_hypergeometric(const RatFn& f, const KrallContext& ctx, Var var) {
  const RatFn k(static_cast<long>(ctx.k()));
  const RatFn ab = ctx.alpha + RatFn(ctx.beta);
  // M1^{alpha,beta-k} = G2 - G1^2 - (alpha+beta-k+1) G1
  const AlgElem m = AlgElem::g2() - AlgElem::g1() * AlgElem::g1() - AlgElem::g1() * (ab - k + 1);
  const RatFn half_k = k / RatFn(2);
  const AlgElem x = m + AlgElem::scalar(lambda_expr(half_k, -ab - 1));
  const auto cs = coeffs_in(f, var);
  AlgElem r;
  for (std::size_t i = cs.size(); i-- > 0;) r = r * x + AlgElem::scalar(cs[i]);
  return r;
}

IntertwiningReport verify_intertwining_1d(const AlgElem& bf, const AlgElem& bpsi, const RatFn& f, const KrallContext& ctx,
                                          Var var) {
  const AlgElem fm = shifted_hypergeometric(f, ctx, var);
  IntertwiningReport rep;
  rep.residual = rep_1d(bf, ctx.alpha) * rep_1d(bpsi, ctx.alpha) - rep_1d(bpsi, ctx.alpha) * rep_1d(fm, ctx.alpha);
  rep.algebra_residual = bf * bpsi - bpsi * fm;
  rep.pass = rep.residual.is_zero() && rep.algebra_residual.is_zero();
  return rep;
}

RatFn weighted_intertwiner_residual(const AlgElem& bpsi, const KrallContext& ctx, long n, long s) {
  const RatFn w = (1 - RatFn::var(var_t())).pow(static_cast<int>(s));
  const RatFn lhs = qhat_poly(n, s, ctx.params(), ctx.psis) * w;
  const JacobiParams lowered{ctx.alpha + RatFn(2 * s), RatFn(ctx.beta - static_cast<long>(ctx.k()))};
  const RatFn image = apply_realized(bpsi, op_D1(), op_D2s(ctx.alpha, RatFn(s)), jacobi_poly(n, lowered) * w);
  const RatFn rhs = chat_factor(n, ctx.k(), s, ctx.alpha + RatFn(ctx.beta)) * image;
  return (lhs - rhs) / w;
}

}  // namespace alde
