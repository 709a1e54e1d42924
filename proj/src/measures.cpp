#include "alde/measures.hpp"

#include "alde/error.hpp"

namespace alde {

namespace {

void require_above_minus_one(const Rat& v, const std::string& what) {
  if (!(v > Rat(-1))) throw DomainError(what + " = " + v.str() + " must exceed -1");
}

Rat constant_of(const RatFn& f, const std::string& what) {
  if (!f.is_constant()) throw DomainError(what + " must be rational, got " + f.str());
  return f.to_rat();
}

MPoly poly_of(const RatFn& f) {
  if (!f.is_polynomial()) throw DomainError("expected a polynomial, got " + f.str());
  return f.to_poly();
}

unsigned total(const std::vector<unsigned>& k) {
  unsigned s = 0;
  for (unsigned v : k) s += v;
  return s;
}

std::vector<unsigned> exponents_x(const Monomial& m, int d, int from = 1) {
  std::vector<unsigned> out;
  for (int i = from; i <= d; ++i) out.push_back(m.exponent(var_x(i)));
  return out;
}

void check_no_params(const MPoly& p, int d) {
  for (const auto& [m, c] : p.terms()) {
    unsigned inx = 0;
    for (int i = 1; i <= d; ++i) inx += m.exponent(var_x(i));
    if (inx != m.degree()) throw DomainError("integrand has symbolic coefficients: " + p.str());
  }
}

Rat value_at_zero(const RatFn& p) { return p.substitute(RatBindings{{var_t(), RatFn(0)}}).to_rat(); }

}  // namespace

std::string scale_name(Scale s) {
  switch (s) {
    case Scale::unit:
      return "unit";
    case Scale::base:
      return "base";
    case Scale::c_prime:
      return "C'";
  }
  return "?";
}

MomentValue& MomentValue::operator+=(const MomentValue& o) {
  if (scale != o.scale) throw DomainError("cannot add moments on scales " + scale_name(scale) + " and " + scale_name(o.scale));
  value += o.value;
  return *this;
}

std::string MomentValue::str() const {
  return scale == Scale::unit ? value.str() : value.str() + " * " + scale_name(scale);
}

MomentValue beta_moment(unsigned m, const Rat& alpha, const Rat& beta, bool normalized) {
  require_above_minus_one(alpha, "alpha");
  require_above_minus_one(beta, "beta");
  const Rat ratio = pochhammer(beta + Rat(1), m) / pochhammer(alpha + beta + Rat(2), m);
  if (normalized) return {ratio, Scale::unit};
  if (beta.is_integer()) {
    // B(alpha+1, beta+m+1) = (beta+m)! / (alpha+1)_{beta+m+1}
    const unsigned b = static_cast<unsigned>(beta.to_long());
    return {factorial(b + m) / pochhammer(alpha + Rat(1), b + m + 1), Scale::unit};
  }
  return {ratio, Scale::base};
}

MomentValue dirichlet_moment(const std::vector<unsigned>& kappa, const std::vector<Rat>& gamma, bool normalized) {
  if (gamma.size() < 2) throw DomainError("gamma needs d+1 >= 2 entries");
  const std::size_t d = gamma.size() - 1;
  if (kappa.size() != d && kappa.size() != d + 1)
    throw DomainError("kappa needs " + std::to_string(d) + " or " + std::to_string(d + 1) + " entries");
  Rat gsum;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    require_above_minus_one(gamma[i], "gamma_" + std::to_string(i + 1));
    gsum += gamma[i];
  }
  Rat num(1);
  for (std::size_t i = 0; i < kappa.size(); ++i) num *= pochhammer(gamma[i] + Rat(1), kappa[i]);
  const Rat v = num / pochhammer(gsum + Rat(static_cast<long>(d + 1)), total(kappa));
  return {v, normalized ? Scale::unit : Scale::base};
}

std::vector<Rat> rational_gamma(const SimplexParams& sp) {
  std::vector<Rat> out;
  for (const auto& g : sp.gamma) out.push_back(constant_of(g, "gamma"));
  return out;
}

Rat dirichlet_integral(const RatFn& f, const SimplexParams& sp) {
  const auto g = rational_gamma(sp);
  const MPoly p = poly_of(f);
  check_no_params(p, sp.d);
  Rat s;
  for (const auto& [m, c] : p.terms()) s += c * dirichlet_moment(exponents_x(m, sp.d), g, true).value;
  return s;
}

Rat beta_integral(const RatFn& p, const Rat& alpha) {
  require_above_minus_one(alpha, "alpha");
  const MPoly q = poly_of(p);
  Rat s;
  for (const auto& [m, c] : q.terms()) {
    if (m.degree() != m.exponent(var_t())) throw DomainError("integrand is not a polynomial in t: " + q.str());
    const unsigned j = m.exponent(var_t());
    s += c * factorial(j) / pochhammer(alpha + Rat(1), j + 1);
  }
  return s;
}

namespace {

struct OneDim {
  Rat alpha;
  Rat a0;
};

OneDim one_dim(const KrallContext& ctx) {
  if (ctx.k() != 1 || ctx.beta != 1) throw DomainError("orthogonality checks need k = 1 and beta = 1");
  OneDim o{constant_of(ctx.alpha, "alpha"), constant_of(ctx.a[0], "a0")};
  require_above_minus_one(o.alpha, "alpha");
  if (o.a0.is_zero()) throw DomainError("a0 must be nonzero");
  return o;
}

}  // namespace

Rat qhat_prefactor(const KrallContext& ctx, long s) {
  const OneDim o = one_dim(ctx);
  return Rat(1) + Rat(s) * (o.alpha + Rat(s)) / (o.a0 * (o.alpha + Rat(1)));
}

Rat orth_check_q(const KrallContext& ctx, long n, long m) { return orth_check_qhat(ctx, 0, n, m); }

Rat orth_check_qhat(const KrallContext& ctx, long s, long n, long m) {
  const OneDim o = one_dim(ctx);
  const RatFn qn = qhat_poly(n, s, ctx.params(), ctx.psis);
  const RatFn qm = qhat_poly(m, s, ctx.params(), ctx.psis);
  const Rat bulk = beta_integral(qn * qm, o.alpha + Rat(2 * s));
  return qhat_prefactor(ctx, s) * bulk + value_at_zero(qn) * value_at_zero(qm) / (o.a0 * (o.alpha + Rat(1)));
}

Rat sobolev_base_ratio(const SimplexParams& sp) {
  // C  = Gamma(1) prod_{i>=2} Gamma(g_i+1) / Gamma(|g^2| + d + 1)
  // C' =          prod_{i>=2} Gamma(g_i+1) / Gamma(|g^2| + d)
  const auto g = rational_gamma(sp);
  Rat g2;
  for (std::size_t i = 1; i < g.size(); ++i) g2 += g[i];
  return Rat(1) / pochhammer(g2 + Rat(sp.d), 1);
}

Rat sobolev_bulk_moment(const std::vector<unsigned>& kappa, const SimplexParams& sp) {
  if (static_cast<int>(kappa.size()) != sp.d) throw DomainError("kappa needs d entries");
  const auto g = rational_gamma(sp);
  Rat g2;
  for (std::size_t i = 1; i < g.size(); ++i) {
    require_above_minus_one(g[i], "gamma_" + std::to_string(i + 1));
    g2 += g[i];
  }
  Rat num = factorial(kappa[0]);
  for (int i = 1; i < sp.d; ++i) num *= pochhammer(g[i] + Rat(1), kappa[i]);
  return num / pochhammer(g2 + Rat(sp.d), total(kappa) + 1);
}

Rat sobolev_boundary_moment(const std::vector<unsigned>& kappa, const SimplexParams& sp) {
  if (static_cast<int>(kappa.size()) != sp.d - 1) throw DomainError("kappa needs d-1 entries");
  const auto g = rational_gamma(sp);
  Rat g2;
  for (std::size_t i = 1; i < g.size(); ++i) {
    require_above_minus_one(g[i], "gamma_" + std::to_string(i + 1));
    g2 += g[i];
  }
  Rat num(1);
  for (int i = 0; i < sp.d - 1; ++i) num *= pochhammer(g[i + 1] + Rat(1), kappa[i]);
  return num / pochhammer(g2 + Rat(sp.d), total(kappa));
}

namespace {

Rat bulk_integral(const MPoly& p, const SimplexParams& sp) {
  check_no_params(p, sp.d);
  Rat s;
  for (const auto& [m, c] : p.terms()) s += c * sobolev_bulk_moment(exponents_x(m, sp.d), sp);
  return s;
}

Rat boundary_integral(const MPoly& p, const SimplexParams& sp) {
  check_no_params(p, sp.d);
  Rat s;
  for (const auto& [m, c] : p.terms()) {
    if (m.exponent(var_x(1)) != 0) throw DomainError("boundary integrand depends on x1");
    s += c * sobolev_boundary_moment(exponents_x(m, sp.d, 2), sp);
  }
  return s;
}

MPoly at_x1_zero(const MPoly& p) { return p.substitute(Bindings{{var_x(1), MPoly(0)}}); }

// Parts of <f, g> that depend on f alone.
struct SobolevSide {
  MPoly f, f0, mf;
};

SobolevSide sobolev_side(const RatFn& f, const SimplexParams& sp) {
  SobolevSide s;
  s.f = poly_of(f);
  s.f0 = at_x1_zero(s.f);
  if (sp.d >= 2) s.mf = op_Mjd(sp.gamma, 2, sp.d).apply(s.f);
  return s;
}

Rat sobolev_pair(const SobolevSide& f, const SobolevSide& g, const SimplexParams& sp, const Rat& a0, const Rat& g2d) {
  const Rat w = Rat(1) / (a0 * g2d);
  return bulk_integral(f.f * g.f, sp) + w * (boundary_integral(f.f0 * g.f0, sp) - bulk_integral(f.mf * g.f, sp));
}

Rat gamma2_plus_d(const SimplexParams& sp) {
  const auto g = rational_gamma(sp);
  Rat g2;
  for (std::size_t i = 1; i < g.size(); ++i) g2 += g[i];
  return g2 + Rat(sp.d);
}

}  // namespace

MomentValue sobolev_inner(const RatFn& f, const RatFn& g, const SimplexParams& sp, const Rat& a0) {
  if (a0.is_zero()) throw DomainError("a0 must be nonzero");
  return {sobolev_pair(sobolev_side(f, sp), sobolev_side(g, sp), sp, a0, gamma2_plus_d(sp)), Scale::c_prime};
}

bool Gram::symmetric() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!(entries[i][j] == entries[j][i])) return false;
  return true;
}

bool Gram::diagonal() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries.size(); ++j)
      if (i != j && !entries[i][j].is_zero()) return false;
  return true;
}

bool Gram::diagonal_nonzero() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i][i].is_zero()) return false;
  return true;
}

namespace {

Gram pairwise(std::vector<MultiIndex> index, const std::function<Rat(std::size_t, std::size_t)>& entry) {
  Gram g;
  const std::size_t n = index.size();
  g.index = std::move(index);
  g.entries.assign(n, std::vector<Rat>(n));
  parallel_for(n * n, [&](std::size_t k) { g.entries[k / n][k % n] = entry(k / n, k % n); });
  return g;
}

}  // namespace

Gram sobolev_gram(const SimplexParams& sp, const KrallContext& ctx, long nmax) {
  const Rat a0 = constant_of(ctx.a.at(0), "a0");
  if (a0.is_zero()) throw DomainError("a0 must be nonzero");
  const Rat g2d = gamma2_plus_d(sp);
  auto etas = multi_indices_upto(sp.d, nmax);
  std::vector<SobolevSide> sides(etas.size());
  parallel_for(etas.size(), [&](std::size_t i) { sides[i] = sobolev_side(Q_poly(etas[i], sp, ctx), sp); });
  return pairwise(std::move(etas), [&](std::size_t i, std::size_t j) { return sobolev_pair(sides[i], sides[j], sp, a0, g2d); });
}

Gram dirichlet_gram(const SimplexParams& sp, long nmax) {
  auto etas = multi_indices_upto(sp.d, nmax);
  std::vector<RatFn> ps(etas.size());
  parallel_for(etas.size(), [&](std::size_t i) { ps[i] = simplex_jacobi(etas[i], sp); });
  return pairwise(std::move(etas), [&](std::size_t i, std::size_t j) { return dirichlet_inner(ps[i], ps[j], sp); });
}

// ------------------------------------------------------------- verification

namespace {


CheckRecord rat_record(std::string id, Params p, const Rat& r, bool pass) {
  CheckRecord rec;
  rec.id = std::move(id);
  rec.params = std::move(p);
  rec.pass = pass;
  rec.residual = r.str();
  return rec;
}

Params ctx_params(const KrallContext& ctx) { return {{"alpha", ctx.alpha.str()}, {"a0", ctx.a.at(0).str()}}; }

}  // namespace

Report verify_orthogonality_1d(const KrallContext& ctx, long nmax, long smax) {
  one_dim(ctx);
  std::vector<CheckTask> tasks;
  std::vector<std::string> ids;
  for (long s = 0; s <= smax; ++s)
    for (long n = 0; n <= nmax; ++n)
      for (long m = n; m <= nmax; ++m) {
        const std::string id = n == m ? (s == 0 ? "orth.q.norm" : "orth.qhat.norm") : (s == 0 ? "orth.q" : "orth.qhat");
        Params p = ctx_params(ctx);
        p["s"] = std::to_string(s);
        p["n"] = std::to_string(n);
        p["m"] = std::to_string(m);
        ids.push_back(id);
        tasks.push_back([&ctx, id, p, s, n, m] {
          const Rat r = orth_check_qhat(ctx, s, n, m);
          // the diagonal of the q_n form is a norm; for s > 0 only nonvanishing is claimed
          const bool pass = n != m ? r.is_zero() : (s == 0 ? r > Rat(0) : !r.is_zero());
          return rat_record(id, p, r, pass);
        });
      }
  Report out;
  out.suite = "orth";
  out.records = run_checks(tasks, ids);
  return out;
}

Report verify_sobolev(const SimplexParams& sp, const KrallContext& ctx, long nmax) {
  const Gram g = sobolev_gram(sp, ctx, nmax);
  const OneDim o = one_dim(ctx);
  const int d = sp.d;
  const std::size_t n = g.index.size();
  Params base{{"d", std::to_string(d)}, {"gamma", sp.str()}, {"a0", o.a0.str()}};

  // pieces of the factorized form
  std::vector<RatFn> inner(n), qhat(n);
  parallel_for(n, [&](std::size_t i) {
    const auto& eta = g.index[i];
    qhat[i] = qhat_poly(eta[0], index_tail(eta, 2), ctx.params(), ctx.psis);
    inner[i] = d >= 2 ? simplex_jacobi(MultiIndex(eta.begin() + 1, eta.end()), sp.inner()) : RatFn(1);
  });
  auto inner_factor = [&](std::size_t i, std::size_t j) {
    return d >= 2 ? dirichlet_inner(inner[i], inner[j], sp.inner()) : Rat(1);
  };
  auto bracket = [&](std::size_t i, std::size_t j) {
    const long s = index_tail(g.index[i], 2), sb = index_tail(g.index[j], 2);
    const Rat lam = -Rat(s) * (Rat(s) + o.alpha);
    const Rat w = Rat(1) / (o.a0 * (o.alpha + Rat(1)));
    return (Rat(1) - lam * w) * beta_integral(qhat[i] * qhat[j], o.alpha + Rat(s + sb)) +
           w * value_at_zero(qhat[i]) * value_at_zero(qhat[j]);
  };

  std::vector<CheckTask> tasks;
  std::vector<std::string> ids;
  auto add = [&](std::string id, CheckTask t) {
    ids.push_back(std::move(id));
    tasks.push_back(std::move(t));
  };
  for (std::size_t i = 0; i < n; ++i) {
    Params pi = base;
    pi["eta"] = index_str(g.index[i]);
    add("sobolev.norm", [&g, pi, i] { return rat_record("sobolev.norm", pi, g.entries[i][i], !g.entries[i][i].is_zero()); });
    for (std::size_t j = i; j < n; ++j) {
      Params pij = pi;
      pij["xi"] = index_str(g.index[j]);
      add("sobolev.factor", [&, pij, i, j] {
        const Rat r = g.entries[i][j] - inner_factor(i, j) * bracket(i, j);
        return rat_record("sobolev.factor", pij, r, r.is_zero());
      });
      if (i == j) continue;
      add("sobolev.orth", [&g, pij, i, j] {
        const Rat& v = g.entries[i][j];
        return rat_record("sobolev.orth", pij, v, v.is_zero() && g.entries[j][i].is_zero());
      });
      const bool same_tail = std::equal(g.index[i].begin() + 1, g.index[i].end(), g.index[j].begin() + 1);
      if (!same_tail) {
        add("sobolev.case_a", [&, pij, i, j] {
          const Rat r = inner_factor(i, j);
          return rat_record("sobolev.case_a", pij, r, r.is_zero());
        });
      } else {
        add("sobolev.case_b", [&, pij, i, j] {
          const Rat r = orth_check_qhat(ctx, index_tail(g.index[i], 2), g.index[i][0], g.index[j][0]);
          return rat_record("sobolev.case_b", pij, r, r.is_zero());
        });
      }
    }
  }
  Report out;
  out.suite = "sobolev";
  out.records = run_checks(tasks, ids);
  CheckRecord sym;
  sym.id = "sobolev.symmetric";
  sym.params = base;
  sym.params["nmax"] = std::to_string(nmax);
  sym.pass = g.symmetric();
  sym.residual = sym.pass ? "0" : "asymmetric";
  out.records.push_back(sym);
  return out;
}

Report verify_dirichlet_gram(const SimplexParams& sp, long nmax) {
  const Gram g = dirichlet_gram(sp, nmax);
  Report out;
  out.suite = "dirichlet";
  const Params base{{"d", std::to_string(sp.d)}, {"gamma", sp.str()}};
  for (std::size_t i = 0; i < g.index.size(); ++i)
    for (std::size_t j = i; j < g.index.size(); ++j) {
      Params p = base;
      p["eta"] = index_str(g.index[i]);
      p["xi"] = index_str(g.index[j]);
      const Rat& v = g.entries[i][j];
      out.records.push_back(i == j ? rat_record("dirichlet.norm", p, v, v > Rat(0))
                                   : rat_record("dirichlet.orth", p, v, v.is_zero() && g.entries[j][i].is_zero()));
    }
  return out;
}

}  // namespace alde
