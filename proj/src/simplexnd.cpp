#include "alde/simplexnd.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <set>

#include "alde/error.hpp"
#include "alde/linalg.hpp"

namespace alde {

// ---------------------------------------------------------------- parameters

SimplexParams SimplexParams::make(std::vector<RatFn> gamma) {
  if (gamma.size() < 2) throw DomainError("gamma needs d+1 >= 2 entries");
  SimplexParams sp;
  sp.d = static_cast<int>(gamma.size()) - 1;
  sp.gamma = std::move(gamma);
  return sp;
}

RatFn SimplexParams::alpha() const { return sum_of(gamma, 1) + RatFn(d - 1); }

RatFn SimplexParams::gamma_tail(int j) const { return sum_of(gamma, static_cast<std::size_t>(j - 1)); }

SimplexParams SimplexParams::shifted(long k) const {
  SimplexParams out = *this;
  out.gamma[0] -= RatFn(k);
  return out;
}

SimplexParams SimplexParams::inner() const {
  if (d < 2) throw DomainError("inner simplex needs d >= 2");
  return make(std::vector<RatFn>(gamma.begin() + 1, gamma.end()));
}

std::string SimplexParams::str() const {
  std::string out;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (i) out += ",";
    out += gamma[i].str();
  }
  return out;
}

// ------------------------------------------------------------- multi-indices

long index_tail(const MultiIndex& eta, int j) {
  long s = 0;
  for (std::size_t i = static_cast<std::size_t>(j - 1); i < eta.size(); ++i) s += eta[i];
  return s;
}

std::string index_str(const MultiIndex& eta) {
  std::string out = "(";
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(eta[i]);
  }
  return out + ")";
}

namespace {

void fill_indices(int d, long n, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (static_cast<int>(cur.size()) == d - 1) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (long e = n; e >= 0; --e) {
    cur.push_back(e);
    fill_indices(d, n - e, cur, out);
    cur.pop_back();
  }
}

void check_index(const MultiIndex& eta, int d) {
  if (static_cast<int>(eta.size()) != d)
    throw DomainError("multi-index " + index_str(eta) + " needs " + std::to_string(d) + " entries");
  for (long e : eta)
    if (e < 0) throw DomainError("multi-index " + index_str(eta) + " has a negative entry");
}

}  // namespace

std::vector<MultiIndex> multi_indices(int d, long n) {
  if (d < 1) throw DomainError("dimension d must be at least 1");
  std::vector<MultiIndex> out;
  if (n < 0) return out;
  MultiIndex cur;
  fill_indices(d, n, cur, out);
  return out;
}

std::vector<MultiIndex> multi_indices_upto(int d, long nmax) {
  std::vector<MultiIndex> out;
  for (long n = 0; n <= nmax; ++n) {
    auto block = multi_indices(d, n);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

long dimension_count(int d, long n) {
  if (n < 0) return 0;
  // C(n+d-1, d-1) by the multiplicative formula
  long c = 1;
  for (long i = 1; i <= d - 1; ++i) c = c * (n + i) / i;
  return c;
}

// ------------------------------------------------------- change of variables

Var var_z(int i) { return indexed_var("z", i); }

namespace {

RatFn x(int i) { return RatFn::var(var_x(i)); }

RatFn t_to_x1(const RatFn& p) { return p.substitute(RatBindings{{var_t(), x(1)}}); }

bool free_of_x(const MPoly& p, int d) {
  for (int i = 1; i <= d; ++i)
    if (p.has_var(var_x(i))) return false;
  return true;
}

}  // namespace

RatFn z_to_x(const RatFn& f, int d) {
  RatBindings b;
  b.emplace(var_z(1), x(1));
  const RatFn inv = (1 - x(1)).inverse();
  for (int j = 2; j <= d; ++j) b.emplace(var_z(j), x(j) * inv);
  return f.substitute(b);
}

RatFn chvar_to_x(const RatFn& f, int d, unsigned s) {
  const RatFn r = z_to_x(f, d) * (1 - x(1)).pow(static_cast<int>(s));
  if (!free_of_x(r.den(), d)) throw DomainError("change of variables left a denominator: " + r.str());
  return r;
}

RatFn inner_to_z(const RatFn& q, int d) {
  RatBindings b;
  for (int i = 1; i < d; ++i) b.emplace(var_x(i), RatFn::var(var_z(i + 1)));
  return q.substitute(b);
}

// --------------------------------------------------------------- polynomials

RatFn simplex_jacobi(const MultiIndex& eta, const SimplexParams& sp) {
  check_index(eta, sp.d);
  if (sp.d == 1) return t_to_x1(jacobi_poly(eta[0], {sp.gamma[1], sp.gamma[0]}));
  const long s = index_tail(eta, 2);
  const RatFn outer = t_to_x1(jacobi_poly(eta[0], {sp.alpha() + RatFn(2 * s), sp.beta()}));
  const RatFn in = simplex_jacobi(MultiIndex(eta.begin() + 1, eta.end()), sp.inner());
  return outer * chvar_to_x(inner_to_z(in, sp.d), sp.d, static_cast<unsigned>(s));
}

RatFn lauricella_poly(const MultiIndex& eta, const SimplexParams& sp) {
  check_index(eta, sp.d);
  const int d = sp.d;
  const RatFn a = RatFn(index_tail(eta)) + sum_of(sp.gamma) + RatFn(d);
  // per-coordinate factors (-eta_j)_m / ((gamma_j+1)_m m!) x_j^m
  std::vector<std::vector<RatFn>> fac(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    RatFn c(1);
    for (long m = 0; m <= eta[j]; ++m) {
      fac[j].push_back(c);
      const RatFn den = (sp.gamma[j] + RatFn(1) + RatFn(m)) * RatFn(m + 1);
      if (den.is_zero()) throw DomainError("Lauricella series: vanishing (gamma_j+1)_m");
      c = c * RatFn(m - eta[j]) / den * x(j + 1);
    }
  }
  RatFn out;
  MultiIndex m(static_cast<std::size_t>(d), 0);
  while (true) {
    RatFn term = pochhammer(a, static_cast<unsigned>(index_tail(m)));
    for (int j = 0; j < d; ++j) term *= fac[j][m[j]];
    out += term;
    int j = 0;
    while (j < d && m[j] == eta[j]) m[j++] = 0;
    if (j == d) break;
    ++m[j];
  }
  return out;
}

RatFn Q_poly(const MultiIndex& eta, const SimplexParams& sp, const KrallContext& ctx) {
  check_index(eta, sp.d);
  if (!(ctx.alpha == sp.alpha())) throw DomainError("context alpha " + ctx.alpha.str() + " differs from " + sp.alpha().str());
  if (!(sp.beta() == RatFn(ctx.beta))) throw DomainError("context beta differs from gamma_1 = " + sp.beta().str());
  const long s = index_tail(eta, 2);
  const RatFn q = t_to_x1(qhat_poly(eta[0], s, ctx.params(), ctx.psis));
  if (sp.d == 1) return q;
  const RatFn in = simplex_jacobi(MultiIndex(eta.begin() + 1, eta.end()), sp.inner());
  return q * chvar_to_x(inner_to_z(in, sp.d), sp.d, static_cast<unsigned>(s));
}

std::map<Monomial, RatFn, GrlexLess> x_coefficients(const RatFn& p, int d) {
  if (!free_of_x(p.den(), d)) throw DomainError("not a polynomial in x: " + p.str());
  std::map<Monomial, std::vector<MPoly::Term>, GrlexLess> parts;
  for (const auto& [mono, c] : p.num().terms()) {
    Monomial xs;
    Monomial rest = mono;
    for (int i = 1; i <= d; ++i) {
      const auto id = var_x(i).id();
      xs.e[id] = mono.e[id];
      rest.e[id] = 0;
    }
    parts[xs].emplace_back(rest, c);
  }
  std::map<Monomial, RatFn, GrlexLess> out;
  for (auto& [xs, terms] : parts) out.emplace(xs, RatFn::make(MPoly::from_terms(std::move(terms)), p.den()));
  return out;
}

// -------------------------------------------------------------- verification

namespace {

CheckRecord residual_record(std::string id, Params params, const RatFn& r) {
  CheckRecord rec;
  rec.id = std::move(id);
  rec.params = std::move(params);
  rec.pass = r.is_zero();
  rec.residual = r.str();
  return rec;
}

CheckRecord operator_record(std::string id, Params params, const DiffOp& r) {
  CheckRecord rec;
  rec.id = std::move(id);
  rec.params = std::move(params);
  rec.pass = r.is_zero();
  rec.residual = r.is_zero() ? "0" : r.str();
  return rec;
}

Params base_params(const SimplexParams& sp) { return {{"d", std::to_string(sp.d)}, {"gamma", sp.str()}}; }

Params with(Params p, const std::string& k, const std::string& v) {
  p[k] = v;
  return p;
}

}  // namespace

Report verify_simplex_spectra(const SimplexParams& sp, long nmax) {
  const int d = sp.d;
  std::vector<DiffOp> ops;
  for (int j = 1; j <= d; ++j) ops.push_back(op_Mjd(sp.gamma, j, d));
  TaskList tl;
  for (const auto& eta : multi_indices_upto(d, nmax)) {
    tl.add("simplex.spectral", [&sp, &ops, eta, d] {
      const RatFn p = simplex_jacobi(eta, sp);
      std::string bad;
      for (int j = 1; j <= d; ++j) {
        const RatFn m = RatFn(index_tail(eta, j));
        const RatFn lam = lambda_expr(m, sp.gamma_tail(j) + RatFn(d + 1 - j));
        const RatFn r = ops[j - 1].apply(p) - lam * p;
        if (!r.is_zero() && bad.empty()) bad = "j=" + std::to_string(j) + ": " + r.str();
      }
      CheckRecord rec = residual_record("simplex.spectral", with(base_params(sp), "eta", index_str(eta)), RatFn());
      if (!bad.empty()) {
        rec.pass = false;
        rec.residual = bad;
      }
      return rec;
    });
  }
  for (long n = 0; n <= nmax; ++n) {
    tl.add("simplex.degree", [&sp, &ops, n, d] {
      std::set<std::string> seen;
      for (const auto& eta : multi_indices(d, n)) {
        const RatFn p = simplex_jacobi(eta, sp);
        seen.insert((ops[0].apply(p) / p).str());
      }
      CheckRecord rec;
      rec.id = "simplex.degree";
      rec.params = with(base_params(sp), "n", std::to_string(n));
      rec.pass = seen.size() == 1 && *seen.begin() == lambda_expr(RatFn(n), sum_of(sp.gamma) + RatFn(d)).str();
      rec.residual = rec.pass ? "0" : std::to_string(seen.size()) + " distinct eigenvalues";
      return rec;
    });
  }
  return tl.run("simplex");
}

Report verify_lauricella(const SimplexParams& sp, long nmax) {
  const DiffOp md = op_Md(sp.gamma, sp.d);
  TaskList tl;
  for (const auto& eta : multi_indices_upto(sp.d, nmax)) {
    tl.add("lauricella.pde", [&sp, md, eta] {
      const RatFn g = lauricella_poly(eta, sp);
      const RatFn n = RatFn(index_tail(eta));
      const RatFn r = md.apply(g) + n * (n + sum_of(sp.gamma) + RatFn(sp.d)) * g;
      return residual_record("lauricella.pde", with(base_params(sp), "eta", index_str(eta)), r);
    });
  }
  return tl.run("lauricella");
}

DiffOp shifted_appell_lauricella(const RatFn& f, Var var, const SimplexParams& sp, unsigned k) {
  const SimplexParams sk = sp.shifted(k);
  const RatFn half = RatFn(Rat(static_cast<long>(k), 2));
  const DiffOp arg = op_Md(sk.gamma, sp.d) + DiffOp::scalar(lambda_expr(half, -(sum_of(sp.gamma) + RatFn(sp.d))));
  const auto c = coeffs_in(f, var);
  DiffOp out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (!out.is_zero()) out = out * arg;
    out += DiffOp::scalar(c[i]);
  }
  return out;
}

Report verify_multivariable_darboux(const SimplexParams& sp, const DarbouxData& dd, long nmax) {
  const int d = sp.d;
  const KrallContext& ctx = dd.ctx;
  const unsigned k = ctx.k();
  const DiffOp h1 = op_Dh1(d);
  const DiffOp h2 = op_Dh2(sp.gamma, d);
  const SimplexParams sk = sp.shifted(k);
  const RatFn sigma = sum_of(sp.gamma) + RatFn(d - 1);
  const RatFn eig = krall_eigenvalue(dd.f, dd.var, ctx);
  Params base = base_params(sp);
  base["k"] = std::to_string(k);
  base["f"] = dd.f.str();

  TaskList tl;
  for (const auto& eta : multi_indices_upto(d, nmax)) {
    const Params pe = with(base, "eta", index_str(eta));
    tl.add("darboux.image", [&, eta, pe] {
      const long s = index_tail(eta, 2);
      const RatFn image = apply_realized(dd.bpsi, h1, h2, simplex_jacobi(eta, sk));
      const RatFn r = Q_poly(eta, sp, ctx) - chat_factor(eta[0], k, s, sigma) * image;
      return residual_record("darboux.image", pe, r);
    });
    tl.add("darboux.eigen", [&, eta, pe] {
      const RatFn q = Q_poly(eta, sp, ctx);
      const RatFn lam = eval_in(eig, var_n(), RatFn(index_tail(eta)));
      return residual_record("darboux.eigen", pe, apply_realized(dd.bf, h1, h2, q) - lam * q);
    });
    if (d >= 2) {
      tl.add("darboux.md", [&, eta, pe] {
        const RatFn q = Q_poly(eta, sp, ctx);
        std::string bad;
        for (int j = 2; j <= d; ++j) {
          const RatFn m = RatFn(index_tail(eta, j));
          const RatFn r = op_Mjd(sp.gamma, j, d).apply(q) + m * (m + sp.gamma_tail(j) + RatFn(d + 1 - j)) * q;
          if (!r.is_zero() && bad.empty()) bad = "j=" + std::to_string(j) + ": " + r.str();
        }
        CheckRecord rec = residual_record("darboux.md", pe, RatFn());
        if (!bad.empty()) {
          rec.pass = false;
          rec.residual = bad;
        }
        return rec;
      });
    }
  }
  tl.add("darboux.intertwining", [&] {
    const DiffOp bpsi = rep_multi(dd.bpsi, sp.gamma, d);
    const DiffOp lhs = rep_multi(dd.bf, sp.gamma, d) * bpsi;
    const DiffOp rhs = bpsi * shifted_appell_lauricella(dd.f, dd.var, sp, k);
    return operator_record("darboux.intertwining", base, lhs - rhs);
  });
  if (k == 1 && ctx.beta == 1) {
    tl.add("darboux.closed_form", [&] {
      std::vector<RatFn> gt = sp.gamma;
      gt[0] = RatFn(-1);
      const RatFn c = sp.gamma_tail(2) + RatFn(d);
      const DiffOp closed = (op_Md(gt, d) - DiffOp::scalar(c * ctx.a[0])) * (-(c * c).inverse());
      return operator_record("darboux.closed_form", base, rep_multi(dd.bpsi, sp.gamma, d) - closed);
    });
  }
  return tl.run("darboux");
}

Report verify_commutants(const SimplexParams& sp, const std::vector<AlgElem>& bfs, unsigned k) {
  const int d = sp.d;
  const Params base = base_params(sp);
  const DiffOp h1 = op_Dh1(d);
  const DiffOp h2 = op_Dh2(sp.gamma, d);
  TaskList tl;
  tl.add("comm.D2D1", [=] { return operator_record("comm.D2D1", base, commutator(h2, h1) - h2); });
  for (int j = 2; j <= d; ++j) {
    const Params pj = with(base, "j", std::to_string(j));
    tl.add("comm.MjD1", [=, &sp] { return operator_record("comm.MjD1", pj, commutator(op_Mjd(sp.gamma, j, d), h1)); });
    tl.add("comm.MjD2", [=, &sp] { return operator_record("comm.MjD2", pj, commutator(op_Mjd(sp.gamma, j, d), h2)); });
    tl.add("ind.Mj", [=, &sp] {
      return operator_record("ind.Mj", with(pj, "k", std::to_string(k)),
                             op_Mjd(sp.shifted(k).gamma, j, d) - op_Mjd(sp.gamma, j, d));
    });
  }
  for (int i = 1; i <= d + 1; ++i)
    for (int j = i + 1; j <= d + 1; ++j) {
      const Params pij = with(base, "ij", std::to_string(i) + "," + std::to_string(j));
      tl.add("comm.HM", [=, &sp] {
        return operator_record("comm.HM", pij, commutator(op_H(sp.gamma, i, j, d), op_Md(sp.gamma, d)));
      });
    }

  // images of the B_f, shared by the remaining checks
  auto images = std::make_shared<std::vector<DiffOp>>();
  for (const auto& b : bfs) images->push_back(rep_multi(b, sp.gamma, d));
  for (std::size_t b = 0; b < bfs.size(); ++b) {
    for (int i = 2; i <= d + 1; ++i)
      for (int j = i + 1; j <= d + 1; ++j) {
        Params p = with(base, "ij", std::to_string(i) + "," + std::to_string(j));
        p["op"] = "B" + std::to_string(b);
        tl.add("comm.HBf", [=, &sp] { return operator_record("comm.HBf", p, commutator(op_H(sp.gamma, i, j, d), (*images)[b])); });
      }
  }
  std::vector<std::pair<std::string, DiffOp>> family;
  for (std::size_t b = 0; b < bfs.size(); ++b) family.emplace_back("B" + std::to_string(b), (*images)[b]);
  for (int j = 2; j <= d; ++j) family.emplace_back("M" + std::to_string(j), op_Mjd(sp.gamma, j, d));
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      const Params p = with(base, "pair", family[a].first + "," + family[b].first);
      const DiffOp& u = family[a].second;
      const DiffOp& v = family[b].second;
      tl.add("comm.pair", [p, u, v] { return operator_record("comm.pair", p, commutator(u, v)); });
    }
  return tl.run("commutants");
}

Report verify_decompositions(const SimplexParams& sp, unsigned max_degree) {
  const int d = sp.d;
  if (d < 2) throw DomainError("decompositions need d >= 2");
  const SimplexParams in = sp.inner();
  const RatFn alpha = sp.alpha();
  const RatFn z1 = RatFn::var(var_z(1));
  const RatFn t = RatFn::var(var_t());
  const DiffOp md = op_Md(sp.gamma, d);
  const DiffOp m2d = op_Mjd(sp.gamma, 2, d);
  const DiffOp h1 = op_Dh1(d);
  const DiffOp h2 = op_Dh2(sp.gamma, d);
  const DiffOp min = op_Md(in.gamma, d - 1);
  const DiffOp m1 = op_M1(alpha, sp.beta());
  const DiffOp d1 = op_D1();
  const DiffOp d2 = op_D2(alpha);
  auto to_z1 = [z1](const RatFn& f) { return f.substitute(RatBindings{{var_t(), z1}}); };

  TaskList tl;
  for (unsigned a = 0; a <= max_degree; ++a)
    for (long qd = 0; qd <= static_cast<long>(max_degree - a); ++qd)
      for (const auto& m : multi_indices(d - 1, qd)) {
        RatFn q(1);
        for (int i = 0; i < d - 1; ++i) q *= x(i + 1).pow(static_cast<int>(m[i]));
        const RatFn p = t.pow(static_cast<int>(a));
        Params par = base_params(sp);
        par["p"] = p.str();
        par["q"] = q.str();
        const RatFn qz = inner_to_z(q, d);
        const RatFn mqz = inner_to_z(min.apply(q), d);
        const RatFn big = z_to_x(to_z1(p) * qz, d);
        const RatFn pz = to_z1(p);
        tl.add("split.Md", [=] {
          const RatFn rhs = to_z1(m1.apply(p)) * qz + pz / (1 - z1) * mqz;
          return residual_record("split.Md", par, md.apply(big) - z_to_x(rhs, d));
        });
        tl.add("split.M2d", [=] { return residual_record("split.M2d", par, m2d.apply(big) - z_to_x(pz * mqz, d)); });
        tl.add("d1fact", [=] { return residual_record("d1fact", par, h1.apply(big) - z_to_x(to_z1(d1.apply(p)) * qz, d)); });
        tl.add("d2fact", [=] {
          const RatFn rhs = to_z1(d2.apply(p)) * qz + pz / (1 - z1) * mqz;
          return residual_record("d2fact", par, h2.apply(big) - z_to_x(rhs, d));
        });
      }
  return tl.run("decompositions");
}

Report verify_basis(const SimplexParams& sp, const KrallContext& ctx, long nmax) {
  const int d = sp.d;
  const Params base = base_params(sp);
  const auto etas = multi_indices_upto(d, nmax);
  std::vector<RatFn> qs(etas.size());
  TaskList build;
  for (std::size_t i = 0; i < etas.size(); ++i)
    build.add("basis.degree", [&, i] {
      qs[i] = Q_poly(etas[i], sp, ctx);
      unsigned deg = 0;
      for (const auto& [mono, c] : x_coefficients(qs[i], d)) deg = std::max(deg, mono.degree());
      CheckRecord rec;
      rec.id = "basis.degree";
      rec.params = with(base, "eta", index_str(etas[i]));
      rec.pass = static_cast<long>(deg) == index_tail(etas[i]);
      rec.residual = rec.pass ? "0" : "degree " + std::to_string(deg);
      return rec;
    });
  Report out = build.run("basis");

  for (long n = 0; n <= nmax; ++n) {
    // independent count: monomials of degree n in d variables
    long monomials = 0;
    std::function<void(int, long)> walk = [&](int i, long left) {
      if (i == d - 1) {
        ++monomials;
        return;
      }
      for (long v = 0; v <= left; ++v) walk(i + 1, left - v);
    };
    walk(0, n);
    const long got = static_cast<long>(multi_indices(d, n).size());
    CheckRecord rec;
    rec.id = "basis.count";
    rec.params = with(base, "n", std::to_string(n));
    rec.pass = got == monomials && got == dimension_count(d, n);
    rec.residual = rec.pass ? "0" : std::to_string(got) + " vs " + std::to_string(monomials);
    out.records.push_back(rec);
  }

  std::map<Monomial, std::size_t, GrlexLess> cols;
  std::vector<std::map<Monomial, RatFn, GrlexLess>> rows;
  for (const auto& q : qs) {
    rows.push_back(x_coefficients(q, d));
    for (const auto& [mono, c] : rows.back()) cols.emplace(mono, 0);
  }
  std::size_t c = 0;
  for (auto& [mono, idx] : cols) idx = c++;
  RatMatrix m(rows.size(), std::vector<RatFn>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [mono, v] : rows[i]) m[i][cols.at(mono)] = v;
  const std::size_t rk = rank(m);
  long expect = 0;
  for (long n = 0; n <= nmax; ++n) expect += dimension_count(d, n);
  CheckRecord rec;
  rec.id = "basis.rank";
  rec.params = with(with(base, "nmax", std::to_string(nmax)), "rank", std::to_string(rk));
  rec.pass = static_cast<long>(rk) == expect && static_cast<long>(rows.size()) == expect;
  rec.residual = rec.pass ? "0" : "rank " + std::to_string(rk) + " of " + std::to_string(expect);
  out.records.push_back(rec);
  return out;
}

}  // namespace alde
