#include "alde/suites.hpp"

#include <charconv>

#include "alde/error.hpp"

namespace alde {

namespace {

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(',');
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

bool reserved(Var v) {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n{"t", "u", "n", "lam", "eps"};
    for (int i = 1; i <= 5; ++i) {
      n.push_back("x" + std::to_string(i));
      n.push_back("z" + std::to_string(i));
    }
    return n;
  }();
  for (const auto& n : names)
    if (v.name() == n) return true;
  return false;
}

RatFn parse_value(std::string_view key, std::string_view text) {
  RatFn v;
  try {
    v = parse_ratfn(text);
  } catch (const ParseError& e) {
    throw UsageError("--" + std::string(key) + ": " + e.what());
  }
  for (const Var x : v.num().variables())
    if (reserved(x)) throw UsageError("--" + std::string(key) + ": '" + x.name() + "' is not a parameter");
  for (const Var x : v.den().variables())
    if (reserved(x)) throw UsageError("--" + std::string(key) + ": '" + x.name() + "' is not a parameter");
  return v;
}

long parse_count(std::string_view key, std::string_view text, long lo, long hi) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v < lo || v > hi)
    throw UsageError("--" + std::string(key) + ": expected an integer in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "], got '" + std::string(text) + "'");
  return v;
}

std::optional<long> as_integer(const RatFn& v) {
  if (!v.is_constant()) return std::nullopt;
  const Rat r = v.to_rat();
  if (!r.is_integer()) return std::nullopt;
  return r.to_long();
}

std::string list_str(const std::vector<RatFn>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out;
}

Params one_dim_params(const KrallContext& ctx) {
  return {{"alpha", ctx.alpha.str()}, {"beta", std::to_string(ctx.beta)}, {"a", list_str(ctx.a)}};
}

Params with(Params p, const std::string& k, const std::string& v) {
  p[k] = v;
  return p;
}

CheckRecord record(std::string id, Params params, bool pass, std::string residual) {
  CheckRecord rec;
  rec.id = std::move(id);
  rec.params = std::move(params);
  rec.pass = pass;
  rec.residual = pass ? "0" : std::move(residual);
  return rec;
}

CheckRecord residual_record(std::string id, Params params, const RatFn& r) {
  return record(std::move(id), std::move(params), r.is_zero(), r.str());
}

// Synthesis runs before the checks that use it; a failure becomes a record.
struct Synth {
  std::optional<SynthesisResult> result;
  CheckRecord rec;
};

Synth run_synth(std::string id, Params params, const std::function<SynthesisResult()>& fn) {
  Synth s;
  try {
    s.result = fn();
    params["weight"] = std::to_string(s.result->weight);
    params["certified_to"] = std::to_string(s.result->certified_to);
    s.rec = record(std::move(id), std::move(params), true, "0");
  } catch (const Error& e) {
    s.rec = record(std::move(id), std::move(params), false, std::string("error: ") + e.what());
  }
  return s;
}

Report from_records(std::string suite, std::vector<CheckRecord> recs) {
  Report r;
  r.suite = std::move(suite);
  r.records = std::move(recs);
  return r;
}

// ------------------------------------------------------------------ suites

Report jacobi_suite(const Resolved& r) {
  const JacobiParams p{r.alpha, r.beta};
  const Params base{{"alpha", r.alpha.str()}, {"beta", r.beta.str()}};
  const RatFn ab = r.alpha + r.beta;
  TaskList tl;
  for (long n = 0; n <= r.nmax; ++n) {
    const Params pn = with(base, "n", std::to_string(n));
    tl.add("jacobi.spectral", [p, pn, n] { return residual_record("jacobi.spectral", pn, spectral_residual(n, p)); });
    tl.add("jacobi.recurrence",
           [p, pn, n] { return residual_record("jacobi.recurrence", pn, recurrence_residual(n, p)); });
    tl.add("jacobi.pfaff", [p, pn, n] {
      const bool ok = pfaff_check(n, p);
      return record("jacobi.pfaff", pn, ok, "transformed series differs");
    });
    // contiguous relations lowering beta; they divide by alpha + beta and alpha + beta - 1
    if (n >= 1 && !ab.is_zero())
      tl.add("jacobi.lower1", [p, pn, n] { return residual_record("jacobi.lower1", pn, n5_residual(n, p)); });
    if (n >= 1 && !ab.is_zero() && !(ab - RatFn(1)).is_zero())
      tl.add("jacobi.lower2", [p, pn, n] { return residual_record("jacobi.lower2", pn, n1_residual(n, p)); });
    for (long s = 1; s <= r.smax; ++s) {
      const Params ps = with(pn, "s", std::to_string(s));
      tl.add("jacobi.weighted_spectral",
             [p, ps, n, s] { return residual_record("jacobi.weighted_spectral", ps, m1s_residual(n, s, p)); });
    }
  }
  return tl.run("jacobi");
}

std::vector<CheckRecord> krall_checks(const KrallContext& ctx, const NamedMember& m, const SynthesisResult& bf,
                                      const std::optional<SynthesisResult>& bpsi, long nmax) {
  const Params base = with(one_dim_params(ctx), "f", m.name);
  const RatFn ev = krall_eigenvalue(m.f, var_t(), ctx);
  TaskList tl;
  tl.add("krall.member", [&ctx, &m, base] {
    const Membership mb = algebra_member(m.f, ctx);
    return record("krall.member", base, mb.member, mb.remainder.str());
  });
  for (long n = 0; n <= nmax; ++n)
    tl.add("krall.eigen", [&, n] {
      const RatFn q = q_poly(n, ctx.params(), ctx.psis);
      const RatFn lam = eval_in(ev, var_n(), RatFn(n));
      return residual_record("krall.eigen", with(base, "n", std::to_string(n)), rep_1d(bf.op, ctx.alpha).apply(q) - lam * q);
    });
  if (bpsi)
    tl.add("krall.intertwining", [&] {
      const IntertwiningReport ir = verify_intertwining_1d(bf.op, bpsi->op, m.f, ctx);
      return record("krall.intertwining", base, ir.pass, ir.algebra_residual.str());
    });
  return tl.run("krall").records;
}

std::vector<CheckRecord> intertwiner_checks(const KrallContext& ctx, const SynthesisResult& bpsi, long nmax, long smax) {
  const Params base = one_dim_params(ctx);
  const unsigned k = ctx.k();
  TaskList tl;
  for (long n = 0; n <= nmax; ++n)
    tl.add("krall.intertwiner", [&, n] {
      const RatFn q = q_poly(n, ctx.params(), ctx.psis);
      const RatFn p = jacobi_poly(n, {ctx.alpha, RatFn(ctx.beta - static_cast<long>(k))});
      const RatFn img = rep_1d(bpsi.op, ctx.alpha).apply(p);
      return residual_record("krall.intertwiner", with(base, "n", std::to_string(n)),
                             q - c_factor(n, k, ctx.alpha + RatFn(ctx.beta)) * img);
    });
  if (k == 1 && ctx.beta == 1)
    for (long s = 1; s <= smax; ++s)
      for (long n = 0; n <= nmax; ++n) {
        const Params ps = with(with(base, "n", std::to_string(n)), "s", std::to_string(s));
        tl.add("krall.weighted_intertwiner", [&, ps, n, s] {
          return residual_record("krall.weighted_intertwiner", ps, weighted_intertwiner_residual(bpsi.op, ctx, n, s));
        });
      }
  return tl.run("krall").records;
}

Report krall_suite(const Resolved& r) {
  const KrallContext ctx = r.context_1d();
  const Params base = one_dim_params(ctx);
  std::vector<CheckRecord> recs;
  recs.push_back(record("krall.tau", with(base, "tau", ctx.tau.str()), !ctx.tau.is_zero(), "tau vanishes"));
  Synth bpsi = run_synth("krall.synth_intertwiner", base, [&] { return intertwiner_Bpsi(ctx, r.wordlen); });
  recs.push_back(bpsi.rec);
  if (bpsi.result) {
    auto more = intertwiner_checks(ctx, *bpsi.result, r.nmax, r.smax);
    recs.insert(recs.end(), more.begin(), more.end());
  }
  const auto members = algebra_members(ctx);
  recs.push_back(record("krall.members", base, !members.empty(), "no nonconstant member found"));
  for (const auto& m : members) {
    Synth bf = run_synth("krall.synth", with(base, "f", m.name), [&] { return synthesize_Bf(m.f, ctx, r.wordlen); });
    recs.push_back(bf.rec);
    if (!bf.result) continue;
    auto more = krall_checks(ctx, m, *bf.result, bpsi.result, r.nmax);
    recs.insert(recs.end(), more.begin(), more.end());
  }
  return from_records("krall", std::move(recs));
}

Report simplex_suite(const Resolved& r) {
  Report out;
  out.suite = "simplex";
  out.append(verify_simplex_spectra(r.sp, r.nmax));
  out.append(verify_lauricella(r.sp, r.nmax));
  if (r.sp.d >= 2) out.append(verify_decompositions(r.sp, static_cast<unsigned>(r.nmax)));
  return out;
}

Report darboux_suite(const Resolved& r) {
  const KrallContext ctx = r.context_simplex();
  Params base{{"d", std::to_string(r.sp.d)}, {"gamma", r.sp.str()}, {"a", list_str(ctx.a)}};
  Report out;
  out.suite = "darboux";
  Synth bpsi = run_synth("darboux.synth_intertwiner", base, [&] { return intertwiner_Bpsi(ctx, r.wordlen); });
  out.records.push_back(bpsi.rec);
  if (!bpsi.result) return out;
  std::vector<AlgElem> bfs;
  for (const auto& m : algebra_members(ctx)) {
    Synth bf = run_synth("darboux.synth", with(base, "f", m.name), [&] { return synthesize_Bf(m.f, ctx, r.wordlen); });
    out.records.push_back(bf.rec);
    if (!bf.result) continue;
    bfs.push_back(bf.result->op);
    out.append(verify_multivariable_darboux(r.sp, DarbouxData{ctx, bpsi.result->op, m.f, bf.result->op}, r.nmax));
  }
  out.append(verify_commutants(r.sp, bfs, ctx.k()));
  out.append(verify_basis(r.sp, ctx, r.nmax));
  return out;
}

void require_sobolev_setting(const Resolved& r) {
  if (r.k() != 1) throw UsageError("orth: needs k = 1");
  if (r.int_beta() != 1) throw UsageError("orth: needs beta = 1");
}

bool sobolev_applies(const Resolved& r) {
  return r.k() == 1 && r.beta == RatFn(1) && r.sp.gamma[0] == RatFn(1);
}

Report orth_suite(const Resolved& r) {
  require_sobolev_setting(r);
  Report out;
  out.suite = "orth";
  out.append(verify_orthogonality_1d(r.context_1d(), r.nmax, r.smax));
  if (r.sp.gamma[0] != RatFn(1)) throw UsageError("orth: needs gamma_1 = 1 for the Sobolev form");
  out.append(verify_sobolev(r.sp, r.context_simplex(), r.nmax));
  out.append(verify_dirichlet_gram(r.sp, r.nmax));
  return out;
}

// ------------------------------------------------------------------ tables

std::vector<RatFn> t_coeffs(const RatFn& p, long len) {
  if (p.den().has_var(var_t())) throw DomainError("not a polynomial in t: " + p.str());
  const RatFn den(p.den());
  std::vector<RatFn> out(static_cast<std::size_t>(len), RatFn(0));
  const auto c = p.num().coeffs(var_t());
  if (static_cast<long>(c.size()) > len) throw DomainError("degree exceeds the table width: " + p.str());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = RatFn(c[i]) / den;
  return out;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  Json json = Json::array();
};

std::string render(const Table& t, std::string_view format) {
  if (format == "json") return dump(t.json);
  std::vector<std::vector<std::string>> all{t.header};
  all.insert(all.end(), t.rows.begin(), t.rows.end());
  return to_csv(all);
}

Table univariate_table(const Resolved& r, bool with_s, const std::function<RatFn(long, long)>& poly) {
  Table t;
  const long width = r.nmax + 1;
  t.header.push_back("n");
  if (with_s) t.header.push_back("s");
  for (long j = 0; j < width; ++j) t.header.push_back("t^" + std::to_string(j));
  t.header.push_back("poly");
  for (long s = 0; s <= (with_s ? r.smax : 0); ++s)
    for (long n = 0; n <= r.nmax; ++n) {
      const RatFn p = poly(n, s);
      const auto c = t_coeffs(p, width);
      std::vector<std::string> row{std::to_string(n)};
      if (with_s) row.push_back(std::to_string(s));
      Json jc = Json::array();
      for (const auto& x : c) {
        row.push_back(x.str());
        jc.push_back(x.str());
      }
      row.push_back(p.str());
      t.rows.push_back(std::move(row));
      Json j = Json::object();
      j["n"] = n;
      if (with_s) j["s"] = s;
      j["coeffs"] = std::move(jc);
      j["poly"] = p.str();
      t.json.push_back(std::move(j));
    }
  return t;
}

Table simplex_table(const Resolved& r, const std::function<RatFn(const MultiIndex&)>& poly) {
  Table t;
  t.header = {"eta", "poly"};
  for (const auto& eta : multi_indices_upto(r.sp.d, r.nmax)) {
    const RatFn p = poly(eta);
    t.rows.push_back({index_str(eta), p.str()});
    Json j = Json::object();
    j["eta"] = eta;
    j["poly"] = p.str();
    j["value"] = ratfn_to_json(p);
    t.json.push_back(std::move(j));
  }
  return t;
}

void add_operator(Table& t, const std::string& name, const std::string& f, const SynthesisResult& s) {
  for (const auto& [key, c] : s.op.terms())
    t.rows.push_back({name, std::to_string(key.first), std::to_string(key.second), c.str()});
  Json j = Json::object();
  j["name"] = name;
  j["f"] = f;
  j["weight"] = s.weight;
  j["op"] = alg_to_json(s.op);
  j["text"] = s.op.str();
  t.json.push_back(std::move(j));
}

Table operators_table(const Resolved& r) {
  const KrallContext ctx = r.context_1d();
  Table t;
  t.header = {"name", "a", "b", "coeff"};
  add_operator(t, "B_psi", "", intertwiner_Bpsi(ctx, r.wordlen));
  for (const auto& m : algebra_members(ctx)) add_operator(t, "B_" + m.name, m.f.str(), synthesize_Bf(m.f, ctx, r.wordlen));
  return t;
}

Table gram_table(const Resolved& r) {
  require_sobolev_setting(r);
  const Gram g = sobolev_gram(r.sp, r.context_simplex(), r.nmax);
  Table t;
  t.header.push_back("eta");
  for (const auto& eta : g.index) t.header.push_back(index_str(eta));
  Json index = Json::array(), entries = Json::array();
  for (std::size_t i = 0; i < g.index.size(); ++i) {
    std::vector<std::string> row{index_str(g.index[i])};
    Json jr = Json::array();
    for (const auto& x : g.entries[i]) {
      row.push_back(x.str());
      jr.push_back(x.str());
    }
    t.rows.push_back(std::move(row));
    index.push_back(g.index[i]);
    entries.push_back(std::move(jr));
  }
  t.json = Json::object();
  t.json["scale"] = scale_name(Scale::c_prime);
  t.json["index"] = std::move(index);
  t.json["entries"] = std::move(entries);
  t.json["symmetric"] = g.symmetric();
  t.json["diagonal"] = g.diagonal();
  t.json["diagonal_nonzero"] = g.diagonal_nonzero();
  return t;
}

}  // namespace

// ---------------------------------------------------------------- config

void RunConfig::set(std::string_view key, std::string_view value) {
  if (key == "alpha") {
    alpha = parse_value(key, value);
  } else if (key == "beta") {
    beta = parse_value(key, value);
  } else if (key == "a0") {
    a0 = parse_value(key, value);
  } else if (key == "gamma" || key == "a") {
    std::vector<RatFn> v;
    if (!(key == "a" && value.empty()))
      for (const auto part : split(value)) v.push_back(parse_value(key, part));
    (key == "gamma" ? gamma : a) = std::move(v);
  } else if (key == "d") {
    d = static_cast<int>(parse_count(key, value, 1, 5));
  } else if (key == "k") {
    k = static_cast<unsigned>(parse_count(key, value, 0, 8));
  } else if (key == "nmax") {
    nmax = parse_count(key, value, 0, 64);
  } else if (key == "smax") {
    smax = parse_count(key, value, 0, 64);
  } else if (key == "wordlen") {
    wordlen = static_cast<unsigned>(parse_count(key, value, 0, 64));
  } else {
    throw UsageError("unknown option '" + std::string(key) + "'");
  }
}

Resolved resolve(const RunConfig& c) {
  Resolved r;
  std::vector<RatFn> gamma;
  if (c.gamma) {
    gamma = *c.gamma;
    if (gamma.size() < 2 || gamma.size() > 6) throw UsageError("--gamma: expected 2 to 6 entries");
    if (c.d && static_cast<std::size_t>(*c.d) + 1 != gamma.size())
      throw UsageError("--d " + std::to_string(*c.d) + " does not match the " + std::to_string(gamma.size()) +
                       " entries of --gamma");
  } else {
    gamma.assign(static_cast<std::size_t>(c.d.value_or(2)) + 1, RatFn(0));
    gamma[0] = c.beta.value_or(RatFn(1));
  }
  r.sp = SimplexParams::make(gamma);
  r.alpha = c.alpha.value_or(r.sp.alpha());
  r.beta = c.beta.value_or(gamma[0]);
  if (c.a) {
    if (c.k && *c.k != c.a->size())
      throw UsageError("--k " + std::to_string(*c.k) + " does not match the " + std::to_string(c.a->size()) +
                       " entries of --a");
    r.a = *c.a;
  } else {
    r.a.assign(c.k.value_or(1), RatFn(1));
  }
  if (c.a0) {
    if (r.a.empty()) throw UsageError("--a0 given with k = 0");
    r.a[0] = *c.a0;
  }
  if (const auto b = as_integer(r.beta); b && static_cast<long>(r.k()) > *b)
    throw UsageError("k = " + std::to_string(r.k()) + " exceeds beta = " + std::to_string(*b));
  r.nmax = c.nmax;
  r.smax = c.smax;
  r.wordlen = c.wordlen;
  return r;
}

long Resolved::int_beta() const {
  const auto b = as_integer(beta);
  if (!b || *b < 0) throw UsageError("beta must be a nonnegative integer here, got " + beta.str());
  if (static_cast<long>(k()) > *b) throw UsageError("k = " + std::to_string(k()) + " exceeds beta = " + beta.str());
  return *b;
}

KrallContext Resolved::context_1d() const { return KrallContext::make(alpha, int_beta(), a); }

KrallContext Resolved::context_simplex() const {
  const auto b = as_integer(sp.gamma[0]);
  if (!b || *b < static_cast<long>(k()))
    throw UsageError("gamma_1 must be an integer >= k = " + std::to_string(k()) + ", got " + sp.gamma[0].str());
  return KrallContext::make(sp.alpha(), *b, a);
}

std::vector<NamedMember> algebra_members(const KrallContext& ctx, unsigned max_degree) {
  if (ctx.k() == 1 && ctx.beta == 1) {
    const auto [f2, f3] = f2_f3_generators(ctx.alpha, ctx.a[0]);
    return {{"f2", f2}, {"f3", f3}};
  }
  for (unsigned deg = 1; deg <= max_degree; ++deg) {
    const auto basis = member_basis(ctx, deg);
    if (basis.empty()) continue;
    std::vector<NamedMember> out;
    for (std::size_t i = 0; i < basis.size(); ++i) out.push_back({"f" + std::to_string(i + 1), basis[i]});
    return out;
  }
  return {};
}

Report run_suite(const RunConfig& cfg, std::string_view suite) {
  const Resolved r = resolve(cfg);
  Report out;
  if (suite == "jacobi") {
    out = jacobi_suite(r);
  } else if (suite == "krall") {
    out = krall_suite(r);
  } else if (suite == "simplex") {
    out = simplex_suite(r);
  } else if (suite == "darboux") {
    out = darboux_suite(r);
  } else if (suite == "orth") {
    out = orth_suite(r);
  } else if (suite == "multivariable") {
    out.append(simplex_suite(r));
    out.append(darboux_suite(r));
  } else if (suite == "all") {
    out.append(jacobi_suite(r));
    out.append(krall_suite(r));
    out.append(simplex_suite(r));
    out.append(darboux_suite(r));
    if (sobolev_applies(r)) out.append(orth_suite(r));
  } else {
    throw UsageError("unknown suite '" + std::string(suite) + "'");
  }
  out.suite = std::string(suite);
  out.sort();
  return out;
}

std::string export_table(const RunConfig& cfg, std::string_view kind, std::string_view format) {
  if (format != "json" && format != "csv") throw UsageError("unknown format '" + std::string(format) + "'");
  const Resolved r = resolve(cfg);
  Table t;
  if (kind == "jacobi") {
    const JacobiParams p{r.alpha, r.beta};
    t = univariate_table(r, false, [&](long n, long) { return jacobi_poly(n, p); });
  } else if (kind == "q" || kind == "qhat") {
    const KrallContext ctx = r.context_1d();
    t = univariate_table(r, kind == "qhat",
                         [&](long n, long s) { return qhat_poly(n, s, ctx.params(), ctx.psis); });
  } else if (kind == "simplex") {
    t = simplex_table(r, [&](const MultiIndex& eta) { return simplex_jacobi(eta, r.sp); });
  } else if (kind == "Q") {
    const KrallContext ctx = r.context_simplex();
    t = simplex_table(r, [&](const MultiIndex& eta) { return Q_poly(eta, r.sp, ctx); });
  } else if (kind == "operators") {
    t = operators_table(r);
  } else if (kind == "gram") {
    t = gram_table(r);
  } else {
    throw UsageError("unknown table '" + std::string(kind) + "'");
  }
  return render(t, format);
}

SynthOutput krall_synth(const RunConfig& cfg, std::string_view fspec) {
  const Resolved r = resolve(cfg);
  const KrallContext ctx = r.context_1d();
  const auto members = algebra_members(ctx);
  std::optional<NamedMember> chosen;
  if (fspec.empty()) {
    if (members.empty()) throw SolveError("no nonconstant member of degree <= 6");
    chosen = members.front();
  }
  for (const auto& m : members)
    if (!chosen && m.name == fspec) chosen = m;
  if (!chosen) {
    RatFn f;
    try {
      f = parse_ratfn(fspec);
    } catch (const ParseError& e) {
      throw UsageError(std::string("--f: ") + e.what());
    }
    if (!f.is_polynomial()) throw UsageError("--f: expected a polynomial in t");
    chosen = NamedMember{std::string(fspec), f};
  }

  const SynthesisResult bpsi = intertwiner_Bpsi(ctx, r.wordlen);
  const SynthesisResult bf = synthesize_Bf(chosen->f, ctx, r.wordlen);
  std::vector<CheckRecord> recs = krall_checks(ctx, *chosen, bf, bpsi, r.nmax);
  auto more = intertwiner_checks(ctx, bpsi, r.nmax, 0);
  recs.insert(recs.end(), more.begin(), more.end());
  SynthOutput out;
  out.report = from_records("krall.synth", std::move(recs));
  out.report.sort();

  auto op_json = [](const SynthesisResult& s) {
    Json j = Json::object();
    j["weight"] = s.weight;
    j["unknowns"] = s.unknowns;
    j["n_det"] = s.n_det;
    j["certified_to"] = s.certified_to;
    j["text"] = s.op.str();
    j["op"] = alg_to_json(s.op);
    return j;
  };
  out.json = Json::object();
  out.json["alpha"] = ctx.alpha.str();
  out.json["beta"] = std::to_string(ctx.beta);
  Json a = Json::array();
  for (const auto& x : ctx.a) a.push_back(x.str());
  out.json["a"] = std::move(a);
  out.json["f"] = chosen->f.str();
  out.json["B_f"] = op_json(bf);
  out.json["B_psi"] = op_json(bpsi);
  out.json["report"] = report_to_json(out.report);
  out.json["pass"] = out.report.pass();
  return out;
}

}  // namespace alde
