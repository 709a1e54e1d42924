#include <random>

#include "alde/error.hpp"
#include "alde/simplexnd.hpp"
#include "doctest.h"

using namespace alde;

namespace {

RatFn R(const char* s) { return parse_ratfn(s); }

SimplexParams params(std::initializer_list<Rat> g) {
  std::vector<RatFn> v;
  for (const auto& x : g) v.emplace_back(x);
  return SimplexParams::make(v);
}

// Integral of x1^a x2^b over the unit triangle: a! b! / (a+b+2)!.
Rat triangle_moment(unsigned a, unsigned b) {
  Rat num(1), den(1);
  for (unsigned i = 2; i <= a; ++i) num *= Rat(i);
  for (unsigned i = 2; i <= b; ++i) num *= Rat(i);
  for (unsigned i = 2; i <= a + b + 2; ++i) den *= Rat(i);
  return num / den;
}

Rat triangle_integral(const RatFn& f) {
  Rat s;
  const MPoly p = f.to_poly();
  for (const auto& [m, c] : p.terms()) s += c * triangle_moment(m.exponent(var_x(1)), m.exponent(var_x(2)));
  return s;
}

bool all_pass(const Report& r) {
  for (const auto& rec : r.records)
    if (!rec.pass) MESSAGE(rec.id << " " << rec.params.at("gamma") << " failed: " << rec.residual);
  return r.pass();
}

}  // namespace

TEST_CASE("multi-indices and counts") {
  CHECK(multi_indices(2, 2) == std::vector<MultiIndex>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(multi_indices_upto(3, 2).size() == 10);
  for (int d = 1; d <= 4; ++d)
    for (long n = 0; n <= 6; ++n) CHECK(static_cast<long>(multi_indices(d, n).size()) == dimension_count(d, n));
  CHECK(dimension_count(2, 4) == 5);
  CHECK(index_tail({1, 2, 3}, 2) == 5);
  CHECK_THROWS_AS(SimplexParams::make({RatFn(1)}), DomainError);
  const auto sp = params({1, 0, 0});
  CHECK(sp.alpha() == RatFn(1));
  CHECK(sp.alpha() + sp.beta() + 1 == sum_of(sp.gamma) + RatFn(sp.d));
}

TEST_CASE("simplex Jacobi polynomials: small cases") {
  const auto g0 = params({0, 0, 0});
  CHECK(simplex_jacobi({0, 0}, g0) == RatFn(1));
  CHECK(simplex_jacobi({1, 0}, g0) == R("3*x1 - 1"));
  // p_1^{0,0}(z2) (1 - x1) = (2 z2 - 1)(1 - x1)
  CHECK(simplex_jacobi({0, 1}, g0) == R("2*x2 + x1 - 1"));
  const auto g1 = params({Rat(1, 2), 3});
  CHECK(simplex_jacobi({2}, g1) == jacobi_poly(2, {RatFn(3), RatFn(Rat(1, 2))}).substitute(RatBindings{{var_t(), R("x1")}}));
  CHECK_THROWS_AS(simplex_jacobi({1, 0, 0}, g0), DomainError);
  CHECK_THROWS_AS(chvar_to_x(R("z2"), 2, 0), DomainError);
  CHECK(chvar_to_x(R("z2^2 + z1"), 2, 2) == R("x2^2 + x1*(1-x1)^2"));
}

TEST_CASE("simplex Jacobi polynomials are orthogonal on the triangle") {
  // oracle: term-wise integration with the Beta-integral formula
  const auto g0 = params({0, 0, 0});
  const auto etas = multi_indices_upto(2, 3);
  for (std::size_t i = 0; i < etas.size(); ++i) {
    const RatFn p = simplex_jacobi(etas[i], g0);
    CHECK(x_coefficients(p, 2).rbegin()->first.degree() == index_tail(etas[i]));
    for (std::size_t j = 0; j < i; ++j) CHECK(triangle_integral(p * simplex_jacobi(etas[j], g0)).is_zero());
    CHECK(triangle_integral(p * p) > Rat(0));
  }
}

TEST_CASE("spectral equations on the simplex") {
  for (const auto& sp : {params({0, 0, 0}), params({1, Rat(1, 2), 1}), params({Rat(-1, 2), 2, Rat(1, 3)})})
    CHECK(all_pass(verify_simplex_spectra(sp, 4)));
  CHECK(all_pass(verify_simplex_spectra(params({1, 0, Rat(1, 2), 0}), 3)));
  // d = 1 is the hypergeometric equation
  const auto d1 = params({Rat(1, 2), 2});
  CHECK(all_pass(verify_simplex_spectra(d1, 5)));
  // symbolic gamma at d = 2
  CHECK(all_pass(verify_simplex_spectra(SimplexParams::make(symbolic_gamma(2)), 2)));
  // a wrong gamma in the operator breaks it
  const auto sp = params({1, 0, 0});
  const RatFn p = simplex_jacobi({1, 1}, sp);
  CHECK_FALSE((op_Md(params({0, 0, 0}).gamma, 2).apply(p) - lambda_expr(RatFn(2), RatFn(4)) * p).is_zero());
}

TEST_CASE("Lauricella polynomials") {
  CHECK(lauricella_poly({0, 0}, params({1, 2, 3})) == RatFn(1));
  // d = 1, eta = (1): 1 - a/c1 x1 with a = 1 + |gamma| + 1
  const auto d1 = params({Rat(1, 2), 3});
  CHECK(lauricella_poly({1}, d1) == 1 - (RatFn(2) + sum_of(d1.gamma)) / RatFn(Rat(3, 2)) * R("x1"));
  CHECK(all_pass(verify_lauricella(params({0, 0, 0}), 3)));
  CHECK(all_pass(verify_lauricella(params({Rat(1, 2), Rat(-1, 3), 2}), 3)));
  CHECK(all_pass(verify_lauricella(SimplexParams::make(symbolic_gamma(2)), 2)));
}

TEST_CASE("decompositions under the change of variables") {
  CHECK(all_pass(verify_decompositions(params({1, Rat(1, 2), 2}), 3)));
  CHECK(all_pass(verify_decompositions(params({0, 1, 0, Rat(1, 3)}), 2)));
}

TEST_CASE("Q polynomials: small cases and the closed form for k = 1") {
  const auto sp = params({1, 0, 0});
  const auto ctx = KrallContext::make(sp.alpha(), 1, {RatFn(1)});
  CHECK(Q_poly({0, 0}, sp, ctx) == ctx.a[0]);
  CHECK(Q_poly({0, 0, 0}, params({1, 0, 0, Rat(-1)}), ctx) == ctx.a[0]);
  CHECK(Q_poly({3}, params({1, 0}), KrallContext::make(RatFn(0), 1, {RatFn(1)})) ==
        q_poly(3, {RatFn(0), RatFn(1)}, KrallContext::make(RatFn(0), 1, {RatFn(1)}).psis).substitute(
            RatBindings{{var_t(), R("x1")}}));
  CHECK_THROWS_AS(Q_poly({1, 0}, params({1, 1, 0}), ctx), DomainError);
  CHECK_THROWS_AS(Q_poly({1, 0}, params({2, 0, 0}), ctx), DomainError);

  // Q = (-1)^{|eta|+1}(2|eta|+c)/(c(c+2s)) (M^{(-1,gamma_2..)} - c a0)[P^{(0,gamma_2..)}], c = |gamma^2| + d
  for (const auto& g : {params({1, 0, 0}), params({1, Rat(1, 2), 1}), params({1, 1, 2})}) {
    for (const Rat a0 : {Rat(1), Rat(2, 3)}) {
      const auto c2 = KrallContext::make(g.alpha(), 1, {RatFn(a0)});
      const RatFn c = g.gamma_tail(2) + RatFn(2);
      std::vector<RatFn> gt = g.gamma;
      gt[0] = RatFn(-1);
      const DiffOp m = op_Md(gt, 2) - DiffOp::scalar(c * RatFn(a0));
      for (const auto& eta : multi_indices_upto(2, 3)) {
        const long n = index_tail(eta), s = index_tail(eta, 2);
        const RatFn pre = RatFn(n % 2 ? 1 : -1) * (RatFn(2 * n) + c) / (c * (c + RatFn(2 * s)));
        CHECK(Q_poly(eta, g, c2) == pre * m.apply(simplex_jacobi(eta, g.shifted(1))));
      }
    }
  }
}

TEST_CASE("multivariable Darboux transformation, k = 1") {
  for (const auto& sp : {params({1, 0, 0}), params({1, Rat(1, 2), 1}), params({1, 1, 2})}) {
    const auto ctx = KrallContext::make(sp.alpha(), 1, {RatFn(1)});
    const auto [f2, f3] = f2_f3_generators(ctx.alpha, ctx.a[0]);
    DarbouxData dd{ctx, intertwiner_Bpsi(ctx, 4).op, f2, synthesize_Bf(f2, ctx, 6).op};
    const Report r = verify_multivariable_darboux(sp, dd, 4);
    CHECK(all_pass(r));
    CHECK(r.records.size() == 3 * 15 + 2);
    // a wrong eigenvalue polynomial is caught
    DarbouxData bad = dd;
    bad.f = f3;
    CHECK_FALSE(verify_multivariable_darboux(sp, bad, 2).pass());
  }
  // d = 3 and a second member
  const auto sp3 = params({1, 0, Rat(1, 2), 0});
  const auto ctx = KrallContext::make(sp3.alpha(), 1, {RatFn(Rat(2, 3))});
  const auto [f2, f3] = f2_f3_generators(ctx.alpha, ctx.a[0]);
  CHECK(all_pass(verify_multivariable_darboux(sp3, {ctx, intertwiner_Bpsi(ctx, 4).op, f3, synthesize_Bf(f3, ctx, 8).op}, 2)));
}

TEST_CASE("multivariable Darboux transformation, k = 2") {
  const auto sp = params({2, Rat(1, 3), 0});
  const auto ctx = KrallContext::make(sp.alpha(), 2, {RatFn(Rat(2, 3)), RatFn(Rat(-5, 7))});
  const auto basis = member_basis(ctx, 5);
  REQUIRE(basis.size() == 1);
  DarbouxData dd{ctx, intertwiner_Bpsi(ctx, 12).op, basis[0], synthesize_Bf(basis[0], ctx, 12).op};
  const Report r = verify_multivariable_darboux(sp, dd, 2);
  CHECK(all_pass(r));
}

TEST_CASE("commutation relations") {
  const auto sp = params({1, Rat(1, 2), 1});
  const auto ctx = KrallContext::make(sp.alpha(), 1, {RatFn(Rat(2, 3))});
  const auto [f2, f3] = f2_f3_generators(ctx.alpha, ctx.a[0]);
  const auto b2 = synthesize_Bf(f2, ctx, 6).op;
  const auto b3 = synthesize_Bf(f3, ctx, 8).op;
  CHECK(all_pass(verify_commutants(sp, {b2, b3}, 1)));
  CHECK(all_pass(verify_commutants(params({0, 1, 0, 2}), {}, 2)));
  // d = 1: nothing beyond [D2h, D1h] = D2h and [H_{1,2}, M_1]
  CHECK(verify_commutants(params({1, 2}), {}, 1).records.size() == 2);
  // a generic operator does not commute
  CHECK_FALSE(commutator(op_H(sp.gamma, 1, 2, 2), op_Dh2(sp.gamma, 2)).is_zero());
}

TEST_CASE("commutation relations with symbolic gamma") {
  const auto sp = SimplexParams::make(symbolic_gamma(2));
  CHECK(all_pass(verify_commutants(sp, {}, 1)));
  // B_f2 with alpha = gamma_2 + gamma_3 + 1 and symbolic a0
  const RatFn alpha = R("alpha");
  const auto ctx = KrallContext::make(alpha, 1, {R("a0")}, 8);
  const auto b2 = synthesize_Bf(f2_f3_generators(alpha, R("a0")).first, ctx, 6).op;
  const AlgElem b2g = b2.substitute(RatBindings{{Var::named("alpha"), sp.alpha()}});
  auto g = sp.gamma;
  g[0] = RatFn(1);
  CHECK(all_pass(verify_commutants(SimplexParams::make(g), {b2g}, 1)));
}

TEST_CASE("basis property") {
  const auto sp = params({1, 0, 0});
  const auto ctx = KrallContext::make(sp.alpha(), 1, {RatFn(1)});
  const Report r = verify_basis(sp, ctx, 4);
  CHECK(all_pass(r));
  const auto sp3 = params({1, 0, 0, 0});
  CHECK(all_pass(verify_basis(sp3, KrallContext::make(sp3.alpha(), 1, {RatFn(1)}), 3)));
}

TEST_CASE("reports are ordered and thread count is configurable") {
  Report r;
  r.records = {{"b", {{"n", "1"}}, true, "0", 0}, {"a", {{"n", "2"}}, false, "x", 0}, {"a", {{"n", "1"}}, true, "0", 0}};
  r.sort();
  CHECK(r.records[0].id == "a");
  CHECK(r.records[0].params.at("n") == "1");
  CHECK(r.failures() == 1);
  CHECK_FALSE(r.pass());
  CHECK(worker_count() >= 1);
  const auto recs = run_checks({[]() -> CheckRecord { throw DomainError("boom"); }}, {"x"});
  CHECK_FALSE(recs[0].pass);
  CHECK(recs[0].id == "x");
}
