#include <random>

#include "alde/error.hpp"
#include "alde/krall.hpp"
#include "alde/linalg.hpp"
#include "doctest.h"

using namespace alde;

namespace {

RatFn R(const char* s) { return parse_ratfn(s); }

AlgElem G1() { return AlgElem::g1(); }
AlgElem G2() { return AlgElem::g2(); }
AlgElem S(const RatFn& c) { return AlgElem::scalar(c); }

// Reference fourth-order operator, written with D2 to the left.
AlgElem reference_bf2() {
  const RatFn al = R("alpha"), a0 = R("a0");
  const AlgElem g1 = G1(), g2 = G2();
  const AlgElem g11 = g1 * g1;
  return g11 * g11 - S(2) * g2 * g11 + g2 * g2 + S(2 * (1 + al)) * g11 * g1 - S(2 * al) * g2 * g1 +
         S(1 + 2 * a0 + 3 * al + 2 * a0 * al + al * al) * g11 - S(2 * (1 + a0 + a0 * al)) * g2 +
         S((1 + al) * (al + 2 * a0 * (1 + al))) * g1 -
         S(RatFn(Rat(1, 16)) * (3 + 2 * al) * (3 + 6 * al + 8 * a0 * (1 + al)));
}

// B[q_n] - ev(n) q_n computed with the t-space operator, independent of the u-coefficient path.
RatFn kr1_residual(const AlgElem& b, const RatFn& f, const KrallContext& ctx, long n) {
  const RatFn q = q_poly(n, ctx.params(), ctx.psis);
  const RatFn ev = krall_eigenvalue(f, var_t(), ctx).substitute(RatBindings{{var_n(), RatFn(n)}});
  return rep_1d(b, ctx.alpha).apply(q) - ev * q;
}

Rat random_rat(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  return Rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("scalar factors c and chat") {
  const RatFn ab = R("alpha+beta");
  for (long n = 0; n <= 5; ++n) {
    const RatFn sign = (n % 2) ? RatFn(-1) : RatFn(1);
    CHECK(c_factor(n, 1, ab) == sign * (2 * RatFn(n) + ab));
    CHECK(c_factor(n, 4, ab) == RatFn(1));
    CHECK(c_factor(n, 2, ab) == 2 * RatFn(n) + ab - 1);
    CHECK(c_factor(n, 3, ab) == sign);
    for (unsigned k = 0; k <= 4; ++k) CHECK(chat_factor(n, k, 0, ab) == c_factor(n, k, ab));
  }
  // k=1, beta=1 weighted factor in the explicit example
  const RatFn al = R("alpha");
  for (long n = 0; n <= 3; ++n)
    for (long s = 0; s <= 2; ++s) {
      const RatFn sign = ((n + s) % 2) ? RatFn(-1) : RatFn(1);
      CHECK(chat_factor(n, 1, s, al + 1) == sign * (2 * RatFn(n + s) + al + 1) * (al + 1) / (al + 1 + 2 * RatFn(s)));
    }
  CHECK_THROWS_AS(chat_factor(0, 2, 1, RatFn(-1)), DomainError);
}

TEST_CASE("context for k = 1, beta = 1") {
  const auto ctx = KrallContext::make(R("alpha"), 1, {R("a0")}, 10);
  CHECK(ctx.tau == R("a0 + (n+1)*(n+alpha+1)/(alpha+1)"));
  CHECK_THROWS_AS(KrallContext::make(RatFn(0), 1, {RatFn(1), RatFn(1)}), DomainError);
  // tau_0 = a0 + 1 vanishes for a0 = -1
  CHECK_THROWS_AS(KrallContext::make(RatFn(0), 1, {RatFn(-1)}), DomainError);
}

TEST_CASE("algebra membership") {
  const auto ctx = KrallContext::make(R("alpha"), 1, {R("a0")}, 10);
  const auto [f2, f3] = f2_f3_generators(R("alpha"), R("a0"));
  CHECK(algebra_member(RatFn(1), ctx).member);
  CHECK(algebra_member(f2, ctx).member);
  CHECK(algebra_member(f3, ctx).member);
  CHECK(algebra_member(f2 * f3, ctx).member);
  CHECK(algebra_member(f2 * f2 - 3 * f3, ctx).member);
  CHECK_FALSE(algebra_member(R("t"), ctx).member);
  CHECK_FALSE(algebra_member(R("t^2"), ctx).member);
  CHECK(f2_f3_generators(RatFn(0), RatFn(0)).first == R("t^2 - 3/2*t"));

  // the witness really is the quotient
  const Membership m = algebra_member(f3, ctx);
  const RatFn n = RatFn::var(var_n());
  const RatFn e = krall_eigenvalue(f3, var_t(), ctx);
  CHECK(e - e.substitute(RatBindings{{var_n(), n - 1}}) ==
        m.quotient * ctx.tau.substitute(RatBindings{{var_n(), n - 1}}));

  // members of degree <= 3 modulo constants: exactly span{f2, f3}
  const auto basis = member_basis(ctx, 3);
  REQUIRE(basis.size() == 2);
  for (const auto& b : basis) CHECK(algebra_member(b, ctx).member);
  RatMatrix mat;
  for (const auto& f : {basis[0], basis[1], f2, f3}) {
    auto c = coeffs_in(f, var_t());
    c.resize(4);
    mat.push_back(c);
  }
  CHECK(rank(mat) == 2);
}

TEST_CASE("u-coefficient action agrees with the t-space operator") {
  std::mt19937 rng(7);
  const RatFn al = R("alpha");
  for (int trial = 0; trial < 6; ++trial) {
    AlgElem e;
    for (int i = 0; i < 4; ++i)
      e += AlgElem::monomial(rng() % 3, rng() % 3, RatFn(random_rat(rng)) + (i == 0 ? al : RatFn(0)));
    RatFn p;
    for (int j = 0; j <= 4; ++j) p += RatFn(random_rat(rng)) * RatFn::var(var_t()).pow(j);
    CHECK(from_u_coeffs(apply_in_u(e, al, to_u_coeffs(p))) == rep_1d(e, al).apply(p));
  }
}

TEST_CASE("intertwiner for k = 1, beta = 1 matches the reference operator") {
  const RatFn al = R("alpha"), a0 = R("a0");
  const auto ctx = KrallContext::make(al, 1, {a0}, 10);
  const SynthesisResult r = intertwiner_Bpsi(ctx, 4);
  const AlgElem expected = S((1 + al).pow(-2)) * (-G2() + G1() * G1() + S(al) * G1() + S((1 + al) * a0));
  CHECK(r.op == expected);
  CHECK(r.weight == 2);
  // the same operator written through the hypergeometric operator with beta = -1
  CHECK(rep_1d(r.op, al) == (op_M1(al, RatFn(-1)) - DiffOp::scalar((1 + al) * a0)) * (-(1 + al).pow(-2)));
  for (long n = 0; n <= 6; ++n) {
    const RatFn lhs = q_poly(n, ctx.params(), ctx.psis);
    CHECK(lhs == c_factor(n, 1, al + 1) * rep_1d(r.op, al).apply(jacobi_poly(n, {al, RatFn(0)})));
  }
}

TEST_CASE("B_f2 matches the reference normal form (symbolic alpha, a0)") {
  const RatFn al = R("alpha"), a0 = R("a0");
  const auto ctx = KrallContext::make(al, 1, {a0}, 10);
  const auto [f2, f3] = f2_f3_generators(al, a0);
  const SynthesisResult r = synthesize_Bf(f2, ctx, 6);
  CHECK(r.weight == 4);
  CHECK(r.n_det == static_cast<long>(r.unknowns) + 3);
  CHECK(r.certified_to >= 3 * r.n_det - 1);
  CHECK(r.op == reference_bf2());
  for (long n = 0; n <= 4; ++n) CHECK(kr1_residual(r.op, f2, ctx, n).is_zero());
}

TEST_CASE("k = 1, beta = 1 at rational parameters") {
  for (const auto& [al, a0] : {std::pair{Rat(0), Rat(1)}, std::pair{Rat(1, 2), Rat(2, 3)}}) {
    const auto ctx = KrallContext::make(RatFn(al), 1, {RatFn(a0)}, 40);
    const auto [f2, f3] = f2_f3_generators(RatFn(al), RatFn(a0));
    const auto b2 = synthesize_Bf(f2, ctx, 6);
    const auto b3 = synthesize_Bf(f3, ctx, 8);
    const auto bp = intertwiner_Bpsi(ctx, 4);
    CHECK(b3.weight == 6);
    CHECK(rep_1d(b3.op, RatFn(al)).order() == 6);
    CHECK(b2.op == reference_bf2().specialize({{Var::named("alpha"), al}, {Var::named("a0"), a0}}));
    for (long n = 0; n <= 10; ++n) {
      CHECK(kr1_residual(b2.op, f2, ctx, n).is_zero());
      CHECK(kr1_residual(b3.op, f3, ctx, n).is_zero());
    }
    CHECK(verify_intertwining_1d(b2.op, bp.op, f2, ctx).pass);
    CHECK(verify_intertwining_1d(b3.op, bp.op, f3, ctx).pass);
    const auto one = verify_intertwining_1d(AlgElem::identity(), bp.op, RatFn(1), ctx);
    CHECK(one.pass);
    // commutative subalgebra, and f -> B_f is multiplicative
    CHECK(b2.op * b3.op == b3.op * b2.op);
    const auto b23 = synthesize_Bf(f2 * f3, ctx, 10);
    CHECK(b23.op == b2.op * b3.op);
    // a wrong f breaks the intertwining
    CHECK_FALSE(verify_intertwining_1d(b2.op, bp.op, f3, ctx).pass);
  }
}

TEST_CASE("weighted intertwiner") {
  const RatFn al = R("alpha"), a0 = R("a0");
  const auto ctx = KrallContext::make(al, 1, {a0}, 10);
  const AlgElem bp = intertwiner_Bpsi(ctx, 4).op;
  for (long s = 0; s <= 2; ++s)
    for (long n = 0; n <= 4; ++n) CHECK(weighted_intertwiner_residual(bp, ctx, n, s).is_zero());
  // with p_n^{alpha,0} in place of p_n^{alpha+2s,0} the identity fails once s, n >= 1
  const RatFn w = 1 - RatFn::var(var_t());
  const RatFn lhs = qhat_poly(1, 1, ctx.params(), ctx.psis) * w;
  const RatFn img = apply_realized(bp, op_D1(), op_D2s(al, RatFn(1)), jacobi_poly(1, {al, RatFn(0)}) * w);
  CHECK_FALSE((lhs - chat_factor(1, 1, 1, al + 1) * img).is_zero());
}

TEST_CASE("identity cases") {
  const auto ctx = KrallContext::make(R("alpha"), 1, {R("a0")}, 10);
  CHECK(synthesize_Bf(RatFn(1), ctx, 2).op == AlgElem::identity());
  CHECK(synthesize_Bf(RatFn(5), ctx, 2).op == S(5));
  const auto k0 = KrallContext::make(R("alpha"), 2, {}, 10);
  CHECK(intertwiner_Bpsi(k0, 2).op == AlgElem::identity());
  CHECK_THROWS_AS(synthesize_Bf(R("t"), ctx, 6), DomainError);
  const auto [f2, f3] = f2_f3_generators(R("alpha"), R("a0"));
  // order 6 is needed for f3; a zero-extra-weight cap does not reach it
  const auto num = KrallContext::make(RatFn(0), 1, {RatFn(1)}, 20);
  const auto g3 = f2_f3_generators(RatFn(0), RatFn(1)).second;
  CHECK_NOTHROW(synthesize_Bf(g3, num, 6));
  CHECK_THROWS_AS(intertwiner_Bpsi(num, 1), SolveError);
}

TEST_CASE("k = 2, beta = 2 with random a") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 2; ++trial) {
    const Rat al = trial == 0 ? Rat(1, 2) : Rat(0);
    std::vector<RatFn> a{RatFn(random_rat(rng)), RatFn(random_rat(rng))};
    KrallContext ctx;
    try {
      ctx = KrallContext::make(RatFn(al), 2, a, 60);
    } catch (const DomainError&) {
      continue;
    }
    // tau has degree 9, so no nonconstant member below degree 5
    CHECK(member_basis(ctx, 4).empty());
    const auto basis = member_basis(ctx, 5);
    REQUIRE(basis.size() == 1);
    const RatFn f = basis[0];
    const auto bp = intertwiner_Bpsi(ctx, 12);
    const auto bf = synthesize_Bf(f, ctx, 12);
    CHECK(bf.weight == 10);
    CHECK(verify_intertwining_1d(bf.op, bp.op, f, ctx).pass);
    for (long n = 0; n <= 5; ++n) CHECK(kr1_residual(bf.op, f, ctx, n).is_zero());
  }
}

TEST_CASE("operators for reflected pairs") {
  const JacobiParams p{R("1/2"), R("3")};
  for (const char* r : {"n", "n^2", "n^3 - 2*n + 1/3"}) {
    const RatFn rn = R(r);
    const auto sum = synthesize_sum_form(rn, p, 8);
    const auto low = synthesize_lowered_form(rn, p, 8);
    for (long n = 0; n <= 6; ++n) {
      const RatFn lhs = rn.substitute(RatBindings{{var_n(), RatFn(n)}}) * jacobi_poly(n, p) +
                        rn.substitute(RatBindings{{var_n(), RatFn(-n) - p.alpha - p.beta}}) * jacobi_poly(n - 1, p);
      CHECK(lhs == rep_1d(sum.op, p.alpha).apply(jacobi_poly(n, p) + jacobi_poly(n - 1, p)));
      CHECK(lhs == (2 * RatFn(n) + p.alpha + p.beta) *
                       rep_1d(low.op, p.alpha).apply(jacobi_poly(n, {p.alpha, p.beta - 1})));
    }
  }
}
