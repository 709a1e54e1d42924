#include "alde/error.hpp"
#include "alde/jacobi1d.hpp"
#include "doctest.h"

using namespace alde;

namespace {

RatFn R(const char* s) { return parse_ratfn(s); }
JacobiParams J(const Rat& a, const Rat& b) { return {RatFn(a), RatFn(b)}; }

// Plain 2F1(-n, n+a+b+1; b+1; t) with the standard prefactor, term by term in Rat.
MPoly jacobi_oracle(long n, const Rat& a, const Rat& b) {
  const auto un = static_cast<unsigned>(n);
  const Rat pre = ((n % 2) ? Rat(-1) : Rat(1)) * pochhammer(a + b + 1, un) / factorial(un) * pochhammer(b + 1, un) /
                  pochhammer(a + 1, un);
  MPoly out;
  for (unsigned j = 0; j <= un; ++j)
    out += MPoly::var("t", j) * (pochhammer(Rat(-n), j) * pochhammer(Rat(n) + a + b + 1, j) /
                                 (factorial(j) * pochhammer(b + 1, j)));
  return out * pre;
}

// int_0^1 f(t) t^b (1-t)^a dt up to the constant B(b+1, a+1): sum c_j (b+1)_j/(a+b+2)_j.
Rat beta_integral(const MPoly& f, const Rat& a, const Rat& b) {
  Rat s(0);
  for (const auto& [m, c] : f.terms()) {
    const unsigned j = m.exponent(var_t());
    s += c * pochhammer(b + 1, j) / pochhammer(a + b + 2, j);
  }
  return s;
}

}  // namespace

TEST_CASE("jacobi polynomials") {
  CHECK(jacobi_poly(0, J(3, 5)) == RatFn(1));
  CHECK(jacobi_poly(-1, J(0, 0)).is_zero());
  CHECK(jacobi_poly(1, J(0, 0)) == R("2*t-1"));
  CHECK(jacobi_poly(1, J(1, 0)) == R("3*t-1"));
  CHECK(jacobi_poly(1, J(0, 1)) == R("6*t-4"));
  for (const Rat& a : {Rat(0), Rat(1, 2), Rat(2)})
    for (const Rat& b : {Rat(0), Rat(1), Rat(3, 2)})
      for (long n = 0; n <= 6; ++n) CHECK(jacobi_poly(n, J(a, b)).to_poly() == jacobi_oracle(n, a, b));
  CHECK_THROWS_AS(jacobi_poly(2, J(-2, 0)), DomainError);
}

TEST_CASE("jacobi polynomials are orthogonal") {
  const Rat a(1, 2), b(1);
  for (long n = 0; n <= 5; ++n)
    for (long m = 0; m < n; ++m) {
      const MPoly pn = jacobi_poly(n, J(a, b)).to_poly(), pm = jacobi_poly(m, J(a, b)).to_poly();
      CHECK(beta_integral(pn * pm, a, b) == 0);
    }
}

TEST_CASE("pfaff") {
  CHECK(pfaff_check(1, J(0, 0)));
  CHECK(pfaff_check(0, {R("alpha"), R("beta")}));
  for (long n = 0; n <= 6; ++n) CHECK(pfaff_check(n, {R("alpha"), R("beta")}));
}

TEST_CASE("recurrence coefficients") {
  const Recurrence r = recurrence_coeffs(0, J(1, 0));
  CHECK(r.A == RatFn(Rat(1, 3)));
  CHECK(r.C.is_zero());
  CHECK(r.B == RatFn(Rat(1, 3)));
  const Recurrence r2 = recurrence_coeffs(2, J(0, 0));
  CHECK(r2.A == RatFn(Rat(9, 30)));
  CHECK(r2.C == RatFn(Rat(4, 20)));
  CHECK(r2.B == r2.A + r2.C);
  CHECK(recurrence_coeffs(0, J(0, 0)).C.is_zero());
  // alpha + beta = 0 with alpha != beta: C_0 is set to 0, B_0 still needs its limit
  const Recurrence r3 = recurrence_coeffs(0, J(Rat(1, 2), Rat(-1, 2)));
  CHECK(r3.C.is_zero());
  CHECK(r3.B == RatFn(Rat(1, 4)));
  for (const Rat b : {Rat(-1, 2), Rat(1, 2), Rat(3, 4), Rat(-2, 3)}) {
    for (long n = 0; n <= 3; ++n) CHECK(recurrence_residual(n, J(-b, b)).is_zero());
    // t p_0 = A_0 p_1 + B_0 p_0 at t = 0
    const Recurrence rb = recurrence_coeffs(0, J(-b, b));
    const RatFn p10 = jacobi_poly(1, J(-b, b)).substitute(RatBindings{{var_t(), RatFn(0)}});
    CHECK(rb.A * p10 + rb.B == RatFn(0));
  }
  CHECK_THROWS_AS(recurrence_coeffs(0, J(Rat(-1, 2), Rat(-1, 2))), DomainError);
  for (long n = 0; n <= 6; ++n) CHECK(recurrence_residual(n, {R("alpha"), R("beta")}).is_zero());
}

TEST_CASE("degenerate parameters via perturbation") {
  // alpha + beta = -1 makes A_0 singular and p_n = 0 for n >= 1.
  const JacobiParams p{R("-1/2 + eps"), R("-1/2")};
  for (long n = 0; n <= 4; ++n) CHECK(recurrence_residual(n, p).is_zero());
  CHECK(jacobi_poly(2, J(Rat(-1, 2), Rat(-1, 2))).is_zero());
}

TEST_CASE("lambda") {
  CHECK(lambda_val(Rat(2), Rat(3)) == -10);
  CHECK(lambda_val(Rat(0), Rat(7, 2)) == 0);
  CHECK(lambda_val(Rat(5, 2), Rat(3)) == Rat(-55, 4));
  CHECK(lambda_val(Rat(3), Rat(2)) + lambda_val(Rat(1, 2), Rat(-3)) == Rat(-55, 4));
  const RatFn n = R("n"), sig = R("sigma"), k = R("k");
  CHECK(lambda_val(n - k / 2, sig) == lambda_val(n, sig - k) + lambda_val(k / 2, -sig));
}

TEST_CASE("classical identities with symbolic parameters") {
  const JacobiParams p{R("alpha"), R("beta")};
  for (long n = 0; n <= 5; ++n) {
    CHECK(spectral_residual(n, p).is_zero());
    CHECK(n5_residual(n, p).is_zero());
    CHECK(n1_residual(n, p).is_zero());
    for (long s = 0; s <= 2; ++s) {
      CHECK(m1s_residual(n, s, p).is_zero());
      CHECK(n5s_residual(n, s, p).is_zero());
      CHECK(n1s_residual(n, s, p).is_zero());
    }
  }
  CHECK(n3_residual(p, R("s")).is_zero());
}

TEST_CASE("q polynomials") {
  const JacobiParams p = J(0, 1);
  const auto psis = psi_family(RatFn(0), 1, {RatFn(1)});
  CHECK(q_poly(0, p, psis) == RatFn(1));
  CHECK(q_poly(1, p, psis) == R("3-12*t"));
  for (long n = 0; n <= 4; ++n) CHECK(q_poly(n, p, {}) == jacobi_poly(n, p));
  for (long n = 0; n <= 6; ++n) CHECK(coeffs_in(q_poly(n, p, psis), var_t()).size() == static_cast<std::size_t>(n + 1));
}

TEST_CASE("q-hat") {
  const RatFn alpha = R("alpha"), a0 = R("a0");
  const JacobiParams p{alpha, RatFn(1)};
  const auto psis = psi_family(alpha, 1, {a0});
  for (long n = 0; n <= 3; ++n) CHECK(qhat_poly(n, 0, p, psis) == q_poly(n, p, psis));
  for (long s = 0; s <= 2; ++s) {
    const RatFn rs(s);
    const RatFn as = (a0 * (1 + alpha) + rs * (rs + alpha)) / (alpha + 2 * rs + 1);
    const JacobiParams ps{alpha + 2 * rs, RatFn(1)};
    const auto psis_s = psi_family(alpha + 2 * rs, 1, {as});
    const RatFn scale = ((s % 2) ? RatFn(-1) : RatFn(1)) * (alpha + 2 * rs + 1) / (alpha + 1);
    for (long n = 0; n <= 3; ++n) CHECK(qhat_poly(n, s, p, psis) == scale * q_poly(n, ps, psis_s));
  }
  const auto num = psi_family(RatFn(0), 1, {RatFn(1)});
  CHECK(qhat_poly(0, 1, J(0, 1), num) == RatFn(-2));
}

TEST_CASE("recovered recurrence") {
  const JacobiParams p = J(0, 1);
  for (long n = 1; n <= 4; ++n) {
    const Recurrence r = recover_recurrence(n, p, {});
    const Recurrence c = recurrence_coeffs(n, p);
    CHECK(r.A == c.A);
    CHECK(r.B == c.B);
    CHECK(r.C == c.C);
  }
  const auto psis = psi_family(RatFn(0), 1, {RatFn(1)});
  for (long n = 0; n <= 5; ++n) {
    const Recurrence r = recover_recurrence(n, p, psis);
    const RatFn res = RatFn::var(var_t()) * q_poly(n, p, psis) -
                      (r.A * q_poly(n + 1, p, psis) + r.B * q_poly(n, p, psis) + r.C * q_poly(n - 1, p, psis));
    CHECK(res.is_zero());
    const std::map<Var, Rat> one{{var_t(), Rat(1)}};
    CHECK(q_poly(n, p, psis).evaluate(one) ==
          r.A.to_rat() * q_poly(n + 1, p, psis).evaluate(one) + r.B.to_rat() * q_poly(n, p, psis).evaluate(one) +
              r.C.to_rat() * q_poly(n - 1, p, psis).evaluate(one));
  }
}

TEST_CASE("coefficients in u = t - 1") {
  const JacobiParams p{R("alpha"), R("beta")};
  const RatBindings shift{{var_t(), R("u+1")}};
  for (long n = 0; n <= 5; ++n) {
    const auto c = jacobi_coeffs_u(n, p);
    RatFn sum;
    for (std::size_t j = 0; j < c.size(); ++j) sum += c[j] * R("u").pow(static_cast<int>(j));
    CHECK(sum == jacobi_poly(n, p).substitute(shift));
  }
  const auto psis = psi_family(R("alpha"), 2, {R("a0"), R("3/7")});
  const JacobiParams p2{R("alpha"), RatFn(2)};
  for (long n = 0; n <= 3; ++n)
    for (long s = 0; s <= 1; ++s) {
      const auto c = qhat_coeffs_u(n, s, p2, psis);
      RatFn sum;
      for (std::size_t j = 0; j < c.size(); ++j) sum += c[j] * R("u").pow(static_cast<int>(j));
      CHECK(sum == qhat_poly(n, s, p2, psis).substitute(shift));
    }
}
