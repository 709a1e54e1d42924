#include "alde/error.hpp"
#include "alde/sequences.hpp"
#include "doctest.h"

using namespace alde;

namespace {

RatFn R(const char* s) { return parse_ratfn(s); }

// Direct evaluation of phi at integer n and rational alpha.
Rat phi_direct(int branch, unsigned j, const Rat& alpha, long beta, long n) {
  const Rat sign = (n % 2 == 0) ? Rat(1) : Rat(-1);
  if (branch == 1)
    return sign * pochhammer(Rat(n + 1), j) * pochhammer(Rat(-n) - alpha - Rat(beta), j) /
           (factorial(j) * pochhammer(Rat(1 - beta), j));
  const auto ub = static_cast<unsigned>(beta);
  return sign * pochhammer(Rat(n + 1), ub) * pochhammer(Rat(n) + alpha + 1, ub) * pochhammer(Rat(-n), j) *
         pochhammer(Rat(n) + alpha + Rat(beta) + 1, j) /
         (factorial(j) * factorial(ub) * pochhammer(Rat(1 + beta), j) * pochhammer(alpha + 1, ub));
}

}  // namespace

TEST_CASE("phi bodies") {
  const RatFn alpha = RatFn::var("alpha");
  CHECK(phi_seq(1, 0, alpha, 1).body == RatFn(1));
  CHECK(phi_seq(2, 0, alpha, 1).body == R("(n+1)*(n+alpha+1)/(alpha+1)"));
  // (n+1)_1 (-n-2)_1 / (1! (1-2)_1) = (n+1)(n+2)
  CHECK(phi_seq(1, 1, RatFn(0), 2).body == R("(n+1)*(n+2)"));
  CHECK_THROWS_AS(phi_seq(1, 2, alpha, 2), DomainError);
  CHECK_THROWS_AS(phi_seq(2, 0, RatFn(-1), 1), DomainError);
}

TEST_CASE("phi values against direct evaluation") {
  for (long beta = 1; beta <= 3; ++beta)
    for (const Rat& alpha : {Rat(0), Rat(1, 2), Rat(3)})
      for (int branch = 1; branch <= 2; ++branch)
        for (unsigned j = 0; j < static_cast<unsigned>(beta); ++j) {
          const SignedSeq s = phi_seq(branch, j, RatFn(alpha), beta);
          for (long n = -3; n <= 5; ++n) CHECK(s.value(n).to_rat() == phi_direct(branch, j, alpha, beta, n));
        }
}

TEST_CASE("psi") {
  const RatFn alpha = RatFn::var("alpha");
  CHECK(psi_seq(0, alpha, 1, {RatFn::var("a0")}).body == R("a0 + (n+1)*(n+alpha+1)/(alpha+1)"));
  CHECK(psi_seq(0, RatFn(0), 1, {RatFn(0)}).body == R("(n+1)^2"));
  const std::vector<RatFn> a{R("a0"), R("a1")};
  CHECK(psi_seq(1, alpha, 2, a).body ==
        phi_seq(2, 1, alpha, 2).body + R("a0") * phi_seq(1, 1, alpha, 2).body + R("a1") * phi_seq(1, 0, alpha, 2).body);
  CHECK_THROWS_AS(psi_seq(1, alpha, 2, {R("a0")}), DomainError);
  CHECK_THROWS_AS(psi_family(alpha, 1, a), DomainError);
}

TEST_CASE("lambda polynomials") {
  const RatFn alpha = RatFn::var("alpha");
  const SignedSeq s{R("(n+1)*(n+alpha+1)/(alpha+1)")};
  const auto c = lambda_coefficients(s.body, alpha + 2);
  REQUIRE(c.has_value());
  REQUIRE(c->size() == 2);
  CHECK((*c)[0] == RatFn(1));
  CHECK((*c)[1] == -(alpha + 1).inverse());
  CHECK_FALSE(is_lambda_polynomial({R("n")}, RatFn(2)));
  CHECK(is_lambda_polynomial({RatFn(1)}, RatFn(2)));
  CHECK_FALSE(is_lambda_polynomial({R("n^2")}, RatFn(2)));
  CHECK(is_lambda_polynomial({R("(n*(n+5))^3 - 7*n*(n+5)")}, RatFn(5)));
}

TEST_CASE("psi families are lambda polynomials") {
  const RatFn alpha = RatFn::var("alpha");
  for (long beta = 1; beta <= 3; ++beta) {
    std::vector<RatFn> a;
    for (long k = 1; k <= beta; ++k) {
      a.push_back(RatFn(Rat(k + 2, 3)));
      for (const auto& psi : psi_family(alpha, beta, a)) CHECK(is_lambda_polynomial(psi, alpha + RatFn(beta + 1)));
      for (const auto& psi : psi_family(RatFn(Rat(1, 2)), beta, a)) CHECK(is_lambda_polynomial(psi, RatFn(Rat(1, 2) + beta + 1)));
    }
  }
}

TEST_CASE("tau") {
  const RatFn alpha = RatFn::var("alpha"), a0 = RatFn::var("a0");
  const auto psis = psi_family(alpha, 1, {a0});
  CHECK(tau_poly(psis) == R("a0 + (n+1)*(n+alpha+1)/(alpha+1)"));
  const RatFn lam = R("-n*(n+alpha+beta+1)");
  CHECK(tau_poly({{RatFn(1)}, {lam}}) == R("2*n+alpha+beta"));
  CHECK(tau_poly({{RatFn(1)}}) == RatFn(1));
  // k = 1 reduces to the body itself.
  const SignedSeq s{R("n^3-2*n+a0")};
  CHECK(tau_poly({s}) == s.body);
}

TEST_CASE("tau shifts with its sequences") {
  const RatFn alpha = RatFn::var("alpha");
  const RatFn n1 = RatFn::var(var_n()) + 1;
  for (long beta = 1; beta <= 3; ++beta) {
    std::vector<RatFn> a;
    for (long k = 1; k <= beta; ++k) a.push_back(RatFn(Rat(2 * k - 1, k + 1)));
    const auto psis = psi_family(alpha, beta, a);
    std::vector<SignedSeq> shifted;
    for (const auto& p : psis) shifted.push_back(p.shifted(1));
    const RatFn tau = tau_poly(psis);
    CHECK(tau_poly(shifted) == tau.substitute(RatBindings{{var_n(), n1}}));
  }
}
