#include <random>

#include "alde/error.hpp"
#include "alde/ratfn.hpp"
#include "doctest.h"

using namespace alde;

namespace {

MPoly P(const char* s) { return parse_poly(s); }

MPoly random_poly(std::mt19937& rng, const std::vector<const char*>& vars, int max_terms, int max_deg) {
  std::uniform_int_distribution<int> nterms(0, max_terms), coef(-9, 9), den(1, 4), deg(0, max_deg);
  MPoly p;
  const int count = nterms(rng);
  for (int i = 0; i < count; ++i) {
    MPoly term(Rat(coef(rng), den(rng)));
    for (const char* v : vars) term = term * MPoly::var(v, static_cast<unsigned>(deg(rng)));
    p += term;
  }
  return p;
}

std::map<Var, Rat> random_point(std::mt19937& rng, const std::vector<const char*>& vars) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  std::map<Var, Rat> pt;
  for (const char* v : vars) pt[Var::named(v)] = Rat(num(rng), den(rng));
  return pt;
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rat::parse("6/4") == Rat(3, 2));
  CHECK(Rat::parse("-6/4").str() == "-3/2");
  CHECK(Rat(4, 2).str() == "2");
  CHECK(Rat(0, 5).str() == "0");
  CHECK_THROWS_AS(Rat::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rat::parse("x"), ParseError);
  CHECK_THROWS_AS(Rat(1) / Rat(0), DomainError);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rat(7, 3), 0) == 1);
  CHECK(pochhammer(Rat(3), 2) == 12);
  // (1/2)(3/2)(5/2)
  CHECK(pochhammer(Rat(1, 2), 3) == Rat(1, 2) * Rat(3, 2) * Rat(5, 2));
  CHECK(pochhammer(Rat(1, 2), 3) == Rat(15, 8));
  CHECK(pochhammer(Rat(-2), 3) == 0);
  CHECK(factorial(5) == 120);
  CHECK(binomial(6, 2) == 15);
}

TEST_CASE("printing and parsing") {
  const MPoly p = P("3 - 12*t");
  CHECK(p.str() == "-12*t+3");
  CHECK(P(p.str().c_str()) == p);
  CHECK(P("(x1+x2)^2").str() == "x1^2+2*x1*x2+x2^2");
  CHECK(P("3/2*t").coeff_of(MPoly::var("t").leading_term().first) == Rat(3, 2));
  CHECK_THROWS_AS(parse_poly("1/t"), ParseError);
  CHECK_THROWS_AS(parse_poly("t+"), ParseError);
  const RatFn r = parse_ratfn("x2/(1-x1)");
  CHECK(parse_ratfn(r.str()) == r);
}

TEST_CASE("divexact") {
  CHECK(*divide_exact(P("n^2+n"), P("n")) == P("n+1"));
  CHECK_FALSE(divide_exact(P("n^2+1"), P("n")).has_value());
  const MPoly tau = P("1 + (n+1)*(n+1)");
  CHECK(*divide_exact(tau * P("2*n+3"), tau) == P("2*n+3"));
  CHECK_THROWS_AS(divide_exact(P("n"), MPoly()), DomainError);
  CHECK(divide_exact(MPoly(), P("n+2"))->is_zero());
}

TEST_CASE("substitute") {
  CHECK(P("t^2").substitute({{Var::named("t"), P("1-u")}}) == P("u^2-2*u+1"));
  const MPoly p = P("x1*x2+3");
  CHECK(p.substitute({}) == p);
  const RatFn z2 = RatFn(P("z2")).substitute(RatBindings{{Var::named("z2"), parse_ratfn("x2/(1-x1)")}});
  CHECK(z2 == RatFn::make(P("x2"), P("1-x1")));
  CHECK(z2.den() == P("x1-1"));
  CHECK(z2.num() == P("-x2"));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  const std::vector<const char*> vars{"x1", "x2", "t"};
  for (int it = 0; it < 60; ++it) {
    const MPoly a = random_poly(rng, vars, 4, 2), b = random_poly(rng, vars, 4, 2), c = random_poly(rng, vars, 4, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b - b == a);
    // Evaluation is a homomorphism.
    const auto pt = random_point(rng, vars);
    CHECK((a * b + c).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt) + c.evaluate(pt));
  }
}

TEST_CASE("divexact recovers factors") {
  std::mt19937 rng(11);
  const std::vector<const char*> vars{"n", "alpha"};
  for (int it = 0; it < 60; ++it) {
    const MPoly f = random_poly(rng, vars, 4, 3), g = random_poly(rng, vars, 4, 3);
    if (g.is_zero()) continue;
    auto q = divide_exact(f * g, g);
    REQUIRE(q.has_value());
    CHECK(*q == f);
    if (!g.is_constant() && !f.is_zero()) {
      const MPoly bumped = f * g + MPoly(1);
      CHECK_FALSE(divide_exact(bumped, g).has_value());
    }
  }
}

TEST_CASE("substitute is a homomorphism") {
  std::mt19937 rng(3);
  const std::vector<const char*> vars{"x1", "x2"};
  for (int it = 0; it < 40; ++it) {
    const MPoly p = random_poly(rng, vars, 3, 2), q = random_poly(rng, vars, 3, 2);
    const Bindings b{{Var::named("x1"), random_poly(rng, {"u", "x2"}, 3, 2)}};
    CHECK((p * q).substitute(b) == p.substitute(b) * q.substitute(b));
    CHECK((p + q).substitute(b) == p.substitute(b) + q.substitute(b));
    const RatBindings rb{{Var::named("x1"), parse_ratfn("x2/(1-u)")}};
    CHECK(substitute_ratfn(p * q, rb) == substitute_ratfn(p, rb) * substitute_ratfn(q, rb));
  }
}

TEST_CASE("gcd") {
  CHECK(gcd(P("n^2-1"), P("n^2+2*n+1")) == P("n+1"));
  CHECK(gcd(P("x1*x2"), P("x1^2")) == P("x1"));
  CHECK(gcd(P("2*alpha+2"), P("alpha*n+n")) == P("alpha+1"));
  CHECK(gcd(MPoly(), P("3*t")) == P("t"));
  std::mt19937 rng(5);
  const std::vector<const char*> vars{"n", "alpha", "a0"};
  for (int it = 0; it < 40; ++it) {
    const MPoly a = random_poly(rng, vars, 3, 2), b = random_poly(rng, vars, 3, 2), c = random_poly(rng, vars, 2, 2);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    const MPoly g = gcd(a * c, b * c);
    CHECK(divide_exact(g, c.monic()).has_value());
    CHECK(divide_exact(a * c, g).has_value());
    CHECK(divide_exact(b * c, g).has_value());
  }
}

TEST_CASE("rational functions") {
  const RatFn x = RatFn::var("x1"), y = RatFn::var("x2");
  CHECK((x / y) * (y / x) == RatFn(1));
  CHECK(RatFn::make(P("x1^2-1"), P("x1-1")) == RatFn(P("x1+1")));
  CHECK((RatFn(1) / (1 - x) - x / (1 - x)) == RatFn(1));
  CHECK(RatFn::make(P("alpha"), P("2*alpha+4")).den() == P("alpha+2"));
  CHECK((x / (1 - x)).derivative(Var::named("x1")) == RatFn(1) / ((1 - x) * (1 - x)));
  CHECK_THROWS_AS(RatFn(0).inverse(), DomainError);
  std::mt19937 rng(9);
  const std::vector<const char*> vars{"x1", "alpha"};
  for (int it = 0; it < 30; ++it) {
    const MPoly a = random_poly(rng, vars, 3, 2), b = random_poly(rng, vars, 3, 2);
    const MPoly c = random_poly(rng, vars, 3, 2), d = random_poly(rng, vars, 3, 2);
    if (b.is_zero() || d.is_zero()) continue;
    const RatFn r = RatFn::make(a, b), s = RatFn::make(c, d);
    const auto pt = random_point(rng, vars);
    const Rat bv = b.evaluate(pt), dv = d.evaluate(pt);
    if (bv.is_zero() || dv.is_zero()) continue;
    const Rat rv = a.evaluate(pt) / bv, sv = c.evaluate(pt) / dv;
    CHECK((r + s).evaluate(pt) == rv + sv);
    CHECK((r * s).evaluate(pt) == rv * sv);
    CHECK((r - s).evaluate(pt) == rv - sv);
    CHECK(r * s - s * r == RatFn(0));
    CHECK((r + s) - s == r);
  }
}
