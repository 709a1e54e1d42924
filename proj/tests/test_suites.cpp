#include "alde/error.hpp"
#include "alde/suites.hpp"
#include "doctest.h"

using namespace alde;

namespace {

RunConfig config(std::initializer_list<std::pair<const char*, const char*>> kv) {
  RunConfig c;
  for (const auto& [k, v] : kv) c.set(k, v);
  return c;
}

bool all_pass(const Report& r) {
  for (const auto& rec : r.records)
    if (!rec.pass) MESSAGE(rec.id << " failed: " << rec.residual);
  return r.pass();
}

std::size_t count(const Report& r, const std::string& id) {
  std::size_t n = 0;
  for (const auto& rec : r.records) n += rec.id == id;
  return n;
}

}  // namespace

TEST_CASE("flag parsing and resolution") {
  RunConfig c;
  CHECK_THROWS_AS(c.set("nmax", "-1"), UsageError);
  CHECK_THROWS_AS(c.set("nmax", "4x"), UsageError);
  CHECK_THROWS_AS(c.set("alpha", "1/0"), UsageError);
  CHECK_THROWS_AS(c.set("alpha", "t"), UsageError);
  CHECK_THROWS_AS(c.set("colour", "red"), UsageError);
  CHECK_NOTHROW(c.set("alpha", "alpha"));

  const Resolved r = resolve(config({{"gamma", "1,1/2,1"}, {"a0", "2/3"}}));
  CHECK(r.sp.d == 2);
  CHECK(r.alpha == RatFn(Rat(5, 2)));
  CHECK(r.beta == RatFn(1));
  CHECK(r.a == std::vector<RatFn>{RatFn(Rat(2, 3))});

  CHECK_THROWS_AS(resolve(config({{"beta", "2"}, {"k", "3"}})), UsageError);
  CHECK_NOTHROW(resolve(config({{"beta", "2"}, {"k", "2"}})));
  CHECK_THROWS_AS(resolve(config({{"d", "3"}, {"gamma", "1,0,0"}})), UsageError);
  CHECK_THROWS_AS(resolve(config({{"k", "2"}, {"a", "1"}})), UsageError);
  CHECK_THROWS_AS(resolve(config({{"beta", "1/2"}})).int_beta(), UsageError);
  CHECK_THROWS_AS(run_suite(config({}), "nope"), UsageError);
  CHECK_THROWS_AS(export_table(config({}), "q", "xml"), UsageError);
}

TEST_CASE("jacobi suite") {
  const Report r = run_suite(config({{"alpha", "1/2"}, {"beta", "-1/2"}, {"nmax", "5"}}), "jacobi");
  CHECK(all_pass(r));
  CHECK(count(r, "jacobi.spectral") == 6);
  CHECK(count(r, "jacobi.weighted_spectral") == 12);
  const Report sym = run_suite(config({{"alpha", "alpha"}, {"beta", "beta"}, {"nmax", "3"}, {"smax", "1"}}), "jacobi");
  CHECK(all_pass(sym));
}

TEST_CASE("krall suite, k = 1") {
  const Report r = run_suite(config({{"alpha", "0"}, {"beta", "1"}, {"a0", "1"}, {"nmax", "4"}}), "krall");
  CHECK(all_pass(r));
  CHECK(count(r, "krall.synth") == 2);
  CHECK(count(r, "krall.intertwining") == 2);
  CHECK(count(r, "krall.weighted_intertwiner") == 10);
}

TEST_CASE("krall suite, k = 2") {
  const Report r = run_suite(config({{"alpha", "1/2"}, {"beta", "2"}, {"a", "2/3,-5/7"}, {"nmax", "3"}}), "krall");
  CHECK(all_pass(r));
  CHECK(count(r, "krall.synth") == 1);
  CHECK(count(r, "krall.intertwining") == 1);
}

TEST_CASE("simplex, darboux and orth suites") {
  const RunConfig c = config({{"gamma", "1,0,0"}, {"a0", "1"}, {"nmax", "3"}});
  CHECK(all_pass(run_suite(c, "simplex")));
  const Report d = run_suite(c, "darboux");
  CHECK(all_pass(d));
  CHECK(count(d, "darboux.intertwining") == 2);
  CHECK(count(d, "basis.rank") == 1);
  const Report o = run_suite(c, "orth");
  CHECK(all_pass(o));
  CHECK(count(o, "sobolev.orth") > 0);
  CHECK_THROWS_AS(run_suite(config({{"gamma", "2,0,0"}, {"k", "2"}}), "orth"), UsageError);
}

TEST_CASE("tables") {
  const RunConfig c = config({{"alpha", "0"}, {"beta", "1"}, {"a0", "1"}, {"nmax", "3"}});
  const std::string q = export_table(c, "q", "csv");
  CHECK(q.rfind("n,t^0,t^1,t^2,t^3,poly\r\n", 0) == 0);
  CHECK(q.find("\r\n1,3,-12,0,0,") != std::string::npos);
  CHECK(export_table(c, "q", "csv") == q);
  const Json jq = Json::parse(export_table(c, "q", "json"));
  CHECK(jq.size() == 4);
  CHECK(jq[1]["coeffs"][1] == "-12");

  const std::string empty = export_table(config({{"nmax", "0"}}), "simplex", "csv");
  CHECK(empty == "eta,poly\r\n\"(0,0)\",1\r\n");

  const Json qh = Json::parse(export_table(c, "qhat", "json"));
  CHECK(qh.size() == 12);

  const Json ops = Json::parse(export_table(c, "operators", "json"));
  REQUIRE(ops.size() == 3);
  CHECK(ops[1]["name"] == "B_f2");
  const auto ctx = KrallContext::make(RatFn(0), 1, {RatFn(1)});
  CHECK(alg_from_json(ops[1]["op"]) == synthesize_Bf(f2_f3_generators(RatFn(0), RatFn(1)).first, ctx, 6).op);

  const Json g = Json::parse(export_table(config({{"gamma", "1,0,0"}, {"a0", "1"}, {"nmax", "2"}}), "gram", "json"));
  CHECK(g["index"].size() == 6);
  CHECK(g["symmetric"] == true);
  CHECK(g["diagonal"] == true);
  CHECK(g["diagonal_nonzero"] == true);
  CHECK(g["entries"][0][1] == "0");
}

TEST_CASE("krall synth") {
  const SynthOutput s = krall_synth(config({{"alpha", "alpha"}, {"beta", "1"}, {"a0", "a0"}, {"nmax", "3"}}), "f2");
  CHECK(s.report.pass());
  CHECK(s.json["B_f"]["weight"] == 4);
  CHECK(s.json["B_psi"]["weight"] == 2);
  CHECK_THROWS_AS(krall_synth(config({{"beta", "1"}}), "1/(1-t)"), UsageError);
}
