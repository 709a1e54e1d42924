#include <random>

#include "alde/error.hpp"
#include "alde/krall.hpp"
#include "alde/serialize.hpp"
#include "doctest.h"

using namespace alde;

namespace {

MPoly random_poly(std::mt19937& rng) {
  static const char* names[] = {"t", "x1", "x2", "alpha", "a0"};
  std::uniform_int_distribution<int> nterms(0, 5), var(0, 4), pw(0, 3);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
  MPoly p;
  for (int i = nterms(rng); i > 0; --i) {
    MPoly m(Rat(num(rng), den(rng)));
    for (int j = 0; j < 3; ++j) m *= MPoly::var(names[var(rng)], static_cast<unsigned>(pw(rng)));
    p += m;
  }
  return p;
}

}  // namespace

TEST_CASE("rationals are strings") {
  CHECK(rat_to_json(Rat(3, 4)) == "3/4");
  CHECK(rat_to_json(Rat(-5)) == "-5");
  CHECK(rat_from_json(Json("-7/21")) == Rat(-1, 3));
  CHECK_THROWS_AS(rat_from_json(Json(0.5)), ParseError);
  CHECK_THROWS_AS(rat_from_json(Json("1/0")), ParseError);
}

TEST_CASE("polynomial format") {
  const MPoly p = parse_poly("3 - 12*t + 1/2*alpha*t^2");
  const Json j = poly_to_json(p);
  CHECK(j.dump() ==
        R"([{"exponents":[["t",2],["alpha",1]],"coeff":"1/2"},{"exponents":[["t",1]],"coeff":"-12"},{"exponents":[],"coeff":"3"}])");
  CHECK(poly_from_json(j) == p);
  CHECK(poly_from_json(Json::array()) == MPoly());
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"([{"exponents":[["t",1],["t",2]],"coeff":"1"}])")), ParseError);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"([{"coeff":"1"}])")), ParseError);
}

TEST_CASE("round trips on random values") {
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    const MPoly p = random_poly(rng), q = random_poly(rng);
    CHECK(poly_from_json(Json::parse(poly_to_json(p).dump())) == p);
    if (q.is_zero()) continue;
    const RatFn f = RatFn::make(p, q);
    CHECK(ratfn_from_json(Json::parse(ratfn_to_json(f).dump())) == f);
  }
}

TEST_CASE("operators round-trip") {
  const RatFn al = RatFn::var("alpha"), a0 = RatFn::var("a0");
  const DiffOp o = op_M1(al, RatFn(1)) * op_D2(al) + DiffOp::partial(var_x(1), 2, a0) * DiffOp::partial(var_x(2));
  const Json jo = diffop_to_json(o);
  CHECK(jo.is_array());
  CHECK(jo[0].contains("derivative"));
  CHECK(diffop_from_json(Json::parse(jo.dump())) == o);

  const auto ctx = KrallContext::make(al, 1, {a0}, 10);
  const auto f2 = f2_f3_generators(al, a0).first;
  const AlgElem b = synthesize_Bf(f2, ctx, 6).op;
  const Json jb = alg_to_json(b);
  CHECK(jb.size() == b.terms().size());
  CHECK(jb[0].contains("a"));
  CHECK(alg_from_json(Json::parse(jb.dump())) == b);
  CHECK_FALSE(alg_from_json(Json::parse(jb.dump())) == b * RatFn(2));
}

TEST_CASE("reports are flat arrays without timings") {
  Report r;
  r.suite = "x";
  r.records.push_back({"b", {{"n", "1"}}, true, "0", 0.25});
  r.records.push_back({"a", {{"z", "1"}, {"m", "2"}}, false, "t", 1.5});
  const Json j = report_to_json(r);
  CHECK(j.dump() ==
        R"([{"id":"a","params":{"m":"2","z":"1"},"pass":false,"residual":"t"},{"id":"b","params":{"n":"1"},"pass":true,"residual":"0"}])");
  const Json t = timing_to_json(r);
  CHECK(t[0]["seconds"] == 1.5);
  const Report back = report_from_json(j);
  CHECK(back.records.size() == 2);
  CHECK(report_to_json(back) == j);
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("1,2") == "\"1,2\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(to_csv({{"n", "poly"}, {"1", "3-12*t"}}) == "n,poly\r\n1,3-12*t\r\n");
}
