#include "alde/serialize.hpp"

#include "alde/error.hpp"

namespace alde {

namespace {

Json exponents_to_json(const Monomial& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (m.e[i]) out.push_back(Json::array({Var::from_id(i).name(), m.e[i]}));
  return out;
}

Monomial exponents_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("exponents: expected an array");
  Monomial m;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_number_unsigned())
      throw ParseError("exponents: expected [name, power]");
    const unsigned e = pair[1].get<unsigned>();
    if (e > 255) throw ParseError("exponents: power too large");
    auto& slot = m.e[Var::named(pair[0].get<std::string>()).id()];
    if (slot) throw ParseError("exponents: repeated variable");
    slot = static_cast<std::uint8_t>(e);
  }
  return m;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational: expected a string");
  return Rat::parse(j.get<std::string>());
}

Json poly_to_json(const MPoly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json t = Json::object();
    t["exponents"] = exponents_to_json(m);
    t["coeff"] = rat_to_json(c);
    out.push_back(std::move(t));
  }
  return out;
}

MPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial: expected an array");
  MPoly p;
  for (const auto& t : j) p += MPoly::monomial(exponents_from_json(field(t, "exponents")), rat_from_json(field(t, "coeff")));
  return p;
}

Json ratfn_to_json(const RatFn& f) {
  Json out = Json::object();
  out["num"] = poly_to_json(f.num());
  out["den"] = poly_to_json(f.den());
  return out;
}

RatFn ratfn_from_json(const Json& j) {
  MPoly den = poly_from_json(field(j, "den"));
  if (den.is_zero()) throw ParseError("rational function: zero denominator");
  return RatFn::make(poly_from_json(field(j, "num")), std::move(den));
}

Json diffop_to_json(const DiffOp& o) {
  Json out = Json::array();
  for (const auto& [mu, c] : o.terms()) {
    Json t = Json::object();
    t["derivative"] = exponents_to_json(mu);
    t["num"] = poly_to_json(c.num());
    t["den"] = poly_to_json(c.den());
    out.push_back(std::move(t));
  }
  return out;
}

DiffOp diffop_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("operator: expected an array");
  DiffOp o;
  for (const auto& t : j) {
    const Monomial mu = exponents_from_json(field(t, "derivative"));
    DiffOp term = DiffOp::scalar(ratfn_from_json(t));
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (mu.e[i]) term = term * DiffOp::partial(Var::from_id(i), mu.e[i]);
    o += term;
  }
  return o;
}

Json alg_to_json(const AlgElem& e) {
  Json out = Json::array();
  for (const auto& [k, c] : e.terms()) {
    Json t = Json::object();
    t["a"] = k.first;
    t["b"] = k.second;
    t["coeff"] = ratfn_to_json(c);
    out.push_back(std::move(t));
  }
  return out;
}

AlgElem alg_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("algebra element: expected an array");
  AlgElem e;
  for (const auto& t : j) {
    const auto& a = field(t, "a");
    const auto& b = field(t, "b");
    if (!a.is_number_unsigned() || !b.is_number_unsigned()) throw ParseError("algebra element: bad exponent");
    e += AlgElem::monomial(a.get<unsigned>(), b.get<unsigned>(), ratfn_from_json(field(t, "coeff")));
  }
  return e;
}

Json report_to_json(const Report& r) {
  Report sorted = r;
  sorted.sort();
  Json out = Json::array();
  for (const auto& rec : sorted.records) {
    Json t = Json::object();
    t["id"] = rec.id;
    Json params = Json::object();
    for (const auto& [k, v] : rec.params) params[k] = v;
    t["params"] = std::move(params);
    t["pass"] = rec.pass;
    t["residual"] = rec.residual;
    out.push_back(std::move(t));
  }
  return out;
}

Report report_from_json(const Json& j, std::string suite) {
  if (!j.is_array()) throw ParseError("report: expected an array");
  Report r;
  r.suite = std::move(suite);
  for (const auto& t : j) {
    CheckRecord rec;
    rec.id = field(t, "id").get<std::string>();
    for (const auto& [k, v] : field(t, "params").items()) rec.params[k] = v.get<std::string>();
    rec.pass = field(t, "pass").get<bool>();
    rec.residual = field(t, "residual").get<std::string>();
    r.records.push_back(std::move(rec));
  }
  return r;
}

Json timing_to_json(const Report& r) {
  Report sorted = r;
  sorted.sort();
  Json out = Json::array();
  for (const auto& rec : sorted.records) {
    Json t = Json::object();
    t["id"] = rec.id;
    Json params = Json::object();
    for (const auto& [k, v] : rec.params) params[k] = v;
    t["params"] = std::move(params);
    t["seconds"] = rec.seconds;
    out.push_back(std::move(t));
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_csv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(row[i]);
    }
    out += "\r\n";
  }
  return out;
}

}  // namespace alde
