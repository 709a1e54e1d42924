#include "alde/mpoly.hpp"

#include <algorithm>
#include <cstring>
#include <set>
#include <unordered_map>

#include "alde/error.hpp"

namespace alde {

// ---------------------------------------------------------------- Monomial

unsigned Monomial::degree() const {
  unsigned s = 0;
  for (auto x : e) s += x;
  return s;
}

bool Monomial::is_one() const {
  for (auto x : e)
    if (x) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned s = unsigned(a.e[i]) + b.e[i];
    if (s > 255) throw DomainError("monomial exponent overflow");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
  return r;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : m.e) h = (h ^ x) * 1099511628211ULL;
  return h;
}

Monomial monomial_content(const MPoly& p) {
  Monomial m;
  if (p.is_zero()) return m;
  m = p.terms().front().first;
  for (const auto& [mono, c] : p.terms())
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = std::min(m.e[i], mono.e[i]);
  return m;
}

// ------------------------------------------------------------------- MPoly

namespace {

bool term_greater(const MPoly::Term& a, const MPoly::Term& b) {
  return grlex_compare(a.first, b.first) > 0;
}

}  // namespace

MPoly::MPoly(Rat c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, std::move(c));
}

MPoly MPoly::var(Var v, unsigned exponent) {
  Monomial m;
  if (exponent > 255) throw DomainError("monomial exponent overflow");
  m.e[v.id()] = static_cast<std::uint8_t>(exponent);
  return monomial(m, Rat(1));
}

MPoly MPoly::monomial(const Monomial& m, Rat c) {
  MPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(m, std::move(c));
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  MPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rat MPoly::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial is not constant: " + str());
  return terms_.empty() ? Rat(0) : terms_[0].second;
}

Rat MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return Rat(0);
}

unsigned MPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

unsigned MPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

bool MPoly::has_var(Var v) const {
  for (const auto& [m, c] : terms_)
    if (m.exponent(v)) return true;
  return false;
}

std::vector<Var> MPoly::variables() const {
  std::array<bool, kMaxVars> seen{};
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (m.e[i]) seen[i] = true;
  std::vector<Var> out;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (seen[i]) out.push_back(Var::from_id(i));
  return out;
}

MPoly MPoly::coeff(Var v, unsigned k) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_)
    if (m.exponent(v) == k) {
      Monomial r = m;
      r.e[v.id()] = 0;
      out.emplace_back(r, c);
    }
  // Removing one variable at a fixed exponent preserves relative order.
  MPoly p;
  p.terms_ = std::move(out);
  return p;
}

std::vector<MPoly> MPoly::coeffs(Var v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& [m, c] : terms_) {
    Monomial r = m;
    r.e[v.id()] = 0;
    buckets[m.exponent(v)].emplace_back(r, c);
  }
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    MPoly p;
    p.terms_ = std::move(b);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<MPoly> MPoly::coeffs_wrt(const std::vector<Var>& vs) const {
  std::unordered_map<Monomial, std::vector<Term>, MonomialHash> groups;
  std::vector<Monomial> order;
  for (const auto& [m, c] : terms_) {
    Monomial key, rest = m;
    for (Var v : vs) {
      key.e[v.id()] = m.e[v.id()];
      rest.e[v.id()] = 0;
    }
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second.emplace_back(rest, c);
  }
  std::sort(order.begin(), order.end(), [](const Monomial& a, const Monomial& b) { return grlex_compare(a, b) > 0; });
  std::vector<MPoly> out;
  for (const auto& key : order) {
    MPoly p;
    p.terms_ = std::move(groups[key]);
    out.push_back(std::move(p));
  }
  return out;
}

Rat MPoly::coeff_of(const Monomial& m) const {
  for (const auto& [mm, c] : terms_)
    if (mm == m) return c;
  return Rat(0);
}

MPoly MPoly::derivative(Var v) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    const unsigned k = m.exponent(v);
    if (!k) continue;
    Monomial r = m;
    r.e[v.id()] = static_cast<std::uint8_t>(k - 1);
    out.emplace_back(r, c * Rat(k));
  }
  return from_terms(std::move(out));
}

MPoly MPoly::substitute(const Bindings& b) const {
  if (b.empty() || terms_.empty()) return *this;
  std::map<Var, std::vector<MPoly>> powers;
  for (const auto& [v, img] : b) powers[v] = {MPoly(1)};
  auto power_of = [&](Var v, unsigned k) -> const MPoly& {
    auto& cache = powers[v];
    while (cache.size() <= k) cache.push_back(cache.back() * b.at(v));
    return cache[k];
  };
  MPoly result;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    MPoly term = MPoly::monomial(Monomial{}, c);
    for (const auto& [v, img] : b) {
      const unsigned k = m.exponent(v);
      if (!k) continue;
      rest.e[v.id()] = 0;
      term = term * power_of(v, k);
    }
    result += term * MPoly::monomial(rest, 1);
  }
  return result;
}

Rat MPoly::evaluate(const std::map<Var, Rat>& values) const {
  Rat sum(0);
  for (const auto& [m, c] : terms_) {
    Rat term = c;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (!m.e[i]) continue;
      auto it = values.find(Var::from_id(i));
      if (it == values.end()) throw DomainError("evaluate: unbound variable in " + str());
      term *= alde::pow(it->second, m.e[i]);
    }
    sum += term;
  }
  return sum;
}

MPoly MPoly::monic() const {
  if (terms_.empty() || leading_coeff().is_one()) return *this;
  const Rat inv = Rat(1) / leading_coeff();
  return *this * inv;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1), base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c.sign() < 0;
    const Rat a = neg ? -c : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (!m.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += Var::from_id(i).name();
      if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
    }
    if (mono.empty()) {
      out += a.str();
    } else if (a.is_one()) {
      out += mono;
    } else {
      out += a.str() + "*" + mono;
    }
  }
  return out;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const int c = grlex_compare(terms_[i].first, o.terms_[j].first);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Rat s = terms_[i].second + o.terms_[j].second;
      if (!s.is_zero()) out.emplace_back(terms_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  if (b.is_constant()) return a * b.terms_[0].second;
  if (a.is_constant()) return b * a.terms_[0].second;
  if (a.size() == 1 || b.size() == 1) {
    const auto& single = a.size() == 1 ? a.terms_[0] : b.terms_[0];
    const MPoly& other = a.size() == 1 ? b : a;
    MPoly r;
    r.terms_.reserve(other.size());
    // Multiplying by a monomial preserves the order of the terms.
    for (const auto& [m, c] : other.terms_) r.terms_.emplace_back(m * single.first, c * single.second);
    return r;
  }
  std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  mpq_class prod;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      mpq_mul(prod.get_mpq_t(), ca.raw().get_mpq_t(), cb.raw().get_mpq_t());
      acc[ma * mb] += prod;
    }
  std::vector<MPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) terms.emplace_back(m, Rat(std::move(c)));
  std::sort(terms.begin(), terms.end(), term_greater);
  MPoly r;
  r.terms_ = std::move(terms);
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

// --------------------------------------------------------------- division

std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  if (f.is_zero()) return MPoly();
  if (g.is_constant()) return f * (Rat(1) / g.constant_value());
  const auto& [lm, lc] = g.leading_term();
  if (g.is_monomial()) {
    std::vector<MPoly::Term> out;
    for (const auto& [m, c] : f.terms()) {
      if (!lm.divides(m)) return std::nullopt;
      out.emplace_back(m / lm, c / lc);
    }
    return MPoly::from_terms(std::move(out));
  }
  MPoly r = f;
  std::vector<MPoly::Term> q;
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading_term();
    if (!lm.divides(rm)) return std::nullopt;
    MPoly::Term t{rm / lm, rc / lc};
    r -= g * MPoly::monomial(t.first, t.second);
    q.push_back(std::move(t));
  }
  return MPoly::from_terms(std::move(q));
}

std::pair<MPoly, MPoly> divmod_univariate(const MPoly& f, const MPoly& g, Var v) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const unsigned dg = g.degree(v);
  const MPoly lcg = g.coeff(v, dg);
  if (!lcg.is_constant()) throw DomainError("divmod_univariate: leading coefficient must be constant");
  const Rat inv = Rat(1) / lcg.constant_value();
  MPoly q, r = f;
  while (!r.is_zero()) {
    const unsigned dr = r.degree(v);
    if (dr < dg) break;
    const MPoly t = r.coeff(v, dr) * inv * MPoly::var(v, dr - dg);
    q += t;
    r -= t * g;
  }
  return {q, r};
}

// -------------------------------------------------------------------- gcd

namespace {

using UPoly = std::vector<mpq_class>;  // index = power

UPoly to_upoly(const MPoly& p, Var v) {
  UPoly u(p.degree(v) + 1);
  for (const auto& [m, c] : p.terms()) u[m.exponent(v)] = c.raw();
  return u;
}

void trim_upoly(UPoly& u) {
  while (!u.empty() && sgn(u.back()) == 0) u.pop_back();
}

UPoly upoly_rem(UPoly a, const UPoly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const mpq_class f = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim_upoly(a);
  }
  return a;
}

MPoly univariate_gcd(const MPoly& a, const MPoly& b, Var v) {
  UPoly x = to_upoly(a, v), y = to_upoly(b, v);
  trim_upoly(x);
  trim_upoly(y);
  while (!y.empty()) {
    UPoly r = upoly_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<MPoly::Term> terms;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    Monomial m;
    m.e[v.id()] = static_cast<std::uint8_t>(i);
    terms.emplace_back(m, Rat(x[i]));
  }
  return MPoly::from_terms(std::move(terms)).monic();
}

std::vector<Var> intersect(const std::vector<Var>& a, const std::vector<Var>& b) {
  std::vector<Var> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Var> difference(const std::vector<Var>& a, const std::vector<Var>& b) {
  std::vector<Var> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

MPoly gcd_list(const std::vector<MPoly>& polys) {
  MPoly g;
  for (const auto& p : polys) {
    g = gcd(g, p);
    if (g.is_constant() && !g.is_zero()) return MPoly(1);
  }
  return g;
}

MPoly exact(const MPoly& f, const MPoly& g) {
  auto q = divide_exact(f, g);
  if (!q) throw Error("internal: inexact division in gcd");
  return *q;
}

MPoly content_wrt(const MPoly& p, Var v) { return gcd_list(p.coeffs(v)); }

// lc(b)^(deg r - deg b + 1) r reduced modulo b in v.
MPoly pseudo_rem(MPoly r, const MPoly& b, Var v) {
  const unsigned db = b.degree(v);
  const MPoly lcb = b.coeff(v, db);
  const unsigned dr0 = r.degree(v);
  if (dr0 < db) return r;
  unsigned steps = dr0 - db + 1;
  while (!r.is_zero()) {
    const unsigned dr = r.degree(v);
    if (dr < db) break;
    const MPoly lcr = r.coeff(v, dr);
    r = lcb * r - lcr * MPoly::var(v, dr - db) * b;
    --steps;
  }
  return steps ? lcb.pow(steps) * r : r;
}

MPoly primitive_part(const MPoly& p, Var v) {
  const MPoly c = content_wrt(p, v);
  return exact(p, c).monic();
}

// Both inputs nonzero, non-constant, and free of monomial factors.
MPoly gcd_nomono(const MPoly& a, const MPoly& b) {
  if (a.is_constant() || b.is_constant()) return MPoly(1);
  const auto va = a.variables(), vb = b.variables();
  const auto common = intersect(va, vb);
  if (common.empty()) return MPoly(1);
  if (common.size() != va.size() || common.size() != vb.size()) {
    // Any common factor lives in Q[common]; it must divide every coefficient
    // with respect to the private variables.
    std::vector<MPoly> parts;
    auto add = [&](const MPoly& p, const std::vector<Var>& vars) {
      const auto extra = difference(vars, common);
      if (extra.empty()) {
        parts.push_back(p);
      } else {
        for (auto& c : p.coeffs_wrt(extra)) parts.push_back(std::move(c));
      }
    };
    add(b, vb);
    add(a, va);
    return gcd_list(parts);
  }
  if (common.size() == 1) return univariate_gcd(a, b, common[0]);

  // Recursive primitive PRS in the variable of lowest degree.
  Var v = common[0];
  unsigned best = ~0U;
  for (Var c : common) {
    const unsigned d = std::min(a.degree(c), b.degree(c));
    if (d < best) {
      best = d;
      v = c;
    }
  }
  const MPoly ca = content_wrt(a, v), cb = content_wrt(b, v);
  const MPoly cont = gcd(ca, cb);
  MPoly r0 = exact(a, ca), r1 = exact(b, cb);
  if (r0.degree(v) < r1.degree(v)) std::swap(r0, r1);
  // subresultant PRS: the divisions by g h^delta are exact and keep the
  // coefficients from growing exponentially
  MPoly g(1), h(1);
  while (true) {
    if (r1.degree(v) == 0) return cont.monic();
    const unsigned delta = r0.degree(v) - r1.degree(v);
    MPoly r = pseudo_rem(r0, r1, v);
    if (r.is_zero()) break;
    r0 = std::move(r1);
    r1 = exact(r, g * h.pow(delta));
    g = r0.coeff(v, r0.degree(v));
    h = delta == 0 ? h : exact(g.pow(delta), h.pow(delta - 1));
  }
  return (cont * primitive_part(r1, v)).monic();
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MPoly(1);
  if (a == b) return a.monic();
  const Monomial ma = monomial_content(a), mb = monomial_content(b);
  Monomial mg;
  for (std::size_t i = 0; i < kMaxVars; ++i) mg.e[i] = std::min(ma.e[i], mb.e[i]);
  const MPoly mono = MPoly::monomial(mg, 1);
  if (a.is_monomial() || b.is_monomial()) return mono;
  const MPoly ra = *divide_exact(a, MPoly::monomial(ma, 1));
  const MPoly rb = *divide_exact(b, MPoly::monomial(mb, 1));
  return (mono * gcd_nomono(ra, rb)).monic();
}

}  // namespace alde
