#include "alde/operators.hpp"

#include <functional>

#include "alde/error.hpp"

namespace alde {

namespace {

Monomial single(Var v, unsigned k) {
  Monomial m;
  m.e[v.id()] = static_cast<std::uint8_t>(k);
  return m;
}

// Memoized partial derivatives of one function.
class DerivCache {
 public:
  explicit DerivCache(const RatFn& f) { cache_.emplace(Monomial{}, f); }

  const RatFn& get(const Monomial& mu) {
    if (auto it = cache_.find(mu); it != cache_.end()) return it->second;
    std::size_t i = 0;
    while (mu.e[i] == 0) ++i;
    Monomial prev = mu;
    --prev.e[i];
    RatFn d = get(prev).derivative(Var::from_id(i));
    return cache_.emplace(mu, std::move(d)).first->second;
  }

 private:
  std::map<Monomial, RatFn, GrlexLess> cache_;
};

// Calls fn(kappa, multiplicity) for every kappa <= mu componentwise.
void for_each_sub_index(const Monomial& mu, const std::function<void(const Monomial&, const Rat&)>& fn) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (mu.e[i]) idx.push_back(i);
  Monomial kappa;
  std::function<void(std::size_t, Rat)> rec = [&](std::size_t pos, Rat mult) {
    if (pos == idx.size()) {
      fn(kappa, mult);
      return;
    }
    const std::size_t i = idx[pos];
    for (unsigned k = 0; k <= mu.e[i]; ++k) {
      kappa.e[i] = static_cast<std::uint8_t>(k);
      rec(pos + 1, mult * binomial(mu.e[i], k));
    }
    kappa.e[i] = 0;
  };
  rec(0, Rat(1));
}

std::string paren(const RatFn& c) {
  if (c.is_polynomial() && c.num().size() == 1) return c.str();
  return "(" + c.str() + ")";
}

}  // namespace

// ------------------------------------------------------------------ DiffOp

void DiffOp::add_term(const Monomial& mu, const RatFn& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOp DiffOp::scalar(const RatFn& c) {
  DiffOp o;
  o.add_term(Monomial{}, c);
  return o;
}

DiffOp DiffOp::partial(Var v, unsigned k, const RatFn& c) {
  DiffOp o;
  o.add_term(single(v, k), c);
  return o;
}

unsigned DiffOp::order() const {
  unsigned m = 0;
  for (const auto& [mu, c] : terms_) m = std::max(m, mu.degree());
  return m;
}

std::vector<Var> DiffOp::variables() const {
  std::array<bool, kMaxVars> seen{};
  for (const auto& [mu, c] : terms_)
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (mu.e[i]) seen[i] = true;
  std::vector<Var> out;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (seen[i]) out.push_back(Var::from_id(i));
  return out;
}

RatFn DiffOp::coeff(const Monomial& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? RatFn() : it->second;
}

RatFn DiffOp::apply(const RatFn& f) const {
  if (f.is_zero()) return RatFn();
  DerivCache cache(f);
  RatFn out;
  for (const auto& [mu, c] : terms_) {
    const RatFn& d = cache.get(mu);
    if (!d.is_zero()) out += c * d;
  }
  return out;
}

MPoly DiffOp::apply(const MPoly& f) const {
  const RatFn r = apply(RatFn(f));
  if (!r.is_polynomial()) throw DomainError("operator image is not a polynomial: " + r.str());
  return r.num();
}

DiffOp DiffOp::specialize(const std::map<Var, Rat>& values) const {
  DiffOp o;
  for (const auto& [mu, c] : terms_) o.add_term(mu, c.specialize(values));
  return o;
}

DiffOp DiffOp::substitute(const Bindings& b) const {
  DiffOp o;
  for (const auto& [mu, c] : terms_) o.add_term(mu, c.substitute(b));
  return o;
}

std::string DiffOp::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mu, c] = *it;
    if (!out.empty()) out += " + ";
    std::string d;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (!mu.e[i]) continue;
      if (!d.empty()) d += "*";
      d += "d_" + Var::from_id(i).name();
      if (mu.e[i] > 1) d += "^" + std::to_string(mu.e[i]);
    }
    out += d.empty() ? paren(c) : paren(c) + "*" + d;
  }
  return out;
}

DiffOp DiffOp::operator-() const {
  DiffOp o = *this;
  for (auto& [mu, c] : o.terms_) c = -c;
  return o;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  for (const auto& [mu, c] : o.terms_) add_term(mu, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
  return *this;
}

DiffOp& DiffOp::operator*=(const RatFn& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mu, x] : terms_) x *= c;
  return *this;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  DiffOp out;
  for (const auto& [nu, cb] : b.terms_) {
    DerivCache cache(cb);
    for (const auto& [mu, ca] : a.terms_) {
      for_each_sub_index(mu, [&](const Monomial& kappa, const Rat& mult) {
        const RatFn& d = cache.get(kappa);
        if (d.is_zero()) return;
        out.add_term((mu / kappa) * nu, ca * d * RatFn(mult));
      });
    }
  }
  return out;
}

DiffOp op_pow(const DiffOp& a, unsigned e) {
  DiffOp r = DiffOp::identity();
  for (unsigned i = 0; i < e; ++i) r = a * r;
  return r;
}

WeightedPoly op_apply(const DiffOp& o, const WeightedPoly& w, Var t) {
  const MPoly weight = (MPoly(1) - MPoly::var(t)).pow(w.s);
  const RatFn image = o.apply(RatFn(w.p * weight)) / RatFn(weight);
  if (!image.is_polynomial())
    throw DomainError("operator leaves the weighted space (1-t)^" + std::to_string(w.s) + ": " + image.str());
  return {image.num(), w.s};
}

// ----------------------------------------------------------------- AlgElem

void AlgElem::add_term(Key k, const RatFn& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgElem AlgElem::scalar(const RatFn& c) { return monomial(0, 0, c); }

AlgElem AlgElem::monomial(unsigned a, unsigned b, const RatFn& c) {
  AlgElem e;
  e.add_term({a, b}, c);
  return e;
}

RatFn AlgElem::coeff(unsigned a, unsigned b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? RatFn() : it->second;
}

unsigned AlgElem::weight() const {
  unsigned w = 0;
  for (const auto& [k, c] : terms_) w = std::max(w, k.first + 2 * k.second);
  return w;
}

AlgElem AlgElem::specialize(const std::map<Var, Rat>& values) const {
  AlgElem e;
  for (const auto& [k, c] : terms_) e.add_term(k, c.specialize(values));
  return e;
}

AlgElem AlgElem::substitute(const RatBindings& b) const {
  AlgElem e;
  for (const auto& [k, c] : terms_) e.add_term(k, c.substitute(b));
  return e;
}

std::string AlgElem::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (!out.empty()) out += " + ";
    std::string w;
    if (k.first) w += k.first == 1 ? "G1" : "G1^" + std::to_string(k.first);
    if (k.second) w += std::string(w.empty() ? "" : "*") + (k.second == 1 ? "G2" : "G2^" + std::to_string(k.second));
    out += w.empty() ? paren(c) : paren(c) + "*" + w;
  }
  return out;
}

AlgElem AlgElem::operator-() const {
  AlgElem e = *this;
  for (auto& [k, c] : e.terms_) c = -c;
  return e;
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

AlgElem& AlgElem::operator*=(const RatFn& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, x] : terms_) x *= c;
  return *this;
}

AlgElem operator*(const AlgElem& x, const AlgElem& y) {
  // G2^b G1^c = (G1 + b)^c G2^b.
  AlgElem out;
  for (const auto& [kx, cx] : x.terms_) {
    const auto [a, b] = kx;
    for (const auto& [ky, cy] : y.terms_) {
      const auto [c, d] = ky;
      const RatFn coef = cx * cy;
      for (unsigned i = 0; i <= c; ++i) {
        const Rat m = binomial(c, i) * pow(Rat(b), c - i);
        if (m.is_zero()) continue;
        out.add_term({a + i, b + d}, coef * RatFn(m));
      }
    }
  }
  return out;
}

AlgElem alg_pow(const AlgElem& a, unsigned e) {
  AlgElem r = AlgElem::identity();
  for (unsigned i = 0; i < e; ++i) r = r * a;
  return r;
}

AlgElem alg_eval_poly(const MPoly& f, Var var, const AlgElem& x) {
  const auto cs = f.coeffs(var);
  AlgElem r;
  for (std::size_t i = cs.size(); i-- > 0;) {
    r = r * x;
    r += AlgElem::scalar(RatFn(cs[i]));
  }
  return r;
}

DiffOp realize(const AlgElem& e, const DiffOp& g1, const DiffOp& g2) {
  std::vector<DiffOp> p1{DiffOp::identity()}, p2{DiffOp::identity()};
  std::map<unsigned, DiffOp> by_b;
  for (const auto& [k, c] : e.terms()) {
    while (p1.size() <= k.first) p1.push_back(g1 * p1.back());
    by_b[k.second] += p1[k.first] * c;
  }
  DiffOp out;
  for (const auto& [b, left] : by_b) {
    while (p2.size() <= b) p2.push_back(g2 * p2.back());
    out += left * p2[b];
  }
  return out;
}

RatFn apply_realized(const AlgElem& e, const DiffOp& g1, const DiffOp& g2, const RatFn& f) {
  std::map<unsigned, std::map<unsigned, RatFn>> by_b;
  for (const auto& [k, c] : e.terms()) by_b[k.second][k.first] = c;
  RatFn out;
  RatFn h = f;
  unsigned hb = 0;
  for (const auto& [b, row] : by_b) {
    while (hb < b) {
      h = g2.apply(h);
      ++hb;
    }
    // Horner in g1.
    const unsigned top = row.rbegin()->first;
    RatFn acc;
    for (unsigned a = top + 1; a-- > 0;) {
      if (!acc.is_zero()) acc = g1.apply(acc);
      if (auto it = row.find(a); it != row.end()) acc += it->second * h;
    }
    out += acc;
  }
  return out;
}

// --------------------------------------------------------- named operators

Var var_t() {
  static const Var t = Var::named("t");
  return t;
}

Var var_x(int i) { return indexed_var("x", i); }

DiffOp op_D1() {
  const Var t = var_t();
  return DiffOp::partial(t, 1, RatFn::var(t) - 1);
}

DiffOp op_D2(const RatFn& alpha) {
  const Var t = var_t();
  return DiffOp::partial(t, 2, 1 - RatFn::var(t)) + DiffOp::partial(t, 1, -(alpha + 1));
}

DiffOp op_D2s(const RatFn& alpha, const RatFn& s) {
  return op_D2(alpha) - DiffOp::scalar(s * (s + alpha) / (1 - RatFn::var(var_t())));
}

DiffOp op_M1(const RatFn& alpha, const RatFn& beta) {
  const Var t = var_t();
  const RatFn tt = RatFn::var(t);
  return DiffOp::partial(t, 2, tt * (1 - tt)) + DiffOp::partial(t, 1, (beta + 1) - (alpha + beta + 2) * tt);
}

DiffOp op_M1s(const RatFn& alpha, const RatFn& beta, const RatFn& s) {
  const DiffOp d1 = op_D1();
  return op_D2s(alpha, s) - d1 * d1 - d1 * (alpha + beta + 1);
}

RatFn sum_of(const std::vector<RatFn>& v, std::size_t from) {
  RatFn s;
  for (std::size_t i = from; i < v.size(); ++i) s += v[i];
  return s;
}

std::vector<RatFn> symbolic_gamma(int d) {
  std::vector<RatFn> g;
  for (int i = 1; i <= d + 1; ++i) g.push_back(RatFn::var(indexed_var("g", i)));
  return g;
}

namespace {

void check_gamma(const std::vector<RatFn>& gamma, int d) {
  if (d < 1) throw DomainError("dimension d must be at least 1");
  if (gamma.size() != static_cast<std::size_t>(d) + 1)
    throw DomainError("gamma must have d+1 = " + std::to_string(d + 1) + " entries");
}

DiffOp d_xx(int k, int l, const RatFn& c) {
  DiffOp p = DiffOp::partial(var_x(k), 1) * DiffOp::partial(var_x(l), 1);
  return p * c;
}

}  // namespace

DiffOp op_Dh1(int d) {
  if (d < 1) throw DomainError("dimension d must be at least 1");
  DiffOp o = DiffOp::partial(var_x(1), 1, RatFn::var(var_x(1)) - 1);
  for (int j = 2; j <= d; ++j) o += DiffOp::partial(var_x(j), 1, RatFn::var(var_x(j)));
  return o;
}

DiffOp op_Dh2(const std::vector<RatFn>& gamma, int d) {
  check_gamma(gamma, d);
  const RatFn x1 = RatFn::var(var_x(1));
  DiffOp o = DiffOp::partial(var_x(1), 2, 1 - x1);
  for (int j = 2; j <= d; ++j) {
    const RatFn xj = RatFn::var(var_x(j));
    o += DiffOp::partial(var_x(j), 2, xj);
    o += d_xx(j, 1, RatFn(-2) * xj);
    o += DiffOp::partial(var_x(j), 1, gamma[j - 1] + 1);
  }
  o += DiffOp::partial(var_x(1), 1, -(sum_of(gamma, 1) + RatFn(d)));
  return o;
}

DiffOp op_Mjd(const std::vector<RatFn>& gamma, int j, int d) {
  check_gamma(gamma, d);
  if (j < 1 || j > d) throw DomainError("M_{j,d} needs 1 <= j <= d");
  RatFn head;  // |x_{j-1}|
  for (int i = 1; i < j; ++i) head += RatFn::var(var_x(i));
  const RatFn gsum = sum_of(gamma, static_cast<std::size_t>(j - 1));  // |gamma^j|
  DiffOp o;
  for (int k = j; k <= d; ++k) {
    const RatFn xk = RatFn::var(var_x(k));
    o += DiffOp::partial(var_x(k), 2, (1 - head - xk) * xk);
    for (int l = k + 1; l <= d; ++l) o += d_xx(k, l, RatFn(-2) * xk * RatFn::var(var_x(l)));
    o += DiffOp::partial(var_x(k), 1, (gamma[k - 1] + 1) * (1 - head) - (gsum + RatFn(d - j + 2)) * xk);
  }
  return o;
}

DiffOp op_H(const std::vector<RatFn>& gamma, int i, int j, int d) {
  check_gamma(gamma, d);
  if (i < 1 || i >= j || j > d + 1) throw DomainError("H_{i,j} needs 1 <= i < j <= d+1");
  const RatFn xi = RatFn::var(var_x(i));
  if (j <= d) {
    const RatFn xj = RatFn::var(var_x(j));
    const DiffOp diff = DiffOp::partial(var_x(i), 1) - DiffOp::partial(var_x(j), 1);
    return (diff * diff) * (xi * xj) + diff * ((gamma[i - 1] + 1) * xj - (gamma[j - 1] + 1) * xi);
  }
  RatFn rest = 1;
  for (int l = 1; l <= d; ++l) rest -= RatFn::var(var_x(l));
  return DiffOp::partial(var_x(i), 2, xi * rest) +
         DiffOp::partial(var_x(i), 1, (gamma[i - 1] + 1) * rest - (gamma[d] + 1) * xi);
}

DiffOp rep_1d(const AlgElem& e, const RatFn& alpha) { return realize(e, op_D1(), op_D2(alpha)); }

DiffOp rep_1d_s(const AlgElem& e, const RatFn& alpha, const RatFn& s) { return realize(e, op_D1(), op_D2s(alpha, s)); }

DiffOp rep_multi(const AlgElem& e, const std::vector<RatFn>& gamma, int d) {
  return realize(e, op_Dh1(d), op_Dh2(gamma, d));
}

}  // namespace alde
