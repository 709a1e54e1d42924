#include "alde/ratfn.hpp"

#include <cctype>

#include "alde/error.hpp"

namespace alde {

namespace {

MPoly exact_div(const MPoly& a, const MPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error("internal: inexact division while reducing a rational function");
  return *q;
}

}  // namespace

RatFn RatFn::make(MPoly num, MPoly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  RatFn r;
  if (num.is_zero()) return r;
  if (den.is_constant()) {
    r.num_ = num * (Rat(1) / den.constant_value());
    return r;
  }
  if (num.is_constant()) {
    const Rat lc = den.leading_coeff();
    r.num_ = num * (Rat(1) / lc);
    r.den_ = den * (Rat(1) / lc);
    return r;
  }
  const MPoly g = gcd(num, den);
  if (!g.is_constant()) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  const Rat inv = Rat(1) / den.leading_coeff();
  r.num_ = num * inv;
  r.den_ = den * inv;
  if (r.den_.is_constant()) r.den_ = MPoly(1);
  return r;
}

MPoly RatFn::to_poly() const {
  if (!is_polynomial()) throw DomainError("expected a polynomial, got " + str());
  return num_;
}

Rat RatFn::to_rat() const {
  if (!is_constant()) throw DomainError("expected a constant, got " + str());
  return num_.constant_value();
}

RatFn RatFn::derivative(Var v) const {
  if (is_polynomial()) return RatFn(num_.derivative(v));
  if (!den_.has_var(v)) return make(num_.derivative(v), den_);
  return make(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

RatFn substitute_ratfn(const MPoly& p, const RatBindings& b) {
  if (p.is_zero()) return RatFn();
  // Clear all denominators at once: scale by prod den_v^{deg_v p}.
  std::map<Var, unsigned> deg;
  bool any_rational = false;
  for (const auto& [v, img] : b) {
    const unsigned d = p.degree(v);
    if (d == 0) continue;
    deg[v] = d;
    if (!img.is_polynomial()) any_rational = true;
  }
  if (deg.empty()) return RatFn(p);
  if (!any_rational) {
    Bindings pb;
    for (const auto& [v, d] : deg) pb[v] = b.at(v).num();
    return RatFn(p.substitute(pb));
  }
  std::map<Var, std::vector<MPoly>> num_pow, den_pow;
  auto power = [](std::vector<MPoly>& cache, const MPoly& base, unsigned k) -> const MPoly& {
    if (cache.empty()) cache.push_back(MPoly(1));
    while (cache.size() <= k) cache.push_back(cache.back() * base);
    return cache[k];
  };
  MPoly total;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    MPoly term = MPoly::monomial(Monomial{}, c);
    for (const auto& [v, d] : deg) {
      const unsigned e = m.exponent(v);
      rest.e[v.id()] = 0;
      const RatFn& img = b.at(v);
      if (e) term = term * power(num_pow[v], img.num(), e);
      if (d > e) term = term * power(den_pow[v], img.den(), d - e);
    }
    total += term * MPoly::monomial(rest, 1);
  }
  MPoly denom(1);
  for (const auto& [v, d] : deg) denom = denom * power(den_pow[v], b.at(v).den(), d);
  return RatFn::make(total, denom);
}

RatFn RatFn::substitute(const RatBindings& b) const {
  if (b.empty()) return *this;
  const RatFn n = substitute_ratfn(num_, b);
  if (is_polynomial()) return n;
  return n / substitute_ratfn(den_, b);
}

RatFn RatFn::substitute(const Bindings& b) const {
  if (b.empty()) return *this;
  if (is_polynomial()) return RatFn(num_.substitute(b));
  return make(num_.substitute(b), den_.substitute(b));
}

Rat RatFn::evaluate(const std::map<Var, Rat>& values) const {
  const Rat d = den_.evaluate(values);
  if (d.is_zero()) throw DomainError("rational function " + str() + " has a pole at the evaluation point");
  return num_.evaluate(values) / d;
}

RatFn RatFn::specialize(const std::map<Var, Rat>& values) const {
  Bindings b;
  for (const auto& [v, x] : values)
    if (has_var(v)) b[v] = MPoly(x);
  if (b.empty()) return *this;
  const MPoly d = den_.substitute(b);
  if (d.is_zero()) throw DomainError("rational function " + str() + " has a pole at the specialization point");
  return make(num_.substitute(b), d);
}

RatFn RatFn::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero rational function");
  return make(den_, num_);
}

RatFn RatFn::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFn r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  // Powers of coprime polynomials stay coprime, and monic stays monic.
  return r;
}

std::string RatFn::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFn& RatFn::operator+=(const RatFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (is_polynomial() && o.is_polynomial()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) return *this = make(num_ + o.num_, den_);
  if (o.is_polynomial()) {
    // (a + c b)/b stays reduced.
    num_ += o.num_ * den_;
    return *this;
  }
  if (is_polynomial()) {
    RatFn r;
    r.num_ = num_ * o.den_ + o.num_;
    r.den_ = o.den_;
    return *this = r;
  }
  const MPoly g = gcd(den_, o.den_);
  if (g.is_constant()) return *this = make(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  const MPoly b1 = exact_div(den_, g), d1 = exact_div(o.den_, g);
  return *this = make(num_ * d1 + o.num_ * b1, den_ * d1);
}

RatFn& RatFn::operator-=(const RatFn& o) { return *this += -o; }

RatFn& RatFn::operator*=(const RatFn& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFn();
  if (is_polynomial() && o.is_polynomial()) {
    num_ = num_ * o.num_;
    return *this;
  }
  if (o.is_constant()) {
    num_ *= o.num_.constant_value();
    return *this;
  }
  if (is_constant()) {
    const Rat c = num_.constant_value();
    *this = o;
    num_ *= c;
    return *this;
  }
  // Cross-cancel so the product is already reduced.
  MPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_constant()) {
    const MPoly g = gcd(a, d);
    if (!g.is_constant()) {
      a = exact_div(a, g);
      d = exact_div(d, g);
    }
  }
  if (!b.is_constant()) {
    const MPoly g = gcd(c, b);
    if (!g.is_constant()) {
      c = exact_div(c, g);
      b = exact_div(b, g);
    }
  }
  MPoly den = b * d;
  const Rat inv = Rat(1) / den.leading_coeff();
  num_ = a * c * inv;
  den_ = den.is_constant() ? MPoly(1) : den * inv;
  return *this;
}

RatFn& RatFn::operator/=(const RatFn& o) { return *this *= o.inverse(); }

// ------------------------------------------------------------------ parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RatFn parse() {
    RatFn r = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return r;
  }

 private:
  RatFn expr() {
    skip();
    bool neg = false;
    if (peek('-')) {
      ++i_;
      neg = true;
    } else if (peek('+')) {
      ++i_;
    }
    RatFn r = term();
    if (neg) r = -r;
    for (;;) {
      skip();
      if (peek('+')) {
        ++i_;
        r += term();
      } else if (peek('-')) {
        ++i_;
        r -= term();
      } else {
        return r;
      }
    }
  }

  RatFn term() {
    RatFn r = unary();
    for (;;) {
      skip();
      if (peek('*')) {
        ++i_;
        r *= unary();
      } else if (peek('/')) {
        ++i_;
        const RatFn d = unary();
        if (d.is_zero()) fail("division by zero");
        r /= d;
      } else {
        return r;
      }
    }
  }

  RatFn unary() {
    skip();
    if (peek('-')) {
      ++i_;
      return -unary();
    }
    RatFn base = atom();
    skip();
    if (peek('^')) {
      ++i_;
      skip();
      bool neg = false;
      if (peek('-')) {
        ++i_;
        neg = true;
      }
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("expected an integer exponent");
      const int e = std::stoi(std::string(s_.substr(start, i_ - start)));
      if (neg && base.is_zero()) fail("negative power of zero");
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  RatFn atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      RatFn r = expr();
      skip();
      if (!peek(')')) fail("expected ')'");
      ++i_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return RatFn(Rat(mpz_class(std::string(s_.substr(start, i_ - start))), mpz_class(1)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      return RatFn::var(s_.substr(start, i_ - start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) const { return i_ < s_.size() && s_[i_] == c; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(s_) + "' at offset " + std::to_string(i_) + ": " + what);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

RatFn parse_ratfn(std::string_view text) { return Parser(text).parse(); }

MPoly parse_poly(std::string_view text) {
  const RatFn r = parse_ratfn(text);
  if (!r.is_polynomial()) throw ParseError("expected a polynomial: '" + std::string(text) + "'");
  return r.num();
}

}  // namespace alde
