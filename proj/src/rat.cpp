#include "alde/rat.hpp"

#include <cctype>
#include <functional>

#include "alde/error.hpp"

namespace alde {

namespace {

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string buf(s);
  if (!buf.empty() && buf[0] == '+') buf.erase(0, 1);
  return mpz_class(buf, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer(s)) throw ParseError("not a rational: '" + std::string(text) + "'");
    return Rat(parse_integer(s), mpz_class(1));
  }
  const auto p = trim(s.substr(0, slash));
  const auto q = trim(s.substr(slash + 1));
  if (!valid_integer(p) || !valid_integer(q) || q.front() == '-')
    throw ParseError("not a rational: '" + std::string(text) + "'");
  const mpz_class den = parse_integer(q);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rat(parse_integer(p), den);
}

long Rat::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw DomainError("expected a machine integer, got " + str());
  return v_.get_num().get_si();
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DomainError("division by zero rational");
  v_ /= o.v_;
  return *this;
}

std::size_t Rat::hash() const {
  // Low limbs are enough for bucketing.
  const auto n = v_.get_num_mpz_t();
  const auto d = v_.get_den_mpz_t();
  std::size_t h = mpz_size(n) ? static_cast<std::size_t>(mpz_getlimbn(n, 0)) : 0;
  h ^= static_cast<std::size_t>(mpz_sgn(n)) * 0x9e3779b97f4a7c15ULL;
  h = h * 31 + static_cast<std::size_t>(mpz_getlimbn(d, 0));
  return h;
}

Rat pow(const Rat& base, unsigned e) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), e);
  return Rat(n, d);
}

Rat pochhammer(const Rat& a, unsigned m) {
  Rat r(1);
  Rat x = a;
  for (unsigned i = 0; i < m; ++i) {
    r *= x;
    x += Rat(1);
  }
  return r;
}

Rat factorial(unsigned m) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), m);
  return Rat(f, mpz_class(1));
}

Rat binomial(unsigned n, unsigned k) {
  if (k > n) return Rat(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rat(b, mpz_class(1));
}

}  // namespace alde
