#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace alde {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. The canonical zero is 0/1.
class Rat {
 public:
  Rat() = default;
  template <std::integral T>
  Rat(T v) : v_(static_cast<long>(v)) {}  // NOLINT: implicit by design of the arithmetic API
  Rat(long num, long den);
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rat(const mpz_class& num, const mpz_class& den);

  /// Parses "p", "-p", "p/q". Throws ParseError on malformed input or q = 0.
  static Rat parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  /// Value as a long; throws DomainError if not an integer that fits.
  long to_long() const;

  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class v_{0};
};

Rat pow(const Rat& base, unsigned e);

/// Rising factorial a(a+1)...(a+m-1); the empty product is 1.
Rat pochhammer(const Rat& a, unsigned m);
Rat factorial(unsigned m);
Rat binomial(unsigned n, unsigned k);

}  // namespace alde
