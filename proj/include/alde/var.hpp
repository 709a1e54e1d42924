#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace alde {

/// Upper bound on the number of distinct variable names in one process.
inline constexpr std::size_t kMaxVars = 48;

/// Interned variable name. Interning order is the declared variable order
/// used by the graded-lex monomial order; a fixed standard set (t, u, n,
/// lam, x1..x5, z1..z5, alpha, beta, s, a0..a4, g1..g6, eps) is interned
/// first so that canonical output does not depend on call order.
class Var {
 public:
  static Var named(std::string_view name);
  /// Returns false if the name has not been interned yet.
  static bool exists(std::string_view name);
  /// Variable with an already interned id; throws DomainError otherwise.
  static Var from_id(std::size_t id);

  std::uint8_t id() const { return id_; }
  const std::string& name() const;

  friend bool operator==(Var a, Var b) { return a.id_ == b.id_; }
  friend bool operator<(Var a, Var b) { return a.id_ < b.id_; }

 private:
  explicit Var(std::uint8_t id) : id_(id) {}
  std::uint8_t id_ = 0;
};

/// Convenience for numbered families such as x1..xd.
Var indexed_var(std::string_view stem, int index);

}  // namespace alde

template <>
struct std::hash<alde::Var> {
  std::size_t operator()(alde::Var v) const noexcept { return v.id(); }
};
