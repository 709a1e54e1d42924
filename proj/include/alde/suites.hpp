#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alde/measures.hpp"
#include "alde/serialize.hpp"

namespace alde {

/// Flags of one run. Values are rationals "p/q" or parameter expressions
/// such as "alpha"; lists are comma separated.
struct RunConfig {
  std::optional<RatFn> alpha;
  std::optional<RatFn> beta;
  std::optional<std::vector<RatFn>> gamma;
  std::optional<int> d;
  std::optional<unsigned> k;
  std::optional<std::vector<RatFn>> a;
  std::optional<RatFn> a0;
  long nmax = 4;
  long smax = 2;
  unsigned wordlen = 12;

  /// Keys: alpha beta gamma d k a a0 nmax smax wordlen. Throws UsageError.
  void set(std::string_view key, std::string_view value);
};

/// Parameters with all defaults filled in.
struct Resolved {
  SimplexParams sp;
  RatFn alpha;              ///< one-variable alpha: --alpha, else |gamma^2| + d - 1
  RatFn beta;               ///< --beta, else gamma_1
  std::vector<RatFn> a;     ///< k = a.size()
  long nmax = 4;
  long smax = 2;
  unsigned wordlen = 12;

  unsigned k() const { return static_cast<unsigned>(a.size()); }
  /// beta as a nonnegative integer; throws UsageError otherwise or when k > beta.
  long int_beta() const;
  /// Context for the one-variable suites.
  KrallContext context_1d() const;
  /// Context with alpha = sp.alpha(), beta = gamma_1; throws UsageError
  /// unless gamma_1 is an integer >= k.
  KrallContext context_simplex() const;
};

/// Throws UsageError on inconsistent flags (d against gamma, k against a,
/// k > beta).
Resolved resolve(const RunConfig& cfg);

struct NamedMember {
  std::string name;
  RatFn f;  ///< polynomial in t
};
/// f2, f3 when k = 1 and beta = 1; otherwise the lowest-degree nonconstant
/// members found up to max_degree (named f1, f2, ...).
std::vector<NamedMember> algebra_members(const KrallContext& ctx, unsigned max_degree = 6);

/// Suites: jacobi krall simplex darboux orth all, and multivariable
/// (simplex and darboux together).
Report run_suite(const RunConfig& cfg, std::string_view suite);

/// Tables: jacobi q qhat simplex Q operators gram; format json or csv.
std::string export_table(const RunConfig& cfg, std::string_view kind, std::string_view format);

/// B_f and B_psi for the given f ("f2", "f3", a member name or a polynomial
/// in t) with their certification records.
struct SynthOutput {
  Json json;
  Report report;
};
SynthOutput krall_synth(const RunConfig& cfg, std::string_view f);

}  // namespace alde
