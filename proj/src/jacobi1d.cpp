#include "alde/jacobi1d.hpp"

#include "alde/error.hpp"
#include "alde/linalg.hpp"

namespace alde {

Var var_eps() {
  static const Var e = Var::named("eps");
  return e;
}

RatFn jacobi_poly(long n, const JacobiParams& p) {
  if (n < 0) return RatFn();
  const auto un = static_cast<unsigned>(n);
  const RatFn& a = p.alpha;
  const RatFn& b = p.beta;
  const RatFn den = pochhammer(a + 1, un);
  if (den.is_zero()) throw DomainError("jacobi_poly: (alpha+1)_n vanishes");
  const RatFn sign = (n % 2 == 0) ? RatFn(1) : RatFn(-1);
  const RatFn pre = sign * pochhammer(a + b + 1, un) / (RatFn(factorial(un)) * den);
  if (pre.is_zero()) return RatFn();
  // coefficient of t^j: (beta+j+1)_{n-j} (-n)_j (n+alpha+beta+1)_j / j!
  RatFn out;
  const RatFn t = RatFn::var(var_t());
  RatFn tp(1);
  for (unsigned j = 0; j <= un; ++j) {
    const RatFn c = pochhammer(b + RatFn(static_cast<long>(j) + 1), un - j) * pochhammer(RatFn(-n), j) *
                    pochhammer(RatFn(n) + a + b + 1, j) / RatFn(factorial(j));
    out += c * tp;
    tp *= t;
  }
  return pre * out;
}

RatFn jacobi_poly_pfaff(long n, const JacobiParams& p) {
  if (n < 0) return RatFn();
  const auto un = static_cast<unsigned>(n);
  const RatFn& a = p.alpha;
  const RatFn& b = p.beta;
  const RatFn pre = pochhammer(a + b + 1, un) / RatFn(factorial(un));
  if (pre.is_zero()) return RatFn();
  const RatFn u = 1 - RatFn::var(var_t());
  RatFn out, up(1);
  for (unsigned j = 0; j <= un; ++j) {
    const RatFn den = pochhammer(a + 1, j) * RatFn(factorial(j));
    if (den.is_zero()) throw DomainError("pfaff form: (alpha+1)_j vanishes");
    out += pochhammer(RatFn(-n), j) * pochhammer(RatFn(n) + a + b + 1, j) / den * up;
    up *= u;
  }
  return pre * out;
}

std::vector<RatFn> jacobi_coeffs_u(long n, const JacobiParams& p) {
  if (n < 0) return {};
  const auto un = static_cast<unsigned>(n);
  const RatFn& a = p.alpha;
  const RatFn& b = p.beta;
  const RatFn pre = pochhammer(a + b + 1, un) / RatFn(factorial(un));
  std::vector<RatFn> out(un + 1);
  if (pre.is_zero()) return out;
  // term_{j+1} / term_j = -(j-n)(n+a+b+1+j) / ((a+1+j)(j+1)), including the sign of (-u)^j
  RatFn term = pre;
  for (unsigned j = 0; j <= un; ++j) {
    out[j] = term;
    if (j == un) break;
    const RatFn den = (a + RatFn(static_cast<long>(j) + 1)) * RatFn(static_cast<long>(j) + 1);
    if (den.is_zero()) throw DomainError("pfaff form: (alpha+1)_j vanishes");
    term = term * (RatFn(n - static_cast<long>(j)) * (RatFn(n + static_cast<long>(j) + 1) + a + b)) / den;
  }
  return out;
}

bool pfaff_check(long n, const JacobiParams& p) { return jacobi_poly(n, p) == jacobi_poly_pfaff(n, p); }

Recurrence recurrence_coeffs(long n, const JacobiParams& p) {
  const RatFn& a = p.alpha;
  const RatFn& b = p.beta;
  const RatFn nn(n);
  const RatFn s = 2 * nn + a + b;
  const RatFn da = (s + 1) * (s + 2);
  if (da.is_zero()) throw DomainError("recurrence: A_n has a vanishing denominator at n=" + std::to_string(n));
  Recurrence r;
  r.A = (nn + 1) * (nn + a + 1) / da;
  const RatFn cn = (nn + b) * (nn + a + b);
  const RatFn dc = s * (s + 1);
  if (dc.is_zero()) {
    if (n == 0 && cn.is_zero()) {
      // alpha + beta = 0: C_0 multiplies p_{-1} = 0 and is set to 0, but
      // B_0 = A_0 + C_0 needs the limit of C_0, which is beta/(alpha+beta+1)
      r.C = RatFn();
      r.B = r.A + b / (a + b + 1);
      return r;
    }
    throw DomainError("recurrence: C_n has a vanishing denominator at n=" + std::to_string(n));
  }
  r.C = n == 0 && cn.is_zero() ? RatFn() : cn / dc;
  r.B = r.A + r.C;
  return r;
}

Rat lambda_val(const Rat& n, const Rat& xi) { return -(n * (n + xi)); }

RatFn lambda_val(const RatFn& n, const RatFn& xi) { return lambda_expr(n, xi); }

std::vector<RatFn> wronskian_weights(long n, long s, const std::vector<SignedSeq>& psis) {
  const std::size_t k = psis.size();
  std::vector<std::vector<RatFn>> vals(k, std::vector<RatFn>(k + 1));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= k; ++j) vals[i][j] = psis[i].value(n - static_cast<long>(j) + s);
  std::vector<RatFn> w(k + 1);
  for (std::size_t j = 0; j <= k; ++j) {
    RatMatrix minor(k, std::vector<RatFn>());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = 0; c <= k; ++c)
        if (c != j) minor[i].push_back(vals[i][c]);
    const RatFn m = det(minor);
    w[j] = ((k + j) % 2 == 0) ? m : -m;
  }
  return w;
}

RatFn qhat_poly(long n, long s, const JacobiParams& p, const std::vector<SignedSeq>& psis) {
  const JacobiParams ps{p.alpha + RatFn(2 * s), p.beta};
  const auto w = wronskian_weights(n, s, psis);
  RatFn out;
  for (std::size_t j = 0; j < w.size(); ++j)
    if (!w[j].is_zero()) out += w[j] * jacobi_poly(n - static_cast<long>(j), ps);
  return out;
}

std::vector<RatFn> qhat_coeffs_u(long n, long s, const JacobiParams& p, const std::vector<SignedSeq>& psis) {
  const JacobiParams ps{p.alpha + RatFn(2 * s), p.beta};
  const auto w = wronskian_weights(n, s, psis);
  std::vector<RatFn> out;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j].is_zero()) continue;
    const auto c = jacobi_coeffs_u(n - static_cast<long>(j), ps);
    if (out.size() < c.size()) out.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] += w[j] * c[i];
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

Recurrence recover_recurrence(long n, const JacobiParams& p, const std::vector<SignedSeq>& psis) {
  const RatFn qm = q_poly(n - 1, p, psis), q0 = q_poly(n, p, psis), qp = q_poly(n + 1, p, psis);
  const RatFn lhs = RatFn::var(var_t()) * q0;
  const auto cl = coeffs_in(lhs, var_t());
  const auto cp = coeffs_in(qp, var_t()), c0 = coeffs_in(q0, var_t()), cm = coeffs_in(qm, var_t());
  const bool use_c = !qm.is_zero();
  std::size_t rows = std::max({cl.size(), cp.size(), c0.size(), cm.size()});
  RatMatrix a(rows, std::vector<RatFn>(use_c ? 3 : 2));
  std::vector<RatFn> b(rows);
  auto at = [](const std::vector<RatFn>& v, std::size_t i) { return i < v.size() ? v[i] : RatFn(); };
  for (std::size_t i = 0; i < rows; ++i) {
    a[i][0] = at(cp, i);
    a[i][1] = at(c0, i);
    if (use_c) a[i][2] = at(cm, i);
    b[i] = at(cl, i);
  }
  const LinearSolution sol = solve_linear(a, b);
  if (sol.status == LinearSolution::Status::inconsistent)
    throw SolveError("no three-term recurrence for q at n=" + std::to_string(n));
  if (sol.status == LinearSolution::Status::underdetermined)
    throw SolveError("recurrence for q at n=" + std::to_string(n) + " is not determined (degenerate tau)");
  return {sol.x[0], sol.x[1], use_c ? sol.x[2] : RatFn()};
}

RatFn spectral_residual(long n, const JacobiParams& p) {
  const RatFn pn = jacobi_poly(n, p);
  return op_M1(p.alpha, p.beta).apply(pn) - lambda_val(RatFn(n), p.alpha + p.beta + 1) * pn;
}

RatFn recurrence_residual(long n, const JacobiParams& p) {
  const Recurrence r = recurrence_coeffs(n, p);
  return RatFn::var(var_t()) * jacobi_poly(n, p) -
         (r.A * jacobi_poly(n + 1, p) + r.B * jacobi_poly(n, p) + r.C * jacobi_poly(n - 1, p));
}

RatFn n5_residual(long n, const JacobiParams& p) {
  const RatFn ab = p.alpha + p.beta;
  return jacobi_poly(n, p) + jacobi_poly(n - 1, p) -
         (2 * RatFn(n) + ab) / ab * jacobi_poly(n, {p.alpha, p.beta - 1});
}

RatFn n1_residual(long n, const JacobiParams& p) {
  const RatFn ab = p.alpha + p.beta;
  return jacobi_poly(n - 1, p) + op_D2(p.alpha).apply(jacobi_poly(n, {p.alpha, p.beta - 2})) / (ab * (ab - 1));
}

namespace {

RatFn weight(long s) { return (1 - RatFn::var(var_t())).pow(static_cast<int>(s)); }

}  // namespace

RatFn m1s_residual(long n, long s, const JacobiParams& p) {
  const RatFn w = weight(s);
  const RatFn f = jacobi_poly(n, {p.alpha + RatFn(2 * s), p.beta}) * w;
  const RatFn lam = lambda_val(RatFn(n + s), p.alpha + p.beta + 1);
  return (op_M1s(p.alpha, p.beta, RatFn(s)).apply(f) - lam * f) / w;
}

RatFn n5s_residual(long n, long s, const JacobiParams& p) {
  const RatFn ab = p.alpha + p.beta;
  const JacobiParams ps{p.alpha + RatFn(2 * s), p.beta};
  const RatFn lhs = jacobi_poly(n, ps) + jacobi_poly(n - 1, ps);
  const RatFn rhs = ab / (ab + RatFn(2 * s)) * (2 * RatFn(n + s) + ab) / ab *
                    jacobi_poly(n, {p.alpha + RatFn(2 * s), p.beta - 1});
  return lhs - rhs;
}

RatFn n1s_residual(long n, long s, const JacobiParams& p) {
  const RatFn ab = p.alpha + p.beta;
  const RatFn ab2 = ab + RatFn(2 * s);
  const RatFn w = weight(s);
  const RatFn image = op_D2s(p.alpha, RatFn(s)).apply(jacobi_poly(n, {p.alpha + RatFn(2 * s), p.beta - 2}) * w);
  const RatFn rhs = -(ab * (ab - 1)) / (ab2 * (ab2 - 1)) / (ab * (ab - 1)) * image;
  return jacobi_poly(n - 1, {p.alpha + RatFn(2 * s), p.beta}) - rhs / w;
}

DiffOp n3_residual(const JacobiParams& p, const RatFn& s) {
  const DiffOp d1 = op_D1();
  return op_M1(p.alpha, p.beta + s) - (op_D2(p.alpha) - d1 * d1 - d1 * (p.alpha + p.beta + s + 1));
}

}  // namespace alde
