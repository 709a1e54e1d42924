#include "alde/linalg.hpp"

#include "alde/error.hpp"

namespace alde {

namespace {

RatFn laplace(const RatMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.size();
  if (row == n) return RatFn(1);
  RatFn sum;
  int sign = 1;
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    const std::size_t c = cols[idx];
    if (!m[row][c].is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(idx));
      RatFn minor = laplace(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(idx), c);
      if (!minor.is_zero()) {
        if (sign > 0) {
          sum += m[row][c] * minor;
        } else {
          sum -= m[row][c] * minor;
        }
      }
    }
    sign = -sign;
  }
  return sum;
}

}  // namespace

RatFn det(const RatMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  if (n <= 4) {
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    return laplace(m, cols, 0);
  }
  RatMatrix a = m;
  RatFn d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return RatFn();
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    const RatFn inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const RatFn f = a[r][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return d;
}

std::size_t rank(RatMatrix a) {
  std::size_t r = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const RatFn inv = a[r][c].inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      const RatFn f = a[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace alde

namespace alde {

LinearSolution solve_linear(RatMatrix a, std::vector<RatFn> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  if (b.size() != rows) throw DomainError("solve_linear: dimension mismatch");
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const RatFn inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const RatFn f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  LinearSolution out;
  out.rank = r;
  for (std::size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) return out;
  out.x.assign(cols, RatFn());
  for (std::size_t i = 0; i < r; ++i) out.x[pivots[i]] = b[i];
  out.status = r == cols ? LinearSolution::Status::unique : LinearSolution::Status::underdetermined;
  return out;
}

}  // namespace alde

namespace alde {

std::vector<std::vector<RatFn>> nullspace(RatMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const RatFn inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const RatFn f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<RatFn>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<RatFn> v(cols);
    v[f] = RatFn(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    out.push_back(std::move(v));
  }
  if (rows == 0)
    for (std::size_t f = 0; f < cols; ++f) {
      std::vector<RatFn> v(cols);
      v[f] = RatFn(1);
      out.push_back(std::move(v));
    }
  return out;
}

bool IncrementalSolver::add_row(std::vector<RatFn> row, RatFn rhs) {
  if (row.size() != n_) throw DomainError("IncrementalSolver: row length mismatch");
  if (!consistent_) return false;
  for (const auto& p : pivots_) {
    if (row[p.col].is_zero()) continue;
    const RatFn f = row[p.col];
    for (std::size_t j = 0; j < n_; ++j)
      if (!p.row[j].is_zero()) row[j] -= f * p.row[j];
    rhs -= f * p.rhs;
  }
  std::size_t c = 0;
  while (c < n_ && row[c].is_zero()) ++c;
  if (c == n_) {
    if (!rhs.is_zero()) consistent_ = false;
    return consistent_;
  }
  const RatFn inv = row[c].inverse();
  for (std::size_t j = c; j < n_; ++j)
    if (!row[j].is_zero()) row[j] *= inv;
  rhs *= inv;
  for (auto& p : pivots_) {
    if (p.row[c].is_zero()) continue;
    const RatFn f = p.row[c];
    for (std::size_t j = 0; j < n_; ++j)
      if (!row[j].is_zero()) p.row[j] -= f * row[j];
    p.rhs -= f * rhs;
  }
  pivots_.push_back({c, std::move(row), std::move(rhs)});
  return true;
}

std::vector<RatFn> IncrementalSolver::solution() const {
  if (!consistent_) throw SolveError("inconsistent system");
  if (!full_rank()) throw SolveError("underdetermined system (rank " + std::to_string(rank()) + " of " + std::to_string(n_) + ")");
  std::vector<RatFn> x(n_);
  for (const auto& p : pivots_) x[p.col] = p.rhs;
  return x;
}

}  // namespace alde
