#pragma once

#include <vector>

#include "alde/ratfn.hpp"

namespace alde {

using RatMatrix = std::vector<std::vector<RatFn>>;

/// Determinant of a square matrix; the empty matrix has determinant 1.
RatFn det(const RatMatrix& m);

/// Rank over the field of rational functions.
std::size_t rank(RatMatrix m);

}  // namespace alde

namespace alde {

struct LinearSolution {
  enum class Status { unique, inconsistent, underdetermined };
  Status status = Status::inconsistent;
  std::vector<RatFn> x;  ///< one particular solution (free unknowns set to 0)
  std::size_t rank = 0;
};

/// Solves A x = b exactly over the field of rational functions.
LinearSolution solve_linear(RatMatrix a, std::vector<RatFn> b);

}  // namespace alde

namespace alde {

/// Basis of the right nullspace {x : A x = 0}.
std::vector<std::vector<RatFn>> nullspace(RatMatrix a);

/// Row-by-row elimination for overdetermined systems that arrive in
/// batches. Rows are kept in reduced echelon form.
class IncrementalSolver {
 public:
  explicit IncrementalSolver(std::size_t unknowns) : n_(unknowns) {}

  /// Adds the equation row . x = rhs. Returns false if the system has
  /// become inconsistent (and stays that way).
  bool add_row(std::vector<RatFn> row, RatFn rhs);
  std::size_t unknowns() const { return n_; }
  std::size_t rank() const { return pivots_.size(); }
  bool full_rank() const { return rank() == n_; }
  bool consistent() const { return consistent_; }
  /// The unique solution; throws SolveError unless full rank and consistent.
  std::vector<RatFn> solution() const;

 private:
  struct Pivot {
    std::size_t col;
    std::vector<RatFn> row;
    RatFn rhs;
  };
  std::size_t n_;
  std::vector<Pivot> pivots_;
  bool consistent_ = true;
};

}  // namespace alde
