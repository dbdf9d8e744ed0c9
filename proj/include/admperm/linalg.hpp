#pragma once

#include <optional>
#include <vector>

#include "admperm/rational.hpp"

namespace admperm {

/// Coordinate vector over the exact rationals.
using QVec = std::vector<Rat>;

QVec qvec_add(const QVec& a, const QVec& b);
QVec qvec_sub(const QVec& a, const QVec& b);
QVec qvec_neg(const QVec& a);
QVec qvec_scaled(const QVec& a, const Rat& c);
bool qvec_is_zero(const QVec& a);
Rat qvec_dot(const QVec& a, const QVec& b);
/// Lexicographic comparison, used for canonical orderings.
bool qvec_lex_less(const QVec& a, const QVec& b);

/// Dense rational matrix stored by rows.
using QMatrix = std::vector<QVec>;

QVec qmat_apply(const QMatrix& m, const QVec& v);
QMatrix qmat_mul(const QMatrix& a, const QMatrix& b);
QMatrix qmat_identity(int n);

/// Exact solver for B c = v where B has the given column vectors.
///
/// The columns must be linearly independent (they are lattice bases
/// throughout this project); construction throws otherwise. solve() returns
/// the unique coefficient vector, or nullopt when v is outside the column
/// span.
class LinearSolver {
 public:
  explicit LinearSolver(const std::vector<QVec>& columns);
  LinearSolver() = default;

  std::optional<QVec> solve(const QVec& v) const;
  /// Like solve(), but additionally requires every coefficient to be an
  /// integer.
  std::optional<std::vector<long long>> solve_integral(const QVec& v) const;

  int num_columns() const { return cols_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  QMatrix reduced_;            // row-echelon form of B
  QMatrix transform_;          // row operations applied, as a rows_ x rows_ matrix
  std::vector<int> pivot_col_; // pivot column of each echelon row
};

}  // namespace admperm
