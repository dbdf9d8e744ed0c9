#include "admperm/linalg.hpp"

#include <stdexcept>

namespace admperm {

namespace {
void check_same_size(const QVec& a, const QVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("vector dimension mismatch");
}
}  // namespace

QVec qvec_add(const QVec& a, const QVec& b) {
  check_same_size(a, b);
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec qvec_sub(const QVec& a, const QVec& b) {
  check_same_size(a, b);
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec qvec_neg(const QVec& a) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

QVec qvec_scaled(const QVec& a, const Rat& c) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

bool qvec_is_zero(const QVec& a) {
  for (const Rat& x : a)
    if (!x.is_zero()) return false;
  return true;
}

Rat qvec_dot(const QVec& a, const QVec& b) {
  check_same_size(a, b);
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool qvec_lex_less(const QVec& a, const QVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

QVec qmat_apply(const QMatrix& m, const QVec& v) {
  QVec r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = qvec_dot(m[i], v);
  return r;
}

QMatrix qmat_mul(const QMatrix& a, const QMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  QMatrix r(n, QVec(m));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t j = 0; j < m; ++j) {
      Rat s;
      for (std::size_t t = 0; t < k; ++t) s += a[i][t] * b[t][j];
      r[i][j] = s;
    }
  }
  return r;
}

QMatrix qmat_identity(int n) {
  QMatrix r(n, QVec(n));
  for (int i = 0; i < n; ++i) r[i][i] = Rat(1);
  return r;
}

LinearSolver::LinearSolver(const std::vector<QVec>& columns) {
  cols_ = static_cast<int>(columns.size());
  rows_ = cols_ ? static_cast<int>(columns[0].size()) : 0;
  reduced_.assign(rows_, QVec(cols_));
  for (int c = 0; c < cols_; ++c) {
    if (static_cast<int>(columns[c].size()) != rows_)
      throw std::invalid_argument("LinearSolver: ragged columns");
    for (int r = 0; r < rows_; ++r) reduced_[r][c] = columns[c][r];
  }
  transform_ = qmat_identity(rows_);

  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int piv = -1;
    for (int r = row; r < rows_; ++r)
      if (!reduced_[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(reduced_[piv], reduced_[row]);
    std::swap(transform_[piv], transform_[row]);
    Rat inv = Rat(1) / reduced_[row][col];
    for (int c = 0; c < cols_; ++c) reduced_[row][c] *= inv;
    for (int c = 0; c < rows_; ++c) transform_[row][c] *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || reduced_[r][col].is_zero()) continue;
      Rat f = reduced_[r][col];
      for (int c = 0; c < cols_; ++c) reduced_[r][c] -= f * reduced_[row][c];
      for (int c = 0; c < rows_; ++c) transform_[r][c] -= f * transform_[row][c];
    }
    pivot_col_.push_back(col);
    ++row;
  }
  if (static_cast<int>(pivot_col_.size()) != cols_)
    throw std::invalid_argument("LinearSolver: columns are linearly dependent");
}

std::optional<QVec> LinearSolver::solve(const QVec& v) const {
  if (static_cast<int>(v.size()) != rows_)
    throw std::invalid_argument("LinearSolver: dimension mismatch");
  QVec t = qmat_apply(transform_, v);
  // Rows past the pivot rows must vanish or the system is inconsistent.
  for (int r = cols_; r < rows_; ++r)
    if (!t[r].is_zero()) return std::nullopt;
  QVec c(cols_);
  for (int r = 0; r < cols_; ++r) c[pivot_col_[r]] = t[r];
  return c;
}

std::optional<std::vector<long long>> LinearSolver::solve_integral(const QVec& v) const {
  auto c = solve(v);
  if (!c) return std::nullopt;
  std::vector<long long> out(c->size());
  for (std::size_t i = 0; i < c->size(); ++i) {
    if (!(*c)[i].is_integer()) return std::nullopt;
    out[i] = (*c)[i].num();
  }
  return out;
}

}  // namespace admperm
