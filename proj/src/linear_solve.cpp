#include "qgclass/linear_solve.hpp"

#include <stdexcept>

namespace qgclass {

namespace {

// Gauss-Jordan to reduced row echelon form, in place. Returns the pivot
// column of each pivot row.
std::vector<int> rref(RationalMatrix& m) {
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
    Rational inv = 1 / m.at(row, col);
    for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rational f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

LinearSolution solve_linear(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("rhs length mismatch");
  const int n = a.cols();
  RationalMatrix aug(a.rows(), n + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, n) = b[r];
  }
  std::vector<int> pivot_cols = rref(aug);

  LinearSolution sol;
  for (int c : pivot_cols)
    if (c == n) return sol;  // row [0 ... 0 | 1]: inconsistent
  sol.consistent = true;

  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_cols) is_pivot[c] = true;

  sol.particular.assign(n, Rational(0));
  for (size_t r = 0; r < pivot_cols.size(); ++r)
    sol.particular[pivot_cols[r]] = aug.at(static_cast<int>(r), n);

  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[free_col] = 1;
    for (size_t r = 0; r < pivot_cols.size(); ++r)
      v[pivot_cols[r]] = -aug.at(static_cast<int>(r), free_col);
    sol.nullspace_basis.push_back(std::move(v));
  }
  return sol;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const int n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  std::vector<int> pivot_cols = rref(aug);
  if (static_cast<int>(pivot_cols.size()) != n || pivot_cols[n - 1] != n - 1)
    throw std::domain_error("singular matrix");
  RationalMatrix out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
  return out;
}

}  // namespace qgclass
