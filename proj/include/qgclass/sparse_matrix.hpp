#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "qgclass/half_laurent.hpp"
#include "qgclass/rational_matrix.hpp"

namespace qgclass {

// Sparse square matrix over the half-Laurent ring, sized for the triple
// Kronecker power of a defining representation (dimension rep_dim^3).
class SparseMatrix {
 public:
  explicit SparseMatrix(long dim) : dim_(dim) {}

  long dim() const { return dim_; }
  bool is_zero() const { return rows_.empty(); }
  void add(long r, long c, const HalfLaurent& v);
  const std::map<long, std::map<long, HalfLaurent>>& rows() const { return rows_; }

  SparseMatrix& operator+=(const SparseMatrix& other);
  SparseMatrix& operator-=(const SparseMatrix& other);
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

 private:
  long dim_;
  std::map<long, std::map<long, HalfLaurent>> rows_;
};

SparseMatrix sparse_bracket(const SparseMatrix& a, const SparseMatrix& b);

// Nonzero entries (row, col, value) of a small dense matrix.
using SparseEntries = std::vector<std::tuple<int, int, Rational>>;
SparseEntries nonzero_entries(const RationalMatrix& m);
SparseEntries identity_entries(int dim);

// target += coeff * (a (x) b (x) c), all three factors rep_dim x rep_dim.
void add_kron3(SparseMatrix& target, const SparseEntries& a, const SparseEntries& b,
               const SparseEntries& c, const HalfLaurent& coeff, int rep_dim);

}  // namespace qgclass
