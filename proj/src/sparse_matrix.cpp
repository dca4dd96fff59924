#include "qgclass/sparse_matrix.hpp"

#include <stdexcept>

namespace qgclass {

void SparseMatrix::add(long r, long c, const HalfLaurent& v) {
  if (v.is_zero()) return;
  auto& row = rows_[r];
  auto [it, inserted] = row.emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) {
      row.erase(it);
      if (row.empty()) rows_.erase(r);
    }
  }
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& other) {
  for (const auto& [r, row] : other.rows_)
    for (const auto& [c, v] : row) add(r, c, v);
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& other) {
  for (const auto& [r, row] : other.rows_)
    for (const auto& [c, v] : row) add(r, c, -v);
  return *this;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("sparse dimension mismatch");
  SparseMatrix out(a.dim());
  for (const auto& [r, row] : a.rows_) {
    for (const auto& [k, v] : row) {
      auto bit = b.rows_.find(k);
      if (bit == b.rows_.end()) continue;
      for (const auto& [c, w] : bit->second) out.add(r, c, v * w);
    }
  }
  return out;
}

SparseMatrix sparse_bracket(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out = a * b;
  out -= b * a;
  return out;
}

SparseEntries nonzero_entries(const RationalMatrix& m) {
  SparseEntries out;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.at(r, c) != 0) out.emplace_back(r, c, m.at(r, c));
  return out;
}

SparseEntries identity_entries(int dim) {
  SparseEntries out;
  for (int i = 0; i < dim; ++i) out.emplace_back(i, i, Rational(1));
  return out;
}

void add_kron3(SparseMatrix& target, const SparseEntries& a, const SparseEntries& b,
               const SparseEntries& c, const HalfLaurent& coeff, int rep_dim) {
  const long d = rep_dim;
  for (const auto& [ra, ca, va] : a)
    for (const auto& [rb, cb, vb] : b) {
      Rational vab = va * vb;
      for (const auto& [rc, cc, vc] : c) {
        long row = (static_cast<long>(ra) * d + rb) * d + rc;
        long col = (static_cast<long>(ca) * d + cb) * d + cc;
        target.add(row, col, coeff * HalfLaurent(vab * vc));
      }
    }
}

}  // namespace qgclass
