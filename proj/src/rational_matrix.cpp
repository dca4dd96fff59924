#include "qgclass/rational_matrix.hpp"

#include <stdexcept>

namespace qgclass {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j) == 0) continue;
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

RationalMatrix bracket(const RationalMatrix& x, const RationalMatrix& y) {
  return x * y - y * x;
}

Rational trace_of_product(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.cols() != y.rows() || x.rows() != y.cols())
    throw std::invalid_argument("matrix shape mismatch");
  Rational t = 0;
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) {
      if (x.at(i, k) == 0 || y.at(k, i) == 0) continue;
      t += x.at(i, k) * y.at(k, i);
    }
  return t;
}

}  // namespace qgclass
