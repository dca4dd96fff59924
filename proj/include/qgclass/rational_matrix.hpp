#pragma once

#include <vector>

#include "qgclass/rational.hpp"

namespace qgclass {

// Dense matrix over Rational; sized for defining representations and
// Cartan Gram matrices, not for the tensor-cube computations.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return a_[r * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[r * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const RationalMatrix& other) const = default;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& s);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }

  RationalMatrix transpose() const;
  Rational trace() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

RationalMatrix bracket(const RationalMatrix& x, const RationalMatrix& y);

// tr(x*y) without forming the product.
Rational trace_of_product(const RationalMatrix& x, const RationalMatrix& y);

}  // namespace qgclass
