#pragma once

#include <vector>

#include "qgclass/rational_matrix.hpp"

namespace qgclass {

// Affine solution set of A x = b over the rationals, from the reduced row
// echelon form: `particular` has every free variable set to zero and the
// nullspace basis has one vector per free variable (that variable = 1).
struct LinearSolution {
  bool consistent = false;
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> nullspace_basis;
};

LinearSolution solve_linear(const RationalMatrix& a, const std::vector<Rational>& b);

// Exact inverse; throws std::domain_error on singular input.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace qgclass
