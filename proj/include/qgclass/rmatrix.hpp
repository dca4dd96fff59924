#pragma once

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "qgclass/lie_algebra.hpp"
#include "qgclass/triples.hpp"

namespace qgclass {

enum class RMatrixKind { nontwisted_bd, skew, other };
std::string rmatrix_kind_to_string(RMatrixKind k);

struct RMatrix {
  std::shared_ptr<const MatrixLieAlgebra> algebra;
  Tensor2 tensor;
  RMatrixKind kind = RMatrixKind::other;
  HalfLaurent scaling = HalfLaurent::one();
};

// Escape hatch for ad-hoc tensors (kind `other` unless stated); no
// structural validation happens here.
RMatrix make_rmatrix(std::shared_ptr<const MatrixLieAlgebra> algebra, Tensor2 tensor,
                     RMatrixKind kind = RMatrixKind::other,
                     HalfLaurent scaling = HalfLaurent::one());

// Affine space of Cartan parts: every solution is particular + span of
// homogeneous_basis. The symmetric part is pinned to half the inverse-Gram
// Cartan tensor; the skew freedom is cut down by the linear conditions
// (tau(alpha) (x) id + id (x) alpha) r0 = 0 for alpha in gamma1. The
// canonical particular solution sets every free echelon variable to zero.
struct R0Space {
  Tensor2 particular;
  std::vector<Tensor2> homogeneous_basis;
};
R0Space solve_r0(const MatrixLieAlgebra& g, const AdmissibleTriple& triple);

// r = scaling * (r0 + sum_{alpha>0} f_alpha (x) e_alpha + wedge part), the
// wedge part running over (alpha, tau^k(alpha)) pairs with the tau
// homomorphism supplying the image vectors. Validates r0 against both
// conditions and rejects a scaling outside {1, sqrt(hbar)}.
RMatrix build_bd_rmatrix(std::shared_ptr<const MatrixLieAlgebra> g,
                         const AdmissibleTriple& triple, const Tensor2& r0,
                         const HalfLaurent& scaling);

Tensor2 symmetrization(const RMatrix& r);  // r + r^21

// True when r + r^21 equals scaling * casimir, the exact invariant of
// non-twisted builds.
bool symmetrization_is_scaled_casimir(const RMatrix& r);

// [r12,r13] + [r12,r23] + [r13,r23], computed in the triple Kronecker
// power of the defining representation and pulled back to algebra
// coordinates through the trace-form dual basis. Zero iff CYBE holds.
Tensor3 cybe_defect(const RMatrix& r);

// E wedge H on sl(2).
RMatrix jordan_rmatrix(std::shared_ptr<const MatrixLieAlgebra> g);

// Skew-symmetric with exactly zero CYBE defect.
bool is_triangular(const RMatrix& r);

nlohmann::json rmatrix_to_json(const RMatrix& r);

}  // namespace qgclass
