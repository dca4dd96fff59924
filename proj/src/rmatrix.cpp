#include "qgclass/rmatrix.hpp"

#include <stdexcept>

#include "qgclass/linear_solve.hpp"
#include "qgclass/sparse_matrix.hpp"

namespace qgclass {

std::string rmatrix_kind_to_string(RMatrixKind k) {
  switch (k) {
    case RMatrixKind::nontwisted_bd: return "nontwisted_bd";
    case RMatrixKind::skew: return "skew";
    case RMatrixKind::other: return "other";
  }
  throw std::logic_error("unreachable r-matrix kind");
}

RMatrix make_rmatrix(std::shared_ptr<const MatrixLieAlgebra> algebra, Tensor2 tensor,
                     RMatrixKind kind, HalfLaurent scaling) {
  if (!algebra) throw std::invalid_argument("null algebra");
  return {std::move(algebra), std::move(tensor), kind, std::move(scaling)};
}

namespace {

// Index of the skew coordinate (i,j), i < j, among rank*(rank-1)/2 unknowns.
int skew_index(int i, int j, int rank) {
  int idx = 0;
  for (int a = 0; a < i; ++a) idx += rank - 1 - a;
  return idx + (j - i - 1);
}

}  // namespace

R0Space solve_r0(const MatrixLieAlgebra& g, const AdmissibleTriple& triple) {
  const RootSystem& rs = g.root_system();
  AdmissibilityResult check = is_admissible(rs, triple.gamma1, triple.gamma2, triple.tau);
  if (!check) throw std::invalid_argument("triple is not admissible: " + check.reason);

  const int rank = rs.rank();
  const int unknowns = rank * (rank - 1) / 2;
  const int rows = static_cast<int>(triple.gamma1.size()) * rank;
  RationalMatrix a(rows, unknowns);
  std::vector<Rational> b(rows, Rational(0));

  const RationalMatrix& binv = g.cartan_gram_inverse();
  int row = 0;
  for (int alpha : triple.gamma1) {
    int sp_alpha = g.simple_pos_index(alpha);
    int sp_beta = g.simple_pos_index(triple.tau.at(alpha));  // beta = tau(alpha)
    for (int k = 0; k < rank; ++k, ++row) {
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          Rational coeff = 0;
          if (k == j)
            coeff += g.root_on_cartan(sp_beta, i) - g.root_on_cartan(sp_alpha, i);
          if (k == i)
            coeff += g.root_on_cartan(sp_alpha, j) - g.root_on_cartan(sp_beta, j);
          a.at(row, skew_index(i, j, rank)) = coeff;
        }
      Rational rhs = 0;
      for (int i = 0; i < rank; ++i) {
        rhs += binv.at(i, k) * g.root_on_cartan(sp_beta, i);
        rhs += binv.at(k, i) * g.root_on_cartan(sp_alpha, i);
      }
      b[row] = -rhs / 2;
    }
  }

  LinearSolution sol = solve_linear(a, b);
  if (!sol.consistent)
    throw std::logic_error("internal error: r0 system inconsistent for an admissible triple");

  auto skew_tensor = [&](const std::vector<Rational>& coords) {
    Tensor2 t;
    for (int i = 0; i < rank; ++i)
      for (int j = i + 1; j < rank; ++j) {
        const Rational& s = coords[skew_index(i, j, rank)];
        if (s == 0) continue;
        t.add(g.cartan_index(i), g.cartan_index(j), HalfLaurent(s));
        t.add(g.cartan_index(j), g.cartan_index(i), HalfLaurent(-s));
      }
    return t;
  };

  R0Space out;
  out.particular = g.cartan_casimir().scaled(make_rational(1, 2)) + skew_tensor(sol.particular);
  for (const auto& v : sol.nullspace_basis) out.homogeneous_basis.push_back(skew_tensor(v));
  return out;
}

namespace {

void validate_r0(const MatrixLieAlgebra& g, const AdmissibleTriple& triple,
                 const Tensor2& r0) {
  const int rank = g.root_system().rank();
  for (const auto& [key, c] : r0.terms)
    if (key[0] >= rank || key[1] >= rank)
      throw std::invalid_argument("r0 must be supported on Cartan labels");

  if (!(r0 + r0.swapped() == g.cartan_casimir()))
    throw std::invalid_argument(
        "r0 violates condition (1): r0 + r0^21 is not the inverse-Gram Cartan tensor");

  for (int alpha : triple.gamma1) {
    int sp_alpha = g.simple_pos_index(alpha);
    int sp_beta = g.simple_pos_index(triple.tau.at(alpha));
    std::vector<HalfLaurent> component(rank);
    for (const auto& [key, c] : r0.terms) {
      component[key[1]] += c * HalfLaurent(g.root_on_cartan(sp_beta, key[0]));
      component[key[0]] += c * HalfLaurent(g.root_on_cartan(sp_alpha, key[1]));
    }
    for (const auto& x : component)
      if (!x.is_zero())
        throw std::invalid_argument("r0 violates condition (2) for alpha_" +
                                    std::to_string(alpha + 1));
  }
}

}  // namespace

RMatrix build_bd_rmatrix(std::shared_ptr<const MatrixLieAlgebra> g,
                         const AdmissibleTriple& triple, const Tensor2& r0,
                         const HalfLaurent& scaling) {
  if (!g) throw std::invalid_argument("null algebra");
  if (!(scaling == HalfLaurent::one() || scaling == HalfLaurent::sqrt_hbar()))
    throw std::invalid_argument("scaling must be 1 or sqrt(hbar)");
  validate_r0(*g, triple, r0);

  Tensor2 tensor = r0;
  for (int p = 0; p < g->num_positive(); ++p)
    tensor.add(g->lowering_index(p), g->raising_index(p), HalfLaurent::one());

  TauHomomorphism phi(g, triple);
  const RootSystem& rs = g->root_system();
  for (const TauPair& pair : extend_tau_pairs(triple)) {
    int source = rs.positive_index(pair.source.coeffs);
    TauHomomorphism::Image img = phi.raising_image_power(source, pair.power);
    if (img.pos_index != rs.positive_index(pair.image.coeffs))
      throw std::logic_error("tau homomorphism disagrees with root-level tau orbit");
    HalfLaurent mu{img.scalar};
    tensor.add(g->lowering_index(source), g->raising_index(img.pos_index), mu);
    tensor.add(g->raising_index(img.pos_index), g->lowering_index(source), -mu);
  }

  RMatrix r;
  r.algebra = std::move(g);
  r.tensor = tensor.scaled(scaling);
  r.kind = RMatrixKind::nontwisted_bd;
  r.scaling = scaling;
  return r;
}

Tensor2 symmetrization(const RMatrix& r) {
  return r.tensor + r.tensor.swapped();
}

bool symmetrization_is_scaled_casimir(const RMatrix& r) {
  return symmetrization(r) == r.algebra->casimir().scaled(r.scaling);
}

Tensor3 cybe_defect(const RMatrix& r) {
  const MatrixLieAlgebra& g = *r.algebra;
  const int rep = g.rep_dim();
  const long cube = static_cast<long>(rep) * rep * rep;
  for (const auto& [key, c] : r.tensor.terms)
    if (key[0] >= g.dim() || key[1] >= g.dim())
      throw std::invalid_argument("tensor references labels outside the algebra");

  SparseEntries id = identity_entries(rep);
  SparseMatrix r12(cube), r13(cube), r23(cube);
  for (const auto& [key, c] : r.tensor.terms) {
    SparseEntries a = nonzero_entries(g.matrix(key[0]));
    SparseEntries b = nonzero_entries(g.matrix(key[1]));
    add_kron3(r12, a, b, id, c, rep);
    add_kron3(r13, a, id, b, c, rep);
    add_kron3(r23, id, a, b, c, rep);
  }

  SparseMatrix defect = sparse_bracket(r12, r13);
  defect += sparse_bracket(r12, r23);
  defect += sparse_bracket(r13, r23);

  // Pull back to algebra coordinates: the coefficient on (x,y,z) is
  // sum over entries D[P,Q] of prod_s dual_s[q_s, p_s]; index the dual
  // basis by matrix position first so each entry touches only the few
  // basis elements whose dual is supported there.
  std::vector<std::vector<std::pair<int, Rational>>> dual_at(
      static_cast<size_t>(rep) * rep);
  for (int x = 0; x < g.dim(); ++x)
    for (const auto& [q, p, v] : nonzero_entries(g.dual_matrix(x)))
      dual_at[static_cast<size_t>(q) * rep + p].push_back({x, v});

  Tensor3 out;
  for (const auto& [row, cols] : defect.rows()) {
    const int p1 = static_cast<int>(row / (rep * rep));
    const int p2 = static_cast<int>((row / rep) % rep);
    const int p3 = static_cast<int>(row % rep);
    for (const auto& [col, val] : cols) {
      const int q1 = static_cast<int>(col / (rep * rep));
      const int q2 = static_cast<int>((col / rep) % rep);
      const int q3 = static_cast<int>(col % rep);
      for (const auto& [x, vx] : dual_at[static_cast<size_t>(q1) * rep + p1])
        for (const auto& [y, vy] : dual_at[static_cast<size_t>(q2) * rep + p2]) {
          Rational vxy = vx * vy;
          for (const auto& [z, vz] : dual_at[static_cast<size_t>(q3) * rep + p3])
            out.add(x, y, z, val * HalfLaurent(vxy * vz));
        }
    }
  }
  return out;
}

RMatrix jordan_rmatrix(std::shared_ptr<const MatrixLieAlgebra> g) {
  if (!g) throw std::invalid_argument("null algebra");
  if (g->root_system().type() != TypeLabel::A || g->root_system().rank() != 1)
    throw std::invalid_argument("the Jordan r-matrix lives on sl(2)");
  Tensor2 t;
  t.add(g->raising_index(0), g->cartan_index(0), HalfLaurent::one());
  t.add(g->cartan_index(0), g->raising_index(0), -HalfLaurent::one());
  RMatrix r;
  r.algebra = std::move(g);
  r.tensor = std::move(t);
  r.kind = RMatrixKind::skew;
  return r;
}

bool is_triangular(const RMatrix& r) {
  return symmetrization(r).is_zero() && cybe_defect(r).is_zero();
}

nlohmann::json rmatrix_to_json(const RMatrix& r) {
  return {{"kind", rmatrix_kind_to_string(r.kind)},
          {"scaling", r.scaling.to_json()},
          {"terms", tensor2_to_json(*r.algebra, r.tensor)}};
}

}  // namespace qgclass
