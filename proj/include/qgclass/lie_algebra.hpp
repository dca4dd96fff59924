#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qgclass/half_laurent.hpp"
#include "qgclass/rational_matrix.hpp"
#include "qgclass/triples.hpp"

namespace qgclass {

enum class BasisKind { Cartan, Raising, Lowering };

struct BasisLabel {
  BasisKind kind = BasisKind::Cartan;
  int cartan_index = -1;   // 0-based, Cartan only
  std::vector<int> root;   // positive-root coefficients, root vectors only
  std::string to_string() const;  // "h1", "e[1,0]", "f[1,0]"
};

// Sparse tensors over the basis of one fixed algebra; keys are basis
// indices, coefficients live in the half-Laurent ring. Zero coefficients
// are never stored.
struct Tensor2 {
  std::map<std::array<int, 2>, HalfLaurent> terms;

  void add(int a, int b, const HalfLaurent& c);
  Tensor2 swapped() const;
  bool is_zero() const { return terms.empty(); }
  Tensor2& operator+=(const Tensor2& other);
  Tensor2& operator-=(const Tensor2& other);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  Tensor2 scaled(const HalfLaurent& s) const;
  bool operator==(const Tensor2& other) const = default;
};

struct Tensor3 {
  std::map<std::array<int, 3>, HalfLaurent> terms;

  void add(int a, int b, int c, const HalfLaurent& coeff);
  bool is_zero() const { return terms.empty(); }
  Tensor3& operator+=(const Tensor3& other);
  Tensor3& operator-=(const Tensor3& other);
  Tensor3 scaled(const HalfLaurent& s) const;
  // Exchange tensor slots by permutation: result(key[p0],key[p1],key[p2]).
  Tensor3 slot_permuted(int p0, int p1, int p2) const;
  bool operator==(const Tensor3& other) const = default;
};

/// Faithful defining matrix realization of the classical simple Lie
/// algebra of a root system: sl(n+1), so(2n+1), sp(2n), so(2n), the
/// B/C/D families taken with anti-diagonal defining forms so the Cartan
/// is diagonal and root vectors are sparse.
///
/// Basis order: h_1..h_rank, then e_beta over positive roots in root
/// system order, then f_beta in the same order. Every pair satisfies
/// tr(e_beta f_beta) = 1, and h_i = [e_i, f_i] is the trace-form dual of
/// alpha_i. Root vectors for non-simple beta follow a fixed recipe:
/// e_beta = +-[e_least, e_rest] with the sign making the first nonzero
/// row-major entry positive, where `least` is the smallest simple index
/// with beta - alpha_least still a positive root.
class MatrixLieAlgebra {
 public:
  static std::shared_ptr<const MatrixLieAlgebra> realize(
      std::shared_ptr<const RootSystem> rs);

  const RootSystem& root_system() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }
  int rep_dim() const { return rep_dim_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  int num_positive() const { return static_cast<int>(rs_->positive_roots().size()); }

  const std::vector<BasisLabel>& labels() const { return labels_; }
  const RationalMatrix& matrix(int basis_index) const { return mats_[basis_index]; }
  // Trace-form dual basis element: f for e, e for f, B^{-1}-combination for h.
  const RationalMatrix& dual_matrix(int basis_index) const { return duals_[basis_index]; }

  int cartan_index(int i) const { return i; }
  int raising_index(int pos_root) const { return rs_->rank() + pos_root; }
  int lowering_index(int pos_root) const { return rs_->rank() + num_positive() + pos_root; }
  int simple_pos_index(int simple_i) const { return simple_pos_[simple_i]; }

  Rational form(int x, int y) const { return trace_of_product(mats_[x], mats_[y]); }

  // alpha(h_i), read off the root-vector property [h_i, e_alpha] = alpha(h_i) e_alpha.
  const Rational& root_on_cartan(int pos_root, int i) const {
    return alpha_of_h_[pos_root][i];
  }

  const RationalMatrix& cartan_gram() const { return gram_; }
  const RationalMatrix& cartan_gram_inverse() const { return gram_inv_; }

  // The defining symmetric/symplectic form for B/C/D; empty for type A.
  const std::optional<RationalMatrix>& defining_form() const { return defining_form_; }

  // Inverse-Gram Cartan tensor: equals sum t_k (x) t_k over any trace-form
  // orthonormal basis of the Cartan, with rational entries.
  Tensor2 cartan_casimir() const;
  // Full invariant tensor of the trace form.
  Tensor2 casimir() const;

  struct BracketRecipe {
    int least_simple = -1;   // simple index split off
    int rest_pos = -1;       // positive-root index of beta - alpha_least
    Rational sign;           // e_beta = sign * [e_least, e_rest]
    Rational f_normalizer;   // f_beta = [f_least, f_rest] / f_normalizer
  };
  bool is_simple_root(int pos_root) const { return recipes_[pos_root].least_simple < 0; }
  const BracketRecipe& recipe(int pos_root) const { return recipes_[pos_root]; }

 private:
  MatrixLieAlgebra() = default;

  std::shared_ptr<const RootSystem> rs_;
  int rep_dim_ = 0;
  std::vector<BasisLabel> labels_;
  std::vector<RationalMatrix> mats_;
  std::vector<RationalMatrix> duals_;
  std::vector<int> simple_pos_;
  std::vector<std::vector<Rational>> alpha_of_h_;
  RationalMatrix gram_, gram_inv_;
  std::optional<RationalMatrix> defining_form_;
  std::vector<BracketRecipe> recipes_;
};

// Scalar c with y = c * x, for nonzero x exactly proportional to y.
// Throws std::logic_error when y is not a multiple of x.
Rational proportionality(const RationalMatrix& x, const RationalMatrix& y);

/// The map induced by tau on the nilpotent subalgebra generated by
/// gamma1: generators e/f/h of simple roots in gamma1 go to those of
/// their tau images, and non-simple root vectors extend through the same
/// nested-bracket recipe the realization fixed. Images of root vectors
/// are exact scalar multiples of basis vectors; the scalar is returned.
class TauHomomorphism {
 public:
  TauHomomorphism(std::shared_ptr<const MatrixLieAlgebra> algebra,
                  AdmissibleTriple triple);

  struct Image {
    int pos_index = -1;  // positive-root index of tau(beta)
    Rational scalar;     // phi(e_beta) = scalar * e_{tau beta}
  };

  // beta given as a positive-root index supported on gamma1.
  Image raising_image(int pos_root) const;
  Image raising_image_power(int pos_root, int k) const;
  Image lowering_image(int pos_root) const;
  int cartan_image(int simple_i) const;  // tau(i) for i in gamma1
  RationalMatrix raising_image_matrix(int pos_root) const;

  const AdmissibleTriple& triple() const { return triple_; }

 private:
  std::shared_ptr<const MatrixLieAlgebra> g_;
  AdmissibleTriple triple_;
  std::map<int, Image> raising_, lowering_;
};

// [[label_a, label_b, scalar], ...] with scalars in half-Laurent JSON form,
// ordered by basis index pairs.
nlohmann::json tensor2_to_json(const MatrixLieAlgebra& g, const Tensor2& t);

// Dense rational array form of one basis matrix (debug aid).
nlohmann::json matrix_to_json(const RationalMatrix& m);

}  // namespace qgclass
