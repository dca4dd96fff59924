#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "qgclass/rational_matrix.hpp"

namespace qgclass {

enum class TypeLabel { A, B, C, D };

std::string type_to_string(TypeLabel t);
TypeLabel type_from_string(const std::string& s);

// A root carried in two coordinate systems that must agree: integer
// coefficients over the simple roots and Bourbaki ambient coordinates.
struct Root {
  std::vector<int> coeffs;
  std::vector<Rational> ambient;

  int height() const;
  bool operator==(const Root& other) const { return coeffs == other.coeffs; }
};

/// Exact root-system data for the classical types in their standard
/// Bourbaki realizations: A_n in R^{n+1}, B_n/C_n/D_n in R^n. Simple
/// roots follow Bourbaki numbering, so for D_n the indices n-1 and n are
/// the branch endpoints.
class RootSystem {
 public:
  TypeLabel type() const { return type_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_dim_; }
  // D_3 is accepted but flagged: it is A_3 with relabelled nodes.
  bool is_d3_alias() const { return type_ == TypeLabel::D && rank_ == 3; }

  const std::vector<Root>& simple_roots() const { return simple_roots_; }
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const RationalMatrix& gram() const { return gram_; }
  const RationalMatrix& cartan_matrix() const { return cartan_; }

  Rational inner(const Root& a, const Root& b) const;

  // Index into positive_roots(), or -1 when the coefficient vector is not
  // a positive root.
  int positive_index(const std::vector<int>& coeffs) const;
  bool is_positive_root(const std::vector<int>& coeffs) const {
    return positive_index(coeffs) >= 0;
  }
  Root root_from_coeffs(const std::vector<int>& coeffs) const;

  // Dynkin-diagram symmetries as 0-based index permutations. Identity
  // always first; for D_4 only the alpha_3/alpha_4 swap is exposed
  // (triality is out of scope).
  std::vector<std::vector<int>> diagram_automorphisms() const;

  nlohmann::json to_json() const;

  friend RootSystem build_root_system(TypeLabel type, int rank);

 private:
  RootSystem() = default;

  TypeLabel type_ = TypeLabel::A;
  int rank_ = 0;
  int ambient_dim_ = 0;
  std::vector<Root> simple_roots_;
  std::vector<Root> positive_roots_;
  RationalMatrix gram_;
  RationalMatrix cartan_;
  std::map<std::vector<int>, int> positive_lookup_;
};

// Throws std::invalid_argument naming the valid rank range for the type.
RootSystem build_root_system(TypeLabel type, int rank);

std::shared_ptr<const RootSystem> build_root_system_shared(TypeLabel type, int rank);

}  // namespace qgclass
