#include "qgclass/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "qgclass/linear_solve.hpp"

namespace qgclass {

std::string BasisLabel::to_string() const {
  if (kind == BasisKind::Cartan) return "h" + std::to_string(cartan_index + 1);
  std::ostringstream os;
  os << (kind == BasisKind::Raising ? "e[" : "f[");
  for (size_t i = 0; i < root.size(); ++i) {
    if (i) os << ",";
    os << root[i];
  }
  os << "]";
  return os.str();
}

void Tensor2::add(int a, int b, const HalfLaurent& c) {
  if (c.is_zero()) return;
  std::array<int, 2> key{a, b};
  auto [it, inserted] = terms.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

Tensor2 Tensor2::swapped() const {
  Tensor2 out;
  for (const auto& [key, c] : terms) out.add(key[1], key[0], c);
  return out;
}

Tensor2& Tensor2::operator+=(const Tensor2& other) {
  for (const auto& [key, c] : other.terms) add(key[0], key[1], c);
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& other) {
  for (const auto& [key, c] : other.terms) add(key[0], key[1], -c);
  return *this;
}

Tensor2 Tensor2::scaled(const HalfLaurent& s) const {
  Tensor2 out;
  for (const auto& [key, c] : terms) out.add(key[0], key[1], c * s);
  return out;
}

void Tensor3::add(int a, int b, int c, const HalfLaurent& coeff) {
  if (coeff.is_zero()) return;
  std::array<int, 3> key{a, b, c};
  auto [it, inserted] = terms.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

Tensor3& Tensor3::operator+=(const Tensor3& other) {
  for (const auto& [key, c] : other.terms) add(key[0], key[1], key[2], c);
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& other) {
  for (const auto& [key, c] : other.terms) add(key[0], key[1], key[2], -c);
  return *this;
}

Tensor3 Tensor3::scaled(const HalfLaurent& s) const {
  Tensor3 out;
  for (const auto& [key, c] : terms) out.add(key[0], key[1], key[2], c * s);
  return out;
}

Tensor3 Tensor3::slot_permuted(int p0, int p1, int p2) const {
  Tensor3 out;
  for (const auto& [key, c] : terms) out.add(key[p0], key[p1], key[p2], c);
  return out;
}

Rational proportionality(const RationalMatrix& x, const RationalMatrix& y) {
  for (int r = 0; r < x.rows(); ++r)
    for (int c = 0; c < x.cols(); ++c) {
      if (x.at(r, c) == 0) continue;
      Rational scalar = y.at(r, c) / x.at(r, c);
      RationalMatrix check = x;
      check *= scalar;
      if (!(check == y)) throw std::logic_error("matrices are not proportional");
      return scalar;
    }
  throw std::logic_error("proportionality against the zero matrix");
}

namespace {

RationalMatrix elementary(int dim, int r, int c) {
  RationalMatrix m(dim, dim);
  m.at(r, c) = 1;
  return m;
}

Rational first_nonzero_sign(const RationalMatrix& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.at(r, c) != 0) return m.at(r, c) > 0 ? 1 : -1;
  throw std::logic_error("sign of the zero matrix");
}

// Raising generator for the i-th simple root in the defining
// representation, anti-diagonal form conventions for B/C/D.
RationalMatrix simple_raising(TypeLabel type, int rank, int rep, int i) {
  auto sigma = [rep](int k) { return rep - 1 - k; };
  switch (type) {
    case TypeLabel::A:
      return elementary(rep, i, i + 1);
    case TypeLabel::B:
      if (i < rank - 1)
        return elementary(rep, i, i + 1) - elementary(rep, sigma(i + 1), sigma(i));
      return elementary(rep, rank - 1, rank) - elementary(rep, rank, rank + 1);
    case TypeLabel::C:
      if (i < rank - 1)
        return elementary(rep, i, i + 1) - elementary(rep, sigma(i + 1), sigma(i));
      return elementary(rep, rank - 1, rank);
    case TypeLabel::D:
      if (i < rank - 1)
        return elementary(rep, i, i + 1) - elementary(rep, sigma(i + 1), sigma(i));
      return elementary(rep, rank - 2, rank) - elementary(rep, rank - 1, rank + 1);
  }
  throw std::logic_error("unreachable type label");
}

}  // namespace

std::shared_ptr<const MatrixLieAlgebra> MatrixLieAlgebra::realize(
    std::shared_ptr<const RootSystem> rs) {
  if (!rs) throw std::invalid_argument("null root system");
  auto g = std::shared_ptr<MatrixLieAlgebra>(new MatrixLieAlgebra());
  g->rs_ = rs;
  const int rank = rs->rank();
  const TypeLabel type = rs->type();
  switch (type) {
    case TypeLabel::A: g->rep_dim_ = rank + 1; break;
    case TypeLabel::B: g->rep_dim_ = 2 * rank + 1; break;
    case TypeLabel::C: g->rep_dim_ = 2 * rank; break;
    case TypeLabel::D: g->rep_dim_ = 2 * rank; break;
  }
  const int rep = g->rep_dim_;
  const int npos = static_cast<int>(rs->positive_roots().size());

  if (type != TypeLabel::A) {
    RationalMatrix form(rep, rep);
    for (int i = 0; i < rep; ++i) {
      Rational sign = 1;
      if (type == TypeLabel::C && i >= rank) sign = -1;
      form.at(i, rep - 1 - i) = sign;
    }
    g->defining_form_ = std::move(form);
  }

  g->simple_pos_.assign(rank, -1);
  for (int i = 0; i < rank; ++i) {
    std::vector<int> unit(rank, 0);
    unit[i] = 1;
    g->simple_pos_[i] = rs->positive_index(unit);
    if (g->simple_pos_[i] < 0) throw std::logic_error("simple root missing from positives");
  }

  std::vector<RationalMatrix> e_mats(npos), f_mats(npos);
  std::vector<BracketRecipe> recipes(npos);

  for (int p = 0; p < npos; ++p) {
    const Root& beta = rs->positive_roots()[p];
    if (beta.height() == 1) {
      int i = 0;
      while (beta.coeffs[i] == 0) ++i;
      RationalMatrix e = simple_raising(type, rank, rep, i);
      RationalMatrix f = e.transpose();
      Rational k = trace_of_product(e, f);
      if (k == 0) throw std::logic_error("degenerate simple root pairing");
      f *= 1 / k;
      e_mats[p] = std::move(e);
      f_mats[p] = std::move(f);
      continue;
    }
    int least = -1, rest = -1;
    for (int i = 0; i < rank && least < 0; ++i) {
      if (beta.coeffs[i] == 0) continue;
      std::vector<int> reduced = beta.coeffs;
      reduced[i] -= 1;
      int q = rs->positive_index(reduced);
      if (q >= 0) {
        least = i;
        rest = q;
      }
    }
    if (least < 0) throw std::logic_error("positive root with no simple-root split");
    RationalMatrix raw = bracket(e_mats[g->simple_pos_[least]], e_mats[rest]);
    Rational sign = first_nonzero_sign(raw);
    raw *= sign;
    RationalMatrix f_raw = bracket(f_mats[g->simple_pos_[least]], f_mats[rest]);
    Rational k = trace_of_product(raw, f_raw);
    if (k == 0) throw std::logic_error("degenerate root-vector pairing");
    f_raw *= 1 / k;
    e_mats[p] = std::move(raw);
    f_mats[p] = std::move(f_raw);
    recipes[p] = {least, rest, sign, k};
  }
  g->recipes_ = std::move(recipes);

  for (int i = 0; i < rank; ++i) {
    BasisLabel label;
    label.kind = BasisKind::Cartan;
    label.cartan_index = i;
    g->labels_.push_back(std::move(label));
    g->mats_.push_back(
        bracket(e_mats[g->simple_pos_[i]], f_mats[g->simple_pos_[i]]));
  }
  for (int p = 0; p < npos; ++p) {
    BasisLabel label;
    label.kind = BasisKind::Raising;
    label.root = rs->positive_roots()[p].coeffs;
    g->labels_.push_back(std::move(label));
    g->mats_.push_back(e_mats[p]);
  }
  for (int p = 0; p < npos; ++p) {
    BasisLabel label;
    label.kind = BasisKind::Lowering;
    label.root = rs->positive_roots()[p].coeffs;
    g->labels_.push_back(std::move(label));
    g->mats_.push_back(f_mats[p]);
  }

  g->alpha_of_h_.assign(npos, std::vector<Rational>(rank));
  for (int p = 0; p < npos; ++p) {
    const RationalMatrix& e = g->mats_[g->raising_index(p)];
    for (int i = 0; i < rank; ++i)
      g->alpha_of_h_[p][i] = proportionality(e, bracket(g->mats_[i], e));
  }

  g->gram_ = RationalMatrix(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      g->gram_.at(i, j) = trace_of_product(g->mats_[i], g->mats_[j]);
  g->gram_inv_ = inverse(g->gram_);  // throws if the Cartan form degenerates

  for (int i = 0; i < rank; ++i) {
    RationalMatrix dual(rep, rep);
    for (int j = 0; j < rank; ++j) {
      RationalMatrix scaled = g->mats_[j];
      scaled *= g->gram_inv_.at(i, j);
      dual += scaled;
    }
    g->duals_.push_back(std::move(dual));
  }
  for (int p = 0; p < npos; ++p) g->duals_.push_back(f_mats[p]);
  for (int p = 0; p < npos; ++p) g->duals_.push_back(e_mats[p]);

  for (int p = 0; p < npos; ++p)
    if (trace_of_product(e_mats[p], f_mats[p]) != 1)
      throw std::logic_error("root-vector pair is not normalized");
  return g;
}

Tensor2 MatrixLieAlgebra::cartan_casimir() const {
  Tensor2 out;
  const int rank = rs_->rank();
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      out.add(cartan_index(i), cartan_index(j), HalfLaurent(gram_inv_.at(i, j)));
  return out;
}

Tensor2 MatrixLieAlgebra::casimir() const {
  Tensor2 out = cartan_casimir();
  for (int p = 0; p < num_positive(); ++p) {
    out.add(raising_index(p), lowering_index(p), HalfLaurent::one());
    out.add(lowering_index(p), raising_index(p), HalfLaurent::one());
  }
  return out;
}

TauHomomorphism::TauHomomorphism(std::shared_ptr<const MatrixLieAlgebra> algebra,
                                 AdmissibleTriple triple)
    : g_(std::move(algebra)), triple_(std::move(triple)) {
  if (!g_) throw std::invalid_argument("null algebra");
  const RootSystem& rs = g_->root_system();
  if (triple_.rs->type() != rs.type() || triple_.rs->rank() != rs.rank())
    throw std::invalid_argument("triple belongs to a different root system");
  AdmissibilityResult check =
      is_admissible(rs, triple_.gamma1, triple_.gamma2, triple_.tau);
  if (!check) throw std::invalid_argument("triple is not admissible: " + check.reason);

  std::vector<bool> in_g1(rs.rank(), false);
  for (int i : triple_.gamma1) in_g1[i] = true;

  auto tau_root_index = [&](const std::vector<int>& coeffs) {
    std::vector<int> image(rs.rank(), 0);
    for (int i = 0; i < rs.rank(); ++i)
      if (coeffs[i] != 0) image[triple_.tau.at(i)] += coeffs[i];
    int t = rs.positive_index(image);
    if (t < 0)
      throw std::logic_error("internal inconsistency: tau image of a root is not a root");
    return t;
  };

  for (int p = 0; p < g_->num_positive(); ++p) {
    const Root& beta = rs.positive_roots()[p];
    bool supported = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (beta.coeffs[i] != 0 && !in_g1[i]) supported = false;
    if (!supported) continue;

    int target = tau_root_index(beta.coeffs);
    if (beta.height() == 1) {
      raising_[p] = {target, 1};
      lowering_[p] = {target, 1};
      continue;
    }
    // Mirror the realization's nested-bracket recipe through the images.
    const auto& recipe = g_->recipe(p);
    const Image& re1 = raising_.at(g_->simple_pos_index(recipe.least_simple));
    const Image& re2 = raising_.at(recipe.rest_pos);
    RationalMatrix e_img = bracket(g_->matrix(g_->raising_index(re1.pos_index)),
                                   g_->matrix(g_->raising_index(re2.pos_index)));
    e_img *= recipe.sign * re1.scalar * re2.scalar;
    Rational mu = proportionality(g_->matrix(g_->raising_index(target)), e_img);
    raising_[p] = {target, mu};

    const Image& lf1 = lowering_.at(g_->simple_pos_index(recipe.least_simple));
    const Image& lf2 = lowering_.at(recipe.rest_pos);
    RationalMatrix f_img = bracket(g_->matrix(g_->lowering_index(lf1.pos_index)),
                                   g_->matrix(g_->lowering_index(lf2.pos_index)));
    f_img *= lf1.scalar * lf2.scalar / recipe.f_normalizer;
    Rational mu_f = proportionality(g_->matrix(g_->lowering_index(target)), f_img);
    lowering_[p] = {target, mu_f};
  }
}

TauHomomorphism::Image TauHomomorphism::raising_image(int pos_root) const {
  auto it = raising_.find(pos_root);
  if (it == raising_.end())
    throw std::invalid_argument("root is not supported on gamma1");
  return it->second;
}

TauHomomorphism::Image TauHomomorphism::raising_image_power(int pos_root, int k) const {
  if (k < 1) throw std::invalid_argument("power must be at least 1");
  Image acc{pos_root, 1};
  for (int step = 0; step < k; ++step) {
    Image next = raising_image(acc.pos_index);
    acc.pos_index = next.pos_index;
    acc.scalar *= next.scalar;
  }
  return acc;
}

TauHomomorphism::Image TauHomomorphism::lowering_image(int pos_root) const {
  auto it = lowering_.find(pos_root);
  if (it == lowering_.end())
    throw std::invalid_argument("root is not supported on gamma1");
  return it->second;
}

int TauHomomorphism::cartan_image(int simple_i) const {
  auto it = triple_.tau.find(simple_i);
  if (it == triple_.tau.end())
    throw std::invalid_argument("simple root is not in gamma1");
  return it->second;
}

RationalMatrix TauHomomorphism::raising_image_matrix(int pos_root) const {
  Image img = raising_image(pos_root);
  RationalMatrix m = g_->matrix(g_->raising_index(img.pos_index));
  m *= img.scalar;
  return m;
}

nlohmann::json tensor2_to_json(const MatrixLieAlgebra& g, const Tensor2& t) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : t.terms)
    terms.push_back({g.labels()[key[0]].to_string(), g.labels()[key[1]].to_string(),
                     c.to_json()});
  return terms;
}

nlohmann::json matrix_to_json(const RationalMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qgclass
