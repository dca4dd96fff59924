#include "qgclass/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qgclass/linear_solve.hpp"

namespace qgclass {

std::string type_to_string(TypeLabel t) {
  switch (t) {
    case TypeLabel::A: return "A";
    case TypeLabel::B: return "B";
    case TypeLabel::C: return "C";
    case TypeLabel::D: return "D";
  }
  throw std::logic_error("unreachable type label");
}

TypeLabel type_from_string(const std::string& s) {
  if (s == "A" || s == "a") return TypeLabel::A;
  if (s == "B" || s == "b") return TypeLabel::B;
  if (s == "C" || s == "c") return TypeLabel::C;
  if (s == "D" || s == "d") return TypeLabel::D;
  throw std::invalid_argument("unknown type label '" + s + "' (expected A, B, C or D)");
}

int Root::height() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), 0);
}

namespace {

std::vector<Rational> unit(int dim, int i, long scale = 1) {
  std::vector<Rational> v(dim, Rational(0));
  v[i] = scale;
  return v;
}

std::vector<Rational> diff(int dim, int i, int j) {
  std::vector<Rational> v(dim, Rational(0));
  v[i] = 1;
  v[j] = -1;
  return v;
}

std::vector<Rational> sum2(int dim, int i, int j) {
  std::vector<Rational> v(dim, Rational(0));
  v[i] = 1;
  v[j] += 1;
  return v;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

long expected_positive_count(TypeLabel type, long n) {
  switch (type) {
    case TypeLabel::A: return n * (n + 1) / 2;
    case TypeLabel::B:
    case TypeLabel::C: return n * n;
    case TypeLabel::D: return n * (n - 1);
  }
  throw std::logic_error("unreachable type label");
}

}  // namespace

RootSystem build_root_system(TypeLabel type, int rank) {
  switch (type) {
    case TypeLabel::A:
      if (rank < 1) throw std::invalid_argument("type A requires rank >= 1");
      break;
    case TypeLabel::B:
      if (rank < 2) throw std::invalid_argument("type B requires rank >= 2");
      break;
    case TypeLabel::C:
      if (rank < 2) throw std::invalid_argument("type C requires rank >= 2");
      break;
    case TypeLabel::D:
      if (rank < 3) throw std::invalid_argument("type D requires rank >= 3");
      break;
  }

  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.ambient_dim_ = (type == TypeLabel::A) ? rank + 1 : rank;
  const int dim = rs.ambient_dim_;

  std::vector<std::vector<Rational>> simple(rank);
  const int chain = (type == TypeLabel::A) ? rank : rank - 1;
  for (int i = 0; i < chain; ++i) simple[i] = diff(dim, i, i + 1);
  switch (type) {
    case TypeLabel::A: break;
    case TypeLabel::B: simple[rank - 1] = unit(dim, rank - 1); break;
    case TypeLabel::C: simple[rank - 1] = unit(dim, rank - 1, 2); break;
    case TypeLabel::D: simple[rank - 1] = sum2(dim, rank - 2, rank - 1); break;
  }

  std::vector<std::vector<Rational>> positives;
  switch (type) {
    case TypeLabel::A:
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) positives.push_back(diff(dim, i, j));
      break;
    case TypeLabel::B:
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          positives.push_back(diff(dim, i, j));
          positives.push_back(sum2(dim, i, j));
        }
      for (int i = 0; i < rank; ++i) positives.push_back(unit(dim, i));
      break;
    case TypeLabel::C:
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          positives.push_back(diff(dim, i, j));
          positives.push_back(sum2(dim, i, j));
        }
      for (int i = 0; i < rank; ++i) positives.push_back(unit(dim, i, 2));
      break;
    case TypeLabel::D:
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          positives.push_back(diff(dim, i, j));
          positives.push_back(sum2(dim, i, j));
        }
      break;
  }
  if (static_cast<long>(positives.size()) != expected_positive_count(type, rank))
    throw std::logic_error("positive root count does not match the classical formula");

  // Coefficients over the simple roots, solved exactly; they must come out
  // as nonnegative integers.
  RationalMatrix simple_cols(dim, rank);
  for (int c = 0; c < rank; ++c)
    for (int r = 0; r < dim; ++r) simple_cols.at(r, c) = simple[c][r];

  auto to_root = [&](const std::vector<Rational>& ambient) {
    LinearSolution sol = solve_linear(simple_cols, ambient);
    if (!sol.consistent || !sol.nullspace_basis.empty())
      throw std::logic_error("ambient root is not a unique simple-root combination");
    Root root;
    root.ambient = ambient;
    root.coeffs.resize(rank);
    for (int i = 0; i < rank; ++i) {
      if (sol.particular[i].get_den() != 1)
        throw std::logic_error("non-integer root coefficient");
      root.coeffs[i] = static_cast<int>(sol.particular[i].get_num().get_si());
    }
    return root;
  };

  for (int i = 0; i < rank; ++i) rs.simple_roots_.push_back(to_root(simple[i]));
  for (const auto& v : positives) {
    Root r = to_root(v);
    for (int c : r.coeffs)
      if (c < 0) throw std::logic_error("negative coefficient in positive root");
    rs.positive_roots_.push_back(std::move(r));
  }
  std::sort(rs.positive_roots_.begin(), rs.positive_roots_.end(),
            [](const Root& a, const Root& b) {
              if (a.height() != b.height()) return a.height() < b.height();
              return a.coeffs < b.coeffs;
            });
  for (size_t i = 0; i < rs.positive_roots_.size(); ++i)
    rs.positive_lookup_[rs.positive_roots_[i].coeffs] = static_cast<int>(i);

  rs.gram_ = RationalMatrix(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.gram_.at(i, j) = dot(simple[i], simple[j]);

  rs.cartan_ = RationalMatrix(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rational a = 2 * rs.gram_.at(i, j) / rs.gram_.at(j, j);
      if (a.get_den() != 1) throw std::logic_error("non-integer Cartan entry");
      rs.cartan_.at(i, j) = a;
    }
  return rs;
}

std::shared_ptr<const RootSystem> build_root_system_shared(TypeLabel type, int rank) {
  return std::make_shared<const RootSystem>(build_root_system(type, rank));
}

Rational RootSystem::inner(const Root& a, const Root& b) const {
  if (static_cast<int>(a.coeffs.size()) != rank_ ||
      static_cast<int>(b.coeffs.size()) != rank_)
    throw std::invalid_argument("root dimension mismatch");
  Rational s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (b.coeffs[j] == 0) continue;
      s += Rational(a.coeffs[i]) * gram_.at(i, j) * b.coeffs[j];
    }
  }
  return s;
}

int RootSystem::positive_index(const std::vector<int>& coeffs) const {
  auto it = positive_lookup_.find(coeffs);
  return it == positive_lookup_.end() ? -1 : it->second;
}

Root RootSystem::root_from_coeffs(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != rank_)
    throw std::invalid_argument("root dimension mismatch");
  Root r;
  r.coeffs = coeffs;
  r.ambient.assign(ambient_dim_, Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int d = 0; d < ambient_dim_; ++d)
      r.ambient[d] += Rational(coeffs[i]) * simple_roots_[i].ambient[d];
  return r;
}

std::vector<std::vector<int>> RootSystem::diagram_automorphisms() const {
  std::vector<int> id(rank_);
  for (int i = 0; i < rank_; ++i) id[i] = i;
  std::vector<std::vector<int>> out{id};

  switch (type_) {
    case TypeLabel::A:
      if (rank_ >= 2) {
        std::vector<int> flip(rank_);
        for (int i = 0; i < rank_; ++i) flip[i] = rank_ - 1 - i;
        out.push_back(std::move(flip));
      }
      break;
    case TypeLabel::B:
    case TypeLabel::C:
      break;
    case TypeLabel::D: {
      std::vector<int> swap = id;
      std::swap(swap[rank_ - 2], swap[rank_ - 1]);
      out.push_back(std::move(swap));
      break;
    }
  }
  return out;
}

nlohmann::json RootSystem::to_json() const {
  nlohmann::json simple = nlohmann::json::array();
  for (const auto& r : simple_roots_) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& x : r.ambient) coords.push_back(rational_to_string(x));
    simple.push_back(coords);
  }
  nlohmann::json cartan = nlohmann::json::array();
  for (int i = 0; i < rank_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < rank_; ++j)
      row.push_back(static_cast<long>(cartan_.at(i, j).get_num().get_si()));
    cartan.push_back(row);
  }
  nlohmann::json j{{"type", type_to_string(type_)},
                   {"rank", rank_},
                   {"simple_roots", simple},
                   {"cartan_matrix", cartan}};
  if (is_d3_alias()) j["d3_alias_of_a3"] = true;
  return j;
}

}  // namespace qgclass
