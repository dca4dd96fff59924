#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "qgclass/root_system.hpp"

using namespace qgclass;

namespace {

// Independent oracle: generate the whole root set by closing the simple
// roots under all simple reflections in ambient coordinates, then keep
// the positive half. Never touches the production positive-root lists.
std::set<std::vector<Rational>> reflection_closure(const RootSystem& rs) {
  const auto& simple = rs.simple_roots();
  auto dot = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };
  std::set<std::vector<Rational>> roots;
  for (const auto& r : simple) roots.insert(r.ambient);
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<std::vector<Rational>> next = roots;
    for (const auto& v : roots)
      for (const auto& s : simple) {
        Rational factor = 2 * dot(v, s.ambient) / dot(s.ambient, s.ambient);
        std::vector<Rational> image = v;
        for (size_t i = 0; i < image.size(); ++i) image[i] -= factor * s.ambient[i];
        if (next.insert(image).second) grew = true;
      }
    roots = std::move(next);
  }
  return roots;
}

long positive_count_oracle(const RootSystem& rs) {
  return static_cast<long>(reflection_closure(rs).size()) / 2;
}

std::vector<std::pair<TypeLabel, int>> test_range() {
  return {{TypeLabel::A, 1}, {TypeLabel::A, 2}, {TypeLabel::A, 3}, {TypeLabel::A, 4},
          {TypeLabel::B, 2}, {TypeLabel::B, 3}, {TypeLabel::B, 4},
          {TypeLabel::C, 2}, {TypeLabel::C, 3}, {TypeLabel::C, 4},
          {TypeLabel::D, 3}, {TypeLabel::D, 4}, {TypeLabel::D, 5}};
}

RationalMatrix expected_cartan(TypeLabel type, int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 2;
  auto link = [&](int i, int j) { m.at(i, j) = -1, m.at(j, i) = -1; };
  for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
  switch (type) {
    case TypeLabel::A: break;
    case TypeLabel::B: m.at(n - 2, n - 1) = -2; break;
    case TypeLabel::C: m.at(n - 1, n - 2) = -2; break;
    case TypeLabel::D:
      m.at(n - 2, n - 1) = 0;
      m.at(n - 1, n - 2) = 0;
      link(n - 3, n - 1);
      break;
  }
  return m;
}

}  // namespace

TEST_CASE("positive root counts match the classical formulas") {
  CHECK(build_root_system(TypeLabel::A, 2).positive_roots().size() == 3);
  CHECK(build_root_system(TypeLabel::A, 1).positive_roots().size() == 1);
  CHECK(build_root_system(TypeLabel::D, 4).positive_roots().size() == 12);
  for (auto [type, rank] : test_range()) {
    RootSystem rs = build_root_system(type, rank);
    long expected = 0;
    switch (type) {
      case TypeLabel::A: expected = rank * (rank + 1) / 2; break;
      case TypeLabel::B:
      case TypeLabel::C: expected = rank * rank; break;
      case TypeLabel::D: expected = rank * (rank - 1); break;
    }
    CHECK(static_cast<long>(rs.positive_roots().size()) == expected);
  }
}

TEST_CASE("positive roots agree with the reflection-closure oracle") {
  for (auto [type, rank] : test_range()) {
    RootSystem rs = build_root_system(type, rank);
    auto closure = reflection_closure(rs);
    CHECK(static_cast<long>(rs.positive_roots().size()) == positive_count_oracle(rs));
    for (const Root& r : rs.positive_roots()) CHECK(closure.count(r.ambient) == 1);
  }
}

TEST_CASE("A2 inner products in the standard realization") {
  RootSystem rs = build_root_system(TypeLabel::A, 2);
  const Root& a1 = rs.simple_roots()[0];
  const Root& a2 = rs.simple_roots()[1];
  CHECK(rs.inner(a1, a1) == 2);
  CHECK(rs.inner(a1, a2) == -1);
}

TEST_CASE("inner product is symmetric") {
  for (auto [type, rank] : test_range()) {
    RootSystem rs = build_root_system(type, rank);
    for (const Root& a : rs.positive_roots())
      for (const Root& b : rs.positive_roots()) CHECK(rs.inner(a, b) == rs.inner(b, a));
  }
}

TEST_CASE("B2 root lengths distinguish long and short") {
  RootSystem rs = build_root_system(TypeLabel::B, 2);
  CHECK(rs.inner(rs.simple_roots()[0], rs.simple_roots()[0]) == 2);
  CHECK(rs.inner(rs.simple_roots()[1], rs.simple_roots()[1]) == 1);
}

TEST_CASE("Cartan matrices match the textbook matrices") {
  for (auto [type, rank] : test_range())
    CHECK(build_root_system(type, rank).cartan_matrix() == expected_cartan(type, rank));
}

TEST_CASE("coefficient and ambient representations agree") {
  for (auto [type, rank] : test_range()) {
    RootSystem rs = build_root_system(type, rank);
    for (const Root& r : rs.positive_roots())
      CHECK(rs.root_from_coeffs(r.coeffs).ambient == r.ambient);
  }
}

TEST_CASE("every positive root is a nonnegative combination of simples") {
  for (auto [type, rank] : test_range()) {
    RootSystem rs = build_root_system(type, rank);
    for (const Root& r : rs.positive_roots()) {
      CHECK(r.height() >= 1);
      for (int c : r.coeffs) CHECK(c >= 0);
    }
  }
}

TEST_CASE("simple reflections permute the other positive roots") {
  for (auto [type, rank] : test_range()) {
    RootSystem rs = build_root_system(type, rank);
    for (int i = 0; i < rank; ++i) {
      const Root& alpha = rs.simple_roots()[i];
      for (const Root& beta : rs.positive_roots()) {
        if (beta.coeffs == alpha.coeffs) continue;
        // s_i(beta) = beta - <beta, alpha^vee> alpha in coefficient space
        Rational factor = 2 * rs.inner(beta, alpha) / rs.inner(alpha, alpha);
        CHECK(factor.get_den() == 1);
        std::vector<int> image = beta.coeffs;
        image[i] -= static_cast<int>(factor.get_num().get_si());
        CHECK(rs.is_positive_root(image));
      }
    }
  }
}

TEST_CASE("diagram automorphism counts") {
  CHECK(build_root_system(TypeLabel::A, 3).diagram_automorphisms().size() == 2);
  CHECK(build_root_system(TypeLabel::A, 1).diagram_automorphisms().size() == 1);
  CHECK(build_root_system(TypeLabel::B, 3).diagram_automorphisms().size() == 1);
  CHECK(build_root_system(TypeLabel::C, 3).diagram_automorphisms().size() == 1);
  CHECK(build_root_system(TypeLabel::D, 5).diagram_automorphisms().size() == 2);
  CHECK(build_root_system(TypeLabel::D, 4).diagram_automorphisms().size() == 2);
}

TEST_CASE("every reported automorphism preserves the Cartan matrix") {
  for (auto [type, rank] : test_range()) {
    RootSystem rs = build_root_system(type, rank);
    for (const auto& perm : rs.diagram_automorphisms())
      for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
          CHECK(rs.cartan_matrix().at(perm[i], perm[j]) == rs.cartan_matrix().at(i, j));
  }
}

TEST_CASE("automorphism search oracle (non-D4 systems)") {
  // Brute force over all index permutations; production lists must match
  // except for D4, where triality is deliberately cut down to one swap.
  for (auto [type, rank] : test_range()) {
    if (type == TypeLabel::D && rank == 4) continue;
    if (rank > 5) continue;
    RootSystem rs = build_root_system(type, rank);
    std::vector<int> perm(rank);
    for (int i = 0; i < rank; ++i) perm[i] = i;
    std::set<std::vector<int>> found;
    do {
      bool ok = true;
      for (int i = 0; i < rank && ok; ++i)
        for (int j = 0; j < rank && ok; ++j)
          if (rs.cartan_matrix().at(perm[i], perm[j]) != rs.cartan_matrix().at(i, j))
            ok = false;
      if (ok) found.insert(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::set<std::vector<int>> produced;
    for (const auto& p : rs.diagram_automorphisms()) produced.insert(p);
    CHECK(produced == found);
  }
}

TEST_CASE("D4 exposes only the branch swap") {
  RootSystem rs = build_root_system(TypeLabel::D, 4);
  auto autos = rs.diagram_automorphisms();
  REQUIRE(autos.size() == 2);
  CHECK(autos[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(autos[1] == std::vector<int>{0, 1, 3, 2});
}

TEST_CASE("invalid ranks are rejected with the valid range") {
  CHECK_THROWS_WITH_AS(build_root_system(TypeLabel::A, 0), "type A requires rank >= 1",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_root_system(TypeLabel::B, 1), "type B requires rank >= 2",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_root_system(TypeLabel::C, 1), "type C requires rank >= 2",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_root_system(TypeLabel::D, 2), "type D requires rank >= 3",
                       std::invalid_argument);
}

TEST_CASE("D3 is flagged as the A3 alias") {
  CHECK(build_root_system(TypeLabel::D, 3).is_d3_alias());
  CHECK_FALSE(build_root_system(TypeLabel::D, 4).is_d3_alias());
}

TEST_CASE("root system JSON shape") {
  RootSystem rs = build_root_system(TypeLabel::B, 2);
  auto j = rs.to_json();
  CHECK(j["type"] == "B");
  CHECK(j["rank"] == 2);
  CHECK(j["simple_roots"].size() == 2);
  CHECK(j["cartan_matrix"][0][1] == -2);
  CHECK(j["cartan_matrix"][1][0] == -1);
}
