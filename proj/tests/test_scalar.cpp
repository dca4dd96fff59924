#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "qgclass/half_laurent.hpp"
#include "qgclass/rational.hpp"

using namespace qgclass;

namespace {

// Small deterministic PRNG so failures reproduce.
struct Xorshift {
  uint64_t state = 0x9e3779b97f4a7c15ull;
  uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  long small(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

Rational random_rational(Xorshift& rng) {
  return make_rational(rng.small(-40, 40), rng.small(1, 12));
}

HalfLaurent random_laurent(Xorshift& rng, bool even_only = false) {
  HalfLaurent x;
  int nterms = static_cast<int>(rng.small(0, 4));
  for (int i = 0; i < nterms; ++i) {
    int e = static_cast<int>(rng.small(-6, 6));
    if (even_only) e *= 2;
    x += HalfLaurent::term(e, random_rational(rng));
  }
  return x;
}

// Truncated N-th root of a unit 1 + w (w of positive valuation) by the
// formal binomial series, independent of nth_power_class.
HalfLaurent truncate_above(const HalfLaurent& x, int max_t_exponent) {
  HalfLaurent out;
  for (const auto& [k, c] : x.terms())
    if (k <= max_t_exponent) out += HalfLaurent::term(k, c);
  return out;
}

HalfLaurent binomial_root(const HalfLaurent& unit, int n, int order) {
  HalfLaurent w = unit - HalfLaurent::one();
  HalfLaurent sum = HalfLaurent::one();
  HalfLaurent w_pow = HalfLaurent::one();
  Rational coeff = 1;
  Rational exponent = make_rational(1, n);
  int max_t = 2 * order;
  for (int k = 1; k <= order; ++k) {
    coeff *= (exponent - (k - 1)) / k;
    w_pow = truncate_above(w_pow * w, max_t);
    sum += HalfLaurent(coeff) * w_pow;
  }
  return truncate_above(sum, max_t);
}

}  // namespace

TEST_CASE("rational canonical form and field axioms") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(3, -6) == make_rational(-1, 2));
  CHECK(make_rational(-1, 2).get_den() > 0);
  CHECK(make_rational(0, 7) == 0);

  Xorshift rng;
  for (int i = 0; i < 200; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == 0);
    if (a != 0) CHECK(a * (1 / a) == 1);
  }
}

TEST_CASE("rational string round-trip") {
  CHECK(rational_to_string(make_rational(-3, 6)) == "-1/2");
  CHECK(rational_to_string(make_rational(5)) == "5/1");
  CHECK(rational_from_string("-1/2") == make_rational(-1, 2));
  CHECK(rational_from_string("7") == 7);
  CHECK_THROWS_AS(rational_from_string("x/y"), std::invalid_argument);
  Xorshift rng;
  for (int i = 0; i < 100; ++i) {
    Rational a = random_rational(rng);
    CHECK(rational_from_string(rational_to_string(a)) == a);
  }
}

TEST_CASE("half-laurent ring axioms") {
  Xorshift rng;
  for (int i = 0; i < 150; ++i) {
    HalfLaurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == HalfLaurent());
    CHECK(a * HalfLaurent::one() == a);
    CHECK((a * HalfLaurent()).is_zero());
  }
}

TEST_CASE("no zero coefficients are stored") {
  HalfLaurent a = HalfLaurent::term(3, 5) + HalfLaurent::term(3, -5);
  CHECK(a.is_zero());
  CHECK(a.terms().empty());
}

TEST_CASE("valuation") {
  CHECK(HalfLaurent::one().valuation() == 0);
  CHECK(HalfLaurent::hbar_power(1).valuation() == 2);
  CHECK((HalfLaurent::hbar_power(3) + HalfLaurent::hbar_power(5)).valuation() == 6);
  CHECK(HalfLaurent::sqrt_hbar().valuation() == 1);
  CHECK_THROWS_WITH_AS(HalfLaurent().valuation(), "valuation of zero undefined",
                       std::domain_error);

  Xorshift rng;
  for (int i = 0; i < 150; ++i) {
    HalfLaurent a = random_laurent(rng), b = random_laurent(rng);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).valuation() == a.valuation() + b.valuation());
  }
}

TEST_CASE("nth power class: stated values") {
  CHECK(nth_power_class(HalfLaurent::one(), 1) == 0);
  CHECK(nth_power_class(HalfLaurent::one(), 5) == 0);
  // hbar^3 * (1 + hbar): the unit factor is an exact square of a formal
  // series, so only the valuation 3 survives mod 2.
  HalfLaurent x = HalfLaurent::hbar_power(3) * (HalfLaurent::one() + HalfLaurent::hbar_power(1));
  CHECK(nth_power_class(x, 2) == 1);
  CHECK(nth_power_class(HalfLaurent::hbar_power(4), 2) == 0);
  CHECK(nth_power_class(HalfLaurent::hbar_power(-3), 2) == 1);
}

TEST_CASE("nth power class: binomial-series oracle at order 12") {
  // Certifies the classification shortcut: a unit 1 + hbar*(...) has an
  // N-th root in C[[hbar]], checked here to order hbar^12.
  const int order = 12;
  for (int n : {2, 3, 5}) {
    HalfLaurent unit = HalfLaurent::one() + HalfLaurent::hbar_power(1) +
                       HalfLaurent::term(4, make_rational(-3, 7));
    HalfLaurent root = binomial_root(unit, n, order);
    HalfLaurent power = HalfLaurent::one();
    for (int i = 0; i < n; ++i) power = truncate_above(power * root, 2 * order);
    HalfLaurent defect = power - unit;
    for (const auto& [k, c] : defect.terms()) {
      CHECK(k > 2 * order);  // only truncation tail may survive
    }
  }
}

TEST_CASE("nth power class: invariance under multiplication by N-th powers") {
  Xorshift rng;
  int checked = 0;
  while (checked < 60) {
    HalfLaurent x = random_laurent(rng, /*even_only=*/true);
    HalfLaurent y = random_laurent(rng, /*even_only=*/true);
    if (x.is_zero() || y.is_zero()) continue;
    for (int n : {2, 3, 4}) {
      HalfLaurent ypow = HalfLaurent::one();
      for (int i = 0; i < n; ++i) ypow *= y;
      CHECK(nth_power_class(x * ypow, n) == nth_power_class(x, n));
    }
    ++checked;
  }
}

TEST_CASE("nth power class: rejected inputs") {
  CHECK_THROWS_AS(nth_power_class(HalfLaurent(), 2), std::domain_error);
  CHECK_THROWS_AS(nth_power_class(HalfLaurent::sqrt_hbar(), 2), std::domain_error);
  CHECK_THROWS_AS(nth_power_class(HalfLaurent::one(), 0), std::invalid_argument);
}

TEST_CASE("scalar JSON round-trip, sorted by exponent") {
  HalfLaurent x = HalfLaurent::term(4, make_rational(-3, 7)) +
                  HalfLaurent::term(-2, make_rational(1, 2)) + HalfLaurent::one();
  auto j = x.to_json();
  CHECK(j["terms"].size() == 3);
  CHECK(j["terms"][0][0] == -2);
  CHECK(j["terms"][1][0] == 0);
  CHECK(j["terms"][2][0] == 4);
  CHECK(HalfLaurent::from_json(j) == x);
  CHECK(HalfLaurent::from_json(x.to_json()).to_json() == j);
}
