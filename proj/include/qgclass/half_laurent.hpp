#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "qgclass/rational.hpp"

namespace qgclass {

// Laurent polynomials in a formal variable t with t^2 = hbar, over Rational.
// Exponents count powers of t (half powers of hbar): v(t) = 1, v(hbar) = 2.
// Finite support only; zero coefficients are never stored.
class HalfLaurent {
 public:
  HalfLaurent() = default;
  HalfLaurent(const Rational& constant);  // NOLINT: deliberate implicit lift
  HalfLaurent(long constant);             // NOLINT
  static HalfLaurent term(int t_exponent, const Rational& coeff);
  static HalfLaurent one() { return HalfLaurent(1); }
  static HalfLaurent sqrt_hbar() { return term(1, 1); }
  static HalfLaurent hbar_power(int k) { return term(2 * k, 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // True when only even exponents occur, i.e. the value lies in C((hbar)).
  bool is_hbar_polynomial() const;
  Rational coeff(int t_exponent) const;
  const std::map<int, Rational>& terms() const { return terms_; }

  // Least exponent with nonzero coefficient, in t units.
  // Throws std::domain_error("valuation of zero undefined") on zero.
  int valuation() const;

  HalfLaurent& operator+=(const HalfLaurent& other);
  HalfLaurent& operator-=(const HalfLaurent& other);
  HalfLaurent& operator*=(const HalfLaurent& other);
  HalfLaurent operator-() const;
  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  bool operator==(const HalfLaurent& other) const { return terms_ == other.terms_; }
  bool operator!=(const HalfLaurent& other) const { return !(*this == other); }

  nlohmann::json to_json() const;
  static HalfLaurent from_json(const nlohmann::json& j);
  std::string pretty() const;  // human rendering for table output

 private:
  void add_term(int exponent, const Rational& coeff);
  std::map<int, Rational> terms_;
};

// Class of x in C((hbar))* / (C((hbar))*)^N, reported as a residue in Z/N.
// Every unit of C[[hbar]] is an N-th power, so only the hbar-valuation
// survives. Requires x nonzero with even t-support.
int nth_power_class(const HalfLaurent& x, int n);

}  // namespace qgclass
