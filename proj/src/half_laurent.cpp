#include "qgclass/half_laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qgclass {

HalfLaurent::HalfLaurent(const Rational& constant) {
  add_term(0, constant);
}

HalfLaurent::HalfLaurent(long constant) {
  add_term(0, Rational(constant));
}

HalfLaurent HalfLaurent::term(int t_exponent, const Rational& coeff) {
  HalfLaurent x;
  x.add_term(t_exponent, coeff);
  return x;
}

bool HalfLaurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

bool HalfLaurent::is_hbar_polynomial() const {
  for (const auto& [k, c] : terms_)
    if (k % 2 != 0) return false;
  return true;
}

Rational HalfLaurent::coeff(int t_exponent) const {
  auto it = terms_.find(t_exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int HalfLaurent::valuation() const {
  if (terms_.empty()) throw std::domain_error("valuation of zero undefined");
  return terms_.begin()->first;
}

void HalfLaurent::add_term(int exponent, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  return out;
}

HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& other) {
  *this = *this * other;
  return *this;
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

nlohmann::json HalfLaurent::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : terms_)
    terms.push_back({k, rational_to_string(c)});
  return {{"terms", terms}};
}

HalfLaurent HalfLaurent::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("scalar JSON must be {\"terms\": [[exp, \"num/den\"], ...]}");
  HalfLaurent x;
  for (const auto& entry : j["terms"]) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::invalid_argument("scalar term must be [exponent, \"num/den\"]");
    x.add_term(entry[0].get<int>(), rational_from_string(entry[1].get<std::string>()));
  }
  return x;
}

std::string HalfLaurent::pretty() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    if (k % 2 == 0)
      os << "hbar^" << (k / 2);
    else
      os << "sqrt_hbar^" << k;
  }
  return os.str();
}

int nth_power_class(const HalfLaurent& x, int n) {
  if (n <= 0) throw std::invalid_argument("power class modulus must be positive");
  if (x.is_zero()) throw std::domain_error("power class of zero undefined");
  if (!x.is_hbar_polynomial())
    throw std::domain_error("power class defined only for Laurent polynomials in hbar");
  int hbar_valuation = x.valuation() / 2;
  int residue = hbar_valuation % n;
  return residue < 0 ? residue + n : residue;
}

}  // namespace qgclass
