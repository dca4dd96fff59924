#include "qgclass/rational.hpp"

#include <stdexcept>

namespace qgclass {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (q.get_den() == 0)
    throw std::invalid_argument("rational with zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace qgclass
