#include "nlgames/rational.hpp"

#include <stdexcept>

namespace nlg {

Rational make_fraction(long num, long den) {
  if (den == 0) throw std::invalid_argument("fraction with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      Rational r{BigInt(std::string(text))};
      r.canonicalize();
      return r;
    }
    BigInt num(std::string(text.substr(0, slash)));
    BigInt den(std::string(text.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
}

}  // namespace nlg
