#include "thompson/folner.hpp"

namespace thompson {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  Rational out;
  // mpq_class rejects malformed input by throwing std::invalid_argument.
  try {
    out = Rational(s, 10);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational '" + s + "'");
  }
  if (out.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  out.canonicalize();
  return out;
}

}  // namespace thompson
