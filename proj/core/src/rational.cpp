#include "gtmm/rational.hpp"

#include <cctype>

#include "gtmm/errors.hpp"

namespace gtmm {

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' &&
        c != '+') {
      throw ParseError("invalid rational literal \"" + text + "\"");
    }
  }
  mpq_class value;
  if (value.set_str(text, 10) != 0) {
    throw ParseError("invalid rational literal \"" + text + "\"");
  }
  if (value.get_den() == 0) {
    throw ParseError("zero denominator in \"" + text + "\"");
  }
  value.canonicalize();
  return value;
}

std::string rational_to_string(const Rational& value) {
  return value.get_str();
}

}  // namespace gtmm
