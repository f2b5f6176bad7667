#include "rephom/rational.hpp"

#include <cctype>

#include "rephom/errors.hpp"

namespace rephom {

Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    const bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                    ((c == '-' || c == '+') && (i == 0 || text[i - 1] == '/'));
    if (!ok) throw InputError("malformed rational literal: " + text);
  }
  mpq_class value;
  if (value.set_str(text, 10) != 0)
    throw InputError("malformed rational literal: " + text);
  if (sgn(value.get_den()) == 0)
    throw InputError("zero denominator in rational literal: " + text);
  value.canonicalize();
  return value;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

}  // namespace rephom
