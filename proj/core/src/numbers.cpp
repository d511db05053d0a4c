#include "knotsig/numbers.hpp"

#include "knotsig/error.hpp"

namespace knotsig {

Rat rat_from_string(const std::string& text) {
  if (text.empty())
    throw Error(ErrorKind::MalformedInput, "empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Int n(text);
      return Rat(n);
    }
    Int n(text.substr(0, slash));
    Int d(text.substr(slash + 1));
    if (d == 0)
      throw Error(ErrorKind::ZeroDenominator, "rational literal " + text);
    Rat r(n, d);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::MalformedInput, "bad rational literal '" + text + "'");
  }
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace knotsig
