#pragma once

#include <gmpxx.h>

#include <string>

namespace knotsig {

// Exact arithmetic base types. mpq_class keeps values canonical
// (denominator > 0, gcd(num, den) = 1), which is exactly the contract
// the rest of the toolkit relies on.
using Int = mpz_class;
using Rat = mpq_class;

inline int sign_of(const Rat& r) { return sgn(r); }
inline int sign_of(const Int& z) { return sgn(z); }

// Parses "p/q" or "p". Throws on malformed text or zero denominator.
Rat rat_from_string(const std::string& text);

// Canonical form: "p/q", or "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace knotsig
