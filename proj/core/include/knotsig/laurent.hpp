#pragma once

#include <map>
#include <string>

#include "knotsig/numbers.hpp"

namespace knotsig {

// Laurent polynomial with integer coefficients in a single variable s.
// Throughout the toolkit s stands for t^{1/2}: Alexander-type invariants
// live in Z[t^{1/2}, t^{-1/2}] and the Kashaev variable satisfies
// u = 2x = s + s^{-1}.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(1, 0); }
  static LaurentPoly monomial(Int coeff, long exp);

  bool is_zero() const { return c_.empty(); }
  Int coeff(long exp) const;
  long lo_exp() const;  // smallest exponent with nonzero coeff; requires nonzero
  long hi_exp() const;
  const std::map<long, Int>& terms() const { return c_; }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

  LaurentPoly shifted(long k) const;  // * s^k
  LaurentPoly mirrored() const;       // s -> s^{-1}
  bool is_palindromic() const { return *this == mirrored(); }

  // Exact division; throws Internal if the divisor does not divide.
  LaurentPoly exact_div(const LaurentPoly& d) const;

  // Exact evaluation at s = s0 (s0 != 0).
  Rat eval(const Rat& s0) const;

  // Sparse canonical text: "c*s^k" terms joined by " + ", ascending k.
  std::string to_string(const std::string& var = "s") const;

  // Pretty form in t when every exponent of s is even (s^2 = t); falls back
  // to the s form otherwise. Descending powers, e.g. "-t + 3 - t^-1".
  std::string pretty_t() const;

 private:
  void set(long exp, Int v);
  std::map<long, Int> c_;  // exponent -> nonzero coefficient
};

// Spec-facing free function: exact value of q at s = s0, s0 != 0.
Rat eval_laurent(const LaurentPoly& q, const Rat& s0);

}  // namespace knotsig
