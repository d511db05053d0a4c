#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knotsig/laurent.hpp"
#include "knotsig/numbers.hpp"

namespace knotsig {

// Dense integer polynomial in the variable u = 2x. Region matrices have
// entries here; after the substitution u -> s + s^{-1} they become
// palindromic Laurent polynomials, which is how the two Alexander routes
// get compared without leaving exact arithmetic.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);  // coeffs[k] multiplies u^k

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(Int c);
  static IntPoly monomial(Int coeff, int exp);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Int coeff(int k) const;
  Int lead() const;
  const std::vector<Int>& coeffs() const { return c_; }

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly& operator+=(const IntPoly& o);
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  IntPoly derivative() const;
  IntPoly exact_div(const IntPoly& d) const;  // throws Internal on remainder

  Rat eval_at_u(const Rat& u0) const;

  std::string to_string(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<Int> c_;  // no trailing zeros; empty means 0
};

// Value of p at u = 2*x0 (the spec's evaluation convention: callers think
// in terms of the circle coordinate x, the polynomial lives in u = 2x).
Rat eval_poly(const IntPoly& p, const Rat& x0);

// u -> s + s^{-1}; the image of any p is palindromic.
LaurentPoly substitute_u_to_s(const IntPoly& p);

// Inverse direction for palindromic Laurent polynomials, via the basis
// z_k = s^k + s^{-k} with z_{k+1} = u*z_k - z_{k-1}. Throws NotPalindromic.
IntPoly laurent_to_upoly(const LaurentPoly& q);

// Primitive gcd over Z[u] (positive leading coefficient).
IntPoly gcd_poly(const IntPoly& a, const IntPoly& b);

// Number of distinct real roots of p in the half-open interval (a, b],
// by a Sturm chain on the squarefree part.
int sturm_count(const IntPoly& p, const Rat& a, const Rat& b);

// Squarefree decomposition p ~ prod f_m^m (Yun). Returns the nonconstant
// f_m with their multiplicities m, primitive with positive lead.
std::vector<std::pair<IntPoly, int>> squarefree_mults(const IntPoly& p);

}  // namespace knotsig
