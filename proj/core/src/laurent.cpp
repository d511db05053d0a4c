#include "knotsig/laurent.hpp"

#include <sstream>

#include "knotsig/error.hpp"

namespace knotsig {

void LaurentPoly::set(long exp, Int v) {
  if (v == 0)
    c_.erase(exp);
  else
    c_[exp] = std::move(v);
}

LaurentPoly LaurentPoly::monomial(Int coeff, long exp) {
  LaurentPoly p;
  p.set(exp, std::move(coeff));
  return p;
}

Int LaurentPoly::coeff(long exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Int(0) : it->second;
}

long LaurentPoly::lo_exp() const {
  if (is_zero()) throw Error(ErrorKind::Internal, "lo_exp of zero polynomial");
  return c_.begin()->first;
}

long LaurentPoly::hi_exp() const {
  if (is_zero()) throw Error(ErrorKind::Internal, "hi_exp of zero polynomial");
  return c_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) r.c_[e] = -v;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, v] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_[e] = v;
    } else {
      it->second += v;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, v1] : c_)
    for (const auto& [e2, v2] : o.c_) {
      auto it = r.c_.find(e1 + e2);
      if (it == r.c_.end()) {
        r.c_[e1 + e2] = v1 * v2;
      } else {
        it->second += v1 * v2;
        if (it->second == 0) r.c_.erase(it);
      }
    }
  return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) r.c_[e + k] = v;
  return r;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) r.c_[-e] = v;
  return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::Internal, "division by zero polynomial");
  if (is_zero()) return zero();
  // Shift both operands into Z[s] and run plain long division, asserting
  // exactness coefficient by coefficient.
  LaurentPoly num = shifted(-lo_exp());
  LaurentPoly den = d.shifted(-d.lo_exp());
  long qshift = lo_exp() - d.lo_exp();
  LaurentPoly q;
  Int dlead = den.c_.rbegin()->second;
  long dexp = den.hi_exp();
  while (!num.is_zero()) {
    long ne = num.hi_exp();
    if (ne < dexp)
      throw Error(ErrorKind::Internal, "inexact Laurent division (degree)");
    Int nl = num.c_.rbegin()->second;
    Int qc = nl / dlead;
    if (qc * dlead != nl)
      throw Error(ErrorKind::Internal, "inexact Laurent division (coefficient)");
    LaurentPoly term = monomial(qc, ne - dexp);
    q += term;
    num = num - term * den;
  }
  return q.shifted(qshift);
}

Rat LaurentPoly::eval(const Rat& s0) const {
  if (s0 == 0) throw Error(ErrorKind::ZeroDenominator, "Laurent evaluation at 0");
  // Horner on the ordinary polynomial s^{-lo} * p, then scale.
  if (is_zero()) return Rat(0);
  long lo = lo_exp(), hi = hi_exp();
  Rat acc(0);
  for (long e = hi; e >= lo; --e) {
    acc *= s0;
    acc += Rat(coeff(e));
  }
  Rat scale(1);
  Rat base = lo >= 0 ? s0 : Rat(1) / s0;
  for (long i = 0; i < (lo >= 0 ? lo : -lo); ++i) scale *= base;
  return acc * scale;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, v] : c_) {
    if (!first) out << " + ";
    first = false;
    out << v.get_str() << "*" << var << "^" << e;
  }
  return out.str();
}

std::string LaurentPoly::pretty_t() const {
  if (is_zero()) return "0";
  for (const auto& [e, v] : c_)
    if (e % 2 != 0) return to_string("s");
  std::ostringstream out;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    long k = it->first / 2;
    const Int& v = it->second;
    if (first) {
      if (v < 0) out << "-";
      first = false;
    } else {
      out << (v < 0 ? " - " : " + ");
    }
    Int a = abs(v);
    if (a != 1 || k == 0) out << a.get_str();
    if (k != 0) {
      out << "t";
      if (k != 1) out << "^" << k;
    }
  }
  return out.str();
}

Rat eval_laurent(const LaurentPoly& q, const Rat& s0) { return q.eval(s0); }

}  // namespace knotsig
