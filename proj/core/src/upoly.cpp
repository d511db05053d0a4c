#include "knotsig/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "knotsig/error.hpp"

namespace knotsig {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int c) { return IntPoly({std::move(c)}); }

IntPoly IntPoly::monomial(Int coeff, int exp) {
  std::vector<Int> v(exp + 1);
  v[exp] = std::move(coeff);
  return IntPoly(std::move(v));
}

Int IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Int(0);
  return c_[k];
}

Int IntPoly::lead() const {
  if (is_zero()) throw Error(ErrorKind::Internal, "lead of zero polynomial");
  return c_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r = *this;
  r += o;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<Int> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return zero();
  std::vector<Int> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::exact_div(const IntPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::Internal, "division by zero polynomial");
  if (is_zero()) return zero();
  if (degree() < d.degree())
    throw Error(ErrorKind::Internal, "inexact division (degree)");
  std::vector<Int> rem = c_;
  std::vector<Int> q(degree() - d.degree() + 1);
  const Int& dl = d.c_.back();
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    Int top = rem[k + d.degree()];
    if (top == 0) continue;
    Int qc = top / dl;
    if (qc * dl != top)
      throw Error(ErrorKind::Internal, "inexact division (coefficient)");
    q[k] = qc;
    for (int i = 0; i <= d.degree(); ++i) rem[k + i] -= qc * d.c_[i];
  }
  for (const Int& v : rem)
    if (v != 0) throw Error(ErrorKind::Internal, "inexact division (remainder)");
  return IntPoly(std::move(q));
}

Rat IntPoly::eval_at_u(const Rat& u0) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= u0;
    acc += Rat(*it);
  }
  return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << c_[k].get_str() << "*" << var << "^" << k;
  }
  return out.str();
}

Rat eval_poly(const IntPoly& p, const Rat& x0) { return p.eval_at_u(Rat(2) * x0); }

LaurentPoly substitute_u_to_s(const IntPoly& p) {
  LaurentPoly result;
  LaurentPoly u = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -1);
  LaurentPoly power = LaurentPoly::one();
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k) != 0) result += LaurentPoly::monomial(p.coeff(k), 0) * power;
    if (k < p.degree()) power = power * u;
  }
  return result;
}

IntPoly laurent_to_upoly(const LaurentPoly& q) {
  if (!q.is_palindromic())
    throw Error(ErrorKind::NotPalindromic, "u-form needs p(s) == p(1/s)");
  if (q.is_zero()) return IntPoly::zero();
  // z_k = s^k + s^{-k} satisfies z_{k+1} = u z_k - z_{k-1}; peel from the top.
  LaurentPoly rest = q;
  IntPoly result;
  std::vector<IntPoly> z;  // z[k] as a u-polynomial
  long top = rest.hi_exp();
  z.reserve(top + 1);
  z.push_back(IntPoly::constant(2));
  if (top >= 1) z.push_back(IntPoly::monomial(1, 1));
  for (long k = 2; k <= top; ++k)
    z.push_back(IntPoly::monomial(1, 1) * z[k - 1] - z[k - 2]);
  while (!rest.is_zero()) {
    long k = rest.hi_exp();
    if (k < 0) throw Error(ErrorKind::Internal, "palindromic peel underflow");
    Int c = rest.coeff(k);
    if (k == 0) {
      // constant term: z_0 = 2 would double it
      result += IntPoly::constant(c);
      rest = rest - LaurentPoly::monomial(c, 0);
    } else {
      result += IntPoly::constant(c) * z[k];
      rest = rest - LaurentPoly::monomial(c, k) - LaurentPoly::monomial(c, -k);
    }
  }
  return result;
}

namespace {

// Dense rational polynomial, only what the Sturm chain needs.
struct QPoly {
  std::vector<Rat> c;
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }
};

QPoly to_q(const IntPoly& p) {
  QPoly q;
  q.c.reserve(p.degree() + 1);
  for (int i = 0; i <= p.degree(); ++i) q.c.emplace_back(p.coeff(i));
  return q;
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (size_t i = 1; i < p.c.size(); ++i) d.c.push_back(p.c[i] * Rat(long(i)));
  return d;
}

QPoly neg_rem(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  r.trim();
  while (!r.zero() && r.deg() >= b.deg()) {
    Rat f = r.c.back() / b.c.back();
    int shift = r.deg() - b.deg();
    for (int i = 0; i <= b.deg(); ++i) r.c[i + shift] -= f * b.c[i];
    r.c.pop_back();
    r.trim();
  }
  for (auto& v : r.c) v = -v;
  return r;
}

int variations(const std::vector<QPoly>& chain, const Rat& x) {
  int var = 0, last = 0;
  for (const auto& p : chain) {
    int s = sign_of(p.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

}  // namespace

IntPoly gcd_poly(const IntPoly& a, const IntPoly& b) {
  QPoly x = to_q(a), y = to_q(b);
  x.trim();
  y.trim();
  while (!y.zero()) {
    QPoly r = neg_rem(x, y);
    x = y;
    y = r;
  }
  if (x.zero()) return IntPoly::zero();
  // rescale to a primitive integer polynomial with positive lead
  Int lcm_den(1);
  for (const auto& v : x.c) {
    Int den = v.get_den();
    lcm_den = lcm(lcm_den, den);
  }
  std::vector<Int> iv;
  iv.reserve(x.c.size());
  for (const auto& v : x.c) {
    Rat scaled = v * Rat(lcm_den);
    iv.push_back(scaled.get_num());
  }
  Int content(0);
  for (const auto& v : iv) content = gcd(content, v);
  if (content == 0) return IntPoly::zero();
  if (iv.back() < 0) content = -content;
  for (auto& v : iv) v /= content;
  return IntPoly(std::move(iv));
}

int sturm_count(const IntPoly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw Error(ErrorKind::Internal, "Sturm of zero polynomial");
  if (!(a < b)) return 0;
  IntPoly g = gcd_poly(p, p.derivative());
  IntPoly sf = g.degree() >= 1 ? p.exact_div(g) : p;
  if (sf.degree() <= 0) return 0;
  std::vector<QPoly> chain;
  chain.push_back(to_q(sf));
  chain.push_back(derivative(chain[0]));
  while (!chain.back().zero() && chain.back().deg() >= 0) {
    if (chain.back().deg() == 0) break;
    QPoly r = neg_rem(chain[chain.size() - 2], chain.back());
    if (r.zero()) break;
    chain.push_back(std::move(r));
  }
  return variations(chain, a) - variations(chain, b);
}

std::vector<std::pair<IntPoly, int>> squarefree_mults(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  if (p.degree() <= 0) return out;
  // Yun's algorithm.
  IntPoly a = gcd_poly(p, p.derivative());
  IntPoly b = p.exact_div(a);
  IntPoly c = p.derivative().exact_div(a);
  IntPoly d = c - b.derivative();
  int m = 1;
  while (b.degree() >= 1) {
    IntPoly f = gcd_poly(b, d);
    if (f.degree() >= 1) out.emplace_back(f, m);
    IntPoly f_use = f.degree() >= 0 && !f.is_zero() ? f : IntPoly::constant(1);
    b = b.exact_div(f_use);
    c = d.exact_div(f_use);
    d = c - b.derivative();
    ++m;
  }
  return out;
}

}  // namespace knotsig
