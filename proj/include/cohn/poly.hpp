#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cohn/error.hpp"

namespace cohn {

// Polynomials in one variable t over a field F. F must provide static
// zero()/one(), is_zero(), ==, and the four arithmetic operators.
template <class F>
struct Polynomial {
  std::vector<F> c;  // ascending powers, no trailing zeros

  Polynomial() = default;
  explicit Polynomial(std::vector<F> coeffs) : c(std::move(coeffs)) { trim(); }

  static Polynomial zero() { return {}; }
  static Polynomial constant(F v) { return Polynomial(std::vector<F>{std::move(v)}); }
  static Polynomial one() { return constant(F::one()); }
  static Polynomial t() { return Polynomial(std::vector<F>{F::zero(), F::one()}); }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }  // -1 for zero
  const F& leading() const { return c.back(); }
  F at(std::size_t k) const { return k < c.size() ? c[k] : F::zero(); }

  bool operator==(const Polynomial& o) const { return c == o.c; }
};

template <class F>
inline Polynomial<F> operator+(const Polynomial<F>& x, const Polynomial<F>& y) {
  std::vector<F> c(std::max(x.c.size(), y.c.size()), F::zero());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = x.at(k) + y.at(k);
  return Polynomial<F>(std::move(c));
}

template <class F>
inline Polynomial<F> operator-(const Polynomial<F>& x) {
  std::vector<F> c = x.c;
  for (F& v : c) v = -v;
  return Polynomial<F>(std::move(c));
}

template <class F>
inline Polynomial<F> operator-(const Polynomial<F>& x, const Polynomial<F>& y) {
  return x + (-y);
}

template <class F>
inline Polynomial<F> operator*(const Polynomial<F>& x, const Polynomial<F>& y) {
  if (x.is_zero() || y.is_zero()) return Polynomial<F>::zero();
  std::vector<F> c(x.c.size() + y.c.size() - 1, F::zero());
  for (std::size_t i = 0; i < x.c.size(); ++i)
    for (std::size_t k = 0; k < y.c.size(); ++k) c[i + k] = c[i + k] + x.c[i] * y.c[k];
  return Polynomial<F>(std::move(c));
}

template <class F>
inline Polynomial<F> scale(const F& s, const Polynomial<F>& x) {
  std::vector<F> c = x.c;
  for (F& v : c) v = s * v;
  return Polynomial<F>(std::move(c));
}

// quotient and remainder; the divisor must be nonzero
template <class F>
inline std::pair<Polynomial<F>, Polynomial<F>> divmod(Polynomial<F> num, const Polynomial<F>& den) {
  internal_check(!den.is_zero(), "polynomial division by zero");
  std::vector<F> q(num.degree() >= den.degree() ? num.degree() - den.degree() + 1 : 0, F::zero());
  F lead_inv = inverse(den.leading());
  while (!num.is_zero() && num.degree() >= den.degree()) {
    long shift = num.degree() - den.degree();
    F f = num.leading() * lead_inv;
    q[shift] = f;
    std::vector<F> sub(shift, F::zero());
    sub.insert(sub.end(), den.c.begin(), den.c.end());
    num = num - scale(f, Polynomial<F>(std::move(sub)));
  }
  return {Polynomial<F>(std::move(q)), std::move(num)};
}

template <class F>
inline Polynomial<F> poly_gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = scale(inverse(a.leading()), a);  // monic for determinism
  return a;
}

// Reduced fractions of polynomials with a monic denominator.
template <class F>
struct RationalFunction {
  Polynomial<F> num;
  Polynomial<F> den = Polynomial<F>::one();

  RationalFunction() = default;
  RationalFunction(Polynomial<F> n, Polynomial<F> d) : num(std::move(n)), den(std::move(d)) {
    require(!den.is_zero(), errc::not_a_unit, "rational function with zero denominator");
    reduce();
  }
  static RationalFunction zero() { return {}; }
  static RationalFunction one() { return from_poly(Polynomial<F>::one()); }
  static RationalFunction from_poly(Polynomial<F> p) {
    RationalFunction r;
    r.num = std::move(p);
    return r;
  }
  static RationalFunction constant(F v) { return from_poly(Polynomial<F>::constant(std::move(v))); }
  static RationalFunction t() { return from_poly(Polynomial<F>::t()); }

  void reduce() {
    if (num.is_zero()) {
      den = Polynomial<F>::one();
      return;
    }
    Polynomial<F> g = poly_gcd(num, den);
    num = divmod(std::move(num), g).first;
    den = divmod(std::move(den), g).first;
    F lead_inv = inverse(den.leading());
    num = scale(lead_inv, num);
    den = scale(lead_inv, den);
  }

  bool is_zero() const { return num.is_zero(); }
  bool operator==(const RationalFunction& o) const { return num == o.num && den == o.den; }
};

template <class F>
inline RationalFunction<F> operator+(const RationalFunction<F>& x, const RationalFunction<F>& y) {
  return RationalFunction<F>(x.num * y.den + y.num * x.den, x.den * y.den);
}
template <class F>
inline RationalFunction<F> operator-(const RationalFunction<F>& x) {
  RationalFunction<F> r;
  r.num = -x.num;
  r.den = x.den;
  return r;
}
template <class F>
inline RationalFunction<F> operator-(const RationalFunction<F>& x, const RationalFunction<F>& y) {
  return x + (-y);
}
template <class F>
inline RationalFunction<F> operator*(const RationalFunction<F>& x, const RationalFunction<F>& y) {
  return RationalFunction<F>(x.num * y.num, x.den * y.den);
}
template <class F>
inline RationalFunction<F> inverse(const RationalFunction<F>& x) {
  require(!x.is_zero(), errc::not_a_unit, "zero rational function has no inverse");
  return RationalFunction<F>(x.den, x.num);
}
template <class F>
inline RationalFunction<F> operator/(const RationalFunction<F>& x, const RationalFunction<F>& y) {
  return x * inverse(y);
}

}  // namespace cohn
