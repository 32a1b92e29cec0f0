#pragma once

#include <string>

#include "cohn/error.hpp"
#include "cohn/numbers.hpp"

namespace cohn {

// a + b*j with j a primitive third root of unity, j^2 = -1 - j
struct EisensteinInt {
  Int a = 0, b = 0;

  EisensteinInt() = default;
  EisensteinInt(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}

  bool is_zero() const { return a == 0 && b == 0; }
  Int norm() const { return a * a - a * b + b * b; }
  std::string str() const { return int_str(a) + (b >= 0 ? "+" : "") + int_str(b) + "j"; }
};

inline EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) {
  return {x.a + y.a, x.b + y.b};
}
inline EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) {
  return {x.a - y.a, x.b - y.b};
}
inline EisensteinInt operator-(const EisensteinInt& x) { return {-x.a, -x.b}; }
inline EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
  // (a1 + b1 j)(a2 + b2 j), reduced by j^2 = -1 - j
  return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
}
inline bool operator==(const EisensteinInt& x, const EisensteinInt& y) {
  return x.a == y.a && x.b == y.b;
}

// the fraction field Q(j), componentwise rational coordinates
struct EisensteinRat {
  Rat a, b;

  EisensteinRat() = default;
  EisensteinRat(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit EisensteinRat(const EisensteinInt& z) : a(z.a), b(z.b) {}

  static EisensteinRat zero() { return {}; }
  static EisensteinRat one() { return {Rat(1), Rat(0)}; }
  static EisensteinRat j() { return {Rat(0), Rat(1)}; }

  bool is_zero() const { return a == 0 && b == 0; }
  Rat norm() const { return a * a - a * b + b * b; }
  std::string str() const { return rat_str(a) + (b >= 0 ? "+" : "") + rat_str(b) + "j"; }
};

inline EisensteinRat operator+(const EisensteinRat& x, const EisensteinRat& y) {
  return {x.a + y.a, x.b + y.b};
}
inline EisensteinRat operator-(const EisensteinRat& x, const EisensteinRat& y) {
  return {x.a - y.a, x.b - y.b};
}
inline EisensteinRat operator-(const EisensteinRat& x) { return {-x.a, -x.b}; }
inline EisensteinRat operator*(const EisensteinRat& x, const EisensteinRat& y) {
  return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
}
inline bool operator==(const EisensteinRat& x, const EisensteinRat& y) {
  return x.a == y.a && x.b == y.b;
}

// 1/(a + bj) = ((a - b) - bj) / (a^2 - ab + b^2)
inline EisensteinRat inverse(const EisensteinRat& x) {
  require(!x.is_zero(), errc::not_a_unit, "zero has no inverse in Q(j)");
  Rat n = x.norm();
  return {(x.a - x.b) / n, -x.b / n};
}

inline EisensteinRat operator/(const EisensteinRat& x, const EisensteinRat& y) {
  return x * inverse(y);
}

}  // namespace cohn
