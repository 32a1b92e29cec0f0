#pragma once

#include <array>
#include <utility>

#include "cohn/eisenstein.hpp"
#include "cohn/error.hpp"
#include "cohn/poly.hpp"

namespace cohn {

// 2x2 matrices over K = Q(j)(t), the smallest field carrying the standard
// faithful representation of the free product C2 * C3.
using KField = RationalFunction<EisensteinRat>;

struct Mat2K {
  std::array<std::array<KField, 2>, 2> e;

  static Mat2K zero() { return {}; }
  static Mat2K identity() {
    Mat2K m;
    m.e[0][0] = KField::one();
    m.e[1][1] = KField::one();
    return m;
  }
  bool is_zero() const {
    for (const auto& row : e)
      for (const auto& v : row)
        if (!v.is_zero()) return false;
    return true;
  }
  bool operator==(const Mat2K& o) const { return e == o.e; }
};

inline Mat2K operator+(const Mat2K& x, const Mat2K& y) {
  Mat2K z;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) z.e[i][k] = x.e[i][k] + y.e[i][k];
  return z;
}
inline Mat2K operator-(const Mat2K& x, const Mat2K& y) {
  Mat2K z;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) z.e[i][k] = x.e[i][k] - y.e[i][k];
  return z;
}
inline Mat2K operator*(const Mat2K& x, const Mat2K& y) {
  Mat2K z;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      z.e[i][k] = x.e[i][0] * y.e[0][k] + x.e[i][1] * y.e[1][k];
  return z;
}
inline Mat2K scalar_mul(const KField& s, const Mat2K& x) {
  Mat2K z;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) z.e[i][k] = s * x.e[i][k];
  return z;
}
inline KField det(const Mat2K& x) { return x.e[0][0] * x.e[1][1] - x.e[0][1] * x.e[1][0]; }

// x -> [[t, 1], [1-t^2, -t]], y -> diag(1, j): an order-2 and an order-3
// matrix generating a free product inside GL_2(K). Relations and det are
// asserted on every call.
inline std::pair<Mat2K, Mat2K> cex2_generators() {
  KField t = KField::t();
  KField one = KField::one();
  KField j = KField::constant(EisensteinRat::j());

  Mat2K px;
  px.e = {{{t, one}, {one - t * t, -(t)}}};
  Mat2K py;
  py.e = {{{one, KField::zero()}, {KField::zero(), j}}};

  internal_check(px * px == Mat2K::identity(), "x image does not square to 1");
  internal_check(py * py * py == Mat2K::identity(), "y image does not cube to 1");
  internal_check(det(px) == -one, "x image determinant is not -1");
  return {px, py};
}

struct Cex2Products {
  Mat2K one_minus_x_times_one_minus_y;
  Mat2K one_minus_y_times_one_minus_x;
  Mat2K commutator_xy_minus_yx;
};

// The three products that stay nonzero over K although x and y have coprime
// orders; each is compared against its closed form exactly.
inline Cex2Products cex2_products() {
  auto [px, py] = cex2_generators();
  KField t = KField::t();
  KField one = KField::one();
  KField j = KField::constant(EisensteinRat::j());
  Mat2K id = Mat2K::identity();

  Cex2Products out;
  out.one_minus_x_times_one_minus_y = (id - px) * (id - py);
  out.one_minus_y_times_one_minus_x = (id - py) * (id - px);
  out.commutator_xy_minus_yx = px * py - py * px;

  Mat2K m1;  // (1-j) * [[0, -1], [0, 1+t]]
  m1.e = {{{KField::zero(), -one}, {KField::zero(), one + t}}};
  m1 = scalar_mul(one - j, m1);

  Mat2K m2;  // (1-j)(1+t) * [[0, 0], [t-1, 1]]
  m2.e = {{{KField::zero(), KField::zero()}, {t - one, one}}};
  m2 = scalar_mul((one - j) * (one + t), m2);

  Mat2K m3;  // (1-j) * [[0, -1], [1-t^2, 0]]
  m3.e = {{{KField::zero(), -one}, {one - t * t, KField::zero()}}};
  m3 = scalar_mul(one - j, m3);

  internal_check(out.one_minus_x_times_one_minus_y == m1, "(1-x)(1-y) drifted from its closed form");
  internal_check(out.one_minus_y_times_one_minus_x == m2, "(1-y)(1-x) drifted from its closed form");
  internal_check(out.commutator_xy_minus_yx == m3, "xy - yx drifted from its closed form");
  internal_check(!m1.is_zero() && !m2.is_zero() && !m3.is_zero(),
                 "coprime-order products vanished unexpectedly");
  return out;
}

}  // namespace cohn
