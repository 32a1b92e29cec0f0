#include <catch2/catch_amalgamated.hpp>

#include "cohn/eisenstein.hpp"
#include "cohn/intmat.hpp"
#include "cohn/numbers.hpp"
#include "cohn/poly.hpp"

using namespace cohn;

TEST_CASE("primality and factorization basics") {
  REQUIRE(is_prime(2));
  REQUIRE(is_prime(97));
  REQUIRE_FALSE(is_prime(1));
  REQUIRE_FALSE(is_prime(91));
  auto f = factorize(360);
  REQUIRE(f == std::vector<std::pair<long, int>>{{2, 3}, {3, 2}, {5, 1}});
  REQUIRE(is_prime_power(1, 3));
  REQUIRE(is_prime_power(8, 2));
  REQUIRE_FALSE(is_prime_power(12, 2));
}

TEST_CASE("p-local numbers form a ring with the right units") {
  PLocal a(3, Rat(5, 2)), b(3, Rat(-1, 4));
  REQUIRE((a + b).v == Rat(9, 4));
  REQUIRE((a * b).v == Rat(-5, 8));
  REQUIRE(a.is_unit());
  REQUIRE_FALSE(PLocal(3, Rat(6)).is_unit());
  REQUIRE(plocal_invert(a).v == Rat(2, 5));
  // denominators divisible by p are not p-local at all
  REQUIRE_THROWS_AS(PLocal(3, Rat(1, 3)), Error);
  REQUIRE_THROWS_AS(plocal_invert(PLocal(3, Rat(6))), Error);
  REQUIRE_THROWS_AS(PLocal(4, Rat(1)), Error);
}

TEST_CASE("determinant by exact fraction-free elimination") {
  IntMat m(2, 2);
  m.at(0, 0) = 3; m.at(0, 1) = 7; m.at(1, 0) = 1; m.at(1, 1) = 5;
  REQUIRE(det(m) == 8);
  IntMat n(3, 3);
  long v[9] = {2, 0, 1, -1, 3, 2, 4, 1, -2};
  for (long i = 0; i < 9; ++i) n.a[i] = v[i];
  REQUIRE(det(n) == -29);  // cofactor expansion by hand
  REQUIRE(det(IntMat::identity(5)) == 1);
}

TEST_CASE("smith normal form on known matrices") {
  IntMat m(2, 2);
  m.at(0, 0) = 4; m.at(1, 1) = 6;
  auto s = smith_normal_form(m);
  REQUIRE(s.diag == std::vector<Int>{2, 12});

  IntMat k(2, 2);
  k.at(0, 0) = 1; k.at(0, 1) = 2; k.at(1, 0) = 3; k.at(1, 1) = 4;
  REQUIRE(smith_normal_form(k).diag == std::vector<Int>{1, 2});

  IntMat z(3, 2);  // zero matrix: all divisors zero
  REQUIRE(smith_normal_form(z).diag == std::vector<Int>{0, 0});
}

TEST_CASE("smith normal form factors through unimodular transforms") {
  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    long r = rng.next(1, 6), c = rng.next(1, 6);
    IntMat m(r, c);
    for (auto& x : m.a) x = rng.next(-9, 9);
    auto s = smith_normal_form(m);
    REQUIRE(det(s.U) * det(s.U) == 1);
    REQUIRE(det(s.V) * det(s.V) == 1);
    auto d = mul(mul(s.U, m), s.V);
    long n = std::min(r, c);
    for (long i = 0; i < r; ++i)
      for (long j = 0; j < c; ++j)
        REQUIRE(d.at(i, j) == ((i == j && i < n) ? s.diag[i] : Int(0)));
    for (long i = 0; i + 1 < n; ++i) {
      REQUIRE(s.diag[i] >= 0);
      if (s.diag[i + 1] != 0) {
        REQUIRE(s.diag[i] != 0);
        REQUIRE(s.diag[i + 1] % s.diag[i] == 0);
      }
    }
  }
}

TEST_CASE("sparse divisor path agrees with the dense one") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    long r = rng.next(1, 8), c = rng.next(1, 8);
    IntMat m(r, c);
    for (auto& x : m.a)
      if (rng.coin()) x = rng.next(-4, 4);
    auto dense = smith_normal_form(m).diag;
    std::vector<Int> nonzero;
    for (const auto& d : dense)
      if (d != 0) nonzero.push_back(d);
    REQUIRE(elementary_divisors(SparseIntMat::from_dense(m)) == nonzero);
  }
}

TEST_CASE("rational inversion round-trips") {
  RatMat m(2, 2);
  m.at(0, 0) = Rat(1, 2); m.at(0, 1) = Rat(3); m.at(1, 0) = Rat(0); m.at(1, 1) = Rat(-2, 5);
  auto inv = rat_inverse(m);
  REQUIRE(inv.has_value());
  auto p = mul(m, *inv);
  for (long i = 0; i < 2; ++i)
    for (long j = 0; j < 2; ++j) REQUIRE(p.at(i, j) == (i == j ? Rat(1) : Rat(0)));
  RatMat sing(2, 2);
  sing.at(0, 0) = Rat(1); sing.at(0, 1) = Rat(2);
  sing.at(1, 0) = Rat(2); sing.at(1, 1) = Rat(4);
  REQUIRE_FALSE(rat_inverse(sing).has_value());
}

TEST_CASE("sparse matrices respect their budget") {
  Budget tiny{4};
  SparseIntMat m(10, 10, tiny);
  m.set(0, 0, Int(1));
  m.set(1, 1, Int(1));
  m.set(2, 2, Int(1));
  m.set(3, 3, Int(1));
  REQUIRE_THROWS_AS(m.set(4, 4, Int(1)), Error);
  m.set(0, 0, Int(0));  // freeing a slot makes room again
  m.set(4, 4, Int(1));
  REQUIRE(m.nnz == 4);
}

TEST_CASE("eisenstein integers multiply with norm multiplicativity") {
  EisensteinInt j{Int(0), Int(1)};
  auto j2 = j * j;            // j^2 = -1 - j
  REQUIRE(j2.a == -1);
  REQUIRE(j2.b == -1);
  auto j3 = j2 * j;
  REQUIRE(j3.a == 1);
  REQUIRE(j3.b == 0);
  EisensteinInt one{Int(1), Int(0)};
  auto x = one - j, y = one - j2;  // (1 - j)(1 - j^2) = 3
  auto p = x * y;
  REQUIRE(p.a == 3);
  REQUIRE(p.b == 0);
  REQUIRE(x.norm() * y.norm() == p.norm());
}

TEST_CASE("eisenstein rationals invert exactly") {
  auto j = EisensteinRat::j();
  auto w = EisensteinRat{Rat(2), Rat(-3)};
  auto winv = inverse(w);
  REQUIRE(w * winv == EisensteinRat::one());
  REQUIRE((EisensteinRat::one() + j + j * j).is_zero());
  REQUIRE_THROWS_AS(inverse(EisensteinRat::zero()), Error);
}

TEST_CASE("polynomial division and gcd reduce rational functions") {
  using P = Polynomial<EisensteinRat>;
  auto t = P::t();
  auto one = P::one();
  auto num = t * t - one;  // (t-1)(t+1)
  auto den = t - one;
  auto [q, r] = divmod(num, den);
  REQUIRE(r.is_zero());
  REQUIRE(q == t + one);

  using K = RationalFunction<EisensteinRat>;
  auto f = K{num, den};
  REQUIRE(f == K{t + one, P::one()});
  auto g = K::t() * K::t();
  REQUIRE(inverse(g) * g == K::one());
  REQUIRE_THROWS_AS(inverse(K::zero()), Error);
  REQUIRE((K::one() / K::t()) * K::t() == K::one());
}

TEST_CASE("seeded rng is reproducible") {
  Rng a(42), b(42);
  for (int k = 0; k < 100; ++k) REQUIRE(a.next(-5, 17) == b.next(-5, 17));
}
