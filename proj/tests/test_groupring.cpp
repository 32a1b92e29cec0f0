#include <catch2/catch_amalgamated.hpp>

#include "cohn/groupring.hpp"
#include "cohn/zoo.hpp"

using namespace cohn;

TEST_CASE("group ring arithmetic over S3") {
  auto g = symmetric_group(3);
  auto x = gr_term(g, 1, Int(1));   // (01)
  auto y = gr_term(g, 2, Int(1));   // (012)
  auto one = gr_unit(g, Int(1));
  REQUIRE(x * x == one);
  REQUIRE(y * y * y == one);
  REQUIRE((x + y) * one == x + y);
  REQUIRE(x * y == gr_term(g, 4, Int(1)));
  REQUIRE_FALSE(x * y == y * x);  // noncommutative
  REQUIRE((x - x).is_zero());
  REQUIRE(augmentation((one + x) * (one - y)) == 0);
  REQUIRE(augmentation(scale(Int(-3), one + x + y)) == -9);
}

TEST_CASE("group ring multiplication is associative and distributive") {
  auto g = quaternion_group();
  Rng rng(5);
  auto rand_elt = [&]() {
    GroupRing<Int> e(g);
    for (int t = 0; t < 4; ++t) e.add_term(rng.next(0, g->order - 1), Int(rng.next(-3, 3)));
    return e;
  };
  for (int t = 0; t < 20; ++t) {
    auto a = rand_elt(), b = rand_elt(), c = rand_elt();
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(augmentation(a * b) == augmentation(a) * augmentation(b));
  }
}

TEST_CASE("mixing elements over different groups is rejected") {
  auto a = gr_unit(symmetric_group(3), Int(1));
  auto b = gr_unit(cyclic_group(6), Int(1));
  REQUIRE_THROWS_AS(a + b, Error);
  REQUIRE_THROWS_AS(a * b, Error);
}

TEST_CASE("regular representation converts ring to matrix arithmetic") {
  auto c2 = cyclic_group(2);
  auto e = gr_term(c2, 0, Int(3)) + gr_term(c2, 1, Int(5));
  auto m = regular_representation(e);
  REQUIRE(m.at(0, 0) == 3);
  REQUIRE(m.at(1, 0) == 5);
  REQUIRE(m.at(0, 1) == 5);
  REQUIRE(m.at(1, 1) == 3);
  // multiplicative on a nonabelian example
  auto g = symmetric_group(3);
  auto a = gr_term(g, 1, Int(2)) - gr_term(g, 5, Int(1));
  auto b = gr_term(g, 2, Int(4)) + gr_unit(g, Int(1));
  REQUIRE(mul(regular_representation(a), regular_representation(b)) ==
          regular_representation(a * b));
}

TEST_CASE("p-local inversion of unit-augmentation elements") {
  auto c2 = cyclic_group(2);
  // 2 - x over the 2-locals: inverse must be 2/3 + (1/3)x
  auto e = gr_term(c2, 0, PLocal(2, Rat(2))) - gr_term(c2, 1, PLocal(2, Rat(1)));
  auto inv = pgroup_local_invert(e);
  REQUIRE(inv.coeffs.at(0) == PLocal(2, Rat(2, 3)));
  REQUIRE(inv.coeffs.at(1) == PLocal(2, Rat(1, 3)));
  auto one = gr_unit(c2, PLocal(2, Rat(1)));
  REQUIRE(e * inv == one);
  REQUIRE(inv * e == one);
}

TEST_CASE("p-local inversion rejects augmentation non-units") {
  auto c2 = cyclic_group(2);
  auto bad = gr_term(c2, 0, PLocal(2, Rat(1))) + gr_term(c2, 1, PLocal(2, Rat(1)));
  try {
    pgroup_local_invert(bad);
    FAIL("augmentation 2 is not a 2-local unit");
  } catch (const Error& e) {
    REQUIRE(e.code() == errc::not_a_unit);
  }
  REQUIRE_THROWS_AS(pgroup_local_invert(GroupRing<PLocal>(c2)), Error);
}

TEST_CASE("p-local inversion only applies over p-groups") {
  auto e = gr_unit(symmetric_group(3), PLocal(2, Rat(1)));
  try {
    pgroup_local_invert(e);
    FAIL("S3 is not a 2-group");
  } catch (const Error& err) {
    REQUIRE(err.code() == errc::not_p_group);
  }
}

TEST_CASE("inversion battery over q8 with rational denominators") {
  auto g = quaternion_group();
  auto one = gr_unit(g, PLocal(2, Rat(1)));
  Rng rng(17);
  for (int t = 0; t < 25; ++t) {
    GroupRing<PLocal> e(g);
    for (long idx = 0; idx < g->order; ++idx) {
      Rat v(rng.next(-4, 4), 2 * rng.next(0, 2) + 1);
      v.canonicalize();
      e.add_term(idx, PLocal(2, v));
    }
    Int num = augmentation(e, PLocal(2, Rat(0))).v.get_num();
    if (num % 2 == 0) e.add_term(0, PLocal(2, Rat(1)));
    auto inv = pgroup_local_invert(e);
    REQUIRE(e * inv == one);
    REQUIRE(inv * e == one);
  }
}

TEST_CASE("omega elements square to their augmentation multiple") {
  for (long n : {2L, 3L, 4L}) {
    auto g = cyclic_group(n);
    auto omega = omega_element(g, Int(1));
    REQUIRE(omega.coeffs.at(0) == n - 1);
    for (long x = 1; x < n; ++x) REQUIRE(omega.coeffs.at(x) == -1);
    REQUIRE(omega * omega == scale(Int(n), omega));
    REQUIRE(augmentation(omega) == 0);
  }
  auto q8 = quaternion_group();
  auto omega = omega_element(q8, Int(1));
  REQUIRE(omega * omega == scale(Int(8), omega));
}

TEST_CASE("pushing elements through quotient maps is a ring map") {
  auto g = symmetric_group(3);
  auto [q, pi] = p_quotient(g, 2);
  Rng rng(23);
  auto rand_elt = [&]() {
    GroupRing<Int> e(g);
    for (int t = 0; t < 4; ++t) e.add_term(rng.next(0, 5), Int(rng.next(-3, 3)));
    return e;
  };
  for (int t = 0; t < 20; ++t) {
    auto a = rand_elt(), b = rand_elt();
    REQUIRE(map_through(pi, a * b) == map_through(pi, a) * map_through(pi, b));
    REQUIRE(map_through(pi, a + b) == map_through(pi, a) + map_through(pi, b));
    REQUIRE(augmentation(map_through(pi, a)) == augmentation(a));
  }
  // the 2-local variant lands p-locally with the same coefficients
  auto e = gr_term(g, 1, Int(2)) + gr_term(g, 2, Int(7));
  auto loc = map_through_plocal(pi, e, 2);
  REQUIRE(loc.coeffs.at(1) == PLocal(2, Rat(2)));
  REQUIRE(loc.coeffs.at(0) == PLocal(2, Rat(7)));  // (012) dies in C2
}

TEST_CASE("matrices over the group ring multiply blockwise") {
  auto g = symmetric_group(3);
  auto m = gr_identity_matrix(g, 2);
  m.at(0, 1) = gr_term(g, 2, Int(3));
  auto n = gr_identity_matrix(g, 2);
  n.at(1, 0) = gr_term(g, 1, Int(-1));
  auto p = mul(m, n);
  REQUIRE(p.at(0, 0) == gr_unit(g, Int(1)) - gr_term(g, 2, Int(3)) * gr_term(g, 1, Int(1)));
  REQUIRE(p.at(0, 1) == gr_term(g, 2, Int(3)));
  REQUIRE(p.at(1, 0) == gr_term(g, 1, Int(-1)));
  // augmentation is a matrix-level ring map
  auto am = augmentation_matrix(m), an = augmentation_matrix(n);
  REQUIRE(mul(am, an) == augmentation_matrix(p));
}
