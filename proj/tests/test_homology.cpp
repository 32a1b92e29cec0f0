#include <catch2/catch_amalgamated.hpp>

#include "cohn/homology.hpp"
#include "cohn/zoo.hpp"

using namespace cohn;

TEST_CASE("abelian group descriptors") {
  REQUIRE(AbelianGroup{}.str() == "0");
  REQUIRE(AbelianGroup{1, {}}.str() == "Z");
  REQUIRE(AbelianGroup{3, {}}.str() == "Z^3");
  REQUIRE(AbelianGroup{0, {Int(2)}}.str() == "Z/2");
  REQUIRE(AbelianGroup{1, {Int(2), Int(6)}}.str() == "Z x Z/2 x Z/6");
  REQUIRE(abelian_from_divisors(2, {Int(1), Int(1), Int(4)}) == AbelianGroup{2, {Int(4)}});
  REQUIRE(strip_to_p_part(AbelianGroup{1, {Int(12), Int(12)}}, 2) ==
          AbelianGroup{1, {Int(4), Int(4)}});
  REQUIRE(strip_to_p_part(AbelianGroup{0, {Int(3)}}, 2) == AbelianGroup{});
}

TEST_CASE("bar boundaries square to zero") {
  Rng rng(3);
  for (auto g : {cyclic_group(4), symmetric_group(3), quaternion_group()}) {
    for (int norm = 0; norm <= 1; ++norm) {
      HomologyOptions opt;
      opt.normalized = norm;
      for (long n = 1; n <= 3; ++n) {
        auto lo = bar_boundary(g, n, opt);
        auto hi = bar_boundary(g, n + 1, opt);
        REQUIRE(boundary_square_spot_check(lo, hi, rng, 25));
      }
    }
  }
}

TEST_CASE("degree one boundary vanishes") {
  auto s = bar_boundary(symmetric_group(3), 1);
  REQUIRE(s.d.nnz == 0);  // [g] -> [] - [] with trivial coefficients
}

TEST_CASE("homology of cyclic groups is periodic") {
  for (long n : {2L, 3L, 4L}) {
    auto g = cyclic_group(n);
    INFO("Z/" << n);
    REQUIRE(group_homology(g, 0) == AbelianGroup{1, {}});
    for (long i = 1; i <= 4; ++i) {
      auto h = group_homology(g, i);
      if (i % 2 == 1) {
        REQUIRE(h == AbelianGroup{0, {Int(n)}});
      } else {
        REQUIRE(h.is_zero());
      }
    }
  }
}

TEST_CASE("first homology is the abelianization") {
  for (const auto& [name, g] : battery_groups()) {
    if (g->order > 24) continue;  // bar in degree 2 stays small
    INFO(name);
    AbelianGroup expect;
    for (long d : abelianization_invariants(g))
      if (d > 1) expect.torsion.push_back(Int(d));
    REQUIRE(group_homology(g, 1) == expect);
  }
}

TEST_CASE("low-degree homology of small nonabelian groups") {
  auto s3 = symmetric_group(3);
  REQUIRE(group_homology(s3, 2).is_zero());
  REQUIRE(group_homology(s3, 3) == AbelianGroup{0, {Int(6)}});
  auto a4 = alternating_group(4);
  REQUIRE(group_homology(a4, 2) == AbelianGroup{0, {Int(2)}});
  auto q8 = quaternion_group();
  REQUIRE(group_homology(q8, 2).is_zero());
  REQUIRE(group_homology(q8, 3) == AbelianGroup{0, {Int(8)}});
  auto d4 = dihedral_group(4);
  REQUIRE(group_homology(d4, 2) == AbelianGroup{0, {Int(2)}});
  auto k4 = klein_four();
  REQUIRE(group_homology(k4, 2) == AbelianGroup{0, {Int(2)}});
  REQUIRE(group_homology(k4, 3) == AbelianGroup{0, {Int(2), Int(2), Int(2)}});
}

TEST_CASE("normalized and unnormalized bars agree") {
  HomologyOptions plain, norm;
  plain.normalized = 0;
  norm.normalized = 1;
  for (auto g : {cyclic_group(4), symmetric_group(3)}) {
    for (long i = 0; i <= 3; ++i)
      REQUIRE(group_homology(g, i, plain) == group_homology(g, i, norm));
  }
}

TEST_CASE("p-local homology strips foreign torsion") {
  auto s3 = symmetric_group(3);
  REQUIRE(group_homology_plocal(s3, 0, 2) == AbelianGroup{1, {}});
  REQUIRE(group_homology_plocal(s3, 1, 2) == AbelianGroup{0, {Int(2)}});
  REQUIRE(group_homology_plocal(s3, 1, 3).is_zero());
  REQUIRE(group_homology_plocal(s3, 3, 2) == AbelianGroup{0, {Int(2)}});
  REQUIRE(group_homology_plocal(s3, 3, 3) == AbelianGroup{0, {Int(3)}});
  auto a4 = alternating_group(4);
  REQUIRE(group_homology_plocal(a4, 1, 2).is_zero());
  REQUIRE(group_homology_plocal(a4, 1, 3) == AbelianGroup{0, {Int(3)}});
  REQUIRE_THROWS_AS(group_homology_plocal(s3, 1, 6), Error);
}

TEST_CASE("p-parts reassemble the integral answer") {
  for (auto g : {symmetric_group(3), alternating_group(4), cyclic_group(6)}) {
    long top = g->order <= 6 ? 3 : 2;  // keep the degree-4 boundary small
    for (long i = 1; i <= top; ++i) {
      auto h = group_homology(g, i);
      Int torsion_order(1), reassembled(1);
      for (const Int& d : h.torsion) torsion_order *= d;
      for (auto [p, e] : factorize(g->order))
        for (const Int& d : group_homology_plocal(g, i, p).torsion) reassembled *= d;
      REQUIRE(torsion_order == reassembled);
    }
  }
}

TEST_CASE("homology degree and budget guards") {
  auto s3 = symmetric_group(3);
  REQUIRE_THROWS_AS(group_homology(s3, -1), Error);
  HomologyOptions tiny;
  tiny.budget = Budget::from_mb(1);
  try {
    group_homology(alternating_group(5), 3, tiny);
    FAIL("degree-4 bar over A5 cannot fit in 1 MB");
  } catch (const Error& e) {
    REQUIRE(e.code() == errc::budget_exceeded);
  }
}

TEST_CASE("first gap values require a perfect group") {
  try {
    first_gap_lambda(symmetric_group(3), 1);
    FAIL("S3 is not perfect");
  } catch (const Error& e) {
    REQUIRE(e.code() == errc::not_perfect);
  }
  REQUIRE_THROWS_AS(first_gap_lambda(alternating_group(5), 0), Error);
}

TEST_CASE("torsion scan finds the first p-torsion degree") {
  REQUIRE(quillen_scan(cyclic_group(2), 2, 4) == 1);
  REQUIRE(quillen_scan(cyclic_group(3), 3, 4) == 1);
  REQUIRE(quillen_scan(symmetric_group(3), 2, 4) == 1);
  REQUIRE(quillen_scan(symmetric_group(3), 3, 4) == 3);
  REQUIRE_FALSE(quillen_scan(cyclic_group(2), 3, 4).has_value());
  REQUIRE_FALSE(quillen_scan(cyclic_group(3), 2, 4).has_value());
  REQUIRE_THROWS_AS(quillen_scan(cyclic_group(2), 4, 4), Error);
  REQUIRE_THROWS_AS(quillen_scan(cyclic_group(2), 2, 0), Error);
}
