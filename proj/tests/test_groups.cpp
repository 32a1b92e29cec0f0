#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "cohn/group.hpp"
#include "cohn/zoo.hpp"

using namespace cohn;

TEST_CASE("permutation closure fixes the element ordering") {
  // generators (01) and (012); indices are frozen by the closure order and
  // the element serialization format depends on them staying put
  auto g = symmetric_group(3);
  REQUIRE(g->order == 6);
  REQUIRE(element_order(*g, 0) == 1);
  REQUIRE(element_order(*g, 1) == 2);  // (01)
  REQUIRE(element_order(*g, 2) == 3);  // (012)
  REQUIRE(element_order(*g, 3) == 2);
  REQUIRE(element_order(*g, 4) == 2);
  REQUIRE(element_order(*g, 5) == 3);
  // (01) composed after (012) is the transposition (12), index 4
  REQUIRE(g->mult(1, 2) == 4);
  REQUIRE(g->mult(2, 1) == 3);
  REQUIRE(g->inv(2) == 5);
}

TEST_CASE("battery groups have the advertised orders") {
  std::map<std::string, long> expected = {
      {"Z/2", 2},  {"Z/3", 3},  {"Z/4", 4},      {"Z/6", 6},  {"Z/9", 9},
      {"Z/2xZ/2", 4}, {"Q8", 8},   {"D4", 8},    {"D5", 10},  {"S3", 6},
      {"S4", 24},  {"A4", 12},  {"A5", 60},
  };
  for (const auto& [name, g] : battery_groups()) {
    INFO(name);
    REQUIRE(g->order == expected.at(name));
    // spot-check associativity is preserved through construction
    REQUIRE(g->mult(g->mult(1 % g->order, 2 % g->order), 3 % g->order) ==
            g->mult(1 % g->order, g->mult(2 % g->order, 3 % g->order)));
  }
}

TEST_CASE("element order histograms") {
  auto hist = [](const Group& g) {
    std::map<long, long> h;
    for (long x = 0; x < g->order; ++x) ++h[element_order(*g, x)];
    return h;
  };
  REQUIRE(hist(symmetric_group(3)) == std::map<long, long>{{1, 1}, {2, 3}, {3, 2}});
  REQUIRE(hist(alternating_group(4)) == std::map<long, long>{{1, 1}, {2, 3}, {3, 8}});
  REQUIRE(hist(quaternion_group()) == std::map<long, long>{{1, 1}, {2, 1}, {4, 6}});
  REQUIRE(hist(alternating_group(5)) ==
          std::map<long, long>{{1, 1}, {2, 15}, {3, 20}, {5, 24}});
}

TEST_CASE("bad multiplication tables are rejected") {
  // not a latin square (second row repeats 1)
  REQUIRE_THROWS_AS(group_from_table({0, 1, 1, 1}, 2), Error);
  // the smallest loop that is not a group: latin, two-sided identity, but
  // (1*1)*2 = 2 while 1*(1*2) = 4
  REQUIRE_THROWS_AS(group_from_table({0, 1, 2, 3, 4,
                                      1, 0, 3, 4, 2,
                                      2, 3, 4, 0, 1,
                                      3, 4, 1, 2, 0,
                                      4, 2, 0, 1, 3},
                                     5),
                    Error);
  // identity must be element 0
  REQUIRE_THROWS_AS(group_from_table({1, 0, 0, 1}, 2), Error);
}

TEST_CASE("bad permutation input is rejected") {
  REQUIRE_THROWS_AS(group_from_permutations(3, {{0, 0, 1}}), Error);
  REQUIRE_THROWS_AS(group_from_permutations(3, {{0, 1}}), Error);
  try {
    group_from_permutations(9, {perm_cycle(9, {0, 1}),
                                perm_cycle(9, {0, 1, 2, 3, 4, 5, 6, 7, 8})});
    FAIL("S9 closure should exceed the order cap");
  } catch (const Error& e) {
    REQUIRE(e.code() == errc::order_cap_exceeded);
  }
}

TEST_CASE("largest p-power quotients match a closure oracle") {
  struct Row {
    std::string name;
    Group g;
    std::vector<std::pair<long, long>> quots;  // (p, |G_p|)
  };
  std::vector<Row> rows = {
      {"S3", symmetric_group(3), {{2, 2}}},
      {"A4", alternating_group(4), {{3, 3}}},
      {"D5", dihedral_group(5), {{2, 2}}},
      {"Z/6", cyclic_group(6), {{2, 2}, {3, 3}}},
      {"S4", symmetric_group(4), {{2, 2}}},
      {"A5", alternating_group(5), {}},
  };
  for (const auto& row : rows) {
    INFO(row.name);
    auto quots = nontrivial_p_quotients(row.g);
    REQUIRE(quots.size() == row.quots.size());
    for (std::size_t k = 0; k < quots.size(); ++k) {
      REQUIRE(quots[k].p == row.quots[k].first);
      REQUIRE(quots[k].q->order == row.quots[k].second);
      // oracle: the kernel is the closure of all elements of order prime to p
      std::vector<long> gens;
      for (long x = 0; x < row.g->order; ++x)
        if (element_order(*row.g, x) % quots[k].p != 0) gens.push_back(x);
      auto ker = subgroup_closure(*row.g, gens);
      REQUIRE(static_cast<long>(ker.size()) * quots[k].q->order == row.g->order);
      for (long x : ker) REQUIRE(quots[k].pi.images[x] == 0);
    }
  }
}

TEST_CASE("quotient maps are homomorphisms") {
  for (const auto& [name, g] : battery_groups()) {
    for (const auto& q : nontrivial_p_quotients(g)) {
      INFO(name << " at p=" << q.p);
      REQUIRE(q.pi.images[0] == 0);
      for (long x = 0; x < g->order; ++x)
        for (long y = 0; y < g->order; ++y)
          REQUIRE(q.pi.images[g->mult(x, y)] ==
                  q.q->mult(q.pi.images[x], q.pi.images[y]));
    }
  }
}

TEST_CASE("universal nilpotent quotient is the product of the p-quotients") {
  std::map<std::string, long> expected = {
      {"Z/2", 2}, {"Z/3", 3}, {"Z/4", 4}, {"Z/6", 6}, {"Z/9", 9}, {"Z/2xZ/2", 4},
      {"Q8", 8},  {"D4", 8},  {"D5", 2},  {"S3", 2},  {"S4", 2},  {"A4", 3},
      {"A5", 1},
  };
  for (const auto& [name, g] : battery_groups()) {
    INFO(name);
    auto [q, pi] = universal_nilpotent_quotient(g);
    REQUIRE(q->order == expected.at(name));
    // onto, and a homomorphism
    std::vector<char> hit(q->order, 0);
    for (long x = 0; x < g->order; ++x) hit[pi.images[x]] = 1;
    for (char h : hit) REQUIRE(h == 1);
    for (long x = 0; x < g->order; ++x)
      for (long y = 0; y < g->order; ++y)
        REQUIRE(pi.images[g->mult(x, y)] == q->mult(pi.images[x], pi.images[y]));
  }
}

TEST_CASE("nilpotency by quotient sizes") {
  std::map<std::string, bool> expected = {
      {"Z/2", true}, {"Z/3", true}, {"Z/4", true}, {"Z/6", true}, {"Z/9", true},
      {"Z/2xZ/2", true}, {"Q8", true}, {"D4", true}, {"D5", false}, {"S3", false},
      {"S4", false}, {"A4", false}, {"A5", false},
  };
  for (const auto& [name, g] : battery_groups()) {
    INFO(name);
    REQUIRE(is_nilpotent(g) == expected.at(name));
  }
}

TEST_CASE("perfectness and abelianization") {
  for (const auto& [name, g] : battery_groups()) {
    INFO(name);
    REQUIRE(is_perfect(*g) == (name == "A5"));
  }
  REQUIRE(abelianization_invariants(symmetric_group(3)) == std::vector<long>{2});
  REQUIRE(abelianization_invariants(alternating_group(4)) == std::vector<long>{3});
  REQUIRE(abelianization_invariants(quaternion_group()) == std::vector<long>{2, 2});
  REQUIRE(abelianization_invariants(cyclic_group(6)) == std::vector<long>{6});
  REQUIRE(abelianization_invariants(alternating_group(5)).empty());
}

TEST_CASE("abelian invariants form a divisibility chain") {
  REQUIRE(abelian_invariants(*cyclic_group(12)) == std::vector<long>{12});
  REQUIRE(abelian_invariants(*klein_four()) == std::vector<long>{2, 2});
  auto g = direct_product(cyclic_group(2), cyclic_group(4));
  REQUIRE(abelian_invariants(*g) == std::vector<long>{2, 4});
  auto h = direct_product(cyclic_group(6), cyclic_group(4));
  REQUIRE(abelian_invariants(*h) == std::vector<long>{2, 12});
}

TEST_CASE("direct products multiply componentwise") {
  auto g = direct_product(symmetric_group(3), cyclic_group(2));
  REQUIRE(g->order == 12);
  REQUIRE_FALSE(is_nilpotent(g));
  REQUIRE(element_order(*g, 1) == 2);  // (e, 1)
  REQUIRE(element_order(*g, 2) == 2);  // ((01), e)
  REQUIRE(element_order(*g, 5) == 6);  // ((012), 1)
}
