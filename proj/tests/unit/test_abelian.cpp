#include <doctest.h>

#include "tyinv/abelian.hpp"
#include "tyinv/error.hpp"
#include "tyinv/number_theory.hpp"

using namespace tyinv;

TEST_CASE("make_group orders and exponents") {
  CHECK(make_group({3}).order() == 3);
  const auto g = make_group({2, 12});
  CHECK(g.order() == 24);
  CHECK(g.exponent() == 12);
  CHECK(make_group({1}).is_trivial());
  CHECK_THROWS_AS(make_group({0}), InvalidInput);
}

TEST_CASE("element indexing round-trips") {
  const auto g = make_group({2, 6, 4});
  for (std::int64_t i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element(i)) == i);
  const auto a = g.element(17);
  CHECK(g.add(a, g.negate(a)) == g.zero());
  CHECK(g.element_order(g.generator(1)) == 6);
}

TEST_CASE("torsion orders") {
  CHECK(torsion_order(make_group({6}), 4) == 2);
  CHECK(torsion_order(make_group({3}), 0) == 3);
  CHECK(torsion_order(make_group({2, 12}), 3) == 3);
}

TEST_CASE("torsion subgroups") {
  const auto z4 = make_group({4});
  const auto t = torsion_subgroup(z4, 2);
  REQUIRE(t.size() == 2);
  CHECK(z4.index_of(t[0]) == 0);
  CHECK(z4.index_of(t[1]) == 2);
  CHECK(torsion_subgroup(make_group({3}), 2).size() == 1);
  CHECK(torsion_subgroup(make_group({2, 2}), 2).size() == 4);
}

TEST_CASE("torsion order agrees with counting") {
  for (std::int64_t n = 1; n <= 48; ++n) {
    for (const auto& g : abelian_groups_of_order(n)) {
      for (std::int64_t k = 0; k <= 10; ++k) {
        std::int64_t count = 0;
        for (const auto& a : g.elements()) count += g.scale(k, a) == g.zero();
        CHECK(torsion_order(g, k) == count);
      }
    }
  }
}

TEST_CASE("primary ranks") {
  const auto g = make_group({2, 12});
  CHECK(primary_ranks(g, 2).ranks == std::map<int, int>{{1, 1}, {2, 1}});
  CHECK(primary_ranks(g, 3).ranks == std::map<int, int>{{1, 1}});
  CHECK(primary_ranks(make_group({9, 9}), 3).ranks == std::map<int, int>{{2, 2}});
}

TEST_CASE("primary components") {
  const auto six = primary_component(make_group({6}), 3);
  CHECK(six.subgroup.order() == 3);
  CHECK(six.embedding.is_well_defined());
  CHECK(six.embedding.is_injective());
  CHECK(make_group({6}).element_order(six.embedding.images[0]) == 3);
  CHECK(primary_component(make_group({5}), 2).subgroup.is_trivial());
  const auto two = primary_component(make_group({2, 12}), 2);
  CHECK(groups_isomorphic(two.subgroup, make_group({2, 4})));
}

TEST_CASE("primary ranks from torsion orders") {
  CHECK(reconstruct_primary_from_torsion({{1, 3}, {2, 9}, {3, 9}}, 3).ranks == std::map<int, int>{{2, 1}});
  CHECK(reconstruct_primary_from_torsion({{1, 1}}, 2).ranks.empty());
  CHECK(reconstruct_primary_from_torsion({{1, 9}, {2, 9}}, 3).ranks == std::map<int, int>{{1, 2}});
  for (std::int64_t n = 1; n <= 200; ++n) {
    for (const auto& g : abelian_groups_of_order(n)) {
      for (const auto p : order_primes(g)) {
        std::map<int, std::int64_t> orders;
        for (int m = 1; m <= 8; ++m) orders[m] = torsion_order(g, int_pow(p, m));
        CHECK(reconstruct_primary_from_torsion(orders, p) == primary_ranks(g, p));
      }
    }
  }
}

TEST_CASE("group enumeration counts") {
  CHECK(abelian_groups_of_order(1).size() == 1);
  CHECK(abelian_groups_of_order(8).size() == 3);
  CHECK(abelian_groups_of_order(16).size() == 5);
  CHECK(abelian_groups_of_order(72).size() == 6);
  CHECK(abelian_groups_of_order(64).size() == 11);
}

TEST_CASE("group literal parsing") {
  CHECK(parse_group_literal("3,9") == make_group({3, 9}));
  CHECK_THROWS_AS(parse_group_literal("3,x"), InvalidInput);
}
