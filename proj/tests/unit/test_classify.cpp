#include <doctest.h>

#include "tyinv/classify.hpp"
#include "tyinv/error.hpp"

using namespace tyinv;

namespace {

Bicharacter bichar(const std::vector<std::int64_t>& factors, const std::string& gram) {
  return Bicharacter(parse_gram_literal(make_group(factors), gram));
}

}  // namespace

TEST_CASE("orthogonal splitting examples") {
  const auto one = orthogonal_split_odd_p(bichar({3}, "2/3"));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == DiagonalBlock{3, 1, {2}});

  const auto hyper = orthogonal_split_odd_p(bichar({3, 3}, "0,1/3;1/3,0"));
  REQUIRE(hyper.size() == 1);
  CHECK(hyper[0].s == 1);
  REQUIRE(hyper[0].deltas.size() == 2);
  CHECK((hyper[0].deltas[0] * hyper[0].deltas[1]) % 3 == 2);

  const auto nine = orthogonal_split_odd_p(bichar({9}, "1/9"));
  REQUIRE(nine.size() == 1);
  CHECK(nine[0] == DiagonalBlock{3, 2, {1}});
}

TEST_CASE("splitting basis is an isometry") {
  for (const auto& factors : std::vector<std::vector<std::int64_t>>{{3, 3}, {3, 9}, {5, 5}, {3, 3, 3}, {27}}) {
    for (const auto& chi : enumerate_bicharacters(make_group(factors))) {
      const auto split = orthogonal_splitting_odd_p(chi);
      CHECK(is_isometry(split.basis, split.diagonal_form, chi.form()));
      CHECK(is_isomorphic_bruteforce(block_diagonal_form(split.blocks), chi.form()));
    }
  }
}

TEST_CASE("wall invariants") {
  CHECK(wall_invariants(bichar({3}, "1/3")).at(3, 1) == WallEntry{1, 1});
  CHECK(wall_invariants(bichar({3}, "2/3")).at(3, 1) == WallEntry{1, -1});
  CHECK(wall_invariants(bichar({3, 3}, "1/3,0;0,2/3")).at(3, 1) == WallEntry{2, -1});
  CHECK(wall_invariants(bichar({3}, "1/3")).at(3, 2) == WallEntry{0, 1});
  const auto fifteen = wall_invariants(bichar({15}, "1/15"));
  CHECK(fifteen.entries.size() == 2);
  CHECK(fifteen.entries.contains({3, 1}));
  CHECK(fifteen.entries.contains({5, 1}));
  const auto two = wall_invariants(bichar({2}, "1/2"));
  CHECK(two.two_part_unclassified);
  CHECK(two.entries.empty());
}

TEST_CASE("odd isomorphism test") {
  CHECK(is_isomorphic_odd(bichar({3, 3}, "1/3,0;0,1/3"), bichar({3, 3}, "2/3,0;0,2/3")));
  CHECK_FALSE(is_isomorphic_odd(bichar({3, 3}, "1/3,0;0,1/3"), bichar({3, 3}, "1/3,0;0,2/3")));
  const auto chi = bichar({9, 3}, "1/9,0;0,1/3");
  CHECK(is_isomorphic_odd(chi, chi));
  CHECK_THROWS_AS(is_isomorphic_odd(bichar({2}, "1/2"), bichar({2}, "1/2")), UnsupportedGroup);
}

TEST_CASE("brute-force isomorphism oracle") {
  CHECK_FALSE(is_isomorphic_bruteforce(bichar({3}, "1/3"), bichar({5}, "1/5")));
  const auto w = find_isometry_bruteforce(parse_gram_literal(make_group({3}), "1/3"),
                                          parse_gram_literal(make_group({3}), "1/3"));
  REQUIRE(w.has_value());
  CHECK(is_isometry(*w, parse_gram_literal(make_group({3}), "1/3"), parse_gram_literal(make_group({3}), "1/3")));
  CHECK_FALSE(is_isomorphic_bruteforce(bichar({3}, "1/3"), bichar({3}, "2/3")));
  CHECK(is_isomorphic_bruteforce(bichar({3, 3}, "1/3,0;0,1/3"), bichar({3, 3}, "2/3,0;0,2/3")));
  CHECK(is_isomorphic_bruteforce(bichar({15}, "1/15"), bichar({3, 5}, "2/3,0;0,2/5")));
  CHECK_FALSE(is_isomorphic_bruteforce(bichar({15}, "1/15"), bichar({3, 5}, "2/3,0;0,4/5")));
  CHECK_THROWS_AS(is_isomorphic_bruteforce(bichar({3, 3, 3, 3, 3}, "1/3,0,0,0,0;0,1/3,0,0,0;0,0,1/3,0,0;0,0,0,1/3,0;0,0,0,0,1/3"),
                                           bichar({3, 3, 3, 3, 3}, "1/3,0,0,0,0;0,1/3,0,0,0;0,0,1/3,0,0;0,0,0,1/3,0;0,0,0,0,1/3"), 100),
                  BoundExceeded);
}

TEST_CASE("invariant classes match brute-force classes on small odd groups") {
  for (const auto& factors : std::vector<std::vector<std::int64_t>>{{3}, {9}, {3, 3}, {15}, {5, 5}, {3, 9}, {45}}) {
    const auto g = make_group(factors);
    const auto a = bicharacter_classes_odd(g);
    const auto b = bicharacter_classes_bruteforce(g);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  }
}
