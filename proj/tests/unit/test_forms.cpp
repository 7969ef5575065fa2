#include <doctest.h>

#include <set>

#include "tyinv/error.hpp"
#include "tyinv/forms.hpp"

using namespace tyinv;

namespace {

SymmetricForm form(const std::vector<std::int64_t>& factors, const std::string& gram) {
  return parse_gram_literal(make_group(factors), gram);
}

std::vector<PhaseQZ> phases(std::initializer_list<std::pair<std::int64_t, std::int64_t>> v) {
  std::vector<PhaseQZ> out;
  for (auto [a, b] : v) out.emplace_back(a, b);
  return out;
}

}  // namespace

TEST_CASE("validate_form") {
  const auto f = form({3}, "1/3");
  CHECK(f.is_nondegenerate());
  CHECK_FALSE(form({2}, "0").is_nondegenerate());
  CHECK_THROWS_AS(form({2, 4}, "0,1/4;1/4,0"), InvalidInput);
  CHECK_THROWS_AS(form({3}, "1/4"), InvalidInput);
  CHECK_THROWS_AS(form({3, 3}, "1/3,1/3;0,1/3"), InvalidInput);
  CHECK_THROWS_AS(Bicharacter(form({2}, "0")), DegenerateForm);
}

TEST_CASE("form literals round-trip") {
  const auto f = form({3, 9}, "1/3,1/3;1/3,4/9");
  CHECK(parse_form_literal(f.to_literal()) == f);
  CHECK(f.to_literal() == "group=3,9; gram=1/3,1/3;1/3,4/9");
}

TEST_CASE("radicals") {
  CHECK(radical(form({3}, "1/3")).size() == 1);
  CHECK(radical(form({2}, "0")).size() == 2);
  const auto g = make_group({9});
  const auto rad = radical(form({9}, "3/9"));
  std::set<std::int64_t> idx;
  for (const auto& a : rad) idx.insert(g.index_of(a));
  CHECK(idx == std::set<std::int64_t>{0, 3, 6});
}

TEST_CASE("radical_order matches the definition") {
  for (const auto& factors : std::vector<std::vector<std::int64_t>>{{4}, {2, 4}, {3, 9}, {2, 2, 2}, {6}}) {
    const auto g = make_group(factors);
    for_each_symmetric_form(g, [&](const SymmetricForm& f) {
      std::int64_t count = 0;
      for (const auto& a : g.elements()) {
        bool in = true;
        for (const auto& b : g.elements()) in = in && f(a, b).is_zero();
        count += in;
      }
      CHECK(radical_order(f) == count);
      CHECK(f.is_nondegenerate() == (count == 1));
      for (const std::int64_t k : {0, 2, 3, -1, 7})
        CHECK(radical_order(f, k) == radical_order(power_form(f, k)));
    });
  }
}

TEST_CASE("power forms") {
  CHECK(power_form(form({3}, "1/3"), 3) == form({3}, "0"));
  CHECK(power_form(form({3}, "1/3"), -1) == form({3}, "2/3"));
  const auto p = power_form(form({9}, "1/9"), 3);
  CHECK(p == form({9}, "3/9"));
  CHECK(radical_order(p) == 3);
}

TEST_CASE("orthogonal sums") {
  const auto s = orthogonal_sum(form({3}, "1/3"), form({5}, "1/5"));
  CHECK(s.group() == make_group({3, 5}));
  CHECK(s.gram(0, 1).is_zero());
  CHECK(s.gram(1, 1) == PhaseQZ(1, 5));
  const auto d = orthogonal_sum(form({3}, "1/3"), form({3}, "2/3"));
  CHECK(d == form({3, 3}, "1/3,0;0,2/3"));
}

TEST_CASE("restriction") {
  const auto f = form({6}, "1/6");
  const auto g = f.group();
  const GroupHom three{make_group({3}), g, {g.reduce({2})}};
  CHECK(restrict(f, three) == form({3}, "2/3"));
  const GroupHom two{make_group({2}), g, {g.reduce({3})}};
  CHECK(restrict(f, two) == form({2}, "1/2"));
  const GroupHom zero{make_group({1}), g, {g.zero()}};
  CHECK(restrict(f, zero).group().is_trivial());
}

TEST_CASE("homogeneous base maps") {
  const auto mu3 = homogeneous_base_map(form({3}, "1/3"));
  CHECK(mu3.values() == phases({{0, 1}, {2, 3}, {2, 3}}));
  const auto mu1 = homogeneous_base_map(SymmetricForm());
  CHECK(mu1.values() == phases({{0, 1}}));
  const auto mu2 = homogeneous_base_map(form({2}, "1/2"));
  CHECK(mu2.values() == phases({{0, 1}, {1, 4}}));
}

TEST_CASE("base maps are homogeneous refinements on every small form") {
  for (std::int64_t n = 1; n <= 36; ++n) {
    for (const auto& g : abelian_groups_of_order(n)) {
      if (count_gram_matrices(g) > 4096) continue;
      for_each_symmetric_form(g, [&](const SymmetricForm& f) {
        const auto mu = homogeneous_base_map(f);
        CHECK(is_quadratic(mu.values(), f));
        CHECK(is_homogeneous(mu));
      });
    }
  }
}

TEST_CASE("quadratic map enumeration") {
  CHECK(enumerate_quadratic_maps(Bicharacter(SymmetricForm())).size() == 1);
  const Bicharacter chi3(form({3}, "1/3"));
  const auto maps = enumerate_quadratic_maps(chi3);
  REQUIRE(maps.size() == 3);
  std::set<std::vector<PhaseQZ>> seen;
  for (const auto& mu : maps) {
    CHECK(is_quadratic(mu.values(), chi3.form()));
    seen.insert(mu.values());
  }
  CHECK(seen.size() == 3);
  const auto two = enumerate_quadratic_maps(Bicharacter(form({2}, "1/2")));
  REQUIRE(two.size() == 2);
  CHECK(two[0].values() == phases({{0, 1}, {1, 4}}));
  CHECK(two[1].values() == phases({{0, 1}, {3, 4}}));
}

TEST_CASE("enumeration exhausts Q_chi") {
  // Every quadratic refinement on a small group is mu0 + chi(., c) for exactly one c.
  for (const auto& factors : std::vector<std::vector<std::int64_t>>{{2}, {4}, {2, 2}, {3}, {2, 4}}) {
    const auto g = make_group(factors);
    for (const auto& chi : enumerate_bicharacters(g)) {
      const auto maps = enumerate_quadratic_maps(chi);
      std::set<std::vector<PhaseQZ>> got;
      for (const auto& mu : maps) got.insert(mu.values());
      CHECK(got.size() == static_cast<std::size_t>(g.order()));
      for (const auto& mu : all_quadratic_maps(chi.form())) CHECK(got.contains(mu.values()));
    }
  }
}

TEST_CASE("is_quadratic and is_homogeneous") {
  const auto f = form({3}, "1/3");
  CHECK(is_quadratic(homogeneous_base_map(f).values(), f));
  CHECK_FALSE(is_quadratic(phases({{0, 1}, {0, 1}, {0, 1}}), f));
  CHECK(is_quadratic(phases({{0, 1}, {1, 4}}), form({2}, "1/2")));
  const auto g = f.group();
  CHECK_FALSE(is_homogeneous(homogeneous_base_map(f).shifted(g.element(1))));
  CHECK(is_homogeneous(homogeneous_base_map(SymmetricForm())));
}

TEST_CASE("bicharacter enumeration") {
  const auto three = enumerate_bicharacters(make_group({3}));
  REQUIRE(three.size() == 2);
  CHECK(three[0].form() == form({3}, "1/3"));
  CHECK(three[1].form() == form({3}, "2/3"));
  CHECK(enumerate_bicharacters(make_group({1})).size() == 1);
  const auto two = enumerate_bicharacters(make_group({2}));
  REQUIRE(two.size() == 1);
  CHECK(two[0].form() == form({2}, "1/2"));
  // Nondegenerate symmetric 2x2 and 3x3 matrices over F_2.
  CHECK(enumerate_bicharacters(make_group({2, 2})).size() == 4);
  CHECK(enumerate_bicharacters(make_group({2, 2, 2})).size() == 28);
  CHECK_THROWS_AS(enumerate_bicharacters(make_group({2, 2, 2, 2, 2, 2}), 1000), BoundExceeded);
}

TEST_CASE("incremental value and adjoint tables agree with pointwise evaluation") {
  for (const auto& factors : std::vector<std::vector<std::int64_t>>{{}, {5}, {2, 4}, {3, 9}, {2, 2, 2}, {4, 6}}) {
    const auto g = make_group(factors);
    int seen = 0;
    for_each_symmetric_form(g, [&](const SymmetricForm& f) {
      if (seen++ % 7 != 0) return;
      const std::int64_t L = 2 * f.level();
      const auto adj = adjoint_table(f, L);
      const auto elements = g.elements();
      for (std::size_t a = 0; a < elements.size(); ++a)
        for (std::size_t j = 0; j < g.rank(); ++j)
          CHECK(adj[a * g.rank() + j] == f(elements[a], g.generator(j)).scaled_to(L));
      for (const auto& mu : all_quadratic_maps(f)) {
        const auto vals = mu.values();
        for (std::size_t a = 0; a < elements.size(); ++a) CHECK(vals[a] == mu(elements[a]));
      }
    });
  }
}
