#include <doctest.h>

#include "tyinv/error.hpp"
#include "tyinv/gauss.hpp"

using namespace tyinv;

namespace {

SymmetricForm form(const std::vector<std::int64_t>& factors, const std::string& gram) {
  return parse_gram_literal(make_group(factors), gram);
}

const std::vector<std::vector<std::int64_t>> kSmallGroups{
    {1}, {2}, {3}, {4}, {5}, {2, 2}, {7}, {8}, {2, 4}, {9}, {3, 3}, {2, 2, 2}, {12}, {2, 6}, {4, 4}, {27}, {3, 9}, {5, 5}};

}  // namespace

TEST_CASE("gauss sums of the examples") {
  CHECK(gauss_sum(homogeneous_base_map(SymmetricForm())) == AlgebraicUnit::one());
  CHECK(gauss_sum(homogeneous_base_map(form({3}, "1/3"))) == AlgebraicUnit::eighth_root(6));
  const QuadraticMap odd(form({2}, "0"), {PhaseQZ()}, {PhaseQZ()}, {PhaseQZ(1, 2)});
  CHECK(gauss_sum(odd).is_zero());
  CHECK(gauss_sum_exact(odd).is_zero());
  CHECK(gauss_sum_exact(homogeneous_base_map(SymmetricForm())) == CyclotomicInt::integer(1));
}

TEST_CASE("exact gauss sum of mu0 on Z/3 is 1 + 2 zeta_3^2") {
  const auto s = gauss_sum_exact(homogeneous_base_map(form({3}, "1/3")));
  auto reference = CyclotomicInt::integer(1, 3);
  reference.add_root(2, 2);
  CHECK(s == reference);
  CHECK(std::abs(s.to_complex() - std::complex<double>(0, -std::sqrt(3.0))) < 1e-12);
}

TEST_CASE("zeta values on Z/3") {
  const Bicharacter chi(form({3}, "1/3"));
  CHECK(zeta_bruteforce(chi, 0) == AlgebraicUnit::one());
  CHECK(zeta_bruteforce(chi, 1) == AlgebraicUnit::one());
  CHECK(zeta_bruteforce(chi, 2) == AlgebraicUnit::eighth_root(2));
  CHECK(zeta_via_prin(chi, 2) == AlgebraicUnit::eighth_root(2));
  CHECK(zeta_closed_form_p(chi, 2) == AlgebraicUnit::eighth_root(2));
  CHECK(zeta_closed_form_p(chi, 3) == zeta_bruteforce(chi, 3));
  CHECK(zeta_via_prin(chi, 24) == AlgebraicUnit::one());
}

TEST_CASE("zeta on Z/2 vanishes at k = 2") {
  const Bicharacter chi(form({2}, "1/2"));
  CHECK(zeta_bruteforce(chi, 2).is_zero());
  CHECK(zeta_via_prin(chi, 2).is_zero());
  CHECK_THROWS_AS(zeta_closed_form_p(chi, 2), UnsupportedGroup);
}

TEST_CASE("zeta routes agree on small groups") {
  for (const auto& factors : kSmallGroups) {
    const auto g = make_group(factors);
    const std::int64_t p = prime_power_base(g.order());
    const bool closed = p != 0 && p != 2;
    for (const auto& chi : enumerate_bicharacters(g)) {
      const auto phases = shift_gauss_phases(chi);
      const auto bf = zeta_bruteforce_sequence(chi, phases, 0, 40);
      const auto seq = zeta_sequence(chi, 40);
      std::vector<AlgebraicUnit> cf;
      if (closed) cf = zeta_closed_form_sequence(chi, 40);
      for (std::int64_t k = 0; k <= 40; ++k) {
        const auto i = static_cast<std::size_t>(k);
        CAPTURE(chi.form().to_literal());
        CAPTURE(k);
        CHECK(bf[i].is_exact());
        CHECK(bf[i] == zeta_bruteforce(chi, k));
        CHECK(seq[i] == zeta_via_prin(chi, k));
        CHECK(bf[i] == seq[i]);
        if (closed) {
          CHECK(cf[i] == bf[i]);
          CHECK(zeta_closed_form_p(chi, k) == cf[i]);
        }
      }
      CHECK(zeta_via_prin(chi, 8 * g.order()) == AlgebraicUnit::one());
    }
  }
}

TEST_CASE("prin identity with any homogeneous base map") {
  const Bicharacter chi(form({9}, "2/9"));
  const auto mu = homogeneous_base_map(chi.form());
  for (std::int64_t k = 0; k <= 20; ++k) CHECK(zeta_via_prin(chi, mu, k) == zeta_bruteforce(chi, k));
  const auto shifted = mu.shifted(chi.group().element(1));
  CHECK_THROWS_AS(zeta_via_prin(chi, shifted, 2), InvalidInput);
}

TEST_CASE("zeta does not depend on the homogeneous base map") {
  for (const auto& factors : std::vector<std::vector<std::int64_t>>{{2}, {4}, {8}, {2, 2}, {2, 4}, {6}, {4, 4}}) {
    for (const auto& chi : enumerate_bicharacters(make_group(factors))) {
      std::vector<QuadraticMap> bases;
      for (const auto& mu : all_quadratic_maps(chi.form()))
        if (is_homogeneous(mu)) bases.push_back(mu);
      REQUIRE(bases.size() >= 2);
      for (std::int64_t k = 0; k <= 4 * chi.group().exponent(); ++k) {
        const auto expected = zeta_bruteforce(chi, k);
        for (const auto& mu : bases) CHECK(zeta_via_prin(chi, mu, k) == expected);
      }
    }
  }
}

TEST_CASE("degenerate inputs are rejected for zeta") {
  CHECK_THROWS_AS(Bicharacter(form({3}, "0")), DegenerateForm);
}

TEST_CASE("gauss trichotomy on every small form") {
  for (const auto& factors : kSmallGroups) {
    const auto g = make_group(factors);
    if (count_gram_matrices(g) > 2048) continue;
    for_each_symmetric_form(g, [&](const SymmetricForm& f) {
      const auto rad = radical(f);
      for (const auto& mu : all_quadratic_maps(f)) {
        bool moves = false;
        for (const auto& a : rad) moves = moves || !mu(a).is_zero();
        const auto z = gauss_sum_numeric(mu);
        if (moves) {
          CHECK(std::abs(z) < 1e-9);
          CHECK(gauss_sum(mu).is_zero());
        } else {
          CHECK(std::abs(std::abs(z) - 1.0) < 1e-9);
        }
        CHECK(verify_gauss_normalization(mu));
      }
    });
  }
}

TEST_CASE("classical gauss sums") {
  CHECK(std::abs(classical_gauss(1, 3, 1).value() - std::complex<double>(0, std::sqrt(3.0))) < 1e-12);
  CHECK(std::abs(classical_gauss(2, 3, 1).value() - std::complex<double>(0, -std::sqrt(3.0))) < 1e-12);
  CHECK(std::abs(classical_gauss(3, 3, 1).value() - 3.0) < 1e-12);
  for (std::int64_t p : {3, 5, 7}) {
    for (int s = 1; s <= 3; ++s) {
      const auto ps = int_pow(p, s);
      for (std::int64_t d = 0; d < ps; ++d) {
        CHECK(classical_gauss_closed_exact(d, p, s) == classical_gauss_direct(d, p, s));
        CHECK(std::abs(classical_gauss(d, p, s).value() - classical_gauss_direct(d, p, s).to_complex()) < 1e-9);
      }
    }
  }
  CHECK_THROWS_AS(classical_gauss(1, 2, 1), InvalidInput);
}

TEST_CASE("conductor") {
  CHECK(gauss_conductor(make_group({3})) == 24);
  CHECK(gauss_conductor(make_group({1})) == 8);
  CHECK(gauss_conductor(make_group({8})) == 16);
}
