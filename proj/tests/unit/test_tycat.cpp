#include <doctest.h>

#include "tyinv/gauss.hpp"
#include "tyinv/tycat.hpp"

using namespace tyinv;

namespace {

Bicharacter bichar(const std::vector<std::int64_t>& factors, const std::string& gram) {
  return Bicharacter(parse_gram_literal(make_group(factors), gram));
}

int count(const std::vector<CenterSimple>& c, CenterKind k) {
  int n = 0;
  for (const auto& s : c) n += s.kind == k;
  return n;
}

LensInvariant rational(std::int64_t num, std::int64_t den) {
  return LensInvariant::from_parts(Rational(num, den), Rational(0), 1, AlgebraicUnit::one());
}

}  // namespace

TEST_CASE("center census") {
  const TYData trivial(Bicharacter(SymmetricForm()), 1);
  const auto c1 = center_simples(trivial);
  CHECK(c1.size() == 4);
  CHECK(count(c1, CenterKind::X) == 2);
  CHECK(count(c1, CenterKind::Y) == 0);
  CHECK(count(c1, CenterKind::Z) == 2);
  const TYData z3(bichar({3}, "1/3"), 1);
  const auto c3 = center_simples(z3);
  CHECK(c3.size() == 15);
  CHECK(count(c3, CenterKind::X) == 6);
  CHECK(count(c3, CenterKind::Y) == 3);
  CHECK(count(c3, CenterKind::Z) == 6);
  CHECK(verify_center_catalog(z3, c3));
  CHECK(global_dim_center(trivial) == 4);
  CHECK(global_dim_center(z3) == 36);
  CHECK(global_dim_center(TYData(bichar({4}, "1/4"), -1)) == 64);
  CHECK(global_dim_center(TYData(bichar({2, 2}, "0,1/2;1/2,0"), 1)) == 64);
}

TEST_CASE("tau examples") {
  const TYData z3(bichar({3}, "1/3"), 1);
  CHECK(tau_k_direct(z3, 0) == CyclotomicInt::integer(36));
  CHECK(tau_k_direct(z3, 1) == CyclotomicInt::integer(6));
  CHECK(tau_k_direct(z3, 3) == CyclotomicInt::integer(18));
  const auto t2 = tau_k_closed(z3, 2);
  CHECK(std::abs(t2.value() - 6.0 * (1.0 + std::sqrt(3.0))) < 1e-12);
  CHECK(tau_agree(tau_k_direct(z3, 2), t2));
  const TYData trivial(Bicharacter(SymmetricForm()), -1);
  CHECK(std::abs(tau_k_closed(trivial, 2).value()) < 1e-12);
  CHECK(tau_k_direct(trivial, 2).is_zero());
}

TEST_CASE("tau agreement on small categories") {
  for (const auto& factors : std::vector<std::vector<std::int64_t>>{{1}, {2}, {3}, {4}, {2, 2}, {5}, {8}, {2, 4}, {9}, {3, 3}, {12}}) {
    for (const auto& chi : enumerate_bicharacters(make_group(factors))) {
      for (int nu : {1, -1}) {
        const TYData t(chi, nu);
        const auto catalog = center_simples(t);
        CHECK(verify_center_catalog(t, catalog));
        const double scale = 4.0 * static_cast<double>(t.n() * t.n());
        for (std::int64_t k = 0; k <= 24; ++k) {
          const auto direct = tau_k_direct(t, catalog, k);
          CHECK(tau_agree(direct, tau_k_closed(t, k)));
          CHECK(std::abs(lens_invariant(t, k).value() * scale - direct.to_complex()) < 1e-9);
          if (k % 2 == 1) CHECK(direct == CyclotomicInt::integer(2 * t.n() * torsion_order(t.group(), k)));
        }
      }
    }
  }
}

TEST_CASE("tau_agree rejects a wrong closed value") {
  const TYData z3(bichar({3}, "1/3"), 1);
  auto wrong = tau_k_closed(z3, 2);
  wrong.sign = -wrong.sign;
  CHECK_FALSE(tau_agree(tau_k_direct(z3, 2), wrong));
}

TEST_CASE("lens invariants") {
  const TYData z3(bichar({3}, "1/3"), 1);
  CHECK(lens_invariant(z3, 0) == rational(1, 1));
  CHECK(lens_invariant(z3, 1) == rational(1, 6));
  const auto l2 = lens_invariant(z3, 2);
  CHECK(l2 == LensInvariant::from_parts(Rational(1, 6), Rational(1, 6), 3, AlgebraicUnit::one()));
  CHECK(l2.to_string() == "1/6 + 1/6*sqrt(3)");
  const TYData trivial(Bicharacter(SymmetricForm()), -1);
  const std::vector<LensInvariant> expected{rational(1, 1), rational(1, 2), rational(0, 1), rational(1, 2),
                                            rational(1, 1)};
  for (std::int64_t k = 0; k <= 4; ++k) CHECK(lens_invariant(trivial, k) == expected[static_cast<std::size_t>(k)]);
  const auto zetas = zeta_sequence(z3.chi(), 10);
  for (std::int64_t k = 0; k <= 20; ++k)
    CHECK(lens_invariant_from_zeta(z3, k, zetas[static_cast<std::size_t>(k / 2)]) == lens_invariant(z3, k));
}

TEST_CASE("Frobenius-Schur indicators") {
  const TYData trivial_plus(Bicharacter(SymmetricForm()), 1);
  const TYData trivial_minus(Bicharacter(SymmetricForm()), -1);
  CHECK(std::abs(fs_indicator(trivial_plus, 1).value() - 1.0) < 1e-12);
  CHECK(std::abs(fs_indicator(trivial_minus, 1).value() + 1.0) < 1e-12);
  const TYData z3(bichar({3}, "1/3"), 1);
  CHECK(fs_indicator(z3, 2).unit == AlgebraicUnit::eighth_root(2));
  CHECK(fs_indicator(z3, 2).ak == 1);
  CHECK(std::abs(fs_indicator(z3, 1).value() - 1.0) < 1e-12);
  const auto catalog = center_simples(z3);
  for (std::int64_t k = 1; k <= 12; ++k)
    CHECK(std::abs(fs_indicator(z3, k).value() - fs_indicator_from_center(z3, catalog, k)) < 1e-9);
}

TEST_CASE("pentagon and duality") {
  for (const auto& factors : std::vector<std::vector<std::int64_t>>{{1}, {2}, {3}, {4}, {2, 2}}) {
    for (const auto& chi : enumerate_bicharacters(make_group(factors))) {
      for (int nu : {1, -1}) {
        const TYData t(chi, nu);
        const auto pent = verify_pentagon(t);
        CHECK(pent.passed());
        CHECK(pent.quadruples == int_pow(t.n() + 1, 4));
        const auto dual = verify_duality(t);
        CHECK(dual.passed());
        CHECK(std::abs(dual.left_dim_m - std::sqrt(static_cast<double>(t.n()))) < 1e-12);
        CHECK_FALSE(verify_pentagon(t, Perturbation::NonBilinearChi).passed());
        CHECK_FALSE(verify_pentagon(t, Perturbation::ScaledMmm).passed());
        CHECK_FALSE(verify_duality(t, DualityPerturbation::ScaledLeftProjection).passed());
        if (t.n() > 1) CHECK_FALSE(verify_pentagon(t, Perturbation::SquaredAmb).passed());
      }
    }
  }
}
