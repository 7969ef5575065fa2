#include <doctest.h>

#include <algorithm>

#include "tyinv/error.hpp"
#include "tyinv/harness/acceptance.hpp"
#include "tyinv/harness/corpus.hpp"
#include "tyinv/harness/experiment.hpp"
#include "tyinv/harness/io.hpp"
#include "tyinv/tycat.hpp"

using namespace tyinv;
using namespace tyinv::harness;

TEST_CASE("corpus sampling is deterministic and distinct") {
  const auto g = make_group({2, 2, 2, 2, 2});
  const auto a = sample_bicharacters(g, 10, 7);
  const auto b = sample_bicharacters(g, 10, 7);
  REQUIRE(a.size() == 10);
  CHECK(a == b);
  for (std::size_t i = 1; i < a.size(); ++i) CHECK_FALSE(a[i] == a[i - 1]);
  CHECK_FALSE(sample_bicharacters(g, 10, 8) == a);
  CHECK(sample_bicharacters(make_group({3}), 10, 1).size() == 2);
  CHECK(groups_up_to(9, true).size() == 6);
}

TEST_CASE("distinguish over |A| <= 3") {
  ExperimentConfig cfg;
  cfg.max_order = 3;
  const auto r = run_distinguish(cfg);
  CHECK(r.categories.size() == 6);
  CHECK(r.separated == 15);
  CHECK(r.unseparated == 0);
  CHECK(r.ok());
  for (const auto& row : r.rows) CHECK(row.verdict == Verdict::Separated);
}

TEST_CASE("nu is separated at an even k on odd groups") {
  for (const auto& g : groups_up_to(45, true)) {
    for (const auto& chi : sample_bicharacters(g, 2, 3)) {
      const auto plus = lens_sequence(chi, 1, 8 * g.order());
      const auto minus = lens_sequence(chi, -1, 8 * g.order());
      const auto k = first_difference(plus, minus);
      REQUIRE(k.has_value());
      CHECK(*k % 2 == 0);
    }
  }
}

TEST_CASE("identical categories agree at every k") {
  const Bicharacter chi(parse_form_literal("group=3,9; gram=1/3,0;0,2/9"));
  CHECK_FALSE(first_difference(lens_sequence(chi, 1, 216), lens_sequence(chi, 1, 216)).has_value());
}

TEST_CASE("equivalent rows carry witnesses") {
  ExperimentConfig cfg;
  cfg.max_order = 9;
  cfg.members_checked = 1;
  const auto r = run_distinguish(cfg);
  CHECK(r.ok());
  CHECK(r.equivalent > 0);
  for (const auto& row : r.rows) {
    if (row.verdict != Verdict::Equivalent) continue;
    REQUIRE(row.witness.has_value());
    CHECK(row.witness->is_well_defined());
    CHECK(row.witness->is_injective());
  }
  cfg.parallelism = 3;
  CHECK(same_verdicts(r, run_distinguish(cfg)));
}

TEST_CASE("config validation") {
  ExperimentConfig cfg;
  cfg.max_order = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidInput);
  cfg.max_order = 5;
  cfg.k_max = 1;
  CHECK_THROWS_AS(cfg.validate(), InvalidInput);
  cfg.k_max = 0;
  CHECK(cfg.effective_k_max() == 40);
}

TEST_CASE("JSON round trips") {
  for (int j = 0; j < 8; ++j) {
    const auto u = AlgebraicUnit::eighth_root(j);
    CHECK(algebraic_unit_from_json(to_json(u)) == u);
  }
  CHECK(algebraic_unit_from_json(to_json(AlgebraicUnit::zero())).is_zero());
  const auto odd = AlgebraicUnit::unit({0.6, 0.8});
  CHECK(algebraic_unit_from_json(to_json(odd)).to_complex() == odd.to_complex());

  const TYData t(Bicharacter(parse_form_literal("group=5; gram=2/5")), -1);
  for (std::int64_t k = 0; k <= 12; ++k) {
    const auto x = lens_invariant(t, k);
    CHECK(lens_invariant_from_json(to_json(x)) == x);
  }

  const auto w = wall_invariants(Bicharacter(parse_form_literal("group=3; gram=2/3")));
  CHECK(to_json(w) == R"({"3^1":{"r":1,"sigma":-1}})");
  CHECK(wall_invariants_from_json(to_json(w)) == w);
  const auto two = wall_invariants(Bicharacter(parse_form_literal("group=2; gram=1/2")));
  CHECK(to_json(two) == R"({"2-part":"unclassified"})");
  CHECK(wall_invariants_from_json(to_json(two)) == two);
  CHECK_THROWS_AS(wall_invariants_from_json("{\"3^1\":"), InvalidInput);
}

TEST_CASE("report JSON round trip") {
  ExperimentConfig cfg;
  cfg.max_order = 9;
  const auto r = run_distinguish(cfg);
  const auto text = report_to_json(r);
  const auto back = report_from_json(text);
  CHECK(back.rows == r.rows);
  CHECK(back.categories.size() == r.categories.size());
  CHECK(report_to_json(back) == text);
}

TEST_CASE("RFC 4180 quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
  CHECK(csv_record({"x", "y,z", ""}) == "x,\"y,z\",\r\n");
  ExperimentConfig cfg;
  cfg.max_order = 3;
  const auto csv = report_to_csv(run_distinguish(cfg));
  CHECK(csv.rfind("first,second,verdict,k\r\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 16);
}

TEST_CASE("a corrupted associator fails the pentagon suite") {
  SuiteOptions o;
  o.level = SuiteLevel::Quick;
  o.corrupt_associator = true;
  const auto r = run_suite(6, o);
  CHECK_FALSE(r.passed);
  CHECK(r.failures > 0);
  o.corrupt_associator = false;
  CHECK(run_suite(6, o).passed);
}
