#include "tyinv/harness/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <optional>

#include <json.hpp>

#include "tyinv/classify.hpp"
#include "tyinv/error.hpp"
#include "tyinv/gauss.hpp"
#include "tyinv/harness/corpus.hpp"
#include "tyinv/harness/experiment.hpp"
#include "tyinv/number_theory.hpp"
#include "tyinv/tycat.hpp"

namespace tyinv::harness {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

constexpr std::size_t kMaxSamples = 8;
constexpr double kTol = 1e-9;

class Tally {
 public:
  explicit Tally(SuiteResult& r) : r_(r) {}

  template <typename Describe>
  void check(bool ok, Describe describe) {
    ++r_.checks;
    if (ok) return;
    fail(describe());
  }

  void fail(const std::string& what) {
    ++r_.failures;
    if (r_.failure_samples.size() < kMaxSamples) r_.failure_samples.push_back(what);
  }

 private:
  SuiteResult& r_;
};

bool full(const SuiteOptions& o) { return o.level == SuiteLevel::Full; }

std::string literal(const Bicharacter& chi) { return chi.form().to_literal(); }

bool odd_prime_power(std::int64_t n) {
  const std::int64_t p = prime_power_base(n);
  return p != 0 && p != 2;
}

// Suites 1 and 2 share one sweep over the zeta corpus.
struct ZetaSweep {
  SuiteResult triple;
  SuiteResult fixed;
};

ZetaSweep zeta_sweep(const SuiteOptions& o) {
  const std::int64_t max_order = full(o) ? 500 : 64;
  const std::int64_t exhaustive_up_to = full(o) ? 125 : 32;
  const std::int64_t samples = full(o) ? 4 : 2;
  constexpr std::int64_t K = 50;

  ZetaSweep out;
  Tally t1(out.triple);
  Tally t2(out.fixed);
  double time1 = 0.0;
  double time2 = 0.0;
  std::int64_t forms = 0;
  std::int64_t exhaustive_groups = 0;
  std::int64_t sampled_groups = 0;

  for (const auto& g : groups_up_to(max_order)) {
    const bool exhaustive = prime_power_base(g.order()) != 0 && g.order() <= exhaustive_up_to;
    (exhaustive ? exhaustive_groups : sampled_groups)++;
    const SamplePlan plan{exhaustive, samples, o.seed};
    const bool closed = odd_prime_power(g.order());
    const std::int64_t k_top = 8 * g.order();
    for_each_planned_bicharacter(g, plan, [&](const Bicharacter& chi) {
      ++forms;
      auto t0 = Clock::now();
      try {
        const auto phases = shift_gauss_phases(chi);
        const auto bf = zeta_bruteforce_sequence(chi, phases, 0, K);
        const auto prin = zeta_sequence(chi, K);
        std::vector<AlgebraicUnit> cf;
        if (closed) cf = zeta_closed_form_sequence(chi, K);
        const std::int64_t k_spot = 2 + forms % (K - 1);
        t1.check(zeta_via_prin(chi, k_spot) == prin[static_cast<std::size_t>(k_spot)],
                 [&] { return literal(chi) + ": zeta_via_prin differs from zeta_sequence at k=" + std::to_string(k_spot); });
        for (std::int64_t k = 0; k <= K; ++k) {
          const auto i = static_cast<std::size_t>(k);
          bool ok = bf[i] == prin[i] && bf[i].is_exact();
          if (closed) ok = ok && cf[i] == bf[i];
          t1.check(ok, [&] {
            return literal(chi) + " k=" + std::to_string(k) + ": brute " + bf[i].to_string() + ", prin " +
                   prin[i].to_string() + (closed ? ", closed " + cf[i].to_string() : std::string());
          });
        }
        time1 += since(t0);

        t0 = Clock::now();
        bool exact = true;
        for (std::int64_t k = 0; k <= K; ++k) {
          const auto i = static_cast<std::size_t>(k);
          exact = exact && bf[i].is_exact() && prin[i].is_exact() && (!closed || cf[i].is_exact());
        }
        t2.check(exact, [&] { return literal(chi) + ": unsnapped value among zeta_0..zeta_50"; });
        const auto one = AlgebraicUnit::one();
        bool first = bf[1] == one && prin[1] == one && (!closed || cf[1] == one);
        t2.check(first, [&] { return literal(chi) + ": zeta_1 != 1"; });
        const auto bf_top = zeta_bruteforce_sequence(chi, phases, k_top, k_top).front();
        const auto prin_top = zeta_via_prin(chi, k_top);
        bool top = bf_top == one && prin_top == one;
        if (closed) top = top && zeta_closed_form_p(chi, k_top) == one;
        t2.check(top, [&] {
          return literal(chi) + ": zeta_{8|A|} = " + bf_top.to_string() + " / " + prin_top.to_string();
        });
        time2 += since(t0);
      } catch (const std::exception& e) {
        t1.fail(literal(chi) + ": " + e.what());
        t2.fail(literal(chi) + ": " + e.what());
      }
    });
  }
  const std::string scope = std::to_string(forms) + " forms on " + std::to_string(exhaustive_groups) +
                            " exhaustive + " + std::to_string(sampled_groups) + " sampled groups, |A| <= " +
                            std::to_string(max_order);
  out.triple.seconds = time1;
  out.triple.summary = scope + ", k <= 50";
  out.fixed.seconds = time2;
  out.fixed.summary = scope + ", k in {1, 8|A|} and exactness for k <= 50";
  return out;
}

void suite_gauss_trichotomy(const SuiteOptions& o, SuiteResult& r) {
  Tally t(r);
  const std::int64_t max_order = full(o) ? 200 : 32;
  const std::int64_t exact_up_to = full(o) ? 100 : 32;
  const std::int64_t work_cap = full(o) ? (std::int64_t{1} << 22) : (std::int64_t{1} << 18);
  const std::int64_t samples = full(o) ? 6 : 3;
  std::int64_t forms = 0;
  std::int64_t maps = 0;
  std::int64_t exact_checks = 0;
  for (const auto& g : groups_up_to(max_order)) {
    const std::int64_t n = g.order();
    const bool exhaustive = count_gram_matrices(g) <= work_cap / (n * n);
    for_each_planned_form(g, SamplePlan{exhaustive, samples, o.seed}, [&](const SymmetricForm& form) {
      ++forms;
      try {
        const auto rad = radical(form);
        for (const auto& mu : all_quadratic_maps(form)) {
          ++maps;
          bool nontrivial_on_radical = false;
          for (const auto& a : rad) nontrivial_on_radical = nontrivial_on_radical || !mu(a).is_zero();
          const auto numeric = gauss_sum_numeric(mu);
          const auto exact = gauss_sum(mu);
          const auto describe = [&] {
            std::string s = form.to_literal() + ", mu linear part";
            for (const auto& l : mu.linear()) s += " " + l.to_string();
            return s;
          };
          if (nontrivial_on_radical) {
            t.check(std::abs(numeric) <= kTol && exact.is_zero(), [&] { return describe() + ": expected gamma = 0"; });
          } else {
            t.check(std::abs(std::abs(numeric) - 1.0) <= kTol && !exact.is_zero(),
                    [&] { return describe() + ": expected |gamma| = 1"; });
            if (is_homogeneous(mu)) {
              t.check(exact.kind() == AlgebraicUnit::Kind::EighthRoot &&
                          std::abs(exact.to_complex() - numeric) <= kTol,
                      [&] { return describe() + ": homogeneous map without an eighth-root gamma"; });
            }
          }
          if (n <= exact_up_to) {
            ++exact_checks;
            t.check(verify_gauss_normalization(mu), [&] { return describe() + ": |S|^2 != |A||A^perp|"; });
          }
        }
      } catch (const std::exception& e) {
        t.fail(form.to_literal() + ": " + e.what());
      }
    });
  }
  r.summary = std::to_string(maps) + " maps on " + std::to_string(forms) + " forms, |A| <= " +
              std::to_string(max_order) + "; " + std::to_string(exact_checks) + " exact norm identities";
}

void suite_classical_gauss(const SuiteOptions& o, SuiteResult& r) {
  Tally t(r);
  const int s_max = full(o) ? 5 : 3;
  std::int64_t exact = 0;
  for (std::int64_t p : {3, 5, 7}) {
    for (int s = 1; s <= s_max; ++s) {
      const std::int64_t ps = int_pow(p, s);
      for (std::int64_t d = 0; d < ps; ++d) {
        try {
          const auto direct = classical_gauss_direct(d, p, s);
          const auto closed = classical_gauss(d, p, s);
          const auto dv = direct.to_complex();
          const auto cv = closed.value();
          t.check(std::abs(dv - cv) <= kTol, [&] {
            return "d=" + std::to_string(d) + " p^s=" + std::to_string(ps) + ": |direct - closed| = " +
                   std::to_string(std::abs(dv - cv));
          });
          if (ps <= 81) {
            ++exact;
            t.check(classical_gauss_closed_exact(d, p, s) == direct,
                    [&] { return "d=" + std::to_string(d) + " p^s=" + std::to_string(ps) + ": exact mismatch"; });
          }
        } catch (const std::exception& e) {
          t.fail("d=" + std::to_string(d) + " p^s=" + std::to_string(ps) + ": " + e.what());
        }
      }
    }
  }
  r.summary = "p in {3,5,7}, s <= " + std::to_string(s_max) + ", every d; " + std::to_string(exact) +
              " exact cyclotomic comparisons";
}

// Forms for the category sweeps (suites 5 and 9).
std::vector<Bicharacter> category_corpus(const SuiteOptions& o, std::int64_t& groups) {
  const std::int64_t max_order = full(o) ? 100 : 24;
  const std::int64_t samples = full(o) ? 6 : 2;
  std::vector<Bicharacter> out;
  for (const auto& g : groups_up_to(max_order)) {
    ++groups;
    for (auto& chi : sample_bicharacters(g, samples, o.seed)) out.push_back(std::move(chi));
  }
  return out;
}

void suite_lens(const SuiteOptions& o, SuiteResult& r) {
  Tally t(r);
  std::int64_t groups = 0;
  const auto corpus = category_corpus(o, groups);
  for (const auto& chi : corpus) {
    for (int nu : {1, -1}) {
      const TYData ty(chi, nu);
      const std::int64_t n = ty.n();
      const auto tag = [&] { return literal(chi) + " nu=" + std::to_string(nu); };
      try {
        const auto catalog = center_simples(ty);
        t.check(verify_center_catalog(ty, catalog), [&] { return tag() + ": center catalog"; });
        t.check(global_dim_center(ty, catalog) == 4 * n * n, [&] { return tag() + ": global dimension"; });
        const auto one = AlgebraicUnit::one();
        t.check(lens_invariant(ty, 0) == LensInvariant::from_parts(Rational(1), Rational(0), 1, one),
                [&] { return tag() + ": |L_0| = " + lens_invariant(ty, 0).to_string(); });
        t.check(lens_invariant(ty, 1) == LensInvariant::from_parts(Rational(1, 2 * n), Rational(0), 1, one),
                [&] { return tag() + ": |L_1| = " + lens_invariant(ty, 1).to_string(); });
        const double scale = static_cast<double>(4 * n * n);
        for (std::int64_t k = 0; k <= 40; ++k) {
          const auto direct = tau_k_direct(ty, catalog, k);
          const auto closed = tau_k_closed(ty, k);
          const auto lens = lens_invariant(ty, k);
          t.check(tau_agree(direct, closed), [&] { return tag() + " k=" + std::to_string(k) + ": tau direct != closed"; });
          t.check(std::abs(lens.value() * scale - direct.to_complex()) <= kTol, [&] {
            return tag() + " k=" + std::to_string(k) + ": lens " + lens.to_string() + " vs tau/(2n)^2";
          });
        }
      } catch (const std::exception& e) {
        t.fail(tag() + ": " + e.what());
      }
    }
  }
  r.summary = std::to_string(corpus.size()) + " forms on " + std::to_string(groups) +
              " groups, both nu, k <= 40";
}

void suite_structure(const SuiteOptions& o, SuiteResult& r) {
  Tally t(r);
  struct Control {
    std::string name;
    std::int64_t applicable = 0;
    std::int64_t caught = 0;
  };
  std::map<std::string, Control> controls;
  std::int64_t categories = 0;
  const Perturbation genuine = o.corrupt_associator ? Perturbation::ScaledMmm : Perturbation::None;
  for (const auto& g : groups_up_to(8)) {
    for_each_bicharacter(g, [&](const Bicharacter& chi) {
      for (int nu : {1, -1}) {
        ++categories;
        const TYData ty(chi, nu);
        const auto tag = [&] { return literal(chi) + " nu=" + std::to_string(nu); };
        const auto pent = verify_pentagon(ty, genuine);
        t.check(pent.passed(), [&] {
          return tag() + ": pentagon failed in " + std::to_string(pent.failures) + " of " +
                 std::to_string(pent.quadruples) + " quadruples";
        });
        const auto dual = verify_duality(ty);
        t.check(dual.passed(), [&] { return tag() + ": duality failed"; });
        // A control only counts where it actually changes the data.
        const bool nontrivial = !g.is_trivial();
        const bool inverse_differs = g.exponent() > 2;
        auto control = [&](const std::string& name, bool applicable, bool caught) {
          auto& c = controls[name];
          c.name = name;
          if (!applicable) return;
          ++c.applicable;
          if (caught) ++c.caught;
          t.check(caught, [&] { return tag() + ": control " + name + " went undetected"; });
        };
        for (auto p : {Perturbation::NonBilinearChi, Perturbation::ScaledMmm})
          control(to_string(p), true, !verify_pentagon(ty, p).passed());
        control(to_string(Perturbation::SquaredAmb), nontrivial,
                nontrivial && !verify_pentagon(ty, Perturbation::SquaredAmb).passed());
        control(to_string(Perturbation::InverseAmb), inverse_differs,
                inverse_differs && !verify_pentagon(ty, Perturbation::InverseAmb).passed());
        control("scaled-left-projection", true,
                !verify_duality(ty, DualityPerturbation::ScaledLeftProjection).passed());
      }
    });
  }
  std::int64_t effective = 0;
  std::string detail;
  for (const auto& [name, c] : controls) {
    if (c.applicable > 0 && c.caught == c.applicable) ++effective;
    detail += " " + name + "=" + std::to_string(c.caught) + "/" + std::to_string(c.applicable);
  }
  t.check(effective >= 3, [&] { return "fewer than 3 negative controls detected everywhere"; });
  r.summary = std::to_string(categories) + " categories with |A| <= 8; controls" + detail;
}

// Orthogonal sum over the primes of the diagonal form from each primary
// component's splitting.
SymmetricForm reconstruct_from_splitting(const Bicharacter& chi) {
  SymmetricForm out;
  bool first = true;
  for (const std::int64_t p : order_primes(chi.group())) {
    const auto component = primary_component(chi.group(), p);
    const Bicharacter local(restrict(chi.form(), component.embedding));
    auto diagonal = block_diagonal_form(orthogonal_split_odd_p(local));
    out = first ? std::move(diagonal) : orthogonal_sum(out, diagonal);
    first = false;
  }
  return out;
}

void suite_classification(const SuiteOptions& o, SuiteResult& r) {
  Tally t(r);
  const std::int64_t max_order = full(o) ? 125 : 27;
  std::int64_t forms = 0;
  std::int64_t groups = 0;
  for (const auto& g : groups_up_to(max_order, true)) {
    ++groups;
    try {
      const auto by_invariants = bicharacter_classes_odd(g);
      const auto by_search = bicharacter_classes_bruteforce(g);
      std::map<std::string, std::size_t> search_class;
      for (std::size_t c = 0; c < by_search.size(); ++c)
        for (const auto& chi : by_search[c]) search_class[literal(chi)] = c;
      t.check(by_invariants.size() == by_search.size(), [&] {
        return g.to_string() + ": " + std::to_string(by_invariants.size()) + " invariant classes vs " +
               std::to_string(by_search.size()) + " isomorphism classes";
      });
      std::map<std::size_t, std::size_t> image;
      for (std::size_t c = 0; c < by_invariants.size(); ++c) {
        for (const auto& chi : by_invariants[c]) {
          ++forms;
          const auto it = search_class.find(literal(chi));
          const bool seen = it != search_class.end();
          const auto [slot, fresh] = image.try_emplace(c, seen ? it->second : 0);
          t.check(seen && slot->second == it->second,
                  [&] { return literal(chi) + ": equal invariants but not isomorphic to its class"; });
          t.check(is_isomorphic_bruteforce(reconstruct_from_splitting(chi), chi.form()),
                  [&] { return literal(chi) + ": splitting does not reconstruct the form"; });
        }
      }
      std::map<std::size_t, std::size_t> preimage;
      for (const auto& [c, s] : image) {
        t.check(preimage.try_emplace(s, c).second,
                [&] { return g.to_string() + ": two invariant classes map to one isomorphism class"; });
      }
    } catch (const std::exception& e) {
      t.fail(g.to_string() + ": " + e.what());
    }
  }
  r.summary = std::to_string(forms) + " forms on " + std::to_string(groups) + " odd groups, |A| <= " +
              std::to_string(max_order);
}

void suite_distinguish(const SuiteOptions& o, SuiteResult& r) {
  Tally t(r);
  ExperimentConfig cfg;
  cfg.max_order = full(o) ? 81 : 27;
  cfg.odd_only = true;
  cfg.k_max = 8 * cfg.max_order;
  cfg.seed = o.seed;
  cfg.parallelism = o.parallelism;
  const auto first = run_distinguish(cfg);
  t.check(first.unseparated == 0, [&] { return std::to_string(first.unseparated) + " UNSEPARATED pairs"; });
  t.check(first.equivalence_failures == 0,
          [&] { return std::to_string(first.equivalence_failures) + " equivalent rows disagree or lack a witness"; });
  for (const auto& row : first.rows) {
    t.check(row.verdict != Verdict::Unseparated, [&] { return row.first + " vs " + row.second + " UNSEPARATED"; });
    if (row.verdict == Verdict::Equivalent) {
      t.check(row.witness.has_value(), [&] { return row.first + " ~ " + row.second + ": no witness"; });
    }
  }
  cfg.parallelism = std::max(2, o.parallelism);
  const auto second = run_distinguish(cfg);
  t.check(same_verdicts(first, second), [&] { return "re-run produced different verdicts or separating k"; });
  r.summary = std::to_string(first.categories.size()) + " categories from " +
              std::to_string(first.forms_enumerated) + " forms, odd |A| <= " + std::to_string(cfg.max_order) +
              ", k_max " + std::to_string(cfg.k_max) + ": " + std::to_string(first.separated) + " separated, " +
              std::to_string(first.unseparated) + " UNSEPARATED, " + std::to_string(first.equivalent) +
              " equivalent rows, max separating k " + std::to_string(first.max_separating_k);
}

void suite_frobenius_schur(const SuiteOptions& o, SuiteResult& r) {
  Tally t(r);
  std::int64_t groups = 0;
  const auto corpus = category_corpus(o, groups);
  for (const auto& chi : corpus) {
    for (int nu : {1, -1}) {
      const TYData ty(chi, nu);
      const auto tag = [&] { return literal(chi) + " nu=" + std::to_string(nu); };
      try {
        const auto catalog = center_simples(ty);
        for (std::int64_t k = 1; k <= 50; ++k) {
          const auto fs = fs_indicator(ty, k);
          const auto from_center = fs_indicator_from_center(ty, catalog, k);
          t.check(fs.ak == torsion_order(chi.group(), k) && fs.unit.is_exact(),
                  [&] { return tag() + " k=" + std::to_string(k) + ": indicator unit not exact"; });
          const auto normalized = AlgebraicUnit::snap(from_center / std::sqrt(static_cast<double>(fs.ak)));
          t.check(normalized.is_exact() && normalized == fs.unit, [&] {
            return tag() + " k=" + std::to_string(k) + ": catalog sum / sqrt|A_k| = " + normalized.to_string() +
                   ", expected " + fs.unit.to_string();
          });
          t.check(std::abs(fs.value() - from_center) <= kTol,
                  [&] { return tag() + " k=" + std::to_string(k) + ": indicator differs from catalog sum"; });
        }
      } catch (const std::exception& e) {
        t.fail(tag() + ": " + e.what());
      }
    }
  }
  r.summary = std::to_string(corpus.size()) + " forms on " + std::to_string(groups) +
              " groups, both nu, 1 <= k <= 50";
}

double budget_of(int id) {
  switch (id) {
    case 1:
      return 120.0;
    case 4:
      return 30.0;
    case 6:
      return 60.0;
    case 8:
      return 600.0;
    default:
      return 0.0;
  }
}

void finish(SuiteResult& r) {
  if (r.budget > 0.0 && r.seconds > r.budget) {
    ++r.failures;
    r.failure_samples.push_back("runtime " + std::to_string(r.seconds) + " s exceeds budget " +
                                std::to_string(r.budget) + " s");
  }
  r.passed = r.failures == 0 && r.checks > 0;
}

SuiteResult blank(int id, const SuiteOptions& o) {
  SuiteResult r;
  r.id = id;
  r.name = suite_name(id);
  if (o.level == SuiteLevel::Full) r.budget = budget_of(id);
  return r;
}

}  // namespace

std::vector<int> suites_for(SuiteLevel level) {
  if (level == SuiteLevel::Quick) return {1, 2, 3, 4, 5, 6};
  return {1, 2, 3, 4, 5, 6, 7, 8, 9};
}

std::string suite_name(int id) {
  switch (id) {
    case 1:
      return "zeta-triple-oracle";
    case 2:
      return "zeta-fixed-points";
    case 3:
      return "gauss-trichotomy";
    case 4:
      return "classical-gauss";
    case 5:
      return "lens-tau-consistency";
    case 6:
      return "pentagon-duality";
    case 7:
      return "classification-soundness";
    case 8:
      return "distinguish";
    case 9:
      return "frobenius-schur";
    default:
      throw InvalidInput("unknown suite " + std::to_string(id));
  }
}

std::vector<SuiteResult> run_suites(const std::vector<int>& ids, const SuiteOptions& options,
                                    const std::function<void(const SuiteResult&)>& on_done) {
  std::vector<SuiteResult> out;
  std::optional<ZetaSweep> sweep;
  for (int id : ids) {
    SuiteResult r = blank(id, options);
    if (id == 1 || id == 2) {
      if (!sweep) sweep = zeta_sweep(options);
      const auto& part = id == 1 ? sweep->triple : sweep->fixed;
      r.checks = part.checks;
      r.failures = part.failures;
      r.failure_samples = part.failure_samples;
      r.summary = part.summary;
      r.seconds = part.seconds;
    } else {
      const auto t0 = Clock::now();
      switch (id) {
        case 3:
          suite_gauss_trichotomy(options, r);
          break;
        case 4:
          suite_classical_gauss(options, r);
          break;
        case 5:
          suite_lens(options, r);
          break;
        case 6:
          suite_structure(options, r);
          break;
        case 7:
          suite_classification(options, r);
          break;
        case 8:
          suite_distinguish(options, r);
          break;
        case 9:
          suite_frobenius_schur(options, r);
          break;
        default:
          throw InvalidInput("unknown suite " + std::to_string(id));
      }
      r.seconds = since(t0);
    }
    finish(r);
    if (on_done) on_done(r);
    out.push_back(std::move(r));
  }
  return out;
}

SuiteResult run_suite(int id, const SuiteOptions& options) { return run_suites({id}, options).front(); }

std::string results_to_json(const std::vector<SuiteResult>& results) {
  nlohmann::json out;
  bool passed = true;
  out["suites"] = nlohmann::json::array();
  for (const auto& r : results) {
    passed = passed && r.passed;
    out["suites"].push_back({{"id", r.id},
                             {"name", r.name},
                             {"passed", r.passed},
                             {"seconds", r.seconds},
                             {"budget", r.budget},
                             {"checks", r.checks},
                             {"failures", r.failures},
                             {"summary", r.summary},
                             {"failure_samples", r.failure_samples}});
  }
  out["passed"] = passed;
  return out.dump(2);
}

}  // namespace tyinv::harness
