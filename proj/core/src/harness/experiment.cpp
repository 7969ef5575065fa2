#include "tyinv/harness/experiment.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "tyinv/error.hpp"
#include "tyinv/gauss.hpp"
#include "tyinv/harness/corpus.hpp"
#include "tyinv/tycat.hpp"

namespace tyinv::harness {

void ExperimentConfig::validate() const {
  if (max_order < 1) throw InvalidInput("max_order must be at least 1");
  if (effective_k_max() < 2) throw InvalidInput("k_max must be at least 2");
  if (parallelism < 1) throw InvalidInput("parallelism must be at least 1");
  if (members_checked < 0) throw InvalidInput("members_checked must be nonnegative");
}

std::string CategoryClass::descriptor() const {
  return "TY(" + chi.form().to_literal() + "; nu=" + (nu > 0 ? "+1" : "-1") + ")";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Equivalent:
      return "equivalent";
    case Verdict::Separated:
      return "separated";
    case Verdict::Unseparated:
      return "UNSEPARATED";
  }
  return "UNSEPARATED";
}

Verdict parse_verdict(const std::string& text) {
  if (text == "equivalent") return Verdict::Equivalent;
  if (text == "separated") return Verdict::Separated;
  if (text == "UNSEPARATED") return Verdict::Unseparated;
  throw InvalidInput("unknown verdict '" + text + "'");
}

bool DistinguishRow::operator==(const DistinguishRow& o) const {
  if (first != o.first || second != o.second || verdict != o.verdict || k != o.k) return false;
  if (witness.has_value() != o.witness.has_value()) return false;
  return !witness || (witness->source == o.witness->source && witness->target == o.witness->target &&
                      witness->images == o.witness->images);
}

namespace {

std::vector<LensInvariant> sequence_from(const Bicharacter& chi, int nu, const std::vector<AlgebraicUnit>& zetas,
                                         std::int64_t k_max) {
  const TYData t(chi, nu);
  std::vector<LensInvariant> out;
  out.reserve(static_cast<std::size_t>(k_max + 1));
  for (std::int64_t k = 0; k <= k_max; ++k)
    out.push_back(lens_invariant_from_zeta(t, k, zetas[static_cast<std::size_t>(k / 2)]));
  return out;
}

}  // namespace

std::vector<LensInvariant> lens_sequence(const Bicharacter& chi, int nu, std::int64_t k_max) {
  return sequence_from(chi, nu, zeta_sequence(chi, k_max / 2), k_max);
}

std::optional<std::int64_t> first_difference(const std::vector<LensInvariant>& a,
                                             const std::vector<LensInvariant>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k)
    if (!(a[k] == b[k])) return static_cast<std::int64_t>(k);
  return std::nullopt;
}

namespace {

template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn fn) {
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

struct FormClass {
  Bicharacter rep;
  WallInvariants invariants;
  std::int64_t class_index = 0;
  std::int64_t members = 0;
  std::vector<Bicharacter> extra;
};

std::vector<FormClass> classes_on(const FiniteAbelianGroup& g, std::int64_t keep_extra,
                                  std::int64_t& enumerated) {
  std::vector<FormClass> out;
  if (g.order() % 2 == 1) {
    std::map<WallInvariants, std::size_t> index;
    for_each_bicharacter(g, [&](const Bicharacter& chi) {
      ++enumerated;
      auto inv = wall_invariants(chi);
      auto [it, fresh] = index.try_emplace(inv, out.size());
      if (fresh) {
        out.push_back(FormClass{chi, std::move(inv), static_cast<std::int64_t>(out.size()), 0, {}});
      }
      auto& cls = out[it->second];
      ++cls.members;
      if (cls.members > 1 && static_cast<std::int64_t>(cls.extra.size()) < keep_extra) cls.extra.push_back(chi);
    });
    return out;
  }
  auto groups = bicharacter_classes_bruteforce(g);
  for (auto& members : groups) {
    enumerated += static_cast<std::int64_t>(members.size());
    FormClass cls{members.front(), wall_invariants(members.front()), static_cast<std::int64_t>(out.size()),
                  static_cast<std::int64_t>(members.size()), {}};
    for (std::size_t i = 1; i < members.size() && static_cast<std::int64_t>(cls.extra.size()) < keep_extra; ++i)
      cls.extra.push_back(members[i]);
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace

DistinguishReport run_distinguish(const ExperimentConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::int64_t k_max = config.effective_k_max();
  DistinguishReport report;
  report.config = config;

  std::vector<FormClass> classes;
  for (const auto& g : groups_up_to(config.max_order, config.odd_only)) {
    if (g.order() % 2 == 0) report.even_orders_included = true;
    for (auto& cls : classes_on(g, config.members_checked, report.forms_enumerated))
      classes.push_back(std::move(cls));
  }

  // Sequences for both nu share one zeta computation per class.
  std::vector<std::array<std::vector<LensInvariant>, 2>> seqs(classes.size());
  parallel_for(classes.size(), config.parallelism, [&](std::size_t i) {
    const auto zetas = zeta_sequence(classes[i].rep, k_max / 2);
    seqs[i][0] = sequence_from(classes[i].rep, 1, zetas, k_max);
    seqs[i][1] = sequence_from(classes[i].rep, -1, zetas, k_max);
  });

  for (const auto& cls : classes) {
    for (int nu : {1, -1}) {
      report.categories.push_back(CategoryClass{cls.rep, nu, cls.invariants, cls.class_index, cls.members});
    }
  }
  const std::size_t n = report.categories.size();
  auto seq_of = [&](std::size_t c) -> const std::vector<LensInvariant>& { return seqs[c / 2][c % 2]; };

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<DistinguishRow> pair_rows(pairs.size());
  parallel_for(pairs.size(), config.parallelism, [&](std::size_t p) {
    const auto [i, j] = pairs[p];
    auto& row = pair_rows[p];
    row.first = report.categories[i].descriptor();
    row.second = report.categories[j].descriptor();
    row.k = first_difference(seq_of(i), seq_of(j));
    row.verdict = row.k ? Verdict::Separated : Verdict::Unseparated;
  });
  for (auto& row : pair_rows) {
    if (row.verdict == Verdict::Separated) {
      ++report.separated;
      report.max_separating_k = std::max(report.max_separating_k, *row.k);
    } else {
      ++report.unseparated;
    }
  }
  report.rows = std::move(pair_rows);

  // Equivalent rows: extra members against their representative.
  struct MemberJob {
    std::size_t cls;
    std::size_t member;
  };
  std::vector<MemberJob> jobs;
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t m = 0; m < classes[c].extra.size(); ++m) jobs.push_back({c, m});
  std::vector<std::array<DistinguishRow, 2>> member_rows(jobs.size());
  std::vector<int> member_failures(jobs.size(), 0);
  parallel_for(jobs.size(), config.parallelism, [&](std::size_t jdx) {
    const auto& cls = classes[jobs[jdx].cls];
    const auto& member = cls.extra[jobs[jdx].member];
    std::optional<GroupHom> witness;
    bool witness_ok = true;
    if (member.group().order() <= 125) {
      witness = find_isometry_bruteforce(member.form(), cls.rep.form());
      witness_ok = witness && is_isometry(*witness, member.form(), cls.rep.form());
    }
    const auto zetas = zeta_sequence(member, k_max / 2);
    for (int s = 0; s < 2; ++s) {
      const int nu = s == 0 ? 1 : -1;
      const bool agree = !first_difference(sequence_from(member, nu, zetas, k_max),
                                           seqs[jobs[jdx].cls][static_cast<std::size_t>(s)]);
      auto& row = member_rows[jdx][static_cast<std::size_t>(s)];
      row.first = CategoryClass{cls.rep, nu, cls.invariants, cls.class_index, cls.members}.descriptor();
      row.second = CategoryClass{member, nu, cls.invariants, cls.class_index, cls.members}.descriptor();
      row.verdict = Verdict::Equivalent;
      row.witness = witness;
      if (!agree || !witness_ok) ++member_failures[jdx];
    }
  });
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    for (auto& row : member_rows[j]) report.rows.push_back(std::move(row));
    report.equivalent += 2;
    report.equivalence_failures += member_failures[j];
  }

  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool same_verdicts(const DistinguishReport& a, const DistinguishReport& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto& x = a.rows[i];
    const auto& y = b.rows[i];
    if (x.first != y.first || x.second != y.second || x.verdict != y.verdict || x.k != y.k) return false;
  }
  return true;
}

}  // namespace tyinv::harness
