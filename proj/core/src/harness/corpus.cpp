#include "tyinv/harness/corpus.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace tyinv::harness {

std::vector<FiniteAbelianGroup> groups_up_to(std::int64_t max_order, bool odd_only) {
  std::vector<FiniteAbelianGroup> out;
  for (std::int64_t n = 1; n <= max_order; ++n) {
    if (odd_only && n % 2 == 0) continue;
    for (auto& g : abelian_groups_of_order(n)) out.push_back(std::move(g));
  }
  return out;
}

std::uint64_t group_seed(std::uint64_t seed, const FiniteAbelianGroup& group) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  for (auto d : group.factors()) words.push_back(static_cast<std::uint32_t>(d));
  std::seed_seq seq(words.begin(), words.end());
  std::mt19937_64 rng(seq);
  return rng();
}

namespace {

// Distinct gram indices accepted by `keep`, drawn with a bounded number of
// attempts; falls back to a full scan when the group is small.
template <typename Keep>
std::vector<std::int64_t> sample_indices(const FiniteAbelianGroup& group, std::int64_t count,
                                         std::uint64_t seed, Keep keep) {
  const std::int64_t total = count_gram_matrices(group);
  std::vector<std::int64_t> out;
  if (total <= 4 * count) {
    for (std::int64_t i = 0; i < total; ++i)
      if (keep(i)) out.push_back(i);
    if (static_cast<std::int64_t>(out.size()) <= count) return out;
    std::mt19937_64 rng(group_seed(seed, group));
    std::shuffle(out.begin(), out.end(), rng);
    out.resize(static_cast<std::size_t>(count));
    std::sort(out.begin(), out.end());
    return out;
  }
  std::mt19937_64 rng(group_seed(seed, group));
  std::uniform_int_distribution<std::int64_t> pick(0, total - 1);
  std::set<std::int64_t> chosen;
  for (std::int64_t attempt = 0; attempt < 64 * count && static_cast<std::int64_t>(chosen.size()) < count;
       ++attempt) {
    const std::int64_t i = pick(rng);
    if (!chosen.contains(i) && keep(i)) chosen.insert(i);
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace

std::vector<Bicharacter> sample_bicharacters(const FiniteAbelianGroup& group, std::int64_t count,
                                             std::uint64_t seed) {
  std::vector<Bicharacter> out;
  auto idx = sample_indices(group, count, seed,
                            [&](std::int64_t i) { return symmetric_form_at(group, i).is_nondegenerate(); });
  for (auto i : idx) out.emplace_back(symmetric_form_at(group, i));
  return out;
}

std::vector<SymmetricForm> sample_symmetric_forms(const FiniteAbelianGroup& group, std::int64_t count,
                                                  std::uint64_t seed) {
  std::vector<SymmetricForm> out;
  for (auto i : sample_indices(group, count, seed, [](std::int64_t) { return true; }))
    out.push_back(symmetric_form_at(group, i));
  return out;
}

void for_each_planned_bicharacter(const FiniteAbelianGroup& group, const SamplePlan& plan,
                                  const std::function<void(const Bicharacter&)>& visit) {
  if (plan.exhaustive) {
    for_each_bicharacter(group, visit);
    return;
  }
  for (const auto& chi : sample_bicharacters(group, plan.samples, plan.seed)) visit(chi);
}

void for_each_planned_form(const FiniteAbelianGroup& group, const SamplePlan& plan,
                           const std::function<void(const SymmetricForm&)>& visit) {
  if (plan.exhaustive) {
    for_each_symmetric_form(group, visit);
    return;
  }
  for (const auto& f : sample_symmetric_forms(group, plan.samples, plan.seed)) visit(f);
}

}  // namespace tyinv::harness
