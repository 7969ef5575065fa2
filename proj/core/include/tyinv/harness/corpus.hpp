#pragma once
// Deterministic corpora of groups and forms for sweeps: exhaustive where the
// enumeration is small enough, seeded samples elsewhere.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tyinv/abelian.hpp"
#include "tyinv/forms.hpp"

namespace tyinv::harness {

/// Every abelian group of order 1..max_order (optionally odd orders only),
/// by ascending order and then in abelian_groups_of_order order.
std::vector<FiniteAbelianGroup> groups_up_to(std::int64_t max_order, bool odd_only = false);

/// How one group contributes forms to a corpus.
struct SamplePlan {
  bool exhaustive = true;
  /// Number of distinct forms drawn when not exhaustive.
  std::int64_t samples = 8;
  std::uint64_t seed = 0;
};

/// Per-group RNG seed mixing the run seed with the invariant factors.
std::uint64_t group_seed(std::uint64_t seed, const FiniteAbelianGroup& group);

/// Up to `count` distinct nondegenerate forms, drawn uniformly from the gram
/// matrices with rejection of degenerate draws; ascending gram index order.
/// Returns every nondegenerate form when the group has at most `count`.
std::vector<Bicharacter> sample_bicharacters(const FiniteAbelianGroup& group, std::int64_t count,
                                             std::uint64_t seed);

/// Up to `count` distinct forms, degenerate ones included.
std::vector<SymmetricForm> sample_symmetric_forms(const FiniteAbelianGroup& group, std::int64_t count,
                                                  std::uint64_t seed);

void for_each_planned_bicharacter(const FiniteAbelianGroup& group, const SamplePlan& plan,
                                  const std::function<void(const Bicharacter&)>& visit);

void for_each_planned_form(const FiniteAbelianGroup& group, const SamplePlan& plan,
                           const std::function<void(const SymmetricForm&)>& visit);

}  // namespace tyinv::harness
