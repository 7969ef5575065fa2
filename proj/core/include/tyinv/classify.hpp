#pragma once

// Orthogonal splitting of bicharacters on odd p-groups, the rank/sign
// invariants (r_{p,s}, sigma_{p,s}), and isomorphism tests for bicharacter
// pairs.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tyinv/abelian.hpp"
#include "tyinv/forms.hpp"

namespace tyinv {

/// r_{p,s} copies of Z/p^s carrying chi(a, b) = Delta a b / p^s, one Delta per copy.
struct DiagonalBlock {
  std::int64_t p = 3;
  int s = 1;
  std::vector<std::int64_t> deltas;

  bool operator==(const DiagonalBlock&) const = default;
};

struct OrthogonalSplitting {
  /// Ascending in s.
  std::vector<DiagonalBlock> blocks;
  /// Block-diagonal form on Z/p^{s_1} + Z/p^{s_2} + ... (selection order).
  SymmetricForm diagonal_form;
  /// Isometry from diagonal_form's group onto the input group.
  GroupHom basis;
};

/// Diagonalizes chi on an odd p-group by repeatedly splitting off the
/// lexicographically least element whose self-pairing has maximal order.
/// The resulting basis change is verified to be an isometry.
OrthogonalSplitting orthogonal_splitting_odd_p(const Bicharacter& chi);
std::vector<DiagonalBlock> orthogonal_split_odd_p(const Bicharacter& chi);

/// Block-diagonal form assembled from blocks (factors in block order).
SymmetricForm block_diagonal_form(const std::vector<DiagonalBlock>& blocks);

struct WallEntry {
  int r = 0;
  int sigma = 1;
  bool operator==(const WallEntry&) const = default;
  auto operator<=>(const WallEntry&) const = default;
};

/// Odd-prime invariants keyed by (p, s); only levels with r > 0 are stored
/// (sigma = 1 whenever r = 0). The 2-part, if present, is flagged and left
/// unclassified.
struct WallInvariants {
  std::map<std::pair<std::int64_t, int>, WallEntry> entries;
  bool two_part_unclassified = false;

  WallEntry at(std::int64_t p, int s) const;
  bool operator==(const WallInvariants&) const = default;
  auto operator<=>(const WallInvariants&) const = default;
};

WallInvariants wall_invariants(const Bicharacter& chi);

/// Compares the odd-prime invariants; rejects even-order input.
bool is_isomorphic_odd(const Bicharacter& first, const Bicharacter& second);

inline constexpr std::int64_t kDefaultBruteforceBound = 250;

/// Searches group isomorphisms f (by generator images, pruned by the pairing
/// values seen so far) with chi2(f a, f b) = chi1(a, b). Returns the witness.
/// Different orders give nullopt; orders above `bound` throw BoundExceeded.
std::optional<GroupHom> find_isometry_bruteforce(const SymmetricForm& first,
                                                 const SymmetricForm& second,
                                                 std::int64_t bound = kDefaultBruteforceBound);
bool is_isomorphic_bruteforce(const SymmetricForm& first, const SymmetricForm& second,
                              std::int64_t bound = kDefaultBruteforceBound);
bool is_isomorphic_bruteforce(const Bicharacter& first, const Bicharacter& second,
                              std::int64_t bound = kDefaultBruteforceBound);

/// Checks that `f` is a bijective homomorphism carrying `first` onto `second`.
bool is_isometry(const GroupHom& f, const SymmetricForm& first, const SymmetricForm& second);

/// All bicharacters on an odd-order group grouped by wall_invariants, classes
/// and members in enumeration order.
std::vector<std::vector<Bicharacter>> bicharacter_classes_odd(
    const FiniteAbelianGroup& group, std::int64_t bound = kDefaultGramBound);

/// Same grouping by brute-force isomorphism (any group order).
std::vector<std::vector<Bicharacter>> bicharacter_classes_bruteforce(
    const FiniteAbelianGroup& group, std::int64_t bound = kDefaultGramBound);

}  // namespace tyinv
