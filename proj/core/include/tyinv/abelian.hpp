#pragma once

// Finite abelian groups presented as ordered lists of cyclic factors,
// their torsion subgroups and p-primary structure.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tyinv {

/// Element of A = Z/d1 + ... + Z/dr, stored as residues 0 <= a_i < d_i.
struct GroupElement {
  std::vector<std::int64_t> coords;

  bool operator==(const GroupElement&) const = default;
  auto operator<=>(const GroupElement&) const = default;
};

class FiniteAbelianGroup {
 public:
  /// Trivial group, factors {1}.
  FiniteAbelianGroup();
  /// An empty list gives the trivial group; non-positive factors are rejected.
  explicit FiniteAbelianGroup(std::vector<std::int64_t> factors);

  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::int64_t factor(std::size_t i) const { return factors_[i]; }
  std::int64_t order() const { return order_; }
  std::int64_t exponent() const { return exponent_; }
  bool is_trivial() const { return order_ == 1; }

  GroupElement zero() const;
  GroupElement generator(std::size_t i) const;

  /// Lexicographic enumeration: index = sum a_i * prod_{j>i} d_j.
  GroupElement element(std::int64_t index) const;
  std::int64_t index_of(const GroupElement& a) const;
  std::vector<GroupElement> elements() const;

  bool contains(const GroupElement& a) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement scale(std::int64_t n, const GroupElement& a) const;
  /// Additive order of a.
  std::int64_t element_order(const GroupElement& a) const;
  /// Reduces arbitrary integer coordinates into canonical residues.
  GroupElement reduce(std::vector<std::int64_t> coords) const;

  /// Mixed-radix strides used by index_of()/element().
  const std::vector<std::int64_t>& strides() const { return strides_; }

  /// Comma separated factor literal, e.g. "2,12".
  std::string to_string() const;

  bool operator==(const FiniteAbelianGroup& other) const { return factors_ == other.factors_; }

 private:
  std::vector<std::int64_t> factors_;
  std::vector<std::int64_t> strides_;
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 1;
};

FiniteAbelianGroup make_group(const std::vector<std::int64_t>& factors);

/// Parses the "2,12" literal. Whitespace is ignored.
FiniteAbelianGroup parse_group_literal(std::string_view text);

/// Homomorphism given by the images of the source generators.
struct GroupHom {
  FiniteAbelianGroup source;
  FiniteAbelianGroup target;
  std::vector<GroupElement> images;

  GroupElement apply(const GroupElement& a) const;
  /// Checks d_i * image_i == 0 for every source generator.
  bool is_well_defined() const;
  bool is_injective() const;
};

/// r_{p,s}: number of cyclic summands Z/p^s in the p-part. Only nonzero
/// ranks are stored.
struct PrimaryRanks {
  std::int64_t p = 2;
  std::map<int, int> ranks;

  int rank(int s) const;
  /// Sum of s * r_{p,s} = log_p |A^(p)|.
  int log_order() const;
  bool operator==(const PrimaryRanks&) const = default;
};

/// |A_k| = prod gcd(k, d_i); gcd(0, d) = d so |A_0| = |A|.
std::int64_t torsion_order(const FiniteAbelianGroup& g, std::int64_t k);

/// All a with k a = 0, in enumeration order.
std::vector<GroupElement> torsion_subgroup(const FiniteAbelianGroup& g, std::int64_t k);

PrimaryRanks primary_ranks(const FiniteAbelianGroup& g, std::int64_t p);

struct PrimaryComponent {
  FiniteAbelianGroup subgroup;
  GroupHom embedding;
};

/// A^(p) presented by the p-parts of the factors, with generator i mapped to
/// (d_i / p^{v_p(d_i)}) e_i.
PrimaryComponent primary_component(const FiniteAbelianGroup& g, std::int64_t p);

/// Inverts m -> |A_{p^m}| (m = 1..M, p^M annihilating the p-part) into ranks.
PrimaryRanks reconstruct_primary_from_torsion(const std::map<int, std::int64_t>& orders,
                                              std::int64_t p);

/// Primes dividing |G| in ascending order.
std::vector<std::int64_t> order_primes(const FiniteAbelianGroup& g);

/// All abelian groups of order n up to isomorphism, in invariant-factor form
/// d_1 | d_2 | ... (trivial group for n = 1).
std::vector<FiniteAbelianGroup> abelian_groups_of_order(std::int64_t n);

/// Groups are isomorphic iff their primary ranks agree at every prime.
bool groups_isomorphic(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);

}  // namespace tyinv
