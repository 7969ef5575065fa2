#pragma once

// Symmetric Q/Z-valued pairings on finite abelian groups and their quadratic
// refinements. All circle-valued data is kept additively in Q/Z.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tyinv/abelian.hpp"
#include "tyinv/phase.hpp"

namespace tyinv {

/// Symmetric bilinear form chi(a, b) = sum_ij a_i b_j gram(i, j) in Q/Z,
/// possibly degenerate. Construction validates symmetry and that the
/// denominator of gram(i, j) divides gcd(d_i, d_j).
class SymmetricForm {
 public:
  SymmetricForm() = default;
  /// `gram` is row-major rank x rank.
  SymmetricForm(FiniteAbelianGroup group, std::vector<PhaseQZ> gram);

  const FiniteAbelianGroup& group() const { return group_; }
  std::size_t rank() const { return group_.rank(); }
  const PhaseQZ& gram(std::size_t i, std::size_t j) const { return gram_[i * rank() + j]; }
  const std::vector<PhaseQZ>& gram_entries() const { return gram_; }

  /// Every value chi(a, b) lies in (1/level) Z / Z; level = exponent(A).
  std::int64_t level() const { return group_.exponent(); }
  /// gram(i, j) * level as integers modulo level.
  const std::vector<std::int64_t>& scaled_gram() const { return scaled_; }

  PhaseQZ operator()(const GroupElement& a, const GroupElement& b) const;

  /// Radical is trivial. Costs |A| * rank^2.
  bool is_nondegenerate() const;

  /// "group=3,3; gram=1/3,0/1;0/1,2/3"
  std::string to_literal() const;

  bool operator==(const SymmetricForm& o) const { return group_ == o.group_ && gram_ == o.gram_; }

 private:
  FiniteAbelianGroup group_;
  std::vector<PhaseQZ> gram_{PhaseQZ()};
  std::vector<std::int64_t> scaled_{0};
};

/// A nondegenerate symmetric form.
class Bicharacter {
 public:
  /// Throws DegenerateForm when the radical is nontrivial.
  explicit Bicharacter(SymmetricForm form);

  const SymmetricForm& form() const { return form_; }
  const FiniteAbelianGroup& group() const { return form_.group(); }
  PhaseQZ operator()(const GroupElement& a, const GroupElement& b) const { return form_(a, b); }

  bool operator==(const Bicharacter& o) const { return form_ == o.form_; }

 private:
  SymmetricForm form_;
};

/// Validates a square gram matrix given as rows.
SymmetricForm validate_form(const FiniteAbelianGroup& group,
                            const std::vector<std::vector<PhaseQZ>>& gram);

/// Parses "group=3,3; gram=1/3,0;0,2/3".
SymmetricForm parse_form_literal(std::string_view text);
/// Parses a gram literal "1/3,0;0,2/3" against a given group.
SymmetricForm parse_gram_literal(const FiniteAbelianGroup& group, std::string_view gram);

/// chi(a, e_j) * level for every element a (row-major |A| x rank).
std::vector<std::int64_t> adjoint_table(const SymmetricForm& form, std::int64_t level);

/// The annihilator {a : chi(a, b) = 0 for all b}, tested against generators.
std::vector<GroupElement> radical(const SymmetricForm& form);
std::int64_t radical_order(const SymmetricForm& form);
/// Order of the radical of (a, b) -> k chi(a, b), without building that form.
std::int64_t radical_order(const SymmetricForm& form, std::int64_t k);

/// (a, b) -> k chi(a, b).
SymmetricForm power_form(const SymmetricForm& form, std::int64_t k);

/// Block-diagonal form on the concatenated factor list.
SymmetricForm orthogonal_sum(const SymmetricForm& first, const SymmetricForm& second);

/// Pullback of `form` along an injective homomorphism into its group.
SymmetricForm restrict(const SymmetricForm& form, const GroupHom& embedding);

/// Quadratic polynomial map
///   mu(a) = sum_i q_i a_i^2 + sum_{i<j} w_ij a_i a_j + sum_i l_i a_i   (in Q/Z)
/// refining `form`. Every quadratic map on a factor basis has this shape.
class QuadraticMap {
 public:
  /// Validates that the coefficients define a function on A whose coboundary is
  /// `form`. `cross` is row-major rank x rank, only i < j entries are read.
  QuadraticMap(SymmetricForm form, std::vector<PhaseQZ> diag, std::vector<PhaseQZ> cross,
               std::vector<PhaseQZ> linear, std::optional<GroupElement> shift = std::nullopt);

  const SymmetricForm& form() const { return form_; }
  const FiniteAbelianGroup& group() const { return form_.group(); }
  const std::vector<PhaseQZ>& diag() const { return diag_; }
  const std::vector<PhaseQZ>& linear() const { return linear_; }
  PhaseQZ cross(std::size_t i, std::size_t j) const { return cross_[i * form_.rank() + j]; }
  /// Set when the map was produced as a shift mu_0(a) + chi(a, c).
  const std::optional<GroupElement>& shift() const { return shift_; }

  /// Common denominator of all values; divides 2 * exponent(A) * |k| for maps
  /// obtained by scaling.
  std::int64_t level() const { return level_; }

  PhaseQZ operator()(const GroupElement& a) const;

  /// Values mu(a) * level modulo level, in element enumeration order.
  /// `level` must be a multiple of level().
  std::vector<std::int64_t> scaled_values(std::int64_t level) const;
  /// Materialized value table; limited to |A| <= 10^4.
  std::vector<PhaseQZ> values() const;

  /// a -> k mu(a): a quadratic map for power_form(form, k).
  QuadraticMap scaled(std::int64_t k) const;
  /// a -> mu(a) + chi(a, c).
  QuadraticMap shifted(const GroupElement& c) const;
  /// a -> mu(a) + psi_t(a) with psi_t(a) = sum_i a_i t_i / d_i.
  QuadraticMap plus_character(const GroupElement& t) const;

 private:
  SymmetricForm form_;
  std::vector<PhaseQZ> diag_;
  std::vector<PhaseQZ> cross_;
  std::vector<PhaseQZ> linear_;
  std::optional<GroupElement> shift_;
  std::int64_t level_ = 1;
  std::vector<std::int64_t> sdiag_, scross_, slinear_;
};

/// Homogeneous mu_0 with coboundary chi: q_i = h_i chi(e_i, e_i) with
/// h_i = (d_i + 1) / 2 for odd d_i, and q_i = c_i / (2 d_i) for even d_i where
/// chi(e_i, e_i) = c_i / d_i; w_ij = chi(e_i, e_j); no linear part.
QuadraticMap homogeneous_base_map(const SymmetricForm& form);

/// Q_chi for nondegenerate chi: mu_c = mu_0 + chi(., c), one per c in
/// enumeration order.
std::vector<QuadraticMap> enumerate_quadratic_maps(const Bicharacter& chi);
/// Same enumeration for a raw form; rejects degenerate input.
std::vector<QuadraticMap> enumerate_quadratic_maps(const SymmetricForm& form);

/// All |A| quadratic maps of an arbitrary (possibly degenerate) form:
/// mu_0 + psi_t over all characters psi_t of A.
std::vector<QuadraticMap> all_quadratic_maps(const SymmetricForm& form);

/// Exhaustive coboundary test over all |A|^2 pairs; `values` indexed by
/// element enumeration order.
bool is_quadratic(const std::vector<PhaseQZ>& values, const SymmetricForm& form);

/// mu(n a) = n^2 mu(a) for all a and 0 <= n < exponent(A).
bool is_homogeneous(const QuadraticMap& mu);

/// Number of symmetric matrices with admissible entries: prod_{i<=j} gcd(d_i, d_j).
std::int64_t count_gram_matrices(const FiniteAbelianGroup& group);

/// Visits every admissible symmetric form (degenerate ones included) in
/// lexicographic order of the upper-triangular numerators.
void for_each_symmetric_form(const FiniteAbelianGroup& group,
                             const std::function<void(const SymmetricForm&)>& visit);

/// Gram matrix number `index` in the for_each_symmetric_form order.
SymmetricForm symmetric_form_at(const FiniteAbelianGroup& group, std::int64_t index);

/// Visits every nondegenerate form in the order of for_each_symmetric_form,
/// screening degenerate grams before any form is built.
void for_each_bicharacter(const FiniteAbelianGroup& group,
                          const std::function<void(const Bicharacter&)>& visit);

inline constexpr std::int64_t kDefaultGramBound = std::int64_t{1} << 22;

/// All nondegenerate forms on `group`. Throws BoundExceeded when the number of
/// candidate gram matrices is above `bound`.
std::vector<Bicharacter> enumerate_bicharacters(const FiniteAbelianGroup& group,
                                                std::int64_t bound = kDefaultGramBound);

}  // namespace tyinv
