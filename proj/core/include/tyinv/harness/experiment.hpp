#pragma once
// The distinguish experiment: every TY(A, chi, nu) with |A| <= max_order, up to
// equivalence, paired off and separated by exact lens-space invariants.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tyinv/abelian.hpp"
#include "tyinv/classify.hpp"
#include "tyinv/forms.hpp"
#include "tyinv/lens.hpp"

namespace tyinv::harness {

enum class OutputFormat { Json, Csv };

struct ExperimentConfig {
  std::int64_t max_order = 9;
  bool odd_only = true;
  /// 0 selects the default 8 * max_order.
  std::int64_t k_max = 0;
  /// Empty writes to stdout.
  std::string output;
  OutputFormat format = OutputFormat::Json;
  std::uint64_t seed = 0;
  int parallelism = 1;
  /// Non-representative class members checked against their representative.
  std::int64_t members_checked = 2;

  std::int64_t effective_k_max() const { return k_max > 0 ? k_max : 8 * max_order; }
  /// Throws InvalidInput when k_max < 2 or max_order < 1.
  void validate() const;
};

/// One equivalence class of categories, represented by its first form in
/// enumeration order.
struct CategoryClass {
  Bicharacter chi;
  int nu = 1;
  /// Odd part; for groups with a 2-part the flag is set and `class_index`
  /// distinguishes brute-force classes on the same group.
  WallInvariants invariants;
  std::int64_t class_index = 0;
  std::int64_t members = 1;
  std::string descriptor() const;
};

enum class Verdict { Equivalent, Separated, Unseparated };
std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& text);

struct DistinguishRow {
  std::string first;
  std::string second;
  Verdict verdict = Verdict::Separated;
  /// First k with differing invariants (Separated only).
  std::optional<std::int64_t> k;
  /// Equivalent rows: group isomorphism carrying the second form onto the
  /// first, when it was searched for.
  std::optional<GroupHom> witness;
  bool operator==(const DistinguishRow& o) const;
};

struct DistinguishReport {
  ExperimentConfig config;
  std::vector<CategoryClass> categories;
  /// Category pairs (sorted by index) followed by the Equivalent rows.
  std::vector<DistinguishRow> rows;
  std::int64_t forms_enumerated = 0;
  std::int64_t separated = 0;
  std::int64_t unseparated = 0;
  std::int64_t equivalent = 0;
  /// Equivalent rows whose lens sequences disagreed at some k, or whose
  /// witness failed the isometry check.
  std::int64_t equivalence_failures = 0;
  std::int64_t max_separating_k = 0;
  bool even_orders_included = false;
  double seconds = 0.0;
  bool ok() const { return unseparated == 0 && equivalence_failures == 0; }
};

/// |L_0| .. |L_{k_max}| for TY(chi, nu), exact.
std::vector<LensInvariant> lens_sequence(const Bicharacter& chi, int nu, std::int64_t k_max);

/// Smallest k with a[k] != b[k], or nullopt when the sequences agree.
std::optional<std::int64_t> first_difference(const std::vector<LensInvariant>& a,
                                             const std::vector<LensInvariant>& b);

/// Enumerates the categories, deduplicates, scans every pair of classes and
/// checks up to config.members_checked extra members per class for
/// agreement with their representative.
DistinguishReport run_distinguish(const ExperimentConfig& config);

/// Same verdicts and separating k for every row.
bool same_verdicts(const DistinguishReport& a, const DistinguishReport& b);

inline constexpr std::string_view kEvenCaveat =
    "note: even orders included; absence of UNSEPARATED rows for even |A| is conjectural, not a theorem";

}  // namespace tyinv::harness
