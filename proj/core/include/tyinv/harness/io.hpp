#pragma once
// JSON and CSV encodings of invariants and reports. The schemas are listed in
// docs/formats.md; every *_from_json inverts the matching *_to_json.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tyinv/algebraic_unit.hpp"
#include "tyinv/classify.hpp"
#include "tyinv/harness/experiment.hpp"
#include "tyinv/lens.hpp"

namespace tyinv::harness {

std::string to_json(const AlgebraicUnit& u);
AlgebraicUnit algebraic_unit_from_json(std::string_view text);

std::string to_json(const LensInvariant& x);
LensInvariant lens_invariant_from_json(std::string_view text);

/// {"3^1":{"r":1,"sigma":-1}}, plus "2-part":"unclassified" when flagged.
std::string to_json(const WallInvariants& w);
WallInvariants wall_invariants_from_json(std::string_view text);

struct LensRow {
  std::int64_t k = 0;
  LensInvariant value;
};
std::string lens_table_to_json(const std::string& form_literal, int nu, const std::vector<LensRow>& rows);

struct ZetaRow {
  std::int64_t k = 0;
  /// method name -> value
  std::map<std::string, AlgebraicUnit> values;
  bool agree = true;
};
std::string zeta_table_to_json(const std::string& form_literal, const std::vector<ZetaRow>& rows);

/// Deterministic: no timing fields.
std::string report_to_json(const DistinguishReport& report);
DistinguishReport report_from_json(std::string_view text);

/// RFC 4180: fields quoted when they hold a comma, quote, CR or LF; quotes
/// doubled; records end in CRLF.
std::string csv_field(std::string_view field);
std::string csv_record(const std::vector<std::string>& fields);
std::string report_to_csv(const DistinguishReport& report);

}  // namespace tyinv::harness
