// tyinv: lens-space invariants, zeta_k, classification and distinguishing
// experiments for Tambara-Yamagami categories.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tyinv/classify.hpp"
#include "tyinv/error.hpp"
#include "tyinv/forms.hpp"
#include "tyinv/gauss.hpp"
#include "tyinv/harness/acceptance.hpp"
#include "tyinv/harness/experiment.hpp"
#include "tyinv/harness/io.hpp"
#include "tyinv/number_theory.hpp"
#include "tyinv/tycat.hpp"

namespace {

using namespace tyinv;

enum Exit : int { kOk = 0, kMismatch = 1, kBadInput = 2, kDegenerate = 3, kUnsupported = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FormArgs {
  std::string group = "1";
  std::string gram = "0";
};

void add_form_options(CLI::App& app, FormArgs& f) {
  app.add_option("--group", f.group, "invariant factors, e.g. 3 or 3,9")->required();
  app.add_option("--gram", f.gram, "gram matrix rows separated by ';', e.g. 1/3,0;0,2/3")->required();
}

std::optional<std::int64_t> order_cap() {
  const char* env = std::getenv("TY_MAX_ORDER");
  if (env == nullptr || *env == '\0') return std::nullopt;
  try {
    const std::int64_t v = std::stoll(env);
    if (v < 1) throw std::invalid_argument("nonpositive");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("TY_MAX_ORDER must be a positive integer, got '") + env + "'");
  }
}

SymmetricForm read_form(const FormArgs& f) {
  const auto form = parse_gram_literal(parse_group_literal(f.group), f.gram);
  if (const auto cap = order_cap(); cap && form.group().order() > *cap) {
    throw UsageError("|A| = " + std::to_string(form.group().order()) + " exceeds TY_MAX_ORDER = " +
                     std::to_string(*cap));
  }
  return form;
}

int parse_nu(const std::string& text) {
  if (text == "1" || text == "+1" || text == "+") return 1;
  if (text == "-1" || text == "-") return -1;
  throw UsageError("--nu must be +1 or -1, got '" + text + "'");
}

std::int64_t parse_count(const std::string& text) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw UsageError("bad integer '" + text + "'");
  }
  if (used != text.size() || v < 0) throw UsageError("k must be a nonnegative integer, got '" + text + "'");
  return v;
}

// "4", "0..4" or "1,3,5".
std::vector<std::int64_t> parse_k_range(const std::string& text) {
  std::vector<std::int64_t> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const auto lo = parse_count(text.substr(0, dots));
    const auto hi = parse_count(text.substr(dots + 2));
    if (hi < lo) throw UsageError("empty k range '" + text + "'");
    for (auto k = lo; k <= hi; ++k) out.push_back(k);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    out.push_back(parse_count(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string numeric(std::complex<double> z) {
  char buf[64];
  if (std::abs(z.imag()) < 1e-12) {
    std::snprintf(buf, sizeof buf, "%.12g", std::abs(z.real()) < 1e-15 ? 0.0 : z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", std::abs(z.real()) < 1e-15 ? 0.0 : z.real(), z.imag());
  }
  return buf;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

int cmd_lens(const FormArgs& f, const std::string& nu_text, const std::string& k_text, const std::string& format) {
  const Bicharacter chi(read_form(f));
  const int nu = parse_nu(nu_text);
  const auto ks = parse_k_range(k_text);
  const TYData t(chi, nu);
  std::vector<harness::LensRow> rows;
  for (auto k : ks) rows.push_back({k, lens_invariant(t, k)});
  if (format == "json") {
    write_output("", harness::lens_table_to_json(chi.form().to_literal(), nu, rows));
    return kOk;
  }
  std::cout << "k\t|L_k|\tnumeric\n";
  for (const auto& r : rows) std::cout << r.k << '\t' << r.value.to_string() << '\t' << numeric(r.value.value()) << '\n';
  return kOk;
}

int cmd_zeta(const FormArgs& f, const std::string& k_text, const std::string& method, const std::string& format) {
  const Bicharacter chi(read_form(f));
  const auto ks = parse_k_range(k_text);
  const std::int64_t n = chi.group().order();
  const std::int64_t p = prime_power_base(n);
  const bool closed_ok = n == 1 || (p != 0 && p != 2);
  if (method == "closed" && !closed_ok) {
    std::cerr << "error: the closed form needs |A| to be a power of an odd prime (|A| = " << n << ")\n";
    return kUnsupported;
  }
  std::vector<std::string> methods;
  if (method == "all") {
    methods = {"brute", "prin"};
    if (closed_ok) methods.push_back("closed");
  } else {
    methods = {method};
  }
  std::optional<std::vector<PhaseQZ>> phases;
  std::vector<harness::ZetaRow> rows;
  bool all_agree = true;
  for (auto k : ks) {
    harness::ZetaRow row;
    row.k = k;
    for (const auto& m : methods) {
      if (m == "brute") {
        if (!phases) phases = shift_gauss_phases(chi);
        row.values.emplace(m, zeta_from_phases(chi, *phases, k));
      } else if (m == "prin") {
        row.values.emplace(m, zeta_via_prin(chi, k));
      } else {
        row.values.emplace(m, zeta_closed_form_p(chi, k));
      }
    }
    for (const auto& [m, v] : row.values) row.agree = row.agree && v == row.values.begin()->second;
    all_agree = all_agree && row.agree;
    rows.push_back(std::move(row));
  }
  if (format == "json") {
    write_output("", harness::zeta_table_to_json(chi.form().to_literal(), rows));
  } else {
    std::cout << 'k';
    for (const auto& m : methods) std::cout << '\t' << m;
    std::cout << '\n';
    for (const auto& r : rows) {
      std::cout << r.k;
      for (const auto& m : methods) std::cout << '\t' << r.values.at(m).to_string();
      if (!r.agree) std::cout << "\tMISMATCH";
      std::cout << '\n';
    }
  }
  if (!closed_ok && method == "all") std::cerr << "note: closed form skipped (|A| is not an odd prime power)\n";
  return all_agree ? kOk : kMismatch;
}

int cmd_classify(const FormArgs& f) {
  const Bicharacter chi(read_form(f));
  std::cout << harness::to_json(wall_invariants(chi)) << '\n';
  return kOk;
}

int cmd_distinguish(harness::ExperimentConfig cfg, bool allow_even, const std::string& format) {
  cfg.odd_only = !allow_even;
  if (format == "csv") {
    cfg.format = harness::OutputFormat::Csv;
  } else if (format != "json") {
    throw UsageError("--format must be json or csv");
  }
  if (const auto cap = order_cap(); cap && cfg.max_order > *cap) {
    std::cerr << "note: --max-order " << cfg.max_order << " capped to TY_MAX_ORDER = " << *cap << '\n';
    cfg.max_order = *cap;
  }
  if (allow_even) std::cerr << harness::kEvenCaveat << '\n';
  const auto report = harness::run_distinguish(cfg);
  write_output(cfg.output, cfg.format == harness::OutputFormat::Csv ? harness::report_to_csv(report)
                                                                    : harness::report_to_json(report));
  std::cerr << report.categories.size() << " categories, " << report.separated << " pairs separated, "
            << report.unseparated << " UNSEPARATED, " << report.equivalent << " equivalent rows ("
            << report.equivalence_failures << " failures), max separating k " << report.max_separating_k
            << ", " << report.seconds << " s\n";
  return report.ok() ? kOk : kMismatch;
}

int cmd_selftest(const std::string& level, harness::SuiteOptions options, const std::string& json_path) {
  if (level == "quick") {
    options.level = harness::SuiteLevel::Quick;
  } else if (level == "full") {
    options.level = harness::SuiteLevel::Full;
  } else {
    throw UsageError("--level must be quick or full");
  }
  const auto results = harness::run_suites(harness::suites_for(options.level), options, [](const auto& r) {
    std::fprintf(stderr, "[%s] suite %d %-26s %8.2f s  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                 r.seconds, r.summary.c_str());
    for (const auto& f : r.failure_samples) std::fprintf(stderr, "       %s\n", f.c_str());
  });
  if (!json_path.empty()) write_output(json_path, harness::results_to_json(results));
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of Tambara-Yamagami categories"};
  app.require_subcommand(1);

  FormArgs lens_form;
  std::string lens_nu = "+1", lens_k = "0..8", lens_format = "text";
  auto* lens = app.add_subcommand("lens", "table of |L_k| for TY(A, chi, nu)");
  add_form_options(*lens, lens_form);
  lens->add_option("--nu", lens_nu, "+1 or -1");
  lens->add_option("--k", lens_k, "k, a..b or a list a,b,c");
  lens->add_option("--format", lens_format)->check(CLI::IsMember({"text", "json"}));

  FormArgs zeta_form;
  std::string zeta_k = "0..8", zeta_method = "all", zeta_format = "text";
  auto* zeta = app.add_subcommand("zeta", "zeta_k(chi) by brute force, the prin identity or the closed form");
  add_form_options(*zeta, zeta_form);
  zeta->add_option("--k", zeta_k, "k, a..b or a list a,b,c");
  zeta->add_option("--method", zeta_method)->check(CLI::IsMember({"brute", "prin", "closed", "all"}));
  zeta->add_option("--format", zeta_format)->check(CLI::IsMember({"text", "json"}));

  FormArgs classify_form;
  auto* classify = app.add_subcommand("classify", "rank and sign invariants of the odd part, as JSON");
  add_form_options(*classify, classify_form);

  harness::ExperimentConfig cfg;
  bool allow_even = false;
  std::string dist_format = "json";
  auto* distinguish = app.add_subcommand("distinguish", "separate all TY categories with |A| <= max-order");
  distinguish->add_option("--max-order", cfg.max_order)->required();
  distinguish->add_option("--k-max", cfg.k_max, "default 8 * max-order");
  distinguish->add_flag("--allow-even", allow_even, "include even orders (conjectural completeness)");
  distinguish->add_option("--output,-o", cfg.output, "report path (default stdout)");
  distinguish->add_option("--format", dist_format)->check(CLI::IsMember({"json", "csv"}));
  distinguish->add_option("--seed", cfg.seed);
  distinguish->add_option("--jobs,-j", cfg.parallelism, "worker threads");
  distinguish->add_option("--members-checked", cfg.members_checked,
                          "extra class members compared with their representative");

  std::string level = "quick", selftest_json;
  harness::SuiteOptions suite_options;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suites");
  selftest->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
  selftest->add_option("--seed", suite_options.seed);
  selftest->add_option("--jobs,-j", suite_options.parallelism);
  selftest->add_option("--json", selftest_json, "write a machine-readable result file");
  selftest->add_flag("--inject-fault", suite_options.corrupt_associator,
                     "check the pentagon suite against a corrupted associator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*lens) return cmd_lens(lens_form, lens_nu, lens_k, lens_format);
    if (*zeta) return cmd_zeta(zeta_form, zeta_k, zeta_method, zeta_format);
    if (*classify) return cmd_classify(classify_form);
    if (*distinguish) return cmd_distinguish(cfg, allow_even, dist_format);
    if (*selftest) return cmd_selftest(level, suite_options, selftest_json);
  } catch (const DegenerateForm& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDegenerate;
  } catch (const UnsupportedGroup& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUnsupported;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kMismatch;
  }
  return kBadInput;
}
