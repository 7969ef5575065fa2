#include "tyinv/harness/io.hpp"

#include <json.hpp>

#include "tyinv/error.hpp"
#include "tyinv/forms.hpp"

namespace tyinv::harness {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

template <typename Fn>
auto decode(std::string_view what, Fn fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

json unit_json(const AlgebraicUnit& u) {
  switch (u.kind()) {
    case AlgebraicUnit::Kind::Zero:
      return {{"kind", "zero"}};
    case AlgebraicUnit::Kind::EighthRoot:
      return {{"kind", "root8"}, {"exponent", u.exponent()}, {"text", u.to_string()}};
    case AlgebraicUnit::Kind::Unit:
      return {{"kind", "unit"}, {"re", u.to_complex().real()}, {"im", u.to_complex().imag()}};
  }
  return {};
}

AlgebraicUnit unit_from(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "zero") return AlgebraicUnit::zero();
  if (kind == "root8") return AlgebraicUnit::eighth_root(j.at("exponent").get<std::int64_t>());
  if (kind == "unit") return AlgebraicUnit::unit({j.at("re").get<double>(), j.at("im").get<double>()});
  throw InvalidInput("unknown algebraic unit kind '" + kind + "'");
}

std::string pq(const Rational& q) { return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator()); }

// {re: [rational, surd coefficient], im: [...], m: radicand}
json lens_json(const LensInvariant& x) {
  const auto v = x.value();
  return {{"re", {pq(x.re_rat), pq(x.re_coef)}},
          {"im", {pq(x.im_rat), pq(x.im_coef)}},
          {"m", x.m},
          {"text", x.to_string()},
          {"numeric", {v.real(), v.imag()}}};
}

LensInvariant lens_from(const json& j) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (!re.is_array() || re.size() != 2 || !im.is_array() || im.size() != 2)
    throw InvalidInput("lens invariant: re and im must be [rational, coefficient] pairs");
  LensInvariant x;
  x.re_rat = parse_rational(re[0].get<std::string>());
  x.re_coef = parse_rational(re[1].get<std::string>());
  x.im_rat = parse_rational(im[0].get<std::string>());
  x.im_coef = parse_rational(im[1].get<std::string>());
  x.m = j.at("m").get<std::int64_t>();
  return x;
}

json wall_json(const WallInvariants& w) {
  json out = json::object();
  for (const auto& [key, e] : w.entries)
    out[std::to_string(key.first) + "^" + std::to_string(key.second)] = {{"r", e.r}, {"sigma", e.sigma}};
  if (w.two_part_unclassified) out["2-part"] = "unclassified";
  return out;
}

WallInvariants wall_from(const json& j) {
  WallInvariants w;
  for (const auto& [key, value] : j.items()) {
    if (key == "2-part") {
      if (value.get<std::string>() != "unclassified") throw InvalidInput("2-part must be \"unclassified\"");
      w.two_part_unclassified = true;
      continue;
    }
    const auto caret = key.find('^');
    if (caret == std::string::npos) throw InvalidInput("bad wall invariant key '" + key + "'");
    const std::int64_t p = std::stoll(key.substr(0, caret));
    const int s = std::stoi(key.substr(caret + 1));
    w.entries[{p, s}] = WallEntry{value.at("r").get<int>(), value.at("sigma").get<int>()};
  }
  return w;
}

json group_json(const FiniteAbelianGroup& g) { return g.factors(); }

json hom_json(const GroupHom& f) {
  json images = json::array();
  for (const auto& a : f.images) images.push_back(a.coords);
  return {{"source", group_json(f.source)}, {"target", group_json(f.target)}, {"images", images}};
}

GroupHom hom_from(const json& j) {
  GroupHom f{make_group(j.at("source").get<std::vector<std::int64_t>>()),
             make_group(j.at("target").get<std::vector<std::int64_t>>()),
             {}};
  for (const auto& img : j.at("images")) f.images.push_back(GroupElement{img.get<std::vector<std::int64_t>>()});
  return f;
}

}  // namespace

std::string to_json(const AlgebraicUnit& u) { return unit_json(u).dump(); }

AlgebraicUnit algebraic_unit_from_json(std::string_view text) {
  return decode("algebraic unit", [&] { return unit_from(parse(text)); });
}

std::string to_json(const LensInvariant& x) { return lens_json(x).dump(); }

LensInvariant lens_invariant_from_json(std::string_view text) {
  return decode("lens invariant", [&] { return lens_from(parse(text)); });
}

std::string to_json(const WallInvariants& w) { return wall_json(w).dump(); }

WallInvariants wall_invariants_from_json(std::string_view text) {
  return decode("wall invariants", [&] { return wall_from(parse(text)); });
}

std::string lens_table_to_json(const std::string& form_literal, int nu, const std::vector<LensRow>& rows) {
  json out{{"form", form_literal}, {"nu", nu}, {"rows", json::array()}};
  for (const auto& r : rows) out["rows"].push_back({{"k", r.k}, {"value", lens_json(r.value)}});
  return out.dump(2);
}

std::string zeta_table_to_json(const std::string& form_literal, const std::vector<ZetaRow>& rows) {
  json out{{"form", form_literal}, {"rows", json::array()}};
  for (const auto& r : rows) {
    json values = json::object();
    for (const auto& [method, u] : r.values) values[method] = unit_json(u);
    out["rows"].push_back({{"k", r.k}, {"values", values}, {"agree", r.agree}});
  }
  return out.dump(2);
}

std::string report_to_json(const DistinguishReport& report) {
  const auto& c = report.config;
  json out;
  out["schema"] = "tyinv.distinguish/1";
  out["config"] = {{"max_order", c.max_order},
                   {"odd_only", c.odd_only},
                   {"k_max", c.effective_k_max()},
                   {"seed", c.seed},
                   {"parallelism", c.parallelism},
                   {"members_checked", c.members_checked}};
  out["categories"] = json::array();
  for (const auto& cat : report.categories) {
    out["categories"].push_back({{"descriptor", cat.descriptor()},
                                 {"form", cat.chi.form().to_literal()},
                                 {"nu", cat.nu},
                                 {"invariants", wall_json(cat.invariants)},
                                 {"class_index", cat.class_index},
                                 {"members", cat.members}});
  }
  out["rows"] = json::array();
  for (const auto& row : report.rows) {
    json r{{"first", row.first}, {"second", row.second}, {"verdict", to_string(row.verdict)}};
    r["k"] = row.k ? json(*row.k) : json(nullptr);
    r["witness"] = row.witness ? hom_json(*row.witness) : json(nullptr);
    out["rows"].push_back(std::move(r));
  }
  out["summary"] = {{"forms_enumerated", report.forms_enumerated},
                    {"categories", report.categories.size()},
                    {"separated", report.separated},
                    {"unseparated", report.unseparated},
                    {"equivalent", report.equivalent},
                    {"equivalence_failures", report.equivalence_failures},
                    {"max_separating_k", report.max_separating_k},
                    {"even_orders_included", report.even_orders_included}};
  if (report.even_orders_included) out["summary"]["caveat"] = std::string(kEvenCaveat);
  return out.dump(2);
}

DistinguishReport report_from_json(std::string_view text) {
  return decode("distinguish report", [&] {
    const json j = parse(text);
    if (j.at("schema").get<std::string>() != "tyinv.distinguish/1") throw InvalidInput("unknown report schema");
    DistinguishReport r;
    const auto& c = j.at("config");
    r.config.max_order = c.at("max_order").get<std::int64_t>();
    r.config.odd_only = c.at("odd_only").get<bool>();
    r.config.k_max = c.at("k_max").get<std::int64_t>();
    r.config.seed = c.at("seed").get<std::uint64_t>();
    r.config.parallelism = c.at("parallelism").get<int>();
    r.config.members_checked = c.at("members_checked").get<std::int64_t>();
    for (const auto& cat : j.at("categories")) {
      r.categories.push_back(CategoryClass{Bicharacter(parse_form_literal(cat.at("form").get<std::string>())),
                                           cat.at("nu").get<int>(), wall_from(cat.at("invariants")),
                                           cat.at("class_index").get<std::int64_t>(),
                                           cat.at("members").get<std::int64_t>()});
    }
    for (const auto& row : j.at("rows")) {
      DistinguishRow d;
      d.first = row.at("first").get<std::string>();
      d.second = row.at("second").get<std::string>();
      d.verdict = parse_verdict(row.at("verdict").get<std::string>());
      if (!row.at("k").is_null()) d.k = row.at("k").get<std::int64_t>();
      if (!row.at("witness").is_null()) d.witness = hom_from(row.at("witness"));
      r.rows.push_back(std::move(d));
    }
    const auto& s = j.at("summary");
    r.forms_enumerated = s.at("forms_enumerated").get<std::int64_t>();
    r.separated = s.at("separated").get<std::int64_t>();
    r.unseparated = s.at("unseparated").get<std::int64_t>();
    r.equivalent = s.at("equivalent").get<std::int64_t>();
    r.equivalence_failures = s.at("equivalence_failures").get<std::int64_t>();
    r.max_separating_k = s.at("max_separating_k").get<std::int64_t>();
    r.even_orders_included = s.at("even_orders_included").get<bool>();
    return r;
  });
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_record(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\r\n";
}

std::string report_to_csv(const DistinguishReport& report) {
  std::string out = csv_record({"first", "second", "verdict", "k"});
  for (const auto& row : report.rows)
    out += csv_record({row.first, row.second, to_string(row.verdict), row.k ? std::to_string(*row.k) : ""});
  return out;
}

}  // namespace tyinv::harness
