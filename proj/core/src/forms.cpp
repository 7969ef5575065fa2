#include "tyinv/forms.hpp"

#include <numeric>

#include "tyinv/error.hpp"
#include "tyinv/number_theory.hpp"

namespace tyinv {

namespace {

/// Calls visit(index, coords) for every a in the radical, walking A in index
/// order while keeping chi(a, e_j) * L for all j up to date incrementally.
/// Stops early when visit returns false.
template <typename Visit>
void walk_radical(const std::vector<std::int64_t>& factors, const std::vector<std::int64_t>& sg,
                  std::int64_t L, Visit&& visit) {
  const std::size_t r = factors.size();
  std::vector<std::int64_t> coords(r, 0), pair(r, 0);
  std::int64_t order = 1;
  for (const auto d : factors) order *= d;
  for (std::int64_t idx = 0; idx < order; ++idx) {
    bool in = true;
    for (std::size_t j = 0; j < r && in; ++j) in = pair[j] == 0;
    if (in && !visit(idx, coords)) return;
    for (std::size_t i = r; i-- > 0;) {
      for (std::size_t j = 0; j < r; ++j) {
        std::int64_t v = pair[j] + sg[i * r + j];
        if (v >= L) v -= L;
        pair[j] = v;
      }
      if (++coords[i] < factors[i]) break;
      coords[i] = 0;
    }
  }
}


std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string_view::npos ? s.size() - pos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out += c;
  }
  return out;
}

// Advances `coords` through the mixed-radix odometer; false once it wraps.
bool advance(std::vector<std::int64_t>& coords, const std::vector<std::int64_t>& radix) {
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (++coords[i] < radix[i]) return true;
    coords[i] = 0;
  }
  return false;
}

/// Visits every element in index order (last coordinate fastest) with a
/// state vector that step(i, state) moves from a to a + e_i. Each depth keeps
/// its own copy of the state, so a wrap restores it without recomputation.
template <typename Step, typename Visit>
void odometer(const std::vector<std::int64_t>& factors, const std::vector<std::int64_t>& start,
              Step&& step, Visit&& visit) {
  const std::size_t r = factors.size();
  // depth[i]: coordinates below i current, the rest zero.
  std::vector<std::vector<std::int64_t>> depth(r + 1, start);
  std::vector<std::int64_t> count(r, 0);
  std::size_t idx = 0;
  while (true) {
    visit(idx++, depth[r]);
    std::size_t j = r;
    while (j > 0 && count[j - 1] + 1 == factors[j - 1]) --j;
    if (j == 0) return;
    --j;
    ++count[j];
    step(j, depth[j + 1]);
    for (std::size_t l = j + 1; l < r; ++l) {
      count[l] = 0;
      depth[l + 1] = depth[l];
    }
  }
}

inline std::int64_t add_mod(std::int64_t x, std::int64_t y, std::int64_t L) {
  const std::int64_t v = x + y;
  return v >= L ? v - L : v;
}

}  // namespace

SymmetricForm::SymmetricForm(FiniteAbelianGroup group, std::vector<PhaseQZ> gram)
    : group_(std::move(group)), gram_(std::move(gram)) {
  const std::size_t r = group_.rank();
  if (gram_.size() != r * r) {
    throw InvalidInput("gram matrix must be " + std::to_string(r) + "x" + std::to_string(r));
  }
  scaled_.assign(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const PhaseQZ& g = gram_[i * r + j];
      if (g != gram_[j * r + i]) {
        throw InvalidInput("gram matrix is not symmetric at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
      }
      const std::int64_t bound = std::gcd(group_.factor(i), group_.factor(j));
      if (bound % g.den() != 0) {
        throw InvalidInput("gram entry (" + std::to_string(i) + "," + std::to_string(j) +
                           ") = " + g.to_string() + " is ill-defined: denominator does not divide " +
                           std::to_string(bound));
      }
      scaled_[i * r + j] = g.scaled_to(level());
    }
  }
}

PhaseQZ SymmetricForm::operator()(const GroupElement& a, const GroupElement& b) const {
  const std::size_t r = rank();
  const std::int64_t L = level();
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      acc = (acc + mul_mod(a.coords[i] * b.coords[j], scaled_[i * r + j], L)) % L;
    }
  }
  return PhaseQZ(acc, L);
}

bool SymmetricForm::is_nondegenerate() const {
  bool trivial = true;
  walk_radical(group_.factors(), scaled_, level(), [&](std::int64_t idx, const std::vector<std::int64_t>&) {
    if (idx != 0) trivial = false;
    return trivial;
  });
  return trivial;
}

std::string SymmetricForm::to_literal() const {
  std::string s = "group=" + group_.to_string() + "; gram=";
  const std::size_t r = rank();
  for (std::size_t i = 0; i < r; ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < r; ++j) {
      if (j) s += ',';
      s += gram(i, j).to_string();
    }
  }
  return s;
}

Bicharacter::Bicharacter(SymmetricForm form) : form_(std::move(form)) {
  if (!form_.is_nondegenerate()) {
    throw DegenerateForm("form " + form_.to_literal() + " is degenerate (radical of order " +
                         std::to_string(radical_order(form_)) + ")");
  }
}

SymmetricForm validate_form(const FiniteAbelianGroup& group,
                            const std::vector<std::vector<PhaseQZ>>& gram) {
  std::vector<PhaseQZ> flat;
  for (const auto& row : gram) {
    if (row.size() != gram.size()) throw InvalidInput("gram matrix must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return SymmetricForm(group, std::move(flat));
}

SymmetricForm parse_gram_literal(const FiniteAbelianGroup& group, std::string_view gram) {
  const std::string cleaned = strip_spaces(gram);
  std::vector<std::vector<PhaseQZ>> rows;
  for (auto row : split(cleaned, ';')) {
    std::vector<PhaseQZ> entries;
    for (auto tok : split(row, ',')) entries.push_back(PhaseQZ::parse(tok));
    rows.push_back(std::move(entries));
  }
  return validate_form(group, rows);
}

SymmetricForm parse_form_literal(std::string_view text) {
  const std::string cleaned = strip_spaces(text);
  const std::string_view view(cleaned);
  constexpr std::string_view kGroup = "group=";
  constexpr std::string_view kGram = ";gram=";
  const auto gram_pos = view.find(kGram);
  if (!view.starts_with(kGroup) || gram_pos == std::string_view::npos) {
    throw InvalidInput("form literal must look like 'group=3,3; gram=1/3,0;0,2/3'");
  }
  const auto group = parse_group_literal(view.substr(kGroup.size(), gram_pos - kGroup.size()));
  return parse_gram_literal(group, view.substr(gram_pos + kGram.size()));
}

std::vector<std::int64_t> adjoint_table(const SymmetricForm& form, std::int64_t level) {
  const auto& g = form.group();
  const std::size_t r = g.rank();
  if (level % form.level() != 0) throw InvalidInput("adjoint_table: level too coarse");
  const std::int64_t up = level / form.level();
  const std::int64_t L = form.level();
  const auto& sg = form.scaled_gram();
  std::vector<std::int64_t> table(static_cast<std::size_t>(g.order()) * r, 0);
  odometer(
      g.factors(), std::vector<std::int64_t>(r, 0),
      [&](std::size_t i, std::vector<std::int64_t>& t) {
        for (std::size_t j = 0; j < r; ++j) t[j] = add_mod(t[j], sg[i * r + j], L);
      },
      [&](std::size_t idx, const std::vector<std::int64_t>& t) {
        for (std::size_t j = 0; j < r; ++j) table[idx * r + j] = t[j] * up;
      });
  return table;
}


std::vector<GroupElement> radical(const SymmetricForm& form) {
  std::vector<GroupElement> out;
  walk_radical(form.group().factors(), form.scaled_gram(), form.level(),
               [&](std::int64_t, const std::vector<std::int64_t>& c) {
                 out.push_back(GroupElement{c});
                 return true;
               });
  return out;
}

std::int64_t radical_order(const SymmetricForm& form) {
  std::int64_t count = 0;
  walk_radical(form.group().factors(), form.scaled_gram(), form.level(),
               [&](std::int64_t, const std::vector<std::int64_t>&) {
                 ++count;
                 return true;
               });
  return count;
}

std::int64_t radical_order(const SymmetricForm& form, std::int64_t k) {
  const std::int64_t L = form.level();
  const std::int64_t m = mod_floor(k, L);
  std::vector<std::int64_t> sg = form.scaled_gram();
  for (auto& x : sg) x = mul_mod(x, m, L);
  std::int64_t count = 0;
  walk_radical(form.group().factors(), sg, L, [&](std::int64_t, const std::vector<std::int64_t>&) {
    ++count;
    return true;
  });
  return count;
}

SymmetricForm power_form(const SymmetricForm& form, std::int64_t k) {
  std::vector<PhaseQZ> gram;
  gram.reserve(form.gram_entries().size());
  for (const auto& x : form.gram_entries()) gram.push_back(x.times(k));
  return SymmetricForm(form.group(), std::move(gram));
}

SymmetricForm orthogonal_sum(const SymmetricForm& first, const SymmetricForm& second) {
  std::vector<std::int64_t> factors = first.group().factors();
  factors.insert(factors.end(), second.group().factors().begin(), second.group().factors().end());
  const std::size_t r1 = first.rank(), r2 = second.rank(), r = r1 + r2;
  std::vector<PhaseQZ> gram(r * r);
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < r1; ++j) gram[i * r + j] = first.gram(i, j);
  for (std::size_t i = 0; i < r2; ++i)
    for (std::size_t j = 0; j < r2; ++j) gram[(r1 + i) * r + r1 + j] = second.gram(i, j);
  return SymmetricForm(FiniteAbelianGroup(std::move(factors)), std::move(gram));
}

SymmetricForm restrict(const SymmetricForm& form, const GroupHom& embedding) {
  if (!(embedding.target == form.group())) {
    throw InvalidInput("restrict: embedding target differs from the form's group");
  }
  if (!embedding.is_well_defined()) throw InvalidInput("restrict: embedding is not a homomorphism");
  const std::size_t r = embedding.source.rank();
  std::vector<PhaseQZ> gram(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram[i * r + j] = form(embedding.images[i], embedding.images[j]);
  return SymmetricForm(embedding.source, std::move(gram));
}

// ---------------------------------------------------------------------------

QuadraticMap::QuadraticMap(SymmetricForm form, std::vector<PhaseQZ> diag,
                           std::vector<PhaseQZ> cross, std::vector<PhaseQZ> linear,
                           std::optional<GroupElement> shift)
    : form_(std::move(form)),
      diag_(std::move(diag)),
      cross_(std::move(cross)),
      linear_(std::move(linear)),
      shift_(std::move(shift)) {
  const std::size_t r = form_.rank();
  if (diag_.size() != r || linear_.size() != r || cross_.size() != r * r) {
    throw InvalidInput("quadratic map coefficient arrays have the wrong size");
  }
  // Only the strict upper triangle of `cross` carries meaning.
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j <= i; ++j) cross_[i * r + j] = PhaseQZ();

  auto w = [&](std::size_t i, std::size_t j) { return i < j ? cross_[i * r + j] : cross_[j * r + i]; };
  for (std::size_t i = 0; i < r; ++i) {
    const std::int64_t d = form_.group().factor(i);
    if (diag_[i].times(2) != form_.gram(i, i)) {
      throw InvalidInput("quadratic map: coboundary differs from the form on generator " +
                         std::to_string(i));
    }
    if (!diag_[i].times(2 * d).is_zero() || !(diag_[i].times(d * d) + linear_[i].times(d)).is_zero()) {
      throw InvalidInput("quadratic map is not well defined on factor " + std::to_string(i));
    }
    for (std::size_t j = 0; j < r; ++j) {
      if (j == i) continue;
      if (i < j && w(i, j) != form_.gram(i, j)) {
        throw InvalidInput("quadratic map: cross coefficient differs from the form");
      }
      if (!w(i, j).times(d).is_zero()) throw InvalidInput("quadratic map is not well defined");
    }
  }

  level_ = form_.level();
  for (const auto* vec : {&diag_, &cross_, &linear_})
    for (const auto& x : *vec) level_ = checked_lcm(level_, x.den());
  sdiag_.resize(r);
  slinear_.resize(r);
  scross_.assign(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    sdiag_[i] = diag_[i].scaled_to(level_);
    slinear_[i] = linear_[i].scaled_to(level_);
    for (std::size_t j = i + 1; j < r; ++j) scross_[i * r + j] = cross_[i * r + j].scaled_to(level_);
  }
}

PhaseQZ QuadraticMap::operator()(const GroupElement& a) const {
  const std::size_t r = form_.rank();
  const std::int64_t L = level_;
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const std::int64_t ai = a.coords[i];
    if (ai == 0) continue;
    acc += mul_mod(mul_mod(ai, ai, L), sdiag_[i], L) + mul_mod(ai, slinear_[i], L);
    for (std::size_t j = i + 1; j < r; ++j) acc += mul_mod(ai * a.coords[j], scross_[i * r + j], L);
    acc %= L;
  }
  return PhaseQZ(acc, L);
}

std::vector<std::int64_t> QuadraticMap::scaled_values(std::int64_t level) const {
  if (level % level_ != 0) throw InvalidInput("scaled_values: level too coarse");
  const std::int64_t up = level / level_;
  const auto& g = form_.group();
  const std::size_t r = g.rank();
  const std::int64_t L = level_;
  // Polarization increments: mu(a + e_i) - mu(a) = 2 q_i a_i + sum_j w_ij a_j + q_i + l_i.
  std::vector<std::int64_t> polar(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      polar[i * r + j] = i == j ? add_mod(sdiag_[i], sdiag_[i], L) : scross_[std::min(i, j) * r + std::max(i, j)];
  // state = (mu(a), mu(a + e_0) - mu(a), ...)
  std::vector<std::int64_t> start(r + 1, 0);
  for (std::size_t i = 0; i < r; ++i) start[i + 1] = add_mod(sdiag_[i], slinear_[i], L);
  std::vector<std::int64_t> out(static_cast<std::size_t>(g.order()));
  odometer(
      g.factors(), start,
      [&](std::size_t i, std::vector<std::int64_t>& st) {
        st[0] = add_mod(st[0], st[i + 1], L);
        for (std::size_t j = 0; j < r; ++j) st[j + 1] = add_mod(st[j + 1], polar[i * r + j], L);
      },
      [&](std::size_t idx, const std::vector<std::int64_t>& st) { out[idx] = st[0] * up; });
  return out;
}

std::vector<PhaseQZ> QuadraticMap::values() const {
  if (group().order() > 10000) throw BoundExceeded("value tables are limited to |A| <= 10^4");
  std::vector<PhaseQZ> out;
  out.reserve(static_cast<std::size_t>(group().order()));
  for (auto v : scaled_values(level_)) out.emplace_back(v, level_);
  return out;
}

QuadraticMap QuadraticMap::scaled(std::int64_t k) const {
  auto mul = [k](std::vector<PhaseQZ> v) {
    for (auto& x : v) x = x.times(k);
    return v;
  };
  return QuadraticMap(power_form(form_, k), mul(diag_), mul(cross_), mul(linear_));
}

QuadraticMap QuadraticMap::shifted(const GroupElement& c) const {
  std::vector<PhaseQZ> lin = linear_;
  for (std::size_t i = 0; i < lin.size(); ++i) lin[i] += form_(form_.group().generator(i), c);
  GroupElement total = shift_ ? form_.group().add(*shift_, c) : c;
  return QuadraticMap(form_, diag_, cross_, std::move(lin), std::move(total));
}

QuadraticMap QuadraticMap::plus_character(const GroupElement& t) const {
  std::vector<PhaseQZ> lin = linear_;
  for (std::size_t i = 0; i < lin.size(); ++i) lin[i] += PhaseQZ(t.coords[i], form_.group().factor(i));
  return QuadraticMap(form_, diag_, cross_, std::move(lin));
}

QuadraticMap homogeneous_base_map(const SymmetricForm& form) {
  const std::size_t r = form.rank();
  const auto& g = form.group();
  std::vector<PhaseQZ> diag(r), cross(r * r), linear(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::int64_t d = g.factor(i);
    if (d % 2 == 1) {
      diag[i] = form.gram(i, i).times((d + 1) / 2);
    } else {
      diag[i] = PhaseQZ(form.gram(i, i).scaled_to(d), 2 * d);
    }
    for (std::size_t j = i + 1; j < r; ++j) cross[i * r + j] = form.gram(i, j);
  }
  try {
    return QuadraticMap(form, std::move(diag), std::move(cross), std::move(linear), g.zero());
  } catch (const InvalidInput& e) {
    throw InternalInconsistency(std::string("homogeneous base map construction: ") + e.what());
  }
}

std::vector<QuadraticMap> enumerate_quadratic_maps(const Bicharacter& chi) {
  const auto& g = chi.group();
  const QuadraticMap mu0 = homogeneous_base_map(chi.form());
  std::vector<QuadraticMap> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (std::int64_t idx = 0; idx < g.order(); ++idx) out.push_back(mu0.shifted(g.element(idx)));
  return out;
}

std::vector<QuadraticMap> enumerate_quadratic_maps(const SymmetricForm& form) {
  return enumerate_quadratic_maps(Bicharacter(form));
}

std::vector<QuadraticMap> all_quadratic_maps(const SymmetricForm& form) {
  const auto& g = form.group();
  const QuadraticMap mu0 = homogeneous_base_map(form);
  std::vector<QuadraticMap> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (std::int64_t idx = 0; idx < g.order(); ++idx) out.push_back(mu0.plus_character(g.element(idx)));
  return out;
}

bool is_quadratic(const std::vector<PhaseQZ>& values, const SymmetricForm& form) {
  const auto& g = form.group();
  if (static_cast<std::int64_t>(values.size()) != g.order()) return false;
  const auto elems = g.elements();
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      const auto sum = static_cast<std::size_t>(g.index_of(g.add(elems[a], elems[b])));
      if (values[sum] - values[a] - values[b] != form(elems[a], elems[b])) return false;
    }
  }
  return true;
}

bool is_homogeneous(const QuadraticMap& mu) {
  const auto& g = mu.group();
  const std::int64_t L = mu.level();
  const auto vals = mu.scaled_values(L);
  const std::int64_t period = std::lcm(L, g.exponent());
  for (std::int64_t idx = 0; idx < g.order(); ++idx) {
    const GroupElement a = g.element(idx);
    for (std::int64_t n = 0; n < period; ++n) {
      const auto na = static_cast<std::size_t>(g.index_of(g.scale(n, a)));
      if (vals[na] != mul_mod(n * n % L, vals[static_cast<std::size_t>(idx)], L)) return false;
    }
  }
  return true;
}

std::int64_t count_gram_matrices(const FiniteAbelianGroup& group) {
  std::int64_t count = 1;
  const auto& f = group.factors();
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i; j < f.size(); ++j) count = checked_mul(count, std::gcd(f[i], f[j]));
  return count;
}

namespace {

struct GramLayout {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  std::vector<std::int64_t> radix;
};

GramLayout gram_layout(const FiniteAbelianGroup& group) {
  GramLayout layout;
  const auto& f = group.factors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i; j < f.size(); ++j) {
      layout.cells.emplace_back(i, j);
      layout.radix.push_back(std::gcd(f[i], f[j]));
    }
  }
  return layout;
}

SymmetricForm form_from_numerators(const FiniteAbelianGroup& group, const GramLayout& layout,
                                   const std::vector<std::int64_t>& nums) {
  const std::size_t r = group.rank();
  std::vector<PhaseQZ> gram(r * r);
  for (std::size_t c = 0; c < layout.cells.size(); ++c) {
    const auto [i, j] = layout.cells[c];
    gram[i * r + j] = gram[j * r + i] = PhaseQZ(nums[c], layout.radix[c]);
  }
  return SymmetricForm(group, std::move(gram));
}

}  // namespace

void for_each_symmetric_form(const FiniteAbelianGroup& group,
                             const std::function<void(const SymmetricForm&)>& visit) {
  const GramLayout layout = gram_layout(group);
  std::vector<std::int64_t> nums(layout.cells.size(), 0);
  do {
    visit(form_from_numerators(group, layout, nums));
  } while (advance(nums, layout.radix));
}

SymmetricForm symmetric_form_at(const FiniteAbelianGroup& group, std::int64_t index) {
  const GramLayout layout = gram_layout(group);
  std::vector<std::int64_t> nums(layout.cells.size(), 0);
  for (std::size_t c = layout.cells.size(); c-- > 0;) {
    nums[c] = index % layout.radix[c];
    index /= layout.radix[c];
  }
  if (index != 0) throw InvalidInput("symmetric_form_at: index out of range");
  return form_from_numerators(group, layout, nums);
}

void for_each_bicharacter(const FiniteAbelianGroup& group,
                          const std::function<void(const Bicharacter&)>& visit) {
  const GramLayout layout = gram_layout(group);
  const std::size_t r = group.rank();
  const std::int64_t L = group.exponent();
  std::vector<std::int64_t> nums(layout.cells.size(), 0);
  std::vector<std::int64_t> sg(r * r, 0);
  do {
    for (std::size_t c = 0; c < layout.cells.size(); ++c) {
      const auto [i, j] = layout.cells[c];
      sg[i * r + j] = sg[j * r + i] = nums[c] * (L / layout.radix[c]);
    }
    bool nondegenerate = true;
    walk_radical(group.factors(), sg, L, [&](std::int64_t idx, const std::vector<std::int64_t>&) {
      if (idx != 0) nondegenerate = false;
      return nondegenerate;
    });
    if (nondegenerate) visit(Bicharacter(form_from_numerators(group, layout, nums)));
  } while (advance(nums, layout.radix));
}

std::vector<Bicharacter> enumerate_bicharacters(const FiniteAbelianGroup& group, std::int64_t bound) {
  const std::int64_t count = count_gram_matrices(group);
  if (count > bound) {
    throw BoundExceeded("enumerate_bicharacters: " + std::to_string(count) +
                        " candidate gram matrices on " + group.to_string() + " exceed the bound " +
                        std::to_string(bound));
  }
  std::vector<Bicharacter> out;
  for_each_bicharacter(group, [&](const Bicharacter& chi) { out.push_back(chi); });
  return out;
}

}  // namespace tyinv
