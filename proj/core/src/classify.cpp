#include "tyinv/classify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "tyinv/error.hpp"
#include "tyinv/number_theory.hpp"

namespace tyinv {

namespace {

struct PairingTable {
  const FiniteAbelianGroup* group;
  std::int64_t level;
  std::vector<std::int64_t> adj;
  std::vector<std::vector<std::int64_t>> coords;

  explicit PairingTable(const SymmetricForm& form)
      : group(&form.group()), level(form.level()), adj(adjoint_table(form, form.level())) {
    coords.reserve(static_cast<std::size_t>(group->order()));
    for (std::int64_t i = 0; i < group->order(); ++i) coords.push_back(group->element(i).coords);
  }

  std::int64_t pair(std::int64_t a, std::int64_t b) const {
    const std::size_t r = group->rank();
    std::int64_t acc = 0;
    const auto& cb = coords[static_cast<std::size_t>(b)];
    for (std::size_t j = 0; j < r; ++j) acc += cb[j] * adj[static_cast<std::size_t>(a) * r + j] % level;
    return acc % level;
  }
};

}  // namespace

OrthogonalSplitting orthogonal_splitting_odd_p(const Bicharacter& chi) {
  const auto& g = chi.group();
  const std::int64_t p = g.is_trivial() ? 3 : prime_power_base(g.order());
  if (!g.is_trivial() && (p == 0 || p == 2))
    throw InvalidInput("orthogonal_split_odd_p: group order must be a power of an odd prime");

  const PairingTable table(chi.form());
  const std::int64_t L = table.level;

  std::vector<std::int64_t> current(static_cast<std::size_t>(g.order()));
  std::iota(current.begin(), current.end(), 0);

  std::vector<std::int64_t> chosen;
  std::vector<int> levels;
  std::vector<std::int64_t> deltas;
  while (current.size() > 1) {
    std::int64_t best = -1;
    std::int64_t best_order = 1;
    std::int64_t best_value = 0;
    for (const std::int64_t w : current) {
      const std::int64_t v = table.pair(w, w);
      const std::int64_t ord = L / std::gcd(v, L);
      if (ord > best_order) {
        best = w;
        best_order = ord;
        best_value = v;
      }
    }
    if (best < 0)
      throw InvalidInput("orthogonal_split_odd_p: no element with nonzero self-pairing");
    const GroupElement a = g.element(best);
    if (g.element_order(a) != best_order)
      throw InvalidInput("orthogonal_split_odd_p: selected element order differs from its self-pairing order");
    const int s = exact_log(best_order, p);
    const std::int64_t delta = best_value / (L / best_order);

    std::vector<std::int64_t> complement;
    complement.reserve(current.size() / static_cast<std::size_t>(best_order));
    for (const std::int64_t w : current)
      if (table.pair(w, best) == 0) complement.push_back(w);
    if (static_cast<std::int64_t>(complement.size()) * best_order !=
        static_cast<std::int64_t>(current.size()))
      throw InternalInconsistency("orthogonal_split_odd_p: complement has the wrong order");

    chosen.push_back(best);
    levels.push_back(s);
    deltas.push_back(delta);
    current = std::move(complement);
  }

  OrthogonalSplitting out;
  std::vector<std::int64_t> factors;
  for (const int s : levels) factors.push_back(int_pow(p, s));
  const FiniteAbelianGroup source(factors.empty() ? std::vector<std::int64_t>{1} : factors);
  std::vector<GroupElement> images;
  for (const std::int64_t idx : chosen) images.push_back(g.element(idx));
  if (images.empty()) images.push_back(g.zero());
  out.basis = GroupHom{source, g, images};

  std::vector<PhaseQZ> gram(source.rank() * source.rank(), PhaseQZ());
  for (std::size_t i = 0; i < chosen.size(); ++i)
    gram[i * source.rank() + i] = PhaseQZ(deltas[i], factors[i]);
  out.diagonal_form = SymmetricForm(source, gram);

  if (!out.basis.is_well_defined() || !out.basis.is_injective() || source.order() != g.order())
    throw InternalInconsistency("orthogonal_split_odd_p: basis change is not bijective");
  if (!(restrict(chi.form(), out.basis) == out.diagonal_form))
    throw InternalInconsistency("orthogonal_split_odd_p: transported form is not diagonal");

  std::map<int, DiagonalBlock> by_level;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    auto& block = by_level[levels[i]];
    block.p = p;
    block.s = levels[i];
    block.deltas.push_back(deltas[i]);
  }
  for (auto& [s, block] : by_level) out.blocks.push_back(std::move(block));

  if (!g.is_trivial()) {
    const PrimaryRanks ranks = primary_ranks(g, p);
    for (const auto& block : out.blocks)
      if (ranks.rank(block.s) != static_cast<int>(block.deltas.size()))
        throw InternalInconsistency("orthogonal_split_odd_p: block ranks disagree with the group");
  }
  return out;
}

std::vector<DiagonalBlock> orthogonal_split_odd_p(const Bicharacter& chi) {
  return orthogonal_splitting_odd_p(chi).blocks;
}

SymmetricForm block_diagonal_form(const std::vector<DiagonalBlock>& blocks) {
  std::vector<std::int64_t> factors;
  std::vector<PhaseQZ> diag;
  for (const auto& block : blocks) {
    const std::int64_t q = int_pow(block.p, block.s);
    for (const std::int64_t d : block.deltas) {
      factors.push_back(q);
      diag.emplace_back(d, q);
    }
  }
  if (factors.empty()) return SymmetricForm();
  const std::size_t r = factors.size();
  std::vector<PhaseQZ> gram(r * r, PhaseQZ());
  for (std::size_t i = 0; i < r; ++i) gram[i * r + i] = diag[i];
  return SymmetricForm(FiniteAbelianGroup(factors), gram);
}

WallEntry WallInvariants::at(std::int64_t p, int s) const {
  const auto it = entries.find({p, s});
  return it == entries.end() ? WallEntry{} : it->second;
}

WallInvariants wall_invariants(const Bicharacter& chi) {
  WallInvariants out;
  for (const std::int64_t p : order_primes(chi.group())) {
    if (p == 2) {
      out.two_part_unclassified = true;
      continue;
    }
    const PrimaryComponent comp = primary_component(chi.group(), p);
    const Bicharacter part(restrict(chi.form(), comp.embedding));
    for (const auto& block : orthogonal_split_odd_p(part)) {
      std::int64_t det = 1;
      for (const std::int64_t d : block.deltas) det = mul_mod(det, d, p);
      out.entries[{p, block.s}] =
          WallEntry{static_cast<int>(block.deltas.size()), legendre(det, p)};
    }
  }
  return out;
}

bool is_isomorphic_odd(const Bicharacter& first, const Bicharacter& second) {
  if (first.group().order() % 2 == 0 || second.group().order() % 2 == 0)
    throw UnsupportedGroup("is_isomorphic_odd: even-order group; use the brute-force test");
  return wall_invariants(first) == wall_invariants(second);
}

bool is_isometry(const GroupHom& f, const SymmetricForm& first, const SymmetricForm& second) {
  if (!(f.source == first.group()) || !(f.target == second.group())) return false;
  if (first.group().order() != second.group().order()) return false;
  if (!f.is_well_defined() || !f.is_injective()) return false;
  return restrict(second, f) == first;
}

std::optional<GroupHom> find_isometry_bruteforce(const SymmetricForm& first,
                                                 const SymmetricForm& second,
                                                 std::int64_t bound) {
  const auto& g1 = first.group();
  const auto& g2 = second.group();
  if (g1.order() != g2.order()) return std::nullopt;
  if (g1.order() > bound)
    throw BoundExceeded("is_isomorphic_bruteforce: group order " + std::to_string(g1.order()) +
                        " exceeds bound " + std::to_string(bound));
  if (!groups_isomorphic(g1, g2)) return std::nullopt;

  const std::int64_t L = checked_lcm(first.level(), second.level());
  const PairingTable t2(second);
  const std::int64_t up2 = L / t2.level;
  const std::size_t r1 = g1.rank();

  // Target values of chi1 between generators, scaled to L.
  std::vector<std::int64_t> want(r1 * r1);
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < r1; ++j)
      want[i * r1 + j] = first.scaled_gram()[i * r1 + j] * (L / first.level());

  std::vector<std::int64_t> self2(static_cast<std::size_t>(g2.order()));
  std::vector<std::int64_t> order2(static_cast<std::size_t>(g2.order()));
  for (std::int64_t x = 0; x < g2.order(); ++x) {
    self2[static_cast<std::size_t>(x)] = t2.pair(x, x) * up2;
    order2[static_cast<std::size_t>(x)] = g2.element_order(g2.element(x));
  }

  std::vector<std::int64_t> image(r1, 0);
  std::optional<GroupHom> found;

  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == r1) {
      GroupHom f{g1, g2, {}};
      for (const std::int64_t x : image) f.images.push_back(g2.element(x));
      if (!f.is_injective()) return false;
      found = std::move(f);
      return true;
    }
    const std::int64_t d = g1.factor(i);
    for (std::int64_t x = 0; x < g2.order(); ++x) {
      if (d % order2[static_cast<std::size_t>(x)] != 0) continue;
      if (self2[static_cast<std::size_t>(x)] != want[i * r1 + i]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = t2.pair(x, image[j]) * up2 == want[i * r1 + j];
      if (!ok) continue;
      image[i] = x;
      if (search(i + 1)) return true;
    }
    return false;
  };
  search(0);
  if (found && !is_isometry(*found, first, second))
    throw InternalInconsistency("is_isomorphic_bruteforce: witness fails verification");
  return found;
}

bool is_isomorphic_bruteforce(const SymmetricForm& first, const SymmetricForm& second,
                              std::int64_t bound) {
  return find_isometry_bruteforce(first, second, bound).has_value();
}

bool is_isomorphic_bruteforce(const Bicharacter& first, const Bicharacter& second,
                              std::int64_t bound) {
  return is_isomorphic_bruteforce(first.form(), second.form(), bound);
}

std::vector<std::vector<Bicharacter>> bicharacter_classes_odd(const FiniteAbelianGroup& group,
                                                              std::int64_t bound) {
  if (group.order() % 2 == 0)
    throw UnsupportedGroup("bicharacter_classes_odd: group order must be odd");
  std::vector<std::vector<Bicharacter>> classes;
  std::map<WallInvariants, std::size_t> slot;
  for (auto& chi : enumerate_bicharacters(group, bound)) {
    const auto key = wall_invariants(chi);
    auto [it, fresh] = slot.try_emplace(key, classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(std::move(chi));
  }
  return classes;
}

std::vector<std::vector<Bicharacter>> bicharacter_classes_bruteforce(
    const FiniteAbelianGroup& group, std::int64_t bound) {
  std::vector<std::vector<Bicharacter>> classes;
  for (auto& chi : enumerate_bicharacters(group, bound)) {
    bool placed = false;
    for (auto& cls : classes) {
      if (is_isomorphic_bruteforce(cls.front(), chi, group.order())) {
        cls.push_back(std::move(chi));
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({std::move(chi)});
  }
  return classes;
}

}  // namespace tyinv
