#include "tyinv/abelian.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "tyinv/error.hpp"
#include "tyinv/number_theory.hpp"

namespace tyinv {

FiniteAbelianGroup::FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<std::int64_t>{1}) {}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) factors_.push_back(1);
  for (auto d : factors_) {
    if (d < 1) throw InvalidInput("group factor must be >= 1, got " + std::to_string(d));
  }
  strides_.assign(factors_.size(), 1);
  for (std::size_t i = factors_.size(); i-- > 0;) {
    strides_[i] = order_;
    order_ = checked_mul(order_, factors_[i]);
    exponent_ = checked_lcm(exponent_, factors_[i]);
  }
}

GroupElement FiniteAbelianGroup::zero() const {
  return GroupElement{std::vector<std::int64_t>(factors_.size(), 0)};
}

GroupElement FiniteAbelianGroup::generator(std::size_t i) const {
  GroupElement e = zero();
  e.coords.at(i) = factors_[i] == 1 ? 0 : 1;
  return e;
}

GroupElement FiniteAbelianGroup::element(std::int64_t index) const {
  if (index < 0 || index >= order_) throw InvalidInput("element index out of range");
  GroupElement e = zero();
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    e.coords[i] = index / strides_[i];
    index %= strides_[i];
  }
  return e;
}

std::int64_t FiniteAbelianGroup::index_of(const GroupElement& a) const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx += a.coords[i] * strides_[i];
  return idx;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::int64_t i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

bool FiniteAbelianGroup::contains(const GroupElement& a) const {
  if (a.coords.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (a.coords[i] < 0 || a.coords[i] >= factors_[i]) return false;
  }
  return true;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement r = zero();
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    r.coords[i] = (a.coords[i] + b.coords[i]) % factors_[i];
  }
  return r;
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& a) const {
  GroupElement r = zero();
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    r.coords[i] = (factors_[i] - a.coords[i]) % factors_[i];
  }
  return r;
}

GroupElement FiniteAbelianGroup::scale(std::int64_t n, const GroupElement& a) const {
  GroupElement r = zero();
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    r.coords[i] = mul_mod(n, a.coords[i], factors_[i]);
  }
  return r;
}

std::int64_t FiniteAbelianGroup::element_order(const GroupElement& a) const {
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::int64_t d = factors_[i];
    ord = std::lcm(ord, d / std::gcd(d, a.coords[i]));
  }
  return ord;
}

GroupElement FiniteAbelianGroup::reduce(std::vector<std::int64_t> coords) const {
  if (coords.size() != factors_.size()) throw InvalidInput("coordinate vector has wrong length");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = mod_floor(coords[i], factors_[i]);
  return GroupElement{std::move(coords)};
}

std::string FiniteAbelianGroup::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(factors_[i]);
  }
  return s;
}

FiniteAbelianGroup make_group(const std::vector<std::int64_t>& factors) {
  return FiniteAbelianGroup(factors);
}

FiniteAbelianGroup parse_group_literal(std::string_view text) {
  std::vector<std::int64_t> factors;
  std::string cleaned;
  for (char c : text) {
    if (c != ' ' && c != '\t') cleaned += c;
  }
  if (cleaned.empty()) return FiniteAbelianGroup();
  std::size_t pos = 0;
  while (pos <= cleaned.size()) {
    const std::size_t next = std::min(cleaned.find(',', pos), cleaned.size());
    const std::string_view tok(cleaned.data() + pos, next - pos);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw InvalidInput("bad group literal '" + std::string(text) + "'");
    }
    factors.push_back(v);
    pos = next + 1;
  }
  return FiniteAbelianGroup(std::move(factors));
}

GroupElement GroupHom::apply(const GroupElement& a) const {
  std::vector<std::int64_t> acc(target.rank(), 0);
  for (std::size_t i = 0; i < source.rank(); ++i) {
    for (std::size_t j = 0; j < target.rank(); ++j) {
      acc[j] = (acc[j] + mul_mod(a.coords[i], images[i].coords[j], target.factor(j))) %
               target.factor(j);
    }
  }
  return GroupElement{std::move(acc)};
}

bool GroupHom::is_well_defined() const {
  if (images.size() != source.rank()) return false;
  for (std::size_t i = 0; i < source.rank(); ++i) {
    if (!target.contains(images[i])) return false;
    if (target.scale(source.factor(i), images[i]) != target.zero()) return false;
  }
  return true;
}

bool GroupHom::is_injective() const {
  for (std::int64_t idx = 1; idx < source.order(); ++idx) {
    if (apply(source.element(idx)) == target.zero()) return false;
  }
  return true;
}

int PrimaryRanks::rank(int s) const {
  auto it = ranks.find(s);
  return it == ranks.end() ? 0 : it->second;
}

int PrimaryRanks::log_order() const {
  int total = 0;
  for (auto [s, r] : ranks) total += s * r;
  return total;
}

std::int64_t torsion_order(const FiniteAbelianGroup& g, std::int64_t k) {
  if (k < 0) throw InvalidInput("torsion_order: k must be >= 0");
  std::int64_t r = 1;
  for (auto d : g.factors()) r *= std::gcd(k, d);
  return r;
}

std::vector<GroupElement> torsion_subgroup(const FiniteAbelianGroup& g, std::int64_t k) {
  if (k < 0) throw InvalidInput("torsion_subgroup: k must be >= 0");
  std::vector<GroupElement> out;
  const GroupElement zero = g.zero();
  for (std::int64_t idx = 0; idx < g.order(); ++idx) {
    GroupElement a = g.element(idx);
    if (g.scale(k, a) == zero) out.push_back(std::move(a));
  }
  return out;
}

PrimaryRanks primary_ranks(const FiniteAbelianGroup& g, std::int64_t p) {
  if (!is_prime(p)) throw InvalidInput("primary_ranks: p must be prime");
  PrimaryRanks pr;
  pr.p = p;
  for (auto d : g.factors()) {
    const int v = valuation(d, p);
    if (v > 0) ++pr.ranks[v];
  }
  return pr;
}

PrimaryComponent primary_component(const FiniteAbelianGroup& g, std::int64_t p) {
  if (!is_prime(p)) throw InvalidInput("primary_component: p must be prime");
  std::vector<std::int64_t> sub_factors;
  std::vector<GroupElement> images;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const std::int64_t d = g.factor(i);
    const std::int64_t pp = int_pow(p, valuation(d, p));
    if (pp == 1) continue;
    sub_factors.push_back(pp);
    GroupElement img = g.zero();
    img.coords[i] = d / pp;
    images.push_back(std::move(img));
  }
  if (sub_factors.empty()) {
    sub_factors.push_back(1);
    images.push_back(g.zero());
  }
  FiniteAbelianGroup sub(sub_factors);
  return PrimaryComponent{sub, GroupHom{sub, g, std::move(images)}};
}

PrimaryRanks reconstruct_primary_from_torsion(const std::map<int, std::int64_t>& orders,
                                              std::int64_t p) {
  if (!is_prime(p)) throw InvalidInput("reconstruct_primary_from_torsion: p must be prime");
  PrimaryRanks pr;
  pr.p = p;
  if (orders.empty()) return pr;
  const int top = orders.rbegin()->first;
  if (orders.begin()->first != 1 || static_cast<int>(orders.size()) != top) {
    throw InvalidInput("torsion orders must be given for m = 1..M without gaps");
  }
  // tail[m] = r_{m+1} + r_{m+2} + ... = log_p(|A_{p^{m+1}}| / |A_{p^m}|), tail[M] = 0.
  std::vector<int> tail(static_cast<std::size_t>(top) + 1, 0);
  std::int64_t prev = 1;
  for (int m = 1; m <= top; ++m) {
    const std::int64_t cur = orders.at(m);
    if (cur < prev || cur % prev != 0) {
      throw InvalidInput("torsion orders must be non-decreasing and divide each other");
    }
    const int e = exact_log(cur / prev, p);
    if (e < 0) throw InvalidInput("torsion order ratio is not a power of p");
    tail[static_cast<std::size_t>(m - 1)] = e;
    prev = cur;
  }
  for (int s = 1; s <= top; ++s) {
    const int r = tail[static_cast<std::size_t>(s - 1)] - tail[static_cast<std::size_t>(s)];
    if (r < 0) throw InvalidInput("torsion orders are inconsistent (negative rank)");
    if (r > 0) pr.ranks[s] = r;
  }
  return pr;
}

std::vector<std::int64_t> order_primes(const FiniteAbelianGroup& g) {
  std::vector<std::int64_t> out;
  for (auto [p, e] : factorize(g.order())) out.push_back(p);
  return out;
}

namespace {

void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FiniteAbelianGroup> abelian_groups_of_order(std::int64_t n) {
  if (n < 1) throw InvalidInput("group order must be positive");
  const auto primes = factorize(n);
  std::vector<std::vector<std::vector<int>>> per_prime;
  for (auto [p, e] : primes) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(e, e, cur, parts);
    per_prime.push_back(std::move(parts));
  }
  std::vector<FiniteAbelianGroup> out;
  std::vector<std::size_t> pick(primes.size(), 0);
  while (true) {
    std::size_t len = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) len = std::max(len, per_prime[i][pick[i]].size());
    // Position 0 holds the largest invariant factor.
    std::vector<std::int64_t> desc(std::max<std::size_t>(len, 1), 1);
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const auto& part = per_prime[i][pick[i]];
      for (std::size_t j = 0; j < part.size(); ++j) desc[j] *= int_pow(primes[i].first, part[j]);
    }
    std::reverse(desc.begin(), desc.end());
    out.emplace_back(std::move(desc));

    std::size_t i = 0;
    while (i < primes.size() && ++pick[i] == per_prime[i].size()) pick[i++] = 0;
    if (i == primes.size()) break;
  }
  return out;
}

bool groups_isomorphic(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
  if (a.order() != b.order()) return false;
  for (auto p : order_primes(a)) {
    if (!(primary_ranks(a, p) == primary_ranks(b, p))) return false;
  }
  return true;
}

}  // namespace tyinv
