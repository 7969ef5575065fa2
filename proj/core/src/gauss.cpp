#include "tyinv/gauss.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "tyinv/classify.hpp"
#include "tyinv/error.hpp"

namespace tyinv {

namespace {

std::complex<double> unit_root(std::int64_t j, std::int64_t n) {
  // Symmetric representative keeps the angle small before cos/sin.
  std::int64_t r = mod_floor(j, n);
  if (2 * r > n) r -= n;
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
  return {std::cos(theta), std::sin(theta)};
}

class Twiddles {
 public:
  explicit Twiddles(std::int64_t n) : n_(n), table_(static_cast<std::size_t>(n)) {
    for (std::int64_t j = 0; j < n; ++j) table_[static_cast<std::size_t>(j)] = unit_root(j, n);
  }
  const std::complex<double>& operator[](std::int64_t j) const {
    return table_[static_cast<std::size_t>(mod_floor(j, n_))];
  }
  std::int64_t size() const { return n_; }
  const std::vector<std::complex<double>>& table() const { return table_; }

 private:
  std::int64_t n_;
  std::vector<std::complex<double>> table_;
};

std::complex<double> histogram_sum(const std::vector<std::int64_t>& hist, const Twiddles& w,
                                   std::int64_t k = 1) {
  std::complex<double> acc{0.0, 0.0};
  const auto n = static_cast<std::int64_t>(hist.size());
  for (std::int64_t v = 0; v < n; ++v) {
    const std::int64_t c = hist[static_cast<std::size_t>(v)];
    if (c != 0) acc += static_cast<double>(c) * w[k == 1 ? v : mul_mod(k, v, n)];
  }
  return acc;
}

std::vector<std::int64_t> histogram(const std::vector<std::int64_t>& values, std::int64_t level) {
  std::vector<std::int64_t> hist(static_cast<std::size_t>(level), 0);
  for (const std::int64_t v : values) ++hist[static_cast<std::size_t>(v)];
  return hist;
}

bool nontrivial_on(const std::vector<GroupElement>& rad, const QuadraticMap& mu,
                   const std::vector<std::int64_t>& values) {
  const auto& g = mu.group();
  for (const auto& r : rad)
    if (values[static_cast<std::size_t>(g.index_of(r))] != 0) return true;
  return false;
}

bool nontrivial_on_radical(const QuadraticMap& mu, const std::vector<std::int64_t>& values) {
  return nontrivial_on(radical(mu.form()), mu, values);
}

double normalizer(const FiniteAbelianGroup& g, std::int64_t radical_size) {
  return std::sqrt(static_cast<double>(g.order()) * static_cast<double>(radical_size));
}

double normalizer(const SymmetricForm& form) { return normalizer(form.group(), radical_order(form)); }

PhaseQZ snap_to_grid(std::complex<double> z, std::int64_t n, const char* where, const Twiddles* grid = nullptr) {
  const double turns = std::arg(z) / (2.0 * std::numbers::pi);
  const auto j = static_cast<std::int64_t>(std::llround(turns * static_cast<double>(n)));
  const auto root = grid ? (*grid)[j] : unit_root(j, n);
  constexpr double tol2 = kSnapTolerance * kSnapTolerance;
  if (std::norm(z - root) > tol2 || std::abs(std::sqrt(std::norm(z)) - 1.0) > kSnapTolerance)
    throw InternalInconsistency(std::string(where) + ": Gauss sum off the conductor grid");
  return PhaseQZ(j, n);
}

void require_nonnegative(std::int64_t k) {
  if (k < 0) throw InvalidInput("zeta: k must be nonnegative");
}

}  // namespace

std::int64_t gauss_conductor(const FiniteAbelianGroup& group) {
  return checked_lcm(2 * group.exponent(), 8);
}

std::complex<double> gauss_sum_numeric(const QuadraticMap& mu) {
  const std::int64_t L = mu.level();
  const auto hist = histogram(mu.scaled_values(L), L);
  return histogram_sum(hist, Twiddles(L)) / normalizer(mu.form());
}

AlgebraicUnit gauss_sum(const QuadraticMap& mu) {
  const std::int64_t L = mu.level();
  const auto values = mu.scaled_values(L);
  const auto rad = radical(mu.form());
  if (nontrivial_on(rad, mu, values)) return AlgebraicUnit::zero();
  const auto z = histogram_sum(histogram(values, L), Twiddles(L)) /
                 normalizer(mu.group(), static_cast<std::int64_t>(rad.size()));
  const AlgebraicUnit snapped = AlgebraicUnit::snap(z);
  if (snapped.is_zero())
    throw InternalInconsistency("gauss_sum: vanishing sum for a map trivial on the radical");
  if (!snapped.is_exact() && is_homogeneous(mu))
    throw InternalInconsistency("gauss_sum: homogeneous map did not snap to an eighth root");
  return snapped;
}

std::optional<PhaseQZ> gauss_phase(const QuadraticMap& mu) {
  const std::int64_t L = mu.level();
  const auto values = mu.scaled_values(L);
  if (nontrivial_on_radical(mu, values)) return std::nullopt;
  const auto z = histogram_sum(histogram(values, L), Twiddles(L)) / normalizer(mu.form());
  return snap_to_grid(z, checked_lcm(gauss_conductor(mu.group()), L), "gauss_phase");
}

CyclotomicInt gauss_sum_exact(const QuadraticMap& mu) {
  const std::int64_t L = mu.level();
  const std::int64_t n = checked_lcm(gauss_conductor(mu.group()), L);
  const auto hist = histogram(mu.scaled_values(L), L);
  CyclotomicInt out(n);
  for (std::int64_t v = 0; v < L; ++v)
    if (hist[static_cast<std::size_t>(v)] != 0) out.add_root(v * (n / L), hist[static_cast<std::size_t>(v)]);
  return out;
}

bool verify_gauss_normalization(const QuadraticMap& mu) {
  const CyclotomicInt s = gauss_sum_exact(mu);
  if (nontrivial_on_radical(mu, mu.scaled_values(mu.level()))) return s.is_zero();
  const std::int64_t target = checked_mul(mu.group().order(), radical_order(mu.form()));
  return s * s.conj() == CyclotomicInt::integer(target, s.conductor());
}

std::vector<PhaseQZ> shift_gauss_phases(const Bicharacter& chi) {
  const auto& g = chi.group();
  const std::size_t r = g.rank();
  const QuadraticMap mu0 = homogeneous_base_map(chi.form());
  const std::int64_t M = checked_lcm(mu0.level(), chi.form().level());
  const std::int64_t n = checked_lcm(gauss_conductor(g), M);
  if (M > (std::int64_t{1} << 30)) throw BoundExceeded("shift_gauss_phases: level too large");
  const std::size_t N = static_cast<std::size_t>(g.order());
  const auto m32 = static_cast<std::int32_t>(M);
  const auto base64 = mu0.scaled_values(M);
  const auto adj = adjoint_table(chi.form(), M);
  const std::vector<std::int32_t> base(base64.begin(), base64.end());
  std::vector<std::vector<std::int32_t>> column(r, std::vector<std::int32_t>(N));
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t j = 0; j < r; ++j) column[j][a] = static_cast<std::int32_t>(adj[a * r + j]);

  const Twiddles w(M);
  const auto& roots = w.table();
  const Twiddles grid(n);
  const double norm = std::sqrt(static_cast<double>(g.order()));
  // Small levels: count values, then M multiply-adds. Large levels: add roots directly.
  const bool counting = M <= static_cast<std::int64_t>(N);
  std::vector<std::int32_t> hist(counting ? static_cast<std::size_t>(M) : 0);

  // Walk the shifts c in index order; moving c by +e_j adds chi(a, e_j) to
  // every value, and a full wrap of coordinate j adds chi(a, d_j e_j) = 0.
  std::vector<std::int32_t> shift(N, 0);
  std::vector<std::int64_t> c(r, 0);
  std::vector<PhaseQZ> out;
  out.reserve(N);
  for (std::int64_t step = 0; step < g.order(); ++step) {
    std::complex<double> acc{0.0, 0.0};
    if (counting) {
      std::fill(hist.begin(), hist.end(), 0);
      for (std::size_t a = 0; a < N; ++a) {
        std::int32_t v = base[a] + shift[a];
        v -= v >= m32 ? m32 : 0;
        ++hist[static_cast<std::size_t>(v)];
      }
      for (std::size_t v = 0; v < hist.size(); ++v)
        if (hist[v] != 0) acc += static_cast<double>(hist[v]) * roots[v];
    } else {
      for (std::size_t a = 0; a < N; ++a) {
        std::int32_t v = base[a] + shift[a];
        v -= v >= m32 ? m32 : 0;
        acc += roots[static_cast<std::size_t>(v)];
      }
    }
    out.push_back(snap_to_grid(acc / norm, n, "shift_gauss_phases", &grid));
    for (std::size_t j = r; j-- > 0;) {
      const auto& col = column[j];
      for (std::size_t a = 0; a < N; ++a) {
        std::int32_t v = shift[a] + col[a];
        v -= v >= m32 ? m32 : 0;
        shift[a] = v;
      }
      if (++c[j] < g.factor(j)) break;
      c[j] = 0;
    }
  }
  return out;
}

AlgebraicUnit zeta_bruteforce(const Bicharacter& chi, std::int64_t k) {
  require_nonnegative(k);
  const auto phases = shift_gauss_phases(chi);
  return zeta_from_phases(chi, phases, k);
}

AlgebraicUnit zeta_from_phases(const Bicharacter& chi, const std::vector<PhaseQZ>& phases,
                               std::int64_t k) {
  return zeta_bruteforce_sequence(chi, phases, k, k).front();
}

std::vector<AlgebraicUnit> zeta_bruteforce_sequence(const Bicharacter& chi,
                                                    const std::vector<PhaseQZ>& phases,
                                                    std::int64_t k_min, std::int64_t k_max) {
  require_nonnegative(k_min);
  const auto& g = chi.group();
  const std::int64_t n = gauss_conductor(g);
  if (static_cast<std::int64_t>(phases.size()) != g.order())
    throw InvalidInput("zeta_bruteforce: one phase per element of A expected");
  std::vector<std::int64_t> phase_hist(static_cast<std::size_t>(n), 0);
  for (const auto& ph : phases) ++phase_hist[static_cast<std::size_t>(ph.scaled_to(n))];
  const Twiddles w(n);
  // |A_k| depends on k only through gcd(k, exp A).
  std::map<std::int64_t, std::int64_t> radical_by_gcd;
  std::vector<AlgebraicUnit> out;
  for (std::int64_t k = k_min; k <= k_max; ++k) {
    const std::int64_t key = std::gcd(k, g.exponent());
    auto it = radical_by_gcd.find(key);
    if (it == radical_by_gcd.end())
      it = radical_by_gcd.emplace(key, radical_order(chi.form(), k)).first;
    const auto total = histogram_sum(phase_hist, w, mod_floor(k, n));
    out.push_back(AlgebraicUnit::snap(
        total / std::sqrt(static_cast<double>(g.order()) * static_cast<double>(it->second))));
  }
  return out;
}

std::vector<AlgebraicUnit> zeta_bruteforce_sequence(const Bicharacter& chi, std::int64_t k_max) {
  return zeta_bruteforce_sequence(chi, shift_gauss_phases(chi), 0, k_max);
}

namespace {

AlgebraicUnit prin_product(const QuadraticMap& mu0, std::int64_t k) {
  const AlgebraicUnit g0 = gauss_sum(mu0);
  const AlgebraicUnit gk = gauss_sum(mu0.scaled(-k));
  if (!g0.is_exact() || !gk.is_exact())
    throw InternalInconsistency("zeta_via_prin: homogeneous Gauss sum failed to snap");
  return gk * g0.pow(k);
}

}  // namespace

AlgebraicUnit zeta_via_prin(const Bicharacter& chi, const QuadraticMap& mu0, std::int64_t k) {
  require_nonnegative(k);
  if (!(mu0.form() == chi.form())) throw InvalidInput("zeta_via_prin: map belongs to another form");
  if (!is_homogeneous(mu0)) throw InvalidInput("zeta_via_prin: map is not homogeneous");
  return prin_product(mu0, k);
}

AlgebraicUnit zeta_via_prin(const Bicharacter& chi, std::int64_t k) {
  require_nonnegative(k);
  return prin_product(homogeneous_base_map(chi.form()), k);
}

std::vector<AlgebraicUnit> zeta_sequence(const Bicharacter& chi, std::int64_t k_max) {
  require_nonnegative(k_max);
  const auto& g = chi.group();
  const QuadraticMap mu0 = homogeneous_base_map(chi.form());
  const std::int64_t L = mu0.level();
  const auto hist = histogram(mu0.scaled_values(L), L);
  const Twiddles w(L);
  // chi is nondegenerate, so the base sum needs no radical correction.
  const AlgebraicUnit g0 = AlgebraicUnit::snap(histogram_sum(hist, w) / std::sqrt(static_cast<double>(g.order())));
  if (!g0.is_exact()) throw InternalInconsistency("zeta_sequence: base Gauss sum failed to snap");

  std::map<std::int64_t, std::int64_t> torsion_by_gcd;
  std::vector<AlgebraicUnit> out;
  out.reserve(static_cast<std::size_t>(k_max + 1));
  for (std::int64_t k = 0; k <= k_max; ++k) {
    const std::int64_t key = std::gcd(k, g.exponent());
    auto it = torsion_by_gcd.find(key);
    if (it == torsion_by_gcd.end()) it = torsion_by_gcd.emplace(key, torsion_order(g, key)).first;
    const double ak = static_cast<double>(it->second);
    const auto z = histogram_sum(hist, w, mod_floor(-k, L)) /
                   std::sqrt(static_cast<double>(g.order()) * ak);
    const AlgebraicUnit gk = AlgebraicUnit::snap(z);
    if (!gk.is_exact()) throw InternalInconsistency("zeta_sequence: Gauss sum failed to snap");
    out.push_back(gk * g0.pow(k));
  }
  return out;
}

int epsilon_exponent(std::int64_t a) { return mod_floor(a, 4) == 3 ? 2 : 0; }

namespace {

AlgebraicUnit closed_form_from_blocks(std::int64_t p, const std::vector<DiagonalBlock>& blocks, std::int64_t k) {
  if (k == 0) return AlgebraicUnit::one();
  std::int64_t exponent = 0;
  for (const auto& block : blocks) {
    const int s = block.s;
    const std::int64_t ps = int_pow(p, s);
    const int t = std::min(valuation(k, p), s);
    const std::int64_t k_red = k / int_pow(p, t);
    const std::int64_t h = (ps + 1) / 2;
    // alpha = ks + s - t; only its parity matters.
    const std::int64_t alpha_parity = mod_floor(mod_floor(k, 2) * s + s - t, 2);

    std::int64_t beta = mod_floor(k, 4) * epsilon_exponent(ps) - epsilon_exponent(int_pow(p, s - t));
    if (alpha_parity == 1 && legendre(h, p) == -1) beta += 4;
    if (t < s && (s - t) % 2 == 1 && legendre(k_red, p) == -1) beta += 4;
    exponent += static_cast<std::int64_t>(block.deltas.size()) * beta;

    std::int64_t det = 1;
    for (const std::int64_t d : block.deltas) det = mul_mod(det, d, p);
    if (alpha_parity == 1 && legendre(det, p) == -1) exponent += 4;
  }
  return AlgebraicUnit::eighth_root(mod_floor(exponent, 8));
}

std::int64_t odd_prime_base(const FiniteAbelianGroup& g) {
  const std::int64_t p = prime_power_base(g.order());
  if (p == 0 || p == 2) throw UnsupportedGroup("zeta_closed_form_p: order must be a power of an odd prime");
  return p;
}

}  // namespace

AlgebraicUnit zeta_closed_form_p(const Bicharacter& chi, std::int64_t k) {
  require_nonnegative(k);
  const auto& g = chi.group();
  if (g.is_trivial() || k == 0) return AlgebraicUnit::one();
  const std::int64_t p = odd_prime_base(g);
  return closed_form_from_blocks(p, orthogonal_split_odd_p(chi), k);
}

std::vector<AlgebraicUnit> zeta_closed_form_sequence(const Bicharacter& chi, std::int64_t k_max) {
  require_nonnegative(k_max);
  const auto& g = chi.group();
  if (g.is_trivial()) return std::vector<AlgebraicUnit>(static_cast<std::size_t>(k_max + 1), AlgebraicUnit::one());
  const std::int64_t p = odd_prime_base(g);
  const auto blocks = orthogonal_split_odd_p(chi);
  std::vector<AlgebraicUnit> out;
  out.reserve(static_cast<std::size_t>(k_max + 1));
  for (std::int64_t k = 0; k <= k_max; ++k) out.push_back(closed_form_from_blocks(p, blocks, k));
  return out;
}

std::complex<double> ClassicalGauss::value() const {
  return std::pow(static_cast<double>(p), 0.5 * half_power) * unit.to_complex();
}

ClassicalGauss classical_gauss(std::int64_t d, std::int64_t p, int s) {
  if (p < 3 || !is_prime(p)) throw InvalidInput("classical_gauss: p must be an odd prime");
  if (s < 1) throw InvalidInput("classical_gauss: s must be positive");
  const std::int64_t ps = int_pow(p, s);
  const std::int64_t dr = mod_floor(d, ps);
  ClassicalGauss out;
  out.p = p;
  if (dr == 0) {
    out.half_power = 2 * s;
    return out;
  }
  const int t = valuation(dr, p);
  const int u = s - t;
  const std::int64_t d_red = dr / int_pow(p, t);
  std::int64_t e = epsilon_exponent(int_pow(p, u));
  if (u % 2 == 1 && legendre(d_red, p) == -1) e += 4;
  out.half_power = s + t;
  out.unit = AlgebraicUnit::eighth_root(mod_floor(e, 8));
  return out;
}

CyclotomicInt classical_gauss_direct(std::int64_t d, std::int64_t p, int s) {
  const std::int64_t ps = int_pow(p, s);
  CyclotomicInt out(ps);
  // d j^2 advances by d (2j + 1), which itself advances by 2d.
  const std::int64_t dr = mod_floor(d, ps);
  const std::int64_t two_d = mod_floor(2 * dr, ps);
  std::int64_t value = 0;
  std::int64_t step = dr;
  for (std::int64_t j = 0; j < ps; ++j) {
    out.add_root(value);
    value += step;
    if (value >= ps) value -= ps;
    step += two_d;
    if (step >= ps) step -= ps;
  }
  return out;
}

CyclotomicInt classical_gauss_closed_exact(std::int64_t d, std::int64_t p, int s) {
  if (p < 3 || !is_prime(p)) throw InvalidInput("classical_gauss: p must be an odd prime");
  const std::int64_t ps = int_pow(p, s);
  const std::int64_t dr = mod_floor(d, ps);
  if (dr == 0) return CyclotomicInt::integer(ps, ps);
  const int t = valuation(dr, p);
  const int u = s - t;
  const std::int64_t d_red = dr / int_pow(p, t);
  const std::int64_t sign = (u % 2 == 1 && legendre(d_red, p) == -1) ? -1 : 1;
  const std::int64_t scale = sign * int_pow(p, t + u / 2);
  if (u % 2 == 0) return CyclotomicInt::integer(scale, ps);
  CyclotomicInt g(ps);
  const std::int64_t step = ps / p;
  for (std::int64_t j = 1; j < p; ++j) g.add_root(j * step, legendre(j, p));
  return g * scale;
}

}  // namespace tyinv
