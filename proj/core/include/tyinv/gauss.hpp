#pragma once

// Normalized Gauss sums of quadratic maps, the invariants zeta_k of a
// bicharacter (three independent evaluation routes), and the classical
// quadratic Gauss sums over Z/p^s.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "tyinv/algebraic_unit.hpp"
#include "tyinv/cyclotomic.hpp"
#include "tyinv/forms.hpp"
#include "tyinv/number_theory.hpp"
#include "tyinv/phase.hpp"

namespace tyinv {

/// lcm(2 exp(A), 8): every value of a quadratic map on A, and every eighth
/// root of unity, is a power of exp(2 pi i / N).
std::int64_t gauss_conductor(const FiniteAbelianGroup& group);

/// Raw floating-point value of |A|^{-1/2} |A^perp|^{-1/2} sum_a mu(a).
std::complex<double> gauss_sum_numeric(const QuadraticMap& mu);

/// gamma(mu), snapped. Zero exactly when mu is nontrivial on the radical.
/// An unsnappable homogeneous map throws InternalInconsistency.
AlgebraicUnit gauss_sum(const QuadraticMap& mu);

/// Phase of gamma(mu) on the grid (1/N)Z/Z for N = gauss_conductor; nullopt
/// when gamma(mu) = 0. Throws InternalInconsistency if off the grid.
std::optional<PhaseQZ> gauss_phase(const QuadraticMap& mu);

/// The unnormalized sum sum_a mu(a) in Z[zeta_N].
CyclotomicInt gauss_sum_exact(const QuadraticMap& mu);

/// Exact check |S|^2 = |A| |A^perp| (S nonzero) or S = 0 (mu nontrivial on
/// the radical) for S = gauss_sum_exact(mu).
bool verify_gauss_normalization(const QuadraticMap& mu);

/// Phases of gamma(mu0 + chi(-, c)) for every c in index order, each by a
/// full summation over A. These maps exhaust Q_chi.
std::vector<PhaseQZ> shift_gauss_phases(const Bicharacter& chi);

/// zeta_k from precomputed shift_gauss_phases.
AlgebraicUnit zeta_from_phases(const Bicharacter& chi, const std::vector<PhaseQZ>& phases,
                               std::int64_t k);

/// zeta_{k_min} .. zeta_{k_max} from precomputed shift_gauss_phases.
std::vector<AlgebraicUnit> zeta_bruteforce_sequence(const Bicharacter& chi,
                                                    const std::vector<PhaseQZ>& phases,
                                                    std::int64_t k_min, std::int64_t k_max);
std::vector<AlgebraicUnit> zeta_bruteforce_sequence(const Bicharacter& chi, std::int64_t k_max);

/// zeta_k by summing gamma(mu)^k over all of Q_chi.
AlgebraicUnit zeta_bruteforce(const Bicharacter& chi, std::int64_t k);

/// zeta_k = gamma(mu0^{-k}) gamma(mu0)^k for the homogeneous base map mu0.
AlgebraicUnit zeta_via_prin(const Bicharacter& chi, std::int64_t k);
/// Same, with a caller-chosen homogeneous map on chi.
AlgebraicUnit zeta_via_prin(const Bicharacter& chi, const QuadraticMap& mu0, std::int64_t k);

/// zeta_0 .. zeta_{k_max} through the prin identity, sharing one value
/// histogram of mu0 across all k.
std::vector<AlgebraicUnit> zeta_sequence(const Bicharacter& chi, std::int64_t k_max);

/// Closed formula on an odd p-group from the orthogonal splitting.
AlgebraicUnit zeta_closed_form_p(const Bicharacter& chi, std::int64_t k);
/// zeta_0 .. zeta_{k_max} by the closed formula, splitting chi once.
std::vector<AlgebraicUnit> zeta_closed_form_sequence(const Bicharacter& chi, std::int64_t k_max);

/// Closed form of sum_{j mod p^s} exp(2 pi i d j^2 / p^s) as
/// p^{half_power / 2} * unit.
struct ClassicalGauss {
  std::int64_t p = 3;
  int half_power = 0;
  AlgebraicUnit unit = AlgebraicUnit::one();

  std::complex<double> value() const;
};

ClassicalGauss classical_gauss(std::int64_t d, std::int64_t p, int s);

/// The same closed form as an element of Z[zeta_{p^s}], writing
/// eps_p sqrt(p) as the quadratic Gauss sum sum_j (j/p) zeta_p^j.
CyclotomicInt classical_gauss_closed_exact(std::int64_t d, std::int64_t p, int s);
/// Direct p^s-term summation.
CyclotomicInt classical_gauss_direct(std::int64_t d, std::int64_t p, int s);

/// eps_a = i if a = 3 mod 4, else 1, returned as an eighth-root exponent.
int epsilon_exponent(std::int64_t a);

}  // namespace tyinv
