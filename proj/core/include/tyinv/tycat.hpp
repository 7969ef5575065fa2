#pragma once

// Tambara-Yamagami data TY(A, chi, nu): the simple objects of its center,
// the sums tau_k, lens-space invariants |L_k|, Frobenius-Schur indicators of
// m, and mechanical checks of the pentagon and zig-zag identities.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "tyinv/algebraic_unit.hpp"
#include "tyinv/cyclotomic.hpp"
#include "tyinv/forms.hpp"
#include "tyinv/lens.hpp"
#include "tyinv/phase.hpp"

namespace tyinv {

class TYData {
 public:
  TYData(Bicharacter chi, int nu);

  const Bicharacter& chi() const { return chi_; }
  const FiniteAbelianGroup& group() const { return chi_.group(); }
  int nu() const { return nu_; }
  std::int64_t n() const { return chi_.group().order(); }
  std::int64_t dimension() const { return 2 * n(); }

 private:
  Bicharacter chi_;
  int nu_;
};

enum class CenterKind { X, Y, Z };

struct CenterSimple {
  CenterKind kind = CenterKind::X;
  /// X: a.  Y: the pair a < b (index order).  Z: a is the shift c with
  /// mu = mu0 + chi(-, c).
  GroupElement a;
  GroupElement b;
  /// Which of the two square roots (0 or 1) was taken for epsilon or Delta.
  int root = 0;
  /// X: epsilon with 2 epsilon = -chi(a,a).  Z: gamma(mu) as a phase.
  PhaseQZ aux;
  PhaseQZ twist;
  /// dim^2 is 1, 4 or n.
  std::int64_t dim_squared = 1;

  std::complex<double> dim() const;
};

std::vector<CenterSimple> center_simples(const TYData& t);

/// Sum of dim^2 over the catalog; throws InternalInconsistency unless 4 n^2.
std::int64_t global_dim_center(const TYData& t);
std::int64_t global_dim_center(const TYData& t, const std::vector<CenterSimple>& catalog);

/// Checks the census (2n, n(n-1)/2, 2n) and Delta^2 = nu gamma(mu) exactly.
bool verify_center_catalog(const TYData& t, const std::vector<CenterSimple>& catalog);

/// tau_k = sum_i theta_i^k dim(i)^2 as an element of Z[zeta_C].
CyclotomicInt tau_k_direct(const TYData& t, std::int64_t k);
CyclotomicInt tau_k_direct(const TYData& t, const std::vector<CenterSimple>& catalog, std::int64_t k);

/// 2n (|A_k| + sign sqrt(radicand) zeta); for odd k the surd term is absent.
struct TauClosed {
  std::int64_t two_n = 2;
  std::int64_t ak = 1;
  int sign = 1;
  std::int64_t radicand = 1;
  AlgebraicUnit zeta = AlgebraicUnit::zero();

  std::complex<double> value() const;
};

TauClosed tau_k_closed(const TYData& t, std::int64_t k);

/// Exact comparison: with R = direct - 2n|A_k|, requires R^2 = closed-surd^2
/// in Z[zeta] and R within 1e-9 of the closed surd numerically.
bool tau_agree(const CyclotomicInt& direct, const TauClosed& closed);

LensInvariant lens_invariant(const TYData& t, std::int64_t k);
/// |L_k| from a precomputed zeta_{k/2} (ignored for odd k).
LensInvariant lens_invariant_from_zeta(const TYData& t, std::int64_t k, const AlgebraicUnit& zeta_half);
/// tau_k_direct / (2n)^2, numerically.
std::complex<double> lens_invariant_via_tau(const TYData& t, std::int64_t k);

/// nu_{2k}(m) = sqrt(ak) * unit with unit = nu^k zeta_k.
struct FsIndicator {
  std::int64_t ak = 1;
  AlgebraicUnit unit = AlgebraicUnit::one();

  std::complex<double> value() const;
};

FsIndicator fs_indicator(const TYData& t, std::int64_t k);

/// (dim C)^{-1} sum over center simples over m of theta^{2k} dim, i.e. the
/// indicator evaluated from the catalog.
std::complex<double> fs_indicator_from_center(const TYData& t, const std::vector<CenterSimple>& catalog,
                                              std::int64_t k);

enum class Perturbation {
  None,
  NonBilinearChi,  ///< one off-diagonal value of chi moved by a phase
  ScaledMmm,       ///< phi_{m,m,m} multiplied by 2
  SquaredAmb,      ///< phi_{a,m,b} built from chi^2
  InverseAmb,      ///< phi_{a,m,b} built from chi^{-1}
};

std::string to_string(Perturbation p);

inline constexpr std::int64_t kDefaultStructureBound = 16;

struct PentagonReport {
  std::int64_t quadruples = 0;
  std::int64_t failures = 0;
  double max_residual = 0.0;
  /// Row-major over (U, V, W, X) with simples ordered 0..n-1 then m.
  std::vector<bool> quadruple_ok;
  std::vector<std::string> first_failures;

  bool passed() const { return failures == 0 && quadruples > 0; }
};

PentagonReport verify_pentagon(const TYData& t, Perturbation p = Perturbation::None,
                               std::int64_t bound = kDefaultStructureBound);

struct DualityReport {
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  std::complex<double> left_dim_m;
  std::complex<double> right_dim_m;
  bool spherical = false;
  std::vector<std::string> first_failures;

  bool passed() const { return failures == 0 && spherical; }
};

enum class DualityPerturbation { None, ScaledLeftProjection };

DualityReport verify_duality(const TYData& t, DualityPerturbation p = DualityPerturbation::None,
                             std::int64_t bound = kDefaultStructureBound);

}  // namespace tyinv
