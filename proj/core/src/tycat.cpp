#include "tyinv/tycat.hpp"

#include <cmath>
#include <numbers>

#include "tyinv/error.hpp"
#include "tyinv/gauss.hpp"
#include "tyinv/number_theory.hpp"

namespace tyinv {

TYData::TYData(Bicharacter chi, int nu) : chi_(std::move(chi)), nu_(nu) {
  if (nu != 1 && nu != -1) throw InvalidInput("TYData: nu must be +1 or -1");
}

std::complex<double> CenterSimple::dim() const {
  return {std::sqrt(static_cast<double>(dim_squared)), 0.0};
}

std::vector<CenterSimple> center_simples(const TYData& t) {
  const auto& g = t.group();
  const auto& chi = t.chi();
  const std::int64_t n = t.n();
  std::vector<CenterSimple> out;
  out.reserve(static_cast<std::size_t>(4 * n + n * (n - 1) / 2));

  for (std::int64_t i = 0; i < n; ++i) {
    const GroupElement a = g.element(i);
    const PhaseQZ theta = -chi(a, a);
    const auto roots = theta.square_roots();
    for (int r = 0; r < 2; ++r) {
      CenterSimple x;
      x.kind = CenterKind::X;
      x.a = a;
      x.root = r;
      x.aux = roots[static_cast<std::size_t>(r)];
      x.twist = theta;
      x.dim_squared = 1;
      out.push_back(std::move(x));
    }
  }
  for (std::int64_t i = 0; i < n; ++i) {
    const GroupElement a = g.element(i);
    for (std::int64_t j = i + 1; j < n; ++j) {
      CenterSimple y;
      y.kind = CenterKind::Y;
      y.a = a;
      y.b = g.element(j);
      y.twist = -chi(a, y.b);
      y.dim_squared = 4;
      out.push_back(std::move(y));
    }
  }
  const auto phases = shift_gauss_phases(chi);
  const PhaseQZ sign = t.nu() == 1 ? PhaseQZ() : PhaseQZ(1, 2);
  for (std::int64_t c = 0; c < n; ++c) {
    const PhaseQZ gamma = phases[static_cast<std::size_t>(c)];
    const auto roots = (gamma + sign).square_roots();
    for (int r = 0; r < 2; ++r) {
      CenterSimple z;
      z.kind = CenterKind::Z;
      z.a = g.element(c);
      z.root = r;
      z.aux = gamma;
      z.twist = roots[static_cast<std::size_t>(r)];
      z.dim_squared = n;
      out.push_back(std::move(z));
    }
  }
  return out;
}

std::int64_t global_dim_center(const TYData& t, const std::vector<CenterSimple>& catalog) {
  std::int64_t total = 0;
  for (const auto& s : catalog) total = checked_mul(1, total + s.dim_squared);
  if (total != checked_mul(4, checked_mul(t.n(), t.n())))
    throw InternalInconsistency("global_dim_center: catalog dimension differs from 4n^2");
  return total;
}

std::int64_t global_dim_center(const TYData& t) {
  // dim^2 depends only on the kind, so the census suffices here.
  const std::int64_t n = t.n();
  const std::int64_t total = 2 * n * 1 + n * (n - 1) / 2 * 4 + 2 * n * n;
  if (total != 4 * n * n) throw InternalInconsistency("global_dim_center: census mismatch");
  return total;
}

bool verify_center_catalog(const TYData& t, const std::vector<CenterSimple>& catalog) {
  const std::int64_t n = t.n();
  std::int64_t xs = 0, ys = 0, zs = 0;
  const PhaseQZ sign = t.nu() == 1 ? PhaseQZ() : PhaseQZ(1, 2);
  for (const auto& s : catalog) {
    switch (s.kind) {
      case CenterKind::X:
        ++xs;
        if (s.aux.times(2) != -t.chi()(s.a, s.a) || s.dim_squared != 1) return false;
        break;
      case CenterKind::Y:
        ++ys;
        if (s.a == s.b || s.dim_squared != 4) return false;
        break;
      case CenterKind::Z:
        ++zs;
        if (s.twist.times(2) != s.aux + sign || s.dim_squared != n) return false;
        break;
    }
  }
  return xs == 2 * n && ys == n * (n - 1) / 2 && zs == 2 * n;
}

namespace {

std::int64_t twist_conductor(const TYData& t) { return 2 * gauss_conductor(t.group()); }

}  // namespace

CyclotomicInt tau_k_direct(const TYData& t, const std::vector<CenterSimple>& catalog, std::int64_t k) {
  if (k < 0) throw InvalidInput("tau_k: k must be nonnegative");
  const std::int64_t c = twist_conductor(t);
  std::vector<std::int64_t> weight(static_cast<std::size_t>(c), 0);
  for (const auto& s : catalog) {
    const std::int64_t e = mul_mod(k, s.twist.scaled_to(c), c);
    weight[static_cast<std::size_t>(e)] += s.dim_squared;
  }
  CyclotomicInt out(c);
  for (std::int64_t e = 0; e < c; ++e)
    if (weight[static_cast<std::size_t>(e)] != 0) out.add_root(e, weight[static_cast<std::size_t>(e)]);
  return out;
}

CyclotomicInt tau_k_direct(const TYData& t, std::int64_t k) {
  return tau_k_direct(t, center_simples(t), k);
}

std::complex<double> TauClosed::value() const {
  const std::complex<double> surd =
      zeta.is_zero() ? std::complex<double>{0.0, 0.0}
                     : static_cast<double>(sign) * std::sqrt(static_cast<double>(radicand)) * zeta.to_complex();
  return static_cast<double>(two_n) * (static_cast<double>(ak) + surd);
}

TauClosed tau_k_closed(const TYData& t, std::int64_t k) {
  if (k < 0) throw InvalidInput("tau_k: k must be nonnegative");
  TauClosed out;
  out.two_n = t.dimension();
  out.ak = torsion_order(t.group(), k);
  if (k % 2 == 1) return out;
  const std::int64_t h = k / 2;
  out.sign = (t.nu() == -1 && h % 2 == 1) ? -1 : 1;
  out.radicand = checked_mul(t.n(), torsion_order(t.group(), h));
  out.zeta = zeta_via_prin(t.chi(), h);
  return out;
}

bool tau_agree(const CyclotomicInt& direct, const TauClosed& closed) {
  const CyclotomicInt rest = direct - CyclotomicInt::integer(checked_mul(closed.two_n, closed.ak), direct.conductor());
  if (closed.zeta.is_zero()) return rest.is_zero();
  if (!closed.zeta.is_exact()) return false;
  const std::int64_t scale = checked_mul(checked_mul(closed.two_n, closed.two_n), closed.radicand);
  const CyclotomicInt square = CyclotomicInt::root(2 * closed.zeta.exponent(), 8) * scale;
  if (!(rest * rest == square)) return false;
  const std::complex<double> surd = closed.value() - static_cast<double>(closed.two_n * closed.ak);
  return std::abs(rest.to_complex() - surd) <= 1e-9;
}

LensInvariant lens_invariant_from_zeta(const TYData& t, std::int64_t k, const AlgebraicUnit& zeta_half) {
  if (k < 0) throw InvalidInput("lens_invariant: k must be nonnegative");
  const std::int64_t n = t.n();
  const Rational base(torsion_order(t.group(), k), 2 * n);
  if (k % 2 == 1) return LensInvariant::from_parts(base, Rational(0), 1, AlgebraicUnit::zero());
  const std::int64_t h = k / 2;
  const int sign = (t.nu() == -1 && h % 2 == 1) ? -1 : 1;
  return LensInvariant::from_parts(base, Rational(sign, 2 * n),
                                   checked_mul(n, torsion_order(t.group(), h)), zeta_half);
}

LensInvariant lens_invariant(const TYData& t, std::int64_t k) {
  if (k < 0) throw InvalidInput("lens_invariant: k must be nonnegative");
  const AlgebraicUnit z = k % 2 == 0 ? zeta_via_prin(t.chi(), k / 2) : AlgebraicUnit::zero();
  return lens_invariant_from_zeta(t, k, z);
}

std::complex<double> lens_invariant_via_tau(const TYData& t, std::int64_t k) {
  const double d = static_cast<double>(t.dimension());
  return tau_k_direct(t, k).to_complex() / (d * d);
}

std::complex<double> FsIndicator::value() const {
  return std::sqrt(static_cast<double>(ak)) * unit.to_complex();
}

FsIndicator fs_indicator(const TYData& t, std::int64_t k) {
  if (k < 1) throw InvalidInput("fs_indicator: k must be at least 1");
  FsIndicator out;
  out.ak = torsion_order(t.group(), k);
  const AlgebraicUnit sign = (t.nu() == -1 && k % 2 == 1) ? AlgebraicUnit::eighth_root(4) : AlgebraicUnit::one();
  out.unit = sign * zeta_via_prin(t.chi(), k);
  return out;
}

std::complex<double> fs_indicator_from_center(const TYData& t, const std::vector<CenterSimple>& catalog,
                                              std::int64_t k) {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& s : catalog)
    if (s.kind == CenterKind::Z) acc += s.twist.times(2 * k).to_complex() * s.dim();
  return acc / static_cast<double>(t.dimension());
}

std::string to_string(Perturbation p) {
  switch (p) {
    case Perturbation::None: return "none";
    case Perturbation::NonBilinearChi: return "non-bilinear-chi";
    case Perturbation::ScaledMmm: return "scaled-phi-mmm";
    case Perturbation::SquaredAmb: return "phi-amb-chi-squared";
    case Perturbation::InverseAmb: return "phi-amb-chi-inverse";
  }
  return "unknown";
}

namespace {

using cplx = std::complex<double>;

/// Associators phi_{U,V,W} of TY(A, chi, nu) as F-symbols over the simples
/// 0..n-1 (elements of A by index) and m = n.
class Associators {
 public:
  Associators(const TYData& t, Perturbation p) : n_(t.n()), m_(t.n()), nu_(t.nu()) {
    const auto& g = t.group();
    const auto elems = g.elements();
    const auto un = static_cast<std::size_t>(n_);
    add_.assign(un * un, 0);
    neg_.assign(un, 0);
    chi_.assign(un * un, cplx{1.0, 0.0});
    for (std::size_t i = 0; i < un; ++i) {
      neg_[i] = g.index_of(g.negate(elems[i]));
      for (std::size_t j = 0; j < un; ++j) {
        add_[i * un + j] = g.index_of(g.add(elems[i], elems[j]));
        chi_[i * un + j] = t.chi()(elems[i], elems[j]).to_complex();
      }
    }
    amb_ = chi_;
    switch (p) {
      case Perturbation::None: break;
      case Perturbation::NonBilinearChi: {
        const std::size_t i = un > 1 ? 1 : 0;
        const cplx rot = std::polar(1.0, 1.0);
        chi_[i * un + i] *= rot;
        amb_ = chi_;
        break;
      }
      case Perturbation::ScaledMmm: mmm_scale_ = 2.0; break;
      case Perturbation::SquaredAmb:
        for (auto& z : amb_) z *= z;
        break;
      case Perturbation::InverseAmb:
        for (auto& z : amb_) z = 1.0 / z;
        break;
    }
  }

  std::int64_t m() const { return m_; }
  std::int64_t simples() const { return n_ + 1; }
  std::int64_t dual(std::int64_t v) const { return v == m_ ? m_ : neg_[static_cast<std::size_t>(v)]; }

  bool fuses(std::int64_t a, std::int64_t b, std::int64_t c) const {
    if (a != m_ && b != m_) return c == add_[static_cast<std::size_t>(a * n_ + b)];
    if (a == m_ && b == m_) return c != m_;
    return c == m_;
  }

  std::vector<std::int64_t> fuse(std::int64_t a, std::int64_t b) const {
    if (a != m_ && b != m_) return {add_[static_cast<std::size_t>(a * n_ + b)]};
    if (a == m_ && b == m_) {
      std::vector<std::int64_t> all(static_cast<std::size_t>(n_));
      for (std::int64_t i = 0; i < n_; ++i) all[static_cast<std::size_t>(i)] = i;
      return all;
    }
    return {m_};
  }

  /// F^{UVW}_Y[E -> F]: component of phi_{U,V,W} from the summand of
  /// (U V) W through E to the summand of U (V W) through F, both at Y.
  cplx f(std::int64_t u, std::int64_t v, std::int64_t w, std::int64_t y, std::int64_t e,
         std::int64_t fl) const {
    if (!fuses(u, v, e) || !fuses(e, w, y) || !fuses(v, w, fl) || !fuses(u, fl, y)) return 0.0;
    const bool um = u == m_, vm = v == m_, wm = w == m_;
    if (!vm && (!um || !wm)) return 1.0;          // (a,b,c), (a,b,m), (m,a,b)
    if (!um && vm && !wm) return amb(u, w);        // (a,m,b)
    if (!um && vm && wm) return 1.0;               // (a,m,m)
    if (um && vm && !wm) return 1.0;               // (m,m,a)
    if (um && !vm && wm) return chi(v, y);         // (m,a,m), summand y = b
    return static_cast<double>(nu_) * mmm_scale_ / std::sqrt(static_cast<double>(n_)) / chi(e, fl);
  }

  /// Matrix of phi_{U,V,W} at Y with rows E and columns F.
  std::vector<std::vector<cplx>> matrix(std::int64_t u, std::int64_t v, std::int64_t w, std::int64_t y,
                                        std::vector<std::int64_t>& rows,
                                        std::vector<std::int64_t>& cols) const {
    rows.clear();
    cols.clear();
    for (const auto e : fuse(u, v))
      if (fuses(e, w, y)) rows.push_back(e);
    for (const auto fl : fuse(v, w))
      if (fuses(u, fl, y)) cols.push_back(fl);
    std::vector<std::vector<cplx>> out(rows.size(), std::vector<cplx>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) out[i][j] = f(u, v, w, y, rows[i], cols[j]);
    return out;
  }

 private:
  cplx chi(std::int64_t a, std::int64_t b) const { return chi_[static_cast<std::size_t>(a * n_ + b)]; }
  cplx amb(std::int64_t a, std::int64_t b) const { return amb_[static_cast<std::size_t>(a * n_ + b)]; }

  std::int64_t n_;
  std::int64_t m_;
  int nu_;
  double mmm_scale_ = 1.0;
  std::vector<std::int64_t> add_;
  std::vector<std::int64_t> neg_;
  std::vector<cplx> chi_;
  std::vector<cplx> amb_;
};

constexpr double kStructureTolerance = 1e-9;

std::string simple_name(std::int64_t v, std::int64_t m) { return v == m ? "m" : std::to_string(v); }

/// Inverse by Gauss-Jordan elimination with partial pivoting; empty if singular.
std::vector<std::vector<cplx>> invert(std::vector<std::vector<cplx>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<cplx>> inv(n, std::vector<cplx>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-12) return {};
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const cplx d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0.0) continue;
      const cplx factor = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= factor * a[col][j];
        inv[r][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

void require_small(const TYData& t, std::int64_t bound, const char* what) {
  if (t.n() > bound)
    throw BoundExceeded(std::string(what) + ": |A| = " + std::to_string(t.n()) + " exceeds bound " +
                        std::to_string(bound));
}

}  // namespace

PentagonReport verify_pentagon(const TYData& t, Perturbation p, std::int64_t bound) {
  require_small(t, bound, "verify_pentagon");
  const Associators phi(t, p);
  const std::int64_t s = phi.simples();
  PentagonReport report;
  report.quadruple_ok.assign(static_cast<std::size_t>(s * s * s * s), true);

  for (std::int64_t u = 0; u < s; ++u)
    for (std::int64_t v = 0; v < s; ++v)
      for (std::int64_t w = 0; w < s; ++w)
        for (std::int64_t x = 0; x < s; ++x) {
          double worst = 0.0;
          for (std::int64_t y = 0; y < s; ++y) {
            for (const auto e : phi.fuse(u, v))
              for (const auto gl : phi.fuse(e, w)) {
                if (!phi.fuses(gl, x, y)) continue;
                for (const auto h : phi.fuse(w, x))
                  for (const auto kl : phi.fuse(v, h)) {
                    if (!phi.fuses(u, kl, y)) continue;
                    const cplx lhs = phi.f(e, w, x, y, gl, h) * phi.f(u, v, h, y, e, kl);
                    cplx rhs = 0.0;
                    for (const auto fl : phi.fuse(v, w)) {
                      if (!phi.fuses(u, fl, gl) || !phi.fuses(fl, x, kl)) continue;
                      rhs += phi.f(u, v, w, gl, e, fl) * phi.f(u, fl, x, y, gl, kl) * phi.f(v, w, x, kl, fl, h);
                    }
                    worst = std::max(worst, std::abs(lhs - rhs));
                  }
              }
          }
          ++report.quadruples;
          report.max_residual = std::max(report.max_residual, worst);
          if (worst > kStructureTolerance) {
            ++report.failures;
            report.quadruple_ok[static_cast<std::size_t>(((u * s + v) * s + w) * s + x)] = false;
            if (report.first_failures.size() < 8)
              report.first_failures.push_back("(" + simple_name(u, phi.m()) + "," + simple_name(v, phi.m()) + "," +
                                              simple_name(w, phi.m()) + "," + simple_name(x, phi.m()) +
                                              ") residual " + std::to_string(worst));
          }
        }
  return report;
}

DualityReport verify_duality(const TYData& t, DualityPerturbation p, std::int64_t bound) {
  require_small(t, bound, "verify_duality");
  const Associators phi(t, Perturbation::None);
  const double root_n = std::sqrt(static_cast<double>(t.n()));
  const double nu = t.nu();
  const std::int64_t m = phi.m();
  const std::int64_t zero = 0;  // index of the identity element

  struct Coefficients {
    cplx coev, ev, coev_r, ev_r;
  };
  auto coefficients = [&](std::int64_t v) -> Coefficients {
    if (v != m) return {1.0, 1.0, 1.0, 1.0};
    const double scale = p == DualityPerturbation::ScaledLeftProjection ? 2.0 : 1.0;
    return {1.0, scale * nu * root_n, nu, root_n};
  };

  // Entry [E = 0 -> F = 0] of phi_{U,V,W} at Y, or of its inverse.
  auto unit_entry = [&](std::int64_t u, std::int64_t v, std::int64_t w, std::int64_t y, bool inverse) -> cplx {
    std::vector<std::int64_t> rows, cols;
    auto mat = phi.matrix(u, v, w, y, rows, cols);
    if (rows.size() != cols.size()) return std::nan("");
    if (inverse) {
      mat = invert(mat);
      if (mat.empty()) return std::nan("");
      std::swap(rows, cols);
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (rows[i] == zero && cols[j] == zero) return mat[i][j];
    return std::nan("");
  };

  DualityReport report;
  bool spherical = true;
  auto check = [&](const std::string& label, cplx value) {
    ++report.checks;
    if (!(std::abs(value - cplx{1.0, 0.0}) <= kStructureTolerance)) {
      ++report.failures;
      if (report.first_failures.size() < 8)
        report.first_failures.push_back(label + " = (" + std::to_string(value.real()) + "," +
                                        std::to_string(value.imag()) + ")");
    }
  };

  for (std::int64_t v = 0; v < phi.simples(); ++v) {
    const std::int64_t vd = phi.dual(v);
    const Coefficients c = coefficients(v);
    const std::string name = simple_name(v, m);
    check("left zig-zag on " + name, c.coev * unit_entry(v, vd, v, v, false) * c.ev);
    check("left zig-zag on dual of " + name, c.coev * unit_entry(vd, v, vd, vd, true) * c.ev);
    check("right zig-zag on " + name, c.coev_r * unit_entry(v, vd, v, v, true) * c.ev_r);
    check("right zig-zag on dual of " + name, c.coev_r * unit_entry(vd, v, vd, vd, false) * c.ev_r);

    const cplx left_dim = c.ev_r * c.coev;
    const cplx right_dim = c.ev * c.coev_r;
    if (std::abs(left_dim - right_dim) > kStructureTolerance) spherical = false;
    if (v == m) {
      report.left_dim_m = left_dim;
      report.right_dim_m = right_dim;
    }
  }
  report.spherical = spherical;
  return report;
}

}  // namespace tyinv
