#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tyinv {

/// Snap tolerance for Zero / eighth-root recognition.
inline constexpr double kSnapTolerance = 1e-6;

/// Exactly zero, an exact eighth root of unity zeta_8^j, or (when snapping
/// failed) a raw complex value.
class AlgebraicUnit {
 public:
  enum class Kind { Zero, EighthRoot, Unit };

  static AlgebraicUnit zero() { return AlgebraicUnit(Kind::Zero, 0, {0.0, 0.0}); }
  static AlgebraicUnit eighth_root(std::int64_t j);
  static AlgebraicUnit one() { return eighth_root(0); }
  static AlgebraicUnit unit(std::complex<double> value) { return AlgebraicUnit(Kind::Unit, 0, value); }
  /// Zero if |z| < tol, nearest zeta_8^j if within tol, otherwise Unit(z).
  static AlgebraicUnit snap(std::complex<double> z, double tol = kSnapTolerance);

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_exact() const { return kind_ != Kind::Unit; }
  /// Exponent j in 0..7; only meaningful for EighthRoot.
  int exponent() const { return j_; }

  std::complex<double> to_complex() const;

  AlgebraicUnit operator*(const AlgebraicUnit& o) const;
  AlgebraicUnit pow(std::int64_t k) const;
  AlgebraicUnit conj() const;

  /// "0", "zeta8^j" or "unit(re,im)".
  std::string to_string() const;
  /// Inverse of to_string() for the exact forms; "1", "i", "-1" and "-i" are
  /// accepted as shorthands.
  static AlgebraicUnit parse(std::string_view text);

  /// Exact forms compare structurally; Unit values compare numerically.
  bool operator==(const AlgebraicUnit& o) const;

 private:
  AlgebraicUnit(Kind k, int j, std::complex<double> v) : kind_(k), j_(j), value_(v) {}

  Kind kind_;
  int j_;
  std::complex<double> value_;
};

}  // namespace tyinv
