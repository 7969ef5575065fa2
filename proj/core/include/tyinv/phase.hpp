#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace tyinv {

/// Element q of Q/Z, standing for the root of unity exp(2 pi i q).
/// Always reduced with 0 <= num < den. Multiplication of roots of unity is
/// addition here.
class PhaseQZ {
 public:
  constexpr PhaseQZ() = default;
  /// num/den reduced modulo 1; den must be positive.
  PhaseQZ(std::int64_t num, std::int64_t den);

  static PhaseQZ zero() { return PhaseQZ(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  /// Multiplicative order of the root of unity, i.e. the reduced denominator.
  std::int64_t order() const { return den_; }

  PhaseQZ operator+(const PhaseQZ& o) const;
  PhaseQZ operator-(const PhaseQZ& o) const;
  PhaseQZ operator-() const;
  PhaseQZ& operator+=(const PhaseQZ& o) { return *this = *this + o; }
  PhaseQZ& operator-=(const PhaseQZ& o) { return *this = *this - o; }
  /// n-th power of the root of unity.
  PhaseQZ times(std::int64_t n) const;

  /// Both square roots: {q/2, q/2 + 1/2}.
  std::array<PhaseQZ, 2> square_roots() const;

  /// Integer c with q = c / level; throws when den does not divide level.
  std::int64_t scaled_to(std::int64_t level) const;

  std::complex<double> to_complex() const;

  /// "p/q" (always with a denominator, "0/1" for the identity).
  std::string to_string() const;
  /// Accepts "p/q", "p" or "-p/q"; reduces modulo 1.
  static PhaseQZ parse(std::string_view text);

  bool operator==(const PhaseQZ&) const = default;
  auto operator<=>(const PhaseQZ&) const = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace tyinv
