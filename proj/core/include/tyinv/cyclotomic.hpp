#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace tyinv {

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n);

/// sum_j c_j zeta_N^j with integer c_j, j = 0..N-1. The coefficient vector is
/// a representative in Z[x]/(x^N - 1); equality is decided after reduction
/// modulo Phi_N.
class CyclotomicInt {
 public:
  explicit CyclotomicInt(std::int64_t conductor = 1);

  static CyclotomicInt integer(std::int64_t value, std::int64_t conductor = 1);
  static CyclotomicInt root(std::int64_t exponent, std::int64_t conductor);

  std::int64_t conductor() const { return conductor_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  /// Adds mult * zeta_N^exponent.
  void add_root(std::int64_t exponent, std::int64_t mult = 1);

  CyclotomicInt operator+(const CyclotomicInt& o) const;
  CyclotomicInt operator-(const CyclotomicInt& o) const;
  CyclotomicInt operator*(const CyclotomicInt& o) const;
  CyclotomicInt operator*(std::int64_t s) const;
  CyclotomicInt& operator+=(const CyclotomicInt& o) { return *this = *this + o; }

  /// Complex conjugate: zeta^j -> zeta^{-j}.
  CyclotomicInt conj() const;

  /// Same value at conductor m (N must divide m).
  CyclotomicInt lifted(std::int64_t m) const;
  /// Same value at the smallest conductor dividing N that holds every exponent.
  CyclotomicInt compressed() const;

  /// Canonical remainder modulo Phi_N, length phi(N).
  std::vector<std::int64_t> reduced() const;
  bool is_zero() const;
  bool operator==(const CyclotomicInt& o) const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  std::int64_t conductor_;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace tyinv
