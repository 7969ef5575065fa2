#include "tyinv/algebraic_unit.hpp"

#include <array>
#include <cmath>
#include <cstdio>

#include "tyinv/error.hpp"
#include "tyinv/number_theory.hpp"
#include "tyinv/phase.hpp"

namespace tyinv {

namespace {

const std::array<std::complex<double>, 8>& eighth_roots() {
  static const std::array<std::complex<double>, 8> roots = [] {
    std::array<std::complex<double>, 8> t{};
    for (int j = 0; j < 8; ++j) t[static_cast<std::size_t>(j)] = PhaseQZ(j, 8).to_complex();
    return t;
  }();
  return roots;
}

}  // namespace

AlgebraicUnit AlgebraicUnit::eighth_root(std::int64_t j) {
  const auto r = static_cast<int>(j & 7);
  return AlgebraicUnit(Kind::EighthRoot, r, eighth_roots()[static_cast<std::size_t>(r)]);
}

AlgebraicUnit AlgebraicUnit::snap(std::complex<double> z, double tol) {
  if (std::norm(z) < tol * tol) return zero();
  const auto& roots = eighth_roots();
  for (int j = 0; j < 8; ++j)
    if (std::norm(z - roots[static_cast<std::size_t>(j)]) < tol * tol) return eighth_root(j);
  return unit(z);
}

std::complex<double> AlgebraicUnit::to_complex() const { return value_; }

AlgebraicUnit AlgebraicUnit::operator*(const AlgebraicUnit& o) const {
  if (is_zero() || o.is_zero()) return zero();
  if (kind_ == Kind::EighthRoot && o.kind_ == Kind::EighthRoot) return eighth_root(j_ + o.j_);
  return unit(value_ * o.value_);
}

AlgebraicUnit AlgebraicUnit::pow(std::int64_t k) const {
  if (k == 0) return one();
  switch (kind_) {
    case Kind::Zero:
      if (k < 0) throw InvalidInput("AlgebraicUnit::pow: negative power of zero");
      return zero();
    case Kind::EighthRoot:
      return eighth_root(mul_mod(j_, k, 8));
    case Kind::Unit:
      return unit(std::pow(value_, static_cast<double>(k)));
  }
  return zero();
}

AlgebraicUnit AlgebraicUnit::conj() const {
  switch (kind_) {
    case Kind::Zero:
      return zero();
    case Kind::EighthRoot:
      return eighth_root(-j_);
    case Kind::Unit:
      return unit(std::conj(value_));
  }
  return zero();
}

std::string AlgebraicUnit::to_string() const {
  switch (kind_) {
    case Kind::Zero:
      return "0";
    case Kind::EighthRoot:
      return "zeta8^" + std::to_string(j_);
    case Kind::Unit: {
      char buf[96];
      std::snprintf(buf, sizeof buf, "unit(%.17g,%.17g)", value_.real(), value_.imag());
      return buf;
    }
  }
  return "0";
}

AlgebraicUnit AlgebraicUnit::parse(std::string_view text) {
  if (text == "0") return zero();
  if (text == "1") return eighth_root(0);
  if (text == "i") return eighth_root(2);
  if (text == "-1") return eighth_root(4);
  if (text == "-i") return eighth_root(6);
  constexpr std::string_view prefix = "zeta8^";
  if (text.starts_with(prefix) && text.size() == prefix.size() + 1) {
    const char c = text.back();
    if (c >= '0' && c <= '7') return eighth_root(c - '0');
  }
  throw InvalidInput("bad algebraic unit literal '" + std::string(text) + "'");
}

bool AlgebraicUnit::operator==(const AlgebraicUnit& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::Zero:
      return true;
    case Kind::EighthRoot:
      return j_ == o.j_;
    case Kind::Unit:
      return std::abs(value_ - o.value_) < kSnapTolerance;
  }
  return false;
}

}  // namespace tyinv
