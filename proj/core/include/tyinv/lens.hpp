#pragma once

// Exact values of the form (q1 + c1 sqrt(m)) + i (q2 + c2 sqrt(m)) with
// rational q, c and squarefree m, the shape taken by |L_k| for
// Tambara-Yamagami categories.

#include <complex>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

#include "tyinv/algebraic_unit.hpp"

namespace tyinv {

using Rational = boost::rational<std::int64_t>;

std::string rational_to_string(const Rational& q);
Rational parse_rational(const std::string& text);

struct LensInvariant {
  Rational re_rat{0};
  Rational re_coef{0};
  Rational im_rat{0};
  Rational im_coef{0};
  std::int64_t m = 1;

  /// Builds q + c sqrt(radicand) * u for an exact unit u (Zero drops the
  /// surd entirely), then canonicalizes.
  static LensInvariant from_parts(Rational q, Rational c, std::int64_t radicand,
                                  const AlgebraicUnit& u);

  std::complex<double> value() const;
  std::string to_string() const;

  bool operator==(const LensInvariant& o) const;
  bool operator<(const LensInvariant& o) const;
};

}  // namespace tyinv
