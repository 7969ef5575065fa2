#include "tyinv/lens.hpp"

#include <cmath>
#include <tuple>

#include "tyinv/error.hpp"
#include "tyinv/number_theory.hpp"

namespace tyinv {

std::string rational_to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    const std::int64_t den = std::stoll(text.substr(slash + 1));
    if (den == 0) throw InvalidInput("rational with zero denominator: " + text);
    return Rational(std::stoll(text.substr(0, slash)), den);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const InvalidInput*>(&e) != nullptr) throw;
    throw InvalidInput("malformed rational: " + text);
  }
}

LensInvariant LensInvariant::from_parts(Rational q, Rational c, std::int64_t radicand,
                                        const AlgebraicUnit& u) {
  if (radicand < 1) throw InvalidInput("LensInvariant: radicand must be positive");
  if (!u.is_exact()) throw InvalidInput("LensInvariant: unit must be zero or an eighth root");
  LensInvariant out;
  out.re_rat = q;
  if (u.is_zero() || c.numerator() == 0) return out;

  auto [root, free] = split_square(radicand);
  c *= root;
  const int j = u.exponent();
  Rational re{0}, im{0};
  if (j % 2 == 0) {
    static constexpr int kRe[4] = {1, 0, -1, 0};
    static constexpr int kIm[4] = {0, 1, 0, -1};
    re = c * kRe[j / 2];
    im = c * kIm[j / 2];
  } else {
    // sqrt(f) e^{2 pi i j / 8} = sqrt(2f)/2 (+-1 +- i)
    auto [root2, free2] = split_square(2 * free);
    free = free2;
    c *= Rational(root2, 2);
    static constexpr int kRe[4] = {1, -1, -1, 1};
    static constexpr int kIm[4] = {1, 1, -1, -1};
    re = c * kRe[j / 2];
    im = c * kIm[j / 2];
  }
  if (free == 1) {
    out.re_rat += re;
    out.im_rat += im;
  } else {
    out.re_coef = re;
    out.im_coef = im;
    out.m = free;
  }
  return out;
}

std::complex<double> LensInvariant::value() const {
  auto d = [](const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
  };
  const double sq = std::sqrt(static_cast<double>(m));
  return {d(re_rat) + d(re_coef) * sq, d(im_rat) + d(im_coef) * sq};
}

std::string LensInvariant::to_string() const {
  auto part = [this](const Rational& rat, const Rational& coef) {
    std::string text;
    if (rat.numerator() != 0) text = rational_to_string(rat);
    if (coef.numerator() != 0) {
      const std::string surd = "sqrt(" + std::to_string(m) + ")";
      Rational c = coef;
      if (!text.empty()) {
        text += c.numerator() < 0 ? " - " : " + ";
        if (c.numerator() < 0) c = -c;
      }
      text += c == Rational(1) ? surd : rational_to_string(c) + "*" + surd;
    }
    return text;
  };
  const std::string re = part(re_rat, re_coef);
  const std::string im = part(im_rat, im_coef);
  if (im.empty()) return re.empty() ? "0" : re;
  const std::string im_term = "(" + im + ")i";
  return re.empty() ? im_term : re + " + " + im_term;
}

namespace {
auto key(const LensInvariant& x) {
  auto p = [](const Rational& r) { return std::make_pair(r.numerator(), r.denominator()); };
  return std::make_tuple(p(x.re_rat), p(x.re_coef), p(x.im_rat), p(x.im_coef), x.m);
}
}  // namespace

bool LensInvariant::operator==(const LensInvariant& o) const { return key(*this) == key(o); }
bool LensInvariant::operator<(const LensInvariant& o) const { return key(*this) < key(o); }

}  // namespace tyinv
