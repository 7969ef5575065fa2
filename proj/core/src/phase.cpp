#include "tyinv/phase.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

#include "tyinv/error.hpp"
#include "tyinv/number_theory.hpp"

namespace tyinv {

PhaseQZ::PhaseQZ(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw InvalidInput("phase denominator must be positive");
  num = mod_floor(num, den);
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

PhaseQZ PhaseQZ::operator+(const PhaseQZ& o) const {
  const std::int64_t l = checked_lcm(den_, o.den_);
  return PhaseQZ(mul_mod(num_, l / den_, l) + mul_mod(o.num_, l / o.den_, l), l);
}

PhaseQZ PhaseQZ::operator-(const PhaseQZ& o) const { return *this + (-o); }

PhaseQZ PhaseQZ::operator-() const { return PhaseQZ(den_ - num_, den_); }

PhaseQZ PhaseQZ::times(std::int64_t n) const { return PhaseQZ(mul_mod(num_, n, den_), den_); }

std::array<PhaseQZ, 2> PhaseQZ::square_roots() const {
  const PhaseQZ half(num_, checked_mul(2, den_));
  return {half, half + PhaseQZ(1, 2)};
}

std::int64_t PhaseQZ::scaled_to(std::int64_t level) const {
  if (level % den_ != 0) {
    throw InvalidInput("phase " + to_string() + " does not live at level " +
                       std::to_string(level));
  }
  return num_ * (level / den_);
}

std::complex<double> PhaseQZ::to_complex() const {
  // Reduce to a symmetric angle first so sin/cos see arguments in [-pi, pi].
  std::int64_t n = num_;
  if (2 * n > den_) n -= den_;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(n) / static_cast<double>(den_);
  return {std::cos(angle), std::sin(angle)};
}

std::string PhaseQZ::to_string() const {
  if (num_ == 0) return "0";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

PhaseQZ PhaseQZ::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw InvalidInput("bad phase literal '" + std::string(text) + "'");
    }
    return v;
  };
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return PhaseQZ(parse_int(text), 1);
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw InvalidInput("bad phase literal '" + std::string(text) + "'");
  return PhaseQZ(parse_int(text.substr(0, slash)), den);
}

}  // namespace tyinv
