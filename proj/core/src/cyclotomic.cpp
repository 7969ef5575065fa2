#include "tyinv/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include "tyinv/error.hpp"
#include "tyinv/number_theory.hpp"
#include "tyinv/phase.hpp"

namespace tyinv {

namespace {

// Exact division by a monic polynomial; the remainder must vanish.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t k = 0; k <= dn; ++k) num[i - dn + k] -= c * den[k];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw InternalInconsistency("cyclotomic polynomial division left a remainder");
  }
  return quot;
}

using RootTable = std::vector<std::complex<long double>>;

constexpr std::int64_t kMaxCachedConductor = std::int64_t{1} << 17;

std::complex<long double> root_of_unity(std::int64_t j, std::int64_t n) {
  const std::int64_t r = 2 * j > n ? j - n : j;
  const long double theta =
      2.0L * std::numbers::pi_v<long double> * static_cast<long double>(r) / static_cast<long double>(n);
  return {std::cos(theta), std::sin(theta)};
}

const RootTable& root_table(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, RootTable> cache;
  std::lock_guard lock(mu);
  auto [it, fresh] = cache.try_emplace(n);
  if (fresh) {
    it->second.reserve(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j) it->second.push_back(root_of_unity(j, n));
  }
  return it->second;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, std::vector<std::int64_t>> cache;
  if (n < 1) throw InvalidInput("cyclotomic_polynomial: n must be positive");
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<std::int64_t> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(poly)).first->second;
}

CyclotomicInt::CyclotomicInt(std::int64_t conductor)
    : conductor_(conductor), coeffs_(static_cast<std::size_t>(conductor), 0) {
  if (conductor < 1) throw InvalidInput("CyclotomicInt: conductor must be positive");
}

CyclotomicInt CyclotomicInt::integer(std::int64_t value, std::int64_t conductor) {
  CyclotomicInt z(conductor);
  z.coeffs_[0] = value;
  return z;
}

CyclotomicInt CyclotomicInt::root(std::int64_t exponent, std::int64_t conductor) {
  CyclotomicInt z(conductor);
  z.add_root(exponent);
  return z;
}

void CyclotomicInt::add_root(std::int64_t exponent, std::int64_t mult) {
  coeffs_[static_cast<std::size_t>(mod_floor(exponent, conductor_))] += mult;
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
  const std::int64_t m = std::lcm(conductor_, o.conductor_);
  CyclotomicInt a = lifted(m);
  const CyclotomicInt b = o.lifted(m);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  return a;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const { return *this + o * -1; }

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
  const std::int64_t m = std::lcm(conductor_, o.conductor_);
  const CyclotomicInt a = lifted(m);
  const CyclotomicInt b = o.lifted(m);
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
    if (b.coeffs_[j] != 0) nz.push_back(j);
  CyclotomicInt out(m);
  const auto mm = static_cast<std::size_t>(m);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const std::int64_t ci = a.coeffs_[i];
    if (ci == 0) continue;
    for (std::size_t j : nz) {
      std::size_t k = i + j;
      if (k >= mm) k -= mm;
      out.coeffs_[k] += ci * b.coeffs_[j];
    }
  }
  return out;
}

CyclotomicInt CyclotomicInt::operator*(std::int64_t s) const {
  CyclotomicInt out = *this;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

CyclotomicInt CyclotomicInt::conj() const {
  CyclotomicInt out(conductor_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) out.add_root(-static_cast<std::int64_t>(j), coeffs_[j]);
  }
  return out;
}

CyclotomicInt CyclotomicInt::lifted(std::int64_t m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0) throw InvalidInput("CyclotomicInt::lifted: conductor must divide target");
  const std::int64_t step = m / conductor_;
  CyclotomicInt out(m);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) out.coeffs_[j * static_cast<std::size_t>(step)] = coeffs_[j];
  return out;
}

CyclotomicInt CyclotomicInt::compressed() const {
  std::int64_t g = conductor_;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) g = std::gcd(g, static_cast<std::int64_t>(j));
  }
  if (g == 0 || g == conductor_) {
    // Only the constant term (or nothing) is populated.
    return integer(coeffs_[0], 1);
  }
  CyclotomicInt out(conductor_ / g);
  for (std::size_t j = 0; j < coeffs_.size(); j += static_cast<std::size_t>(g)) {
    out.coeffs_[j / static_cast<std::size_t>(g)] = coeffs_[j];
  }
  return out;
}

std::vector<std::int64_t> CyclotomicInt::reduced() const {
  const auto& phi = cyclotomic_polynomial(conductor_);
  const std::size_t deg = phi.size() - 1;
  std::vector<std::int64_t> r = coeffs_;
  for (std::size_t i = r.size(); i-- > deg;) {
    const std::int64_t c = r[i];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= deg; ++k) r[i - deg + k] -= c * phi[k];
  }
  r.resize(deg);
  return r;
}

bool CyclotomicInt::is_zero() const {
  for (auto c : reduced())
    if (c != 0) return false;
  return true;
}

bool CyclotomicInt::operator==(const CyclotomicInt& o) const { return (*this - o).compressed().is_zero(); }

std::complex<double> CyclotomicInt::to_complex() const {
  std::complex<long double> sum = 0.0L;
  const auto n = static_cast<std::int64_t>(coeffs_.size());
  const RootTable* table = n <= kMaxCachedConductor ? &root_table(n) : nullptr;
  for (std::int64_t j = 0; j < n; ++j) {
    const std::int64_t c = coeffs_[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    const auto z = table ? (*table)[static_cast<std::size_t>(j)] : root_of_unity(j, n);
    sum += static_cast<long double>(c) * z;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

std::string CyclotomicInt::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(coeffs_[j]);
    if (j) s += "*z" + std::to_string(conductor_) + "^" + std::to_string(j);
  }
  return s.empty() ? "0" : s;
}

}  // namespace tyinv
