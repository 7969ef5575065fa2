#include "tyinv/number_theory.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "tyinv/error.hpp"

namespace tyinv {

namespace {
__extension__ typedef __int128 wide;
}  // namespace

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  const std::int64_t x = mod_floor(a, m);
  const std::int64_t y = mod_floor(b, m);
  if (m <= (std::int64_t{1} << 31)) return x * y % m;
  return static_cast<std::int64_t>(static_cast<wide>(x) * y % m);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t result = 1;
  base = mod_floor(base, m);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod_floor(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) {
    throw InvalidInput("inverse_mod: " + std::to_string(a) + " is not invertible modulo " +
                       std::to_string(m));
  }
  return mod_floor(old_s, m);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw InvalidInput("factorize: argument must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) throw InvalidInput("valuation: zero has infinite valuation");
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::int64_t int_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw BoundExceeded("integer overflow in product");
  return r;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

std::pair<std::int64_t, std::int64_t> split_square(std::int64_t n) {
  if (n < 1) throw InvalidInput("split_square: argument must be positive");
  std::int64_t root = 1, free = 1;
  for (auto [p, e] : factorize(n)) {
    root *= int_pow(p, e / 2);
    if (e % 2) free *= p;
  }
  return {root, free};
}

int exact_log(std::int64_t n, std::int64_t p) {
  if (n < 1 || p < 2) return -1;
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return n == 1 ? e : -1;
}

std::int64_t prime_power_base(std::int64_t n) {
  if (n < 2) return 0;
  const auto f = factorize(n);
  return f.size() == 1 ? f.front().first : 0;
}

int legendre(std::int64_t d, std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw InvalidInput("legendre: modulus must be an odd prime");
  const std::int64_t r = mod_floor(d, p);
  if (r == 0) throw InvalidInput("legendre: p divides d");
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace tyinv
