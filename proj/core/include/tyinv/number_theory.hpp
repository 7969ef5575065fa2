#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace tyinv {

/// Residue of `a` modulo `m` in [0, m).
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);

/// Inverse of `a` modulo `m`; throws InvalidInput when gcd(a, m) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

bool is_prime(std::int64_t n);

/// Prime factorization as ascending (prime, exponent) pairs. factorize(1) is empty.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Largest e with p^e | n (n != 0).
int valuation(std::int64_t n, std::int64_t p);

std::int64_t int_pow(std::int64_t base, int exp);

/// lcm with overflow detection.
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Writes n = root^2 * squarefree. Returns {root, squarefree}.
std::pair<std::int64_t, std::int64_t> split_square(std::int64_t n);

/// Returns e if n == p^e, or -1 when n is not a power of p.
int exact_log(std::int64_t n, std::int64_t p);

/// If n = p^e with p prime and e >= 1, returns p; otherwise 0.
std::int64_t prime_power_base(std::int64_t n);

/// Legendre symbol (d/p) for an odd prime p not dividing d, via Euler's criterion.
int legendre(std::int64_t d, std::int64_t p);

}  // namespace tyinv
