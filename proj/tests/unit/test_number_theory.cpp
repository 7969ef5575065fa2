#include <doctest.h>

#include "tyinv/error.hpp"
#include "tyinv/number_theory.hpp"

using namespace tyinv;

TEST_CASE("legendre symbol") {
  for (std::int64_t p : {3, 5, 7, 11, 13}) CHECK(legendre(1, p) == 1);
  CHECK(legendre(2, 3) == -1);
  CHECK(legendre(4, 7) == 1);
  CHECK(legendre(-1, 7) == -1);
  CHECK_THROWS_AS(legendre(3, 3), InvalidInput);
  CHECK_THROWS_AS(legendre(1, 9), InvalidInput);
}

TEST_CASE("legendre agrees with squares") {
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
    std::vector<bool> square(static_cast<std::size_t>(p), false);
    for (std::int64_t x = 1; x < p; ++x) square[static_cast<std::size_t>(x * x % p)] = true;
    for (std::int64_t d = 1; d < p; ++d) CHECK(legendre(d, p) == (square[static_cast<std::size_t>(d)] ? 1 : -1));
  }
}

TEST_CASE("factorization and helpers") {
  CHECK(factorize(1).empty());
  CHECK(factorize(360) == std::vector<std::pair<std::int64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(split_square(72) == std::pair<std::int64_t, std::int64_t>{6, 2});
  CHECK(prime_power_base(81) == 3);
  CHECK(prime_power_base(12) == 0);
  CHECK(exact_log(125, 5) == 3);
  CHECK(inverse_mod(3, 7) == 5);
  CHECK(pow_mod(2, 62, 1000000007) == 145586002);
  CHECK_THROWS_AS(inverse_mod(2, 4), InvalidInput);
  CHECK_THROWS(checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40));
}
