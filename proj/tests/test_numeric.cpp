#include <doctest.h>

#include "piblocks/errors.hpp"
#include "piblocks/numeric.hpp"

using namespace piblocks;

TEST_SUITE("numeric") {

TEST_CASE("primality and factorization") {
  CHECK(is_prime(2));
  CHECK(is_prime(113));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_divisors(120) == std::vector<long long>{2, 3, 5});
  CHECK(prime_divisors(1) == std::vector<long long>{});
  auto f = factorize(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<long long, int>{2, 3});
  CHECK(f[1] == std::pair<long long, int>{3, 2});
  CHECK(f[2] == std::pair<long long, int>{5, 1});
  CHECK(smallest_coprime_prime(6) == 5);
  CHECK(smallest_coprime_prime(1) == 2);
  CHECK(smallest_coprime_prime(30) == 7);
}

TEST_CASE("modular arithmetic") {
  CHECK(mod_pow(3, 5, 7) == 5);
  CHECK(mod_inv(3, 7) == 5);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(3, 7) == 6);
  CHECK(multiplicative_order(2, 113) == 28);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(113) == 112);
}

TEST_CASE("checked arithmetic overflow") {
  CHECK(checked_mul(1000000, 1000000) == 1000000000000ll);
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), OverflowError);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), OverflowError);
}

}  // TEST_SUITE
