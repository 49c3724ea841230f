#pragma once

#include <cstdint>
#include <vector>

namespace piblocks {

/// Checked signed 64-bit arithmetic; throws OverflowError on wraparound.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

bool is_prime(long long n);

/// Primes dividing n, ascending. n >= 1.
std::vector<long long> prime_divisors(long long n);

/// (prime, multiplicity) pairs, ascending by prime. n >= 1.
std::vector<std::pair<long long, int>> factorize(long long n);

/// Smallest prime not dividing n.
long long smallest_coprime_prime(long long n);

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

/// a^e mod m for m < 2^31, e >= 0.
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t m);  // m prime

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
int multiplicative_order(long long a, long long m);

/// Euler totient.
long long euler_phi(long long n);

}  // namespace piblocks
