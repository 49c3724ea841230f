#include "piblocks/numeric.hpp"

#include <numeric>
#include <stdexcept>

#include "piblocks/errors.hpp"

namespace piblocks {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 add overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 sub overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 mul overflow");
  return r;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<long long> prime_divisors(long long n) {
  std::vector<long long> out;
  for (auto [p, m] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n < 1) throw InputError("factorize: argument must be positive");
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int m = 0;
    while (n % p == 0) n /= p, ++m;
    out.emplace_back(p, m);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long long smallest_coprime_prime(long long n) {
  for (long long p = 2;; ++p)
    if (is_prime(p) && n % p != 0) return p;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

long long lcm_ll(long long a, long long b) {
  return checked_mul(a / std::gcd(a, b), b);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = r * a % m;
    a = a * a % m;
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t m) {
  return mod_pow(a % m, m - 2, m);
}

int multiplicative_order(long long a, long long m) {
  if (m < 1 || std::gcd(a % m + m, m) != 1)
    throw InputError("multiplicative_order: arguments not coprime");
  if (m == 1) return 1;
  std::uint64_t x = static_cast<std::uint64_t>((a % m + m) % m);
  std::uint64_t acc = x % m;
  int ord = 1;
  while (acc != 1) {
    acc = acc * x % static_cast<std::uint64_t>(m);
    ++ord;
  }
  return ord;
}

long long euler_phi(long long n) {
  long long r = n;
  for (auto [p, m] : factorize(n)) r -= r / p;
  return r;
}

}  // namespace piblocks
