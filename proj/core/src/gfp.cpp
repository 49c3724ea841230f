#include "piblocks/gfp.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <string>

#include "piblocks/errors.hpp"
#include "piblocks/numeric.hpp"

namespace piblocks {

GfPoly gf_trim(GfPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

GfPoly gf_add(const GfPoly& a, const GfPoly& b, std::uint64_t p) {
  GfPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = v % p;
  }
  return gf_trim(std::move(r));
}

GfPoly gf_sub(const GfPoly& a, const GfPoly& b, std::uint64_t p) {
  GfPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t av = i < a.size() ? a[i] : 0, bv = i < b.size() ? b[i] : 0;
    r[i] = (av + p - bv) % p;
  }
  return gf_trim(std::move(r));
}

GfPoly gf_mul(const GfPoly& a, const GfPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  GfPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return gf_trim(std::move(r));
}

GfPoly gf_mod(GfPoly a, const GfPoly& m, std::uint64_t p) {
  if (m.empty()) throw InputError("polynomial modulus is zero");
  std::uint64_t lead_inv = mod_inv(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint64_t q = a.back() * lead_inv % p;
    std::size_t shift = a.size() - m.size();
    if (q != 0)
      for (std::size_t j = 0; j < m.size(); ++j)
        a[shift + j] = (a[shift + j] + p * q - q * m[j] % p) % p;
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

GfPoly gf_gcd(GfPoly a, GfPoly b, std::uint64_t p) {
  a = gf_trim(std::move(a));
  b = gf_trim(std::move(b));
  while (!b.empty()) {
    GfPoly r = gf_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint64_t inv = mod_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

namespace {

GfPoly gf_powmod(GfPoly base, const mpz_class& exponent, const GfPoly& mod,
                 std::uint64_t p) {
  GfPoly result{1};
  base = gf_mod(std::move(base), mod, p);
  mpz_class e = exponent;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = gf_mod(gf_mul(result, base, p), mod, p);
    base = gf_mod(gf_mul(base, base, p), mod, p);
    e >>= 1;
  }
  return result;
}

mpz_class mpz_pow_ll(std::uint64_t base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return r;
}

}  // namespace

bool gf_is_irreducible(const GfPoly& f, std::uint64_t p) {
  if (f.size() < 2) return false;  // constants are units or zero
  unsigned long d = static_cast<unsigned long>(f.size() - 1);
  const GfPoly x = gf_mod(GfPoly{0, 1}, f, p);
  // Rabin: x^(p^d) == x mod f, and gcd(x^(p^(d/l)) - x, f) = 1 for primes l | d.
  GfPoly xq = gf_powmod(x, mpz_pow_ll(p, d), f, p);
  if (gf_trim(gf_sub(xq, x, p)) != GfPoly{}) return false;
  for (auto [l, mult] : factorize(static_cast<long long>(d))) {
    GfPoly xe = gf_powmod(x, mpz_pow_ll(p, d / static_cast<unsigned long>(l)), f, p);
    GfPoly g = gf_gcd(gf_sub(xe, x, p), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

GfPoly cyclotomic_mod_p(int e, std::uint64_t p) {
  const auto& phi = cyclotomic_polynomial(e);
  GfPoly r(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    long long c = phi[i] % static_cast<long long>(p);
    r[i] = static_cast<std::uint64_t>(c < 0 ? c + static_cast<long long>(p) : c);
  }
  return gf_trim(std::move(r));
}

namespace {

// The field F_(p^d) = F_p[t]/(h); elements are GfPoly of degree < d.
struct Fq {
  std::uint64_t p;
  GfPoly h;

  GfPoly mul(const GfPoly& a, const GfPoly& b) const {
    return gf_mod(gf_mul(a, b, p), h, p);
  }
  GfPoly pow(GfPoly a, const mpz_class& e) const { return gf_powmod(a, e, h, p); }
  bool is_one(const GfPoly& a) const { return a == GfPoly{1}; }
};

// First monic irreducible of degree d over F_p, coefficients enumerated as
// base-p digits ascending.
GfPoly find_irreducible(std::uint64_t p, int d) {
  if (d == 1) return GfPoly{0, 1};  // t
  for (std::uint64_t v = 0;; ++v) {
    GfPoly f(d + 1, 0);
    f[d] = 1;
    std::uint64_t rest = v;
    for (int i = 0; i < d; ++i) {
      f[i] = rest % p;
      rest /= p;
    }
    if (rest) throw ConsistencyError("irreducible polynomial search exhausted");
    if (gf_is_irreducible(f, p)) return f;
  }
}

}  // namespace

GfPoly least_cyclotomic_factor(int e1, std::uint64_t p) {
  if (e1 < 1) throw InputError("cyclotomic index must be positive");
  if (e1 % static_cast<int>(p) == 0)
    throw InputError("prime must be coprime to the cyclotomic index");
  GfPoly phi = cyclotomic_mod_p(e1, p);
  if (e1 == 1 || e1 == 2) return phi;  // x - 1 or x + 1
  int d = multiplicative_order(static_cast<long long>(p), e1);
  long long count = euler_phi(e1) / d;
  if (count == 1) return phi;

  // Split by cyclotomic cosets inside an explicit F_(p^d).
  Fq fq{p, find_irreducible(p, d)};
  mpz_class group_order = mpz_pow_ll(p, static_cast<unsigned long>(d)) - 1;
  mpz_class cofactor = group_order / e1;

  GfPoly omega;
  for (std::uint64_t c = 0;; ++c) {
    GfPoly xi{c, 1};  // t + c
    omega = fq.pow(xi, cofactor);
    if (fq.is_one(omega) || omega.empty()) continue;
    bool full_order = true;
    for (long long l : prime_divisors(e1))
      if (fq.is_one(fq.pow(omega, mpz_class(static_cast<long>(e1 / l))))) {
        full_order = false;
        break;
      }
    if (full_order) break;
    if (c > 1000000) throw ConsistencyError("no element of full order found");
  }

  std::vector<GfPoly> omega_pow(e1);
  omega_pow[0] = GfPoly{1};
  for (int j = 1; j < e1; ++j) omega_pow[j] = fq.mul(omega_pow[j - 1], omega);

  std::vector<char> taken(e1, 0);
  GfPoly best;
  for (int j = 1; j < e1; ++j) {
    if (taken[j] || std::gcd(j, e1) != 1) continue;
    std::vector<int> coset;
    long long cur = j;
    do {
      coset.push_back(static_cast<int>(cur));
      taken[cur] = 1;
      cur = cur * static_cast<long long>(p) % e1;
    } while (cur != j);

    // factor = prod_{j in coset} (x - omega^j), computed in F_(p^d)[x]
    std::vector<GfPoly> factor{GfPoly{1}};
    for (int m : coset) {
      std::vector<GfPoly> next(factor.size() + 1);
      GfPoly neg_root;
      for (std::uint64_t cc : omega_pow[m]) neg_root.push_back((p - cc) % p);
      neg_root = gf_trim(std::move(neg_root));
      for (std::size_t i = 0; i < factor.size(); ++i) {
        next[i] = gf_add(next[i], fq.mul(factor[i], neg_root), p);
        next[i + 1] = gf_add(next[i + 1], factor[i], p);
      }
      factor = std::move(next);
    }
    GfPoly flat(factor.size());
    for (std::size_t i = 0; i < factor.size(); ++i) {
      if (factor[i].size() > 1)
        throw ConsistencyError("cyclotomic coset factor has non-prime-field coefficient");
      flat[i] = factor[i].empty() ? 0 : factor[i][0];
    }
    if (best.empty() || flat < best) best = std::move(flat);
  }
  if (gf_trim(gf_mod(phi, best, p)) != GfPoly{})
    throw ConsistencyError("selected factor does not divide the cyclotomic polynomial");
  return best;
}

CycloModP::CycloModP(int conductor, long long p) : conductor_(conductor) {
  if (!is_prime(p)) throw InputError("reduction characteristic must be prime");
  p_ = static_cast<std::uint64_t>(p);
  int e1 = conductor;
  long long pa = 1;
  while (e1 % p == 0) {
    e1 /= static_cast<int>(p);
    pa *= p;
  }
  e_prime_ = e1;
  modulus_ = least_cyclotomic_factor(e1, p_);

  long long v = 1;
  if (e1 > 1) {
    // v = (p^a)^(-1) mod e'
    long long pa_mod = pa % e1;
    v = 1;
    long long target = multiplicative_order(pa_mod, e1);
    v = static_cast<long long>(
        mod_pow(static_cast<std::uint64_t>(pa_mod), static_cast<std::uint64_t>(target - 1),
                static_cast<std::uint64_t>(e1)));
  }

  root_powers_.resize(e_prime_);
  GfPoly y = gf_mod(GfPoly{0, 1}, modulus_, p_);
  root_powers_[0] = GfPoly{1};
  if (e_prime_ > 1) {
    std::vector<GfPoly> y_pow(e_prime_);
    y_pow[0] = GfPoly{1};
    for (int m = 1; m < e_prime_; ++m)
      y_pow[m] = gf_mod(gf_mul(y_pow[m - 1], y, p_), modulus_, p_);
    for (int j = 0; j < e_prime_; ++j)
      root_powers_[j] = y_pow[static_cast<std::size_t>(v * j % e_prime_)];
  }
}

std::vector<std::uint64_t> CycloModP::reduce(const Cyclo& value) const {
  Cyclo v = value.rebase(conductor_);
  std::size_t d = modulus_.size() - 1;
  std::vector<std::uint64_t> out(d, 0);
  const auto& coeffs = v.coeffs();
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    long long c = coeffs[j] % static_cast<long long>(p_);
    std::uint64_t cu = static_cast<std::uint64_t>(c < 0 ? c + static_cast<long long>(p_) : c);
    if (cu == 0) continue;
    const GfPoly& pw = root_powers_[j % e_prime_];
    for (std::size_t i = 0; i < pw.size(); ++i) out[i] = (out[i] + cu * pw[i]) % p_;
  }
  return out;
}

}  // namespace piblocks
