#include "piblocks/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "piblocks/errors.hpp"
#include "piblocks/numeric.hpp"

namespace piblocks {

namespace {

// (x^e - 1) / prod_{d | e, d < e} Phi_d, by exact integer long division.
std::vector<std::int64_t> compute_cyclotomic(
    int e, const std::map<int, std::vector<std::int64_t>>& lower) {
  std::vector<std::int64_t> num(e + 1, 0);
  num[0] = -1;
  num[e] = 1;
  for (int d = 1; d < e; ++d) {
    if (e % d) continue;
    const auto& phi_d = lower.at(d);
    std::vector<std::int64_t> quot(num.size() - phi_d.size() + 1, 0);
    std::vector<std::int64_t> rem = num;
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
      std::int64_t q = rem[i + phi_d.size() - 1] / phi_d.back();
      quot[i] = q;
      if (q == 0) continue;
      for (std::size_t j = 0; j < phi_d.size(); ++j)
        rem[i + j] = checked_sub(rem[i + j], checked_mul(q, phi_d[j]));
    }
    for (std::int64_t r : rem)
      if (r != 0) throw ConsistencyError("cyclotomic polynomial division not exact");
    num = std::move(quot);
  }
  return num;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int e) {
  static std::mutex mutex;
  static std::map<int, std::vector<std::int64_t>> cache;
  if (e < 1) throw InputError("cyclotomic polynomial index must be positive");
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  for (int d = 1; d <= e; ++d)
    if (e % d == 0 && !cache.count(d)) cache.emplace(d, compute_cyclotomic(d, cache));
  return cache.at(e);
}

std::vector<std::int64_t> Cyclo::reduce(int e, std::vector<std::int64_t> poly) {
  const auto& phi = cyclotomic_polynomial(e);
  const std::size_t deg = phi.size() - 1;  // phi(e)
  while (poly.size() > deg) {
    std::int64_t lead = poly.back();
    std::size_t shift = poly.size() - 1 - deg;
    if (lead != 0)
      for (std::size_t j = 0; j < phi.size(); ++j)
        poly[shift + j] = checked_sub(poly[shift + j], checked_mul(lead, phi[j]));
    poly.pop_back();
  }
  poly.resize(deg, 0);
  return poly;
}

Cyclo::Cyclo(int conductor, std::vector<std::int64_t> reduced)
    : cond_(conductor), c_(std::move(reduced)) {}

Cyclo::Cyclo(std::int64_t n) : cond_(1), c_{n} {}

Cyclo Cyclo::root_of_unity(int e, long long power) {
  if (e < 1) throw InputError("root of unity conductor must be positive");
  long long p = ((power % e) + e) % e;
  std::vector<std::int64_t> poly(static_cast<std::size_t>(p) + 1, 0);
  poly[static_cast<std::size_t>(p)] = 1;
  return Cyclo(e, reduce(e, std::move(poly)));
}

Cyclo Cyclo::from_zeta_poly(int e, std::vector<std::int64_t> coeffs) {
  if (e < 1) throw InputError("conductor must be positive");
  return Cyclo(e, reduce(e, std::move(coeffs)));
}

bool Cyclo::is_zero() const {
  for (std::int64_t c : c_)
    if (c) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i]) return false;
  return true;
}

std::int64_t Cyclo::rational() const {
  if (!is_rational()) throw ConsistencyError("cyclotomic value is not rational");
  return c_[0];
}

Cyclo Cyclo::rebase(int e2) const {
  if (e2 == cond_) return *this;
  if (e2 % cond_ != 0) throw InputError("rebase target must be a conductor multiple");
  int stretch = e2 / cond_;
  std::vector<std::int64_t> poly(static_cast<std::size_t>(e2), 0);
  for (std::size_t j = 0; j < c_.size(); ++j) poly[j * stretch] = c_[j];
  return Cyclo(e2, reduce(e2, std::move(poly)));
}

Cyclo Cyclo::operator+(const Cyclo& rhs) const {
  int e = static_cast<int>(std::lcm(cond_, rhs.cond_));
  Cyclo a = rebase(e), b = rhs.rebase(e);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    a.c_[i] = checked_add(a.c_[i], b.c_[i]);
  return a;
}

Cyclo& Cyclo::operator+=(const Cyclo& rhs) {
  *this = *this + rhs;
  return *this;
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclo Cyclo::operator-(const Cyclo& rhs) const { return *this + (-rhs); }

Cyclo Cyclo::operator*(const Cyclo& rhs) const {
  int e = static_cast<int>(std::lcm(cond_, rhs.cond_));
  Cyclo a = rebase(e), b = rhs.rebase(e);
  std::vector<std::int64_t> prod(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0)
        prod[i + j] = checked_add(prod[i + j], checked_mul(a.c_[i], b.c_[j]));
  }
  return Cyclo(e, reduce(e, std::move(prod)));
}

Cyclo Cyclo::galois(long long t) const {
  long long tt = ((t % cond_) + cond_) % cond_;
  if (std::gcd(static_cast<long long>(cond_), tt) != 1)
    throw InputError("galois exponent must be coprime to the conductor");
  std::vector<std::int64_t> poly(static_cast<std::size_t>(cond_), 0);
  for (std::size_t j = 0; j < c_.size(); ++j)
    poly[static_cast<std::size_t>(static_cast<long long>(j) * tt % cond_)] += c_[j];
  return Cyclo(cond_, reduce(cond_, std::move(poly)));
}

Cyclo Cyclo::conj() const { return cond_ == 1 ? *this : galois(cond_ - 1); }

Cyclo Cyclo::divide_exact(std::int64_t n) const {
  if (n == 0) throw InputError("division by zero");
  Cyclo r = *this;
  for (auto& c : r.c_) {
    if (c % n != 0)
      throw ConsistencyError("cyclotomic value not divisible by " + std::to_string(n));
    c /= n;
  }
  return r;
}

bool Cyclo::divisible_by(std::int64_t n) const {
  for (std::int64_t c : c_)
    if (c % n != 0) return false;
  return true;
}

bool Cyclo::operator==(const Cyclo& rhs) const {
  return (*this <=> rhs) == std::strong_ordering::equal;
}

std::strong_ordering Cyclo::operator<=>(const Cyclo& rhs) const {
  int e = static_cast<int>(std::lcm(cond_, rhs.cond_));
  Cyclo a = rebase(e), b = rhs.rebase(e);
  return a.c_ <=> b.c_;
}

std::string Cyclo::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  os << ')';
  return os.str();
}

}  // namespace piblocks
