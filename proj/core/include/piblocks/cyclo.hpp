#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace piblocks {

/// Phi_e as an integer coefficient vector, constant term first. Cached.
const std::vector<std::int64_t>& cyclotomic_polynomial(int e);

/// An element of Z[x]/Phi_e(x), i.e. a cyclotomic integer of conductor e in
/// the power basis 1, z, ..., z^(phi(e)-1) for z a fixed primitive e-th root
/// of unity. Kept reduced, so equality is coefficient equality. Arithmetic
/// between different conductors rebases both operands to the lcm.
class Cyclo {
 public:
  Cyclo() : Cyclo(0) {}                 // the integer 0, conductor 1
  Cyclo(std::int64_t n);                // the rational integer n
  static Cyclo root_of_unity(int e, long long power);  // z_e^power

  /// sum_j coeffs[j] * z_e^j, reduced once.
  static Cyclo from_zeta_poly(int e, std::vector<std::int64_t> coeffs);

  int conductor() const { return cond_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;             // lies in Z
  std::int64_t rational() const;        // requires is_rational()

  Cyclo operator+(const Cyclo& rhs) const;
  Cyclo operator-(const Cyclo& rhs) const;
  Cyclo operator-() const;
  Cyclo operator*(const Cyclo& rhs) const;
  Cyclo& operator+=(const Cyclo& rhs);

  /// Galois action z |-> z^t; requires gcd(t, conductor) = 1.
  Cyclo galois(long long t) const;
  Cyclo conj() const;                   // complex conjugation, galois(-1)

  /// Reinterprets in conductor e2; requires conductor() | e2.
  Cyclo rebase(int e2) const;

  /// Exact division by a rational integer; throws ConsistencyError when some
  /// coefficient is not divisible.
  Cyclo divide_exact(std::int64_t n) const;

  /// True when every coefficient is divisible by n.
  bool divisible_by(std::int64_t n) const;

  bool operator==(const Cyclo& rhs) const;

  /// Total order (conductor-aligned coefficient lex); used for canonical
  /// row sorting.
  std::strong_ordering operator<=>(const Cyclo& rhs) const;

  /// "(c0,c1,...)" coefficient tuple.
  std::string to_string() const;

 private:
  Cyclo(int conductor, std::vector<std::int64_t> reduced);
  static std::vector<std::int64_t> reduce(int e, std::vector<std::int64_t> poly);

  int cond_;
  std::vector<std::int64_t> c_;  // size phi(cond_)
};

}  // namespace piblocks
