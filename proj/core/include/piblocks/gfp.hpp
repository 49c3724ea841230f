#pragma once

#include <cstdint>
#include <vector>

#include "piblocks/cyclo.hpp"

namespace piblocks {

/// Polynomial over F_p: coefficients in [0, p), constant term first, no
/// trailing zeros (zero = empty vector).
using GfPoly = std::vector<std::uint64_t>;

GfPoly gf_trim(GfPoly a);
GfPoly gf_add(const GfPoly& a, const GfPoly& b, std::uint64_t p);
GfPoly gf_sub(const GfPoly& a, const GfPoly& b, std::uint64_t p);
GfPoly gf_mul(const GfPoly& a, const GfPoly& b, std::uint64_t p);
GfPoly gf_mod(GfPoly a, const GfPoly& m, std::uint64_t p);
GfPoly gf_gcd(GfPoly a, GfPoly b, std::uint64_t p);
bool gf_is_irreducible(const GfPoly& f, std::uint64_t p);

/// Reduction of Phi_e mod p as a GfPoly.
GfPoly cyclotomic_mod_p(int e, std::uint64_t p);

/// The lexicographically least irreducible factor of Phi_{e1} over F_p
/// (coefficient tuples compared constant term first); requires p coprime
/// to e1. All factors share degree ord_{e1}(p).
GfPoly least_cyclotomic_factor(int e1, std::uint64_t p);

/// The ring morphism Z[zeta_e] -> F_p[y]/(f) with f the least irreducible
/// factor of Phi_{e'} mod p, where e = p^a e' with p coprime to e'. The
/// p-power part of every root of unity maps to 1; zeta_e |-> y^v with
/// v = (p^a)^{-1} mod e'. Its kernel is a maximal ideal over p.
class CycloModP {
 public:
  CycloModP(int conductor, long long p);

  long long prime() const { return static_cast<long long>(p_); }
  const GfPoly& modulus() const { return modulus_; }

  /// Image coefficients, fixed length deg(modulus), directly comparable.
  std::vector<std::uint64_t> reduce(const Cyclo& value) const;

 private:
  std::uint64_t p_;
  int conductor_;
  int e_prime_;
  GfPoly modulus_;
  std::vector<GfPoly> root_powers_;  // y^(v*j mod e') for j = 0..e'-1
};

}  // namespace piblocks
