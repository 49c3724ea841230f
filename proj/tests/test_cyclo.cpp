#include <doctest.h>

#include <numeric>
#include <vector>

#include "piblocks/cyclo.hpp"
#include "piblocks/errors.hpp"
#include "piblocks/gfp.hpp"
#include "piblocks/numeric.hpp"

using namespace piblocks;

TEST_SUITE("cyclo") {

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<std::int64_t>{1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  for (int e = 1; e <= 120; ++e)
    CHECK(static_cast<long long>(cyclotomic_polynomial(e).size()) == euler_phi(e) + 1);
  // first index with a coefficient of magnitude 2
  const auto& phi105 = cyclotomic_polynomial(105);
  CHECK(std::count(phi105.begin(), phi105.end(), -2) > 0);
}

TEST_CASE("roots of unity") {
  for (int e : {2, 3, 4, 5, 6, 8, 12, 15}) {
    Cyclo z = Cyclo::root_of_unity(e, 1);
    Cyclo acc(1);
    Cyclo sum(0);
    for (int j = 0; j < e; ++j) {
      CHECK(acc == Cyclo::root_of_unity(e, j));
      sum += acc;
      acc = acc * z;
    }
    CHECK(acc == Cyclo(1));   // z^e = 1
    CHECK(sum.is_zero());     // geometric sum vanishes
  }
}

TEST_CASE("ring operations and conductor alignment") {
  Cyclo z6 = Cyclo::root_of_unity(6, 1);
  Cyclo z3 = Cyclo::root_of_unity(3, 1);
  CHECK(z6 * z6 == z3);                 // automatic lcm rebase
  CHECK(z3.rebase(6) == z6 * z6);
  CHECK(z6 + z6.conj() == Cyclo(1));    // 2cos(pi/3) = 1
  CHECK((z3 + z3.conj() + Cyclo(1)).is_zero());
  CHECK(Cyclo(5).is_rational());
  CHECK(Cyclo(5).rational() == 5);
  CHECK((z6 - z6).is_zero());
  CHECK(Cyclo(6).divide_exact(3) == Cyclo(2));
  CHECK((Cyclo(6) * z3).divisible_by(3));
  CHECK_FALSE((Cyclo(6) * z3 + Cyclo(1)).divisible_by(3));
  CHECK_THROWS_AS(Cyclo(5).divide_exact(2), ConsistencyError);
  CHECK_THROWS_AS(z3.rebase(5), InputError);
}

TEST_CASE("galois action") {
  Cyclo z15 = Cyclo::root_of_unity(15, 1);
  CHECK(z15.galois(2).galois(4) == z15.galois(8));
  CHECK(z15.galois(4) == z15 * z15 * z15 * z15);
  CHECK(z15.conj() == Cyclo::root_of_unity(15, 14));
  CHECK(z15.conj().conj() == z15);
  CHECK_THROWS_AS(z15.galois(3), InputError);
}

TEST_CASE("gf polynomial arithmetic") {
  // (x+1)^2 = x^2 + 2x + 1 over F3
  CHECK(gf_mul({1, 1}, {1, 1}, 3) == GfPoly{1, 2, 1});
  CHECK(gf_mod({1, 2, 1}, {1, 1}, 3) == GfPoly{});
  CHECK(gf_gcd({1, 2, 1}, {1, 1}, 3) == GfPoly{1, 1});
  CHECK(gf_is_irreducible({1, 1, 1}, 2));        // x^2+x+1 over F2
  CHECK_FALSE(gf_is_irreducible({1, 0, 1}, 2));  // x^2+1 = (x+1)^2 over F2
  CHECK(gf_is_irreducible({1, 0, 1}, 3));        // x^2+1 over F3
  CHECK(gf_is_irreducible({1, 1}, 5));
}

TEST_CASE("least cyclotomic factor") {
  CHECK(least_cyclotomic_factor(3, 2) == GfPoly{1, 1, 1});  // irreducible
  CHECK(least_cyclotomic_factor(1, 5) == GfPoly{4, 1});     // x - 1
  CHECK(least_cyclotomic_factor(2, 5) == GfPoly{1, 1});     // x + 1

  // Phi_8 = x^4 + 1 splits over F7 as (x^2+3x+1)(x^2+4x+1)
  CHECK(least_cyclotomic_factor(8, 7) == GfPoly{1, 3, 1});

  // brute-force "least irreducible divisor" oracle on small cases
  for (auto [e1, p] : std::vector<std::pair<int, std::uint64_t>>{
           {8, 7}, {12, 7}, {5, 11}, {15, 2}, {7, 2}, {16, 3}}) {
    int d = multiplicative_order(static_cast<long long>(p), e1);
    GfPoly got = least_cyclotomic_factor(e1, p);
    REQUIRE(static_cast<int>(got.size()) == d + 1);
    CHECK(gf_is_irreducible(got, p));
    CHECK(gf_mod(cyclotomic_mod_p(e1, p), got, p) == GfPoly{});
    GfPoly best;
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (std::uint64_t v = 0; v < total; ++v) {
      GfPoly f(d + 1, 0);
      f[d] = 1;
      std::uint64_t rest = v;
      for (int i = 0; i < d; ++i) {
        f[i] = rest % p;
        rest /= p;
      }
      if (gf_mod(cyclotomic_mod_p(e1, p), f, p) != GfPoly{}) continue;
      if (!gf_is_irreducible(f, p)) continue;
      if (best.empty() || f < best) best = f;
    }
    CHECK(got == best);
  }
}

TEST_CASE("cyclotomic reduction morphism") {
  // e = 6, p = 2: e' = 3, zeta_6 -> y^2 in F4 = F2[y]/(y^2+y+1)
  CycloModP red(6, 2);
  CHECK(red.modulus() == GfPoly{1, 1, 1});
  CHECK(red.reduce(Cyclo::root_of_unity(6, 1)) == std::vector<std::uint64_t>{1, 1});
  CHECK(red.reduce(Cyclo::root_of_unity(6, 2)) == std::vector<std::uint64_t>{0, 1});
  // the 2-part root of unity collapses to 1
  CHECK(red.reduce(Cyclo::root_of_unity(6, 3)) == std::vector<std::uint64_t>{1, 0});
  CHECK(red.reduce(Cyclo(3)) == std::vector<std::uint64_t>{1, 0});

  // ring morphism property, sampled
  for (long long p : {2, 3, 5, 7}) {
    int e = 12;
    if (12 % p == 0) e = 12;  // covers ramified cases too
    CycloModP m(e, p);
    std::vector<Cyclo> sample{Cyclo(2), Cyclo::root_of_unity(e, 1),
                              Cyclo::root_of_unity(e, 5) + Cyclo(3),
                              Cyclo::root_of_unity(e, 7) * Cyclo(2) - Cyclo(1)};
    auto as_poly = [](const std::vector<std::uint64_t>& v) { return gf_trim(GfPoly(v)); };
    for (const Cyclo& a : sample)
      for (const Cyclo& b : sample) {
        GfPoly prod = gf_mod(gf_mul(as_poly(m.reduce(a)), as_poly(m.reduce(b)),
                                    static_cast<std::uint64_t>(p)),
                             m.modulus(), static_cast<std::uint64_t>(p));
        CHECK(as_poly(m.reduce(a * b)) == prod);
        CHECK(as_poly(m.reduce(a + b)) ==
              gf_add(as_poly(m.reduce(a)), as_poly(m.reduce(b)),
                     static_cast<std::uint64_t>(p)));
      }
  }
}

}  // TEST_SUITE
