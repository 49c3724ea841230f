#include <doctest.h>

#include <gmpxx.h>

#include <algorithm>
#include <vector>

#include "piblocks/errors.hpp"
#include "piblocks/landau.hpp"
#include "piblocks/properties.hpp"

using namespace piblocks;

namespace {

Perm cyc(int degree, const std::vector<std::vector<int>>& cycles) {
  return Perm::from_cycles(degree, cycles);
}

GroupPtr s3() { return make_group(3, {cyc(3, {{1, 2}}), cyc(3, {{1, 2, 3}})}); }

}  // namespace

TEST_SUITE("landau") {

TEST_CASE("gamma base case and hand-checked second value") {
  for (const std::string& a : BoundOracle::builtin_names())
    for (const std::string& b : BoundOracle::builtin_names())
      CHECK(gamma_bound(1, BoundOracle::builtin(a), BoundOracle::builtin(b), 100).value == 1);

  // gamma(2) = max{alpha(2), beta(3)^2} = max{2, 9} = 9 under identities
  GammaTrace t = gamma_bound(2, BoundOracle::builtin("id"), BoundOracle::builtin("id"), 100);
  CHECK(t.value == 9);
  REQUIRE(t.steps.size() == 1);
  CHECK(t.steps[0].previous == 1);
  CHECK(t.steps[0].factorial_arg == 2);
  CHECK(t.steps[0].alpha_value == 2);
  CHECK(t.steps[0].beta_base == 3);
  CHECK(t.steps[0].beta_term == 9);

  // alpha(n) = n^2 changes nothing: max{4, 9} = 9
  CHECK(gamma_bound(2, BoundOracle::builtin("square"), BoundOracle::builtin("id"), 100)
            .value == 9);
}

TEST_CASE("gamma with constant oracles stays small and monotone") {
  GammaTrace t =
      gamma_bound(5, BoundOracle::builtin("two"), BoundOracle::builtin("one"), 1000);
  CHECK(t.value == 16);  // doubles at every step
  mpz_class prev = 1;
  for (const GammaStep& s : t.steps) {
    CHECK(s.value >= prev);
    CHECK(s.value == s.previous * std::max(s.alpha_value, s.beta_term));
    prev = s.value;
  }

  CHECK(gamma_bound(5, BoundOracle::builtin("one"), BoundOracle::builtin("one"), 100)
            .value == 1);
}

TEST_CASE("digit guard aborts oversized evaluations") {
  // identity oracles explode at k = 3 (about 6.6M digits) and k = 4
  CHECK_THROWS_AS(
      gamma_bound(3, BoundOracle::builtin("id"), BoundOracle::builtin("id"), 10000),
      GammaLimitError);
  CHECK_THROWS_AS(
      gamma_bound(4, BoundOracle::builtin("id"), BoundOracle::builtin("id"), 10000000),
      GammaLimitError);
  // (id, one) survives to k = 4 but not k = 5
  CHECK(gamma_bound(4, BoundOracle::builtin("id"), BoundOracle::builtin("one"), 100)
            .value == mpz_class(12) * 4 * 479001600);
  CHECK_THROWS_AS(
      gamma_bound(5, BoundOracle::builtin("id"), BoundOracle::builtin("one"), 1000000),
      GammaLimitError);
}

TEST_CASE("table oracles") {
  BoundOracle table = BoundOracle::from_table(
      "steps", {{mpz_class(1), mpz_class(1)}, {mpz_class(10), mpz_class(5)}});
  CHECK(table(mpz_class(1)) == 1);
  CHECK(table(mpz_class(9)) == 1);
  CHECK(table(mpz_class(10)) == 5);
  CHECK(table(mpz_class(1000000)) == 5);

  BoundOracle partial = BoundOracle::from_table(
      "late", {{mpz_class(100), mpz_class(7)}});
  try {
    partial(mpz_class(99));
    FAIL("expected a domain error");
  } catch (const OracleDomainError& e) {
    CHECK(std::string(e.what()).find("99") != std::string::npos);
  }

  CHECK_THROWS_AS(BoundOracle::from_table("bad", {{mpz_class(2), mpz_class(5)},
                                                  {mpz_class(3), mpz_class(1)}}),
                  InputError);
  CHECK_THROWS_AS(BoundOracle::builtin("cubic"), InputError);
}

TEST_CASE("monotone evaluated prefixes for every builtin pair") {
  int fully_evaluated = 0;
  for (const std::string& a : BoundOracle::builtin_names()) {
    for (const std::string& b : BoundOracle::builtin_names()) {
      mpz_class prev = 1;
      int reached = 1;
      for (int k = 2; k <= 5; ++k) {
        try {
          GammaTrace t =
              gamma_bound(k, BoundOracle::builtin(a), BoundOracle::builtin(b), 200000);
          CHECK(t.value >= prev);
          prev = t.value;
          reached = k;
        } catch (const GammaLimitError&) {
          break;
        }
      }
      if (reached == 5) ++fully_evaluated;
      CHECK(reached >= 2);
    }
  }
  CHECK(fully_evaluated >= 2);  // (one, one) and (two, one)
}

TEST_CASE("theorem B verdicts") {
  auto verdict = [](int k, long long order, const std::string& label) {
    PiBlock b;
    b.members.resize(k);
    for (int i = 0; i < k; ++i) b.members[i] = i;
    DefectDatum d;
    d.order = order;
    d.label.order = order;
    d.label.name = label;
    return check_theorem_b(b, d);
  };

  CHECK(verdict(3, 6, "S3").holds);       // S3 with pi = {2,3}
  CHECK(verdict(3, 6, "S3").clause == "k3");
  CHECK(verdict(1, 1, "C1").holds);       // the defect-zero singleton
  CHECK(verdict(2, 2, "C2").holds);       // C2 with pi = {2}
  CHECK(verdict(3, 3, "C3").holds);

  CHECK_FALSE(verdict(2, 3, "C3").holds);
  CHECK_FALSE(verdict(1, 2, "C2").holds);
  CHECK(verdict(5, 8, "D8").clause == "out");
  CHECK(verdict(5, 8, "D8").holds);
  CHECK_FALSE(verdict(5, 2, "C2").holds);  // converse direction must fail
}

TEST_CASE("property battery on known instances") {
  Workspace ws;

  PropertyReport r1 = verify_block_properties(ws, s3(), PrimeSet({3}));
  CHECK(r1.failures() == 0);
  bool saw_lemnormal = false;
  for (const CheckRecord& c : r1.records) saw_lemnormal |= c.category == "lemnormal";
  CHECK(saw_lemnormal);

  PropertyReport r2 = verify_block_properties(ws, make_group(1, {}), PrimeSet({2}));
  CHECK(r2.failures() == 0);

  GroupPtr g4 = make_group(4, {cyc(4, {{1, 2}}), cyc(4, {{1, 2, 3, 4}})});
  PropertyReport r3 = verify_block_properties(ws, g4, PrimeSet({2, 3}));
  CHECK(r3.failures() == 0);
  bool saw_a4_lemsub = false;
  for (const CheckRecord& c : r3.records)
    saw_a4_lemsub |= c.category == "lemsub" && c.instance == "N_order=12";
  CHECK(saw_a4_lemsub);

  for (const PrimeSet& pi : {PrimeSet({2}), PrimeSet({3}), PrimeSet({2, 3}),
                             PrimeSet({5}), PrimeSet()}) {
    PropertyReport r = verify_block_properties(ws, s3(), pi);
    CHECK(r.failures() == 0);
  }

  GroupPtr a5 = make_group(5, {cyc(5, {{1, 2, 3}}), cyc(5, {{1, 2, 3, 4, 5}})});
  CHECK_THROWS_AS(verify_block_properties(ws, a5, PrimeSet({2, 3})), SeparabilityError);
}

}  // TEST_SUITE
