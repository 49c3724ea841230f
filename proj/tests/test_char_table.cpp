#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "piblocks/char_table.hpp"
#include "piblocks/errors.hpp"
#include "piblocks/group.hpp"
#include "piblocks/numeric.hpp"

using namespace piblocks;

namespace {

Perm cyc(int degree, const std::vector<std::vector<int>>& cycles) {
  return Perm::from_cycles(degree, cycles);
}

GroupPtr s3() { return make_group(3, {cyc(3, {{1, 2}}), cyc(3, {{1, 2, 3}})}); }
GroupPtr s4() { return make_group(4, {cyc(4, {{1, 2}}), cyc(4, {{1, 2, 3, 4}})}); }
GroupPtr a3() { return make_group(3, {cyc(3, {{1, 2, 3}})}); }
GroupPtr a4() { return make_group(4, {cyc(4, {{1, 2, 3}}), cyc(4, {{2, 3, 4}})}); }

std::vector<GroupPtr> sample_groups() {
  return {
      s3(),
      s4(),
      a4(),
      make_group(4, {cyc(4, {{1, 2, 3, 4}}), cyc(4, {{1, 3}})}),           // D8
      make_group(8, {cyc(8, {{1, 2, 3, 4}, {5, 6, 7, 8}}),
                     cyc(8, {{1, 5, 3, 7}, {2, 8, 4, 6}})}),               // Q8
      make_group(7, {cyc(7, {{1, 2, 3, 4}}), cyc(7, {{5, 6, 7}})}),        // C12
      make_group(5, {cyc(5, {{1, 2, 3, 4, 5}}), cyc(5, {{2, 3, 5, 4}})}),  // F20
      make_group(7, {cyc(7, {{1, 2, 3, 4, 5, 6, 7}}),
                     cyc(7, {{2, 3, 5}, {4, 7, 6}})}),                     // 7:3
      make_group(7, {cyc(7, {{1, 2, 3}}), cyc(7, {{1, 2}, {4, 5, 6, 7}})}),  // Dic3
  };
}

// Independent oracle for character degrees of groups with rational tables:
// enumerate integral class functions of norm 1 with positive identity value,
// then search for a pairwise-orthogonal set of full size containing the
// all-ones function.
std::multiset<long long> rational_degree_oracle(const Group& g) {
  const auto& classes = g.classes();
  const int k = static_cast<int>(classes.size());
  const long long n = g.order();

  std::vector<std::vector<long long>> candidates;
  std::vector<long long> cur(k, 0);
  std::function<void(int, long long)> gen = [&](int idx, long long norm_left) {
    if (idx == k) {
      if (norm_left == 0) candidates.push_back(cur);
      return;
    }
    long long size = classes[idx].size;
    for (long long v = (idx == 0 ? 1 : -n); v <= n; ++v) {
      long long contrib = size * v * v;
      if (contrib > norm_left) {
        if (v > 0) break;
        continue;
      }
      cur[idx] = v;
      gen(idx + 1, norm_left - contrib);
    }
    cur[idx] = 0;
  };
  gen(0, n);

  auto dot = [&](const std::vector<long long>& a, const std::vector<long long>& b) {
    long long s = 0;
    for (int i = 0; i < k; ++i) s += classes[i].size * a[i] * b[i];
    return s;
  };

  std::vector<std::vector<long long>> chosen{std::vector<long long>(k, 1)};
  std::multiset<long long> result;
  std::function<bool(std::size_t)> extend = [&](std::size_t start) {
    if (static_cast<int>(chosen.size()) == k) {
      result.clear();
      for (const auto& v : chosen) result.insert(v[0]);
      return true;
    }
    for (std::size_t i = start; i < candidates.size(); ++i) {
      bool ok = true;
      for (const auto& c : chosen)
        if (dot(c, candidates[i]) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(candidates[i]);
      if (extend(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  REQUIRE(extend(0));
  return result;
}

}  // namespace

TEST_SUITE("char_table") {

TEST_CASE("cyclic C3 table") {
  CharacterTable t = character_table(a3());
  REQUIRE(t.character_count() == 3);
  CHECK(t.degrees == std::vector<long long>{1, 1, 1});
  for (int i = 0; i < 3; ++i) CHECK(t.rows[0][i] == Cyclo(1));
  // the two non-trivial rows are the power maps of one primitive cube root
  const Cyclo& z = t.rows[1][1];
  CHECK_FALSE(z.is_rational());
  CHECK(t.rows[1][2] == z * z);
  CHECK(t.rows[2][1] == z * z);
  CHECK(t.rows[2][2] == z);
  CHECK(t.rows[2][1] == z.conj());
}

TEST_CASE("S3 exact table") {
  CharacterTable t = character_table(s3());
  REQUIRE(t.character_count() == 3);
  CHECK(t.degrees == std::vector<long long>{1, 1, 2});
  // classes: identity, transpositions, 3-cycles
  CHECK(t.rows[1] == std::vector<Cyclo>{Cyclo(1), Cyclo(-1), Cyclo(1)});
  CHECK(t.rows[2] == std::vector<Cyclo>{Cyclo(2), Cyclo(0), Cyclo(-1)});
}

TEST_CASE("degree multisets match the orthogonality-search oracle") {
  for (GroupPtr g : {s3(), s4()}) {
    CharacterTable t = character_table(g);
    std::multiset<long long> got(t.degrees.begin(), t.degrees.end());
    CHECK(got == rational_degree_oracle(*g));
  }
  CHECK(character_table(s4()).degrees == std::vector<long long>{1, 1, 2, 3, 3});
}

TEST_CASE("orthogonality and degree identities hold exactly") {
  for (GroupPtr g : sample_groups()) {
    CharacterTable t = character_table(g);
    const int k = t.character_count();
    REQUIRE(k == static_cast<int>(g->classes().size()));

    long long degsum = 0;
    for (long long d : t.degrees) {
      CHECK(g->order() % d == 0);
      degsum += d * d;
    }
    CHECK(degsum == g->order());

    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        CHECK(inner_product(table_row(t, i), table_row(t, j)) == Cyclo(i == j ? 1 : 0));

    for (int gi = 0; gi < k; ++gi)
      for (int hi = 0; hi < k; ++hi) {
        Cyclo sum(0);
        for (int chi = 0; chi < k; ++chi)
          sum += t.rows[chi][gi] * t.rows[chi][hi].conj();
        long long expected = gi == hi ? g->order() / g->classes()[gi].size : 0;
        CHECK(sum == Cyclo(expected));
      }
  }
}

TEST_CASE("galois power maps permute the rows") {
  for (GroupPtr g :
       {s3(), a4(), make_group(7, {cyc(7, {{1, 2, 3, 4}}), cyc(7, {{5, 6, 7}})})}) {
    CharacterTable t = character_table(g);
    std::set<std::vector<Cyclo>> row_set(t.rows.begin(), t.rows.end());
    for (int u = 1; u < t.conductor; ++u) {
      if (std::gcd(u, t.conductor) != 1) continue;
      for (const auto& row : t.rows) {
        std::vector<Cyclo> mapped;
        for (const Cyclo& v : row) mapped.push_back(v.rebase(t.conductor).galois(u));
        CHECK(row_set.count(mapped) == 1);
      }
    }
  }
}

TEST_CASE("tables are deterministic") {
  auto dump = [] {
    CharacterTable t = character_table(s4());
    std::string out;
    for (const auto& row : t.rows)
      for (const Cyclo& v : row) out += v.to_string();
    return out;
  };
  CHECK(dump() == dump());
}

TEST_CASE("inner product examples") {
  CharacterTable t = character_table(s3());
  CHECK(inner_product(table_row(t, 2), table_row(t, 2)) == Cyclo(1));
  CHECK(inner_product(table_row(t, 0), table_row(t, 1)) == Cyclo(0));
  ClassFunction regular{t.group, {Cyclo(6), Cyclo(0), Cyclo(0)}};
  CHECK(inner_product(regular, trivial_character(t.group)) == Cyclo(1));
}

TEST_CASE("restriction to A3") {
  GroupPtr g = s3();
  GroupPtr h = a3();
  CharacterTable tg = character_table(g);
  CharacterTable th = character_table(h);
  auto fusion = class_fusion(*g, *h);

  // the degree-2 character restricts to the sum of both non-trivial characters
  ClassFunction res = restrict_character(table_row(tg, 2), h, fusion);
  CHECK(inner_product(res, table_row(th, 0)) == Cyclo(0));
  CHECK(inner_product(res, table_row(th, 1)) == Cyclo(1));
  CHECK(inner_product(res, table_row(th, 2)) == Cyclo(1));

  ClassFunction res_triv = restrict_character(table_row(tg, 0), h, fusion);
  CHECK(res_triv.values == th.rows[0]);

  // sign restricts to the trivial character of A3
  ClassFunction res_sign = restrict_character(table_row(tg, 1), h, fusion);
  CHECK(res_sign.values == th.rows[0]);
}

TEST_CASE("induction from A3") {
  GroupPtr g = s3();
  GroupPtr h = a3();
  CharacterTable tg = character_table(g);
  CharacterTable th = character_table(h);
  auto fusion = class_fusion(*g, *h);

  ClassFunction ind = induce_character(table_row(th, 1), g, fusion);
  CHECK(ind.values == std::vector<Cyclo>{Cyclo(2), Cyclo(0), Cyclo(-1)});
  CHECK(inner_product(ind, ind) == Cyclo(1));

  ClassFunction ind_triv = induce_character(table_row(th, 0), g, fusion);
  CHECK(inner_product(ind_triv, table_row(tg, 0)) == Cyclo(1));
  CHECK(inner_product(ind_triv, table_row(tg, 1)) == Cyclo(1));
  CHECK(inner_product(ind_triv, table_row(tg, 2)) == Cyclo(0));

  // induction from the group to itself is the identity
  GroupPtr g2 = s3();
  auto self_fusion = class_fusion(*g, *g2);
  ClassFunction self =
      induce_character(table_row(character_table(g2), 2), g, self_fusion);
  CHECK(self.values == tg.rows[2]);
}

TEST_CASE("frobenius reciprocity") {
  struct Pair {
    GroupPtr g, h;
  };
  std::vector<Pair> pairs{{s3(), a3()},
                          {s4(), a4()},
                          {s4(), make_group(4, {cyc(4, {{1, 2}, {3, 4}}),
                                                cyc(4, {{1, 3}, {2, 4}})})}};
  for (const auto& [g, h] : pairs) {
    CharacterTable tg = character_table(g);
    CharacterTable th = character_table(h);
    auto fusion = class_fusion(*g, *h);
    for (int chi = 0; chi < tg.character_count(); ++chi)
      for (int psi = 0; psi < th.character_count(); ++psi) {
        Cyclo lhs = inner_product(induce_character(table_row(th, psi), g, fusion),
                                  table_row(tg, chi));
        Cyclo rhs = inner_product(restrict_character(table_row(tg, chi), h, fusion),
                                  table_row(th, psi));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("character kernels") {
  GroupPtr g = s3();
  CharacterTable t = character_table(g);
  CHECK(character_kernel(t, 0).order() == 6);
  CHECK(character_kernel(t, 1).order() == 3);  // sign has kernel A3
  CHECK(character_kernel(t, 2).order() == 1);
}

TEST_CASE("irr_over") {
  GroupPtr g = s3();
  CharacterTable tg = character_table(g);
  Subgroup n(g, {cyc(3, {{1, 2, 3}})});
  CharacterTable tn = character_table(n.group_ptr());

  CHECK(irr_over(tg, n, tn, 1) == std::vector<int>{2});
  CHECK(irr_over(tg, n, tn, 0) == std::vector<int>{0, 1});

  Subgroup triv(g, {});
  CharacterTable tt = character_table(triv.group_ptr());
  CHECK(irr_over(tg, triv, tt, 0) == std::vector<int>{0, 1, 2});

  Subgroup bad(g, {cyc(3, {{1, 2}})});
  CharacterTable tb = character_table(bad.group_ptr());
  CHECK_THROWS_AS(irr_over(tg, bad, tb, 0), InputError);
}

TEST_CASE("find_row") {
  CharacterTable t = character_table(s3());
  CHECK(find_row(t, trivial_character(t.group)) == 0);
  ClassFunction other{t.group, {Cyclo(2), Cyclo(0), Cyclo(-1)}};
  CHECK(find_row(t, other) == 2);
  ClassFunction missing{t.group, {Cyclo(5), Cyclo(0), Cyclo(0)}};
  CHECK(find_row(t, missing) == std::nullopt);
}

}  // TEST_SUITE
