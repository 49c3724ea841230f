#pragma once

#include <cstdint>
#include <vector>

#include "piblocks/char_table.hpp"
#include "piblocks/structure.hpp"

namespace piblocks::testing {

// Independent p-block oracle, kept apart from the central-character route the
// library uses: a subset S of Irr(G) is a union of p-blocks exactly when
// sum_{chi in S} chi(1) chi(g^-1) / |G| is p-integral at every g, i.e. every
// power-basis coefficient of the sum is divisible by |G|_p. The p-blocks are
// the minimal non-empty such subsets; integral subsets are closed under
// intersection, so the block of chi is the intersection of all integral
// subsets containing chi.
inline std::vector<std::vector<int>> p_block_oracle(const CharacterTable& t,
                                                    long long p) {
  const Group& g = *t.group;
  const int k = t.character_count();
  if (k > 20) throw std::runtime_error("oracle limited to 20 characters");
  const long long gp = pi_part(g.order(), PrimeSet({p}));
  const std::size_t total = std::size_t{1} << k;

  std::vector<char> integral(total, 1);
  for (int c = 0; c < k; ++c) {
    int inv_class = g.class_of(g.classes()[c].rep.inverse());
    std::vector<Cyclo> contrib(k);
    for (int chi = 0; chi < k; ++chi)
      contrib[chi] = Cyclo(t.degrees[chi]) * t.rows[chi][inv_class];
    std::vector<Cyclo> sum(total);
    sum[0] = Cyclo(0);
    for (std::size_t mask = 1; mask < total; ++mask) {
      int low = __builtin_ctzll(mask);
      sum[mask] = sum[mask & (mask - 1)] + contrib[low];
      if (!sum[mask].divisible_by(gp)) integral[mask] = 0;
    }
  }

  std::vector<std::size_t> block_mask(k, total - 1);
  for (std::size_t mask = 1; mask < total; ++mask) {
    if (!integral[mask]) continue;
    for (int chi = 0; chi < k; ++chi)
      if (mask & (std::size_t{1} << chi)) block_mask[chi] &= mask;
  }

  std::vector<std::vector<int>> blocks;
  std::vector<char> seen(k, 0);
  for (int chi = 0; chi < k; ++chi) {
    if (seen[chi]) continue;
    std::vector<int> members;
    for (int j = 0; j < k; ++j)
      if (block_mask[chi] & (std::size_t{1} << j)) {
        members.push_back(j);
        seen[j] = 1;
      }
    blocks.push_back(std::move(members));
  }
  return blocks;
}

}  // namespace piblocks::testing
