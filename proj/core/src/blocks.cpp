#include "piblocks/blocks.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "piblocks/errors.hpp"
#include "piblocks/gfp.hpp"
#include "piblocks/numeric.hpp"

namespace piblocks {

bool PiBlock::contains(int chi) const {
  return std::binary_search(members.begin(), members.end(), chi);
}

std::vector<PBlock> p_blocks(const CharacterTable& table, long long p) {
  if (!is_prime(p)) throw InputError("p_blocks requires a prime");
  const Group& g = *table.group;
  const int k = table.character_count();
  const PrimeSet just_p({p});

  CycloModP reduction(table.conductor, p);
  std::map<std::vector<std::vector<std::uint64_t>>, std::vector<int>> by_signature;
  for (int chi = 0; chi < k; ++chi) {
    std::vector<std::vector<std::uint64_t>> signature;
    signature.reserve(k);
    for (int c = 0; c < k; ++c) {
      // omega(K) = |K| chi(g_K) / chi(1), an algebraic integer
      Cyclo omega = (Cyclo(g.classes()[c].size) * table.rows[chi][c])
                        .divide_exact(table.degrees[chi]);
      signature.push_back(reduction.reduce(omega));
    }
    by_signature[std::move(signature)].push_back(chi);
  }

  std::vector<PBlock> blocks;
  for (auto& [sig, members] : by_signature) {
    PBlock b;
    b.prime = p;
    b.members = members;  // ascending by construction
    b.defect_order = 1;
    for (int chi : members)
      b.defect_order = std::max(
          b.defect_order, pi_part(g.order(), just_p) / pi_part(table.degrees[chi], just_p));
    blocks.push_back(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const PBlock& a, const PBlock& b) { return a.members[0] < b.members[0]; });
  return blocks;
}

std::vector<PiBlock> pi_blocks(const CharacterTable& table, const PrimeSet& pi) {
  const int k = table.character_count();
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  // Primes not dividing |G| yield singleton partitions and merge nothing.
  for (long long p : pi.primes())
    for (const PBlock& b : p_blocks(table, p))
      for (std::size_t i = 1; i < b.members.size(); ++i)
        parent[find(b.members[i])] = find(b.members[0]);

  std::map<int, std::vector<int>> components;
  for (int chi = 0; chi < k; ++chi) components[find(chi)].push_back(chi);

  std::vector<PiBlock> blocks;
  for (auto& [root, members] : components)
    blocks.push_back(PiBlock{pi, std::move(members)});
  std::sort(blocks.begin(), blocks.end(), [](const PiBlock& a, const PiBlock& b) {
    return a.members[0] < b.members[0];
  });
  return blocks;
}

std::vector<PiBlock> blocks_over(const CharacterTable& g_table, const Subgroup& n,
                                 const CharacterTable& n_table, const PrimeSet& pi,
                                 int lambda) {
  std::vector<int> over = irr_over(g_table, n, n_table, lambda);
  std::vector<PiBlock> out;
  for (PiBlock& b : pi_blocks(g_table, pi)) {
    bool hit = std::any_of(over.begin(), over.end(),
                           [&](int chi) { return b.contains(chi); });
    if (hit) out.push_back(std::move(b));
  }
  return out;
}

bool covers(const CharacterTable& g_table, const PiBlock& B, const Subgroup& n,
            const CharacterTable& n_table, const PiBlock& b,
            const std::vector<int>& fusion) {
  if (!n.is_normal()) throw InputError("covering is defined for normal subgroups");
  for (int chi : B.members)
    for (int psi : b.members)
      if (!restriction_multiplicity(g_table, chi, n_table, fusion, psi).is_zero())
        return true;
  return false;
}

}  // namespace piblocks
