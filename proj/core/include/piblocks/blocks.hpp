#pragma once

#include <vector>

#include "piblocks/char_table.hpp"
#include "piblocks/structure.hpp"

namespace piblocks {

/// A p-block: characters whose central characters agree at every class under
/// the fixed reduction onto a field of characteristic p.
struct PBlock {
  long long prime = 2;
  std::vector<int> members;     // ascending row indices
  long long defect_order = 1;   // max over members of |G|_p / chi(1)_p
};

/// A pi-block: a minimal non-empty subset of Irr(G) that is a union of
/// p-blocks for every p in pi, i.e. a connected component of the join.
struct PiBlock {
  PrimeSet pi;
  std::vector<int> members;  // ascending row indices

  int k() const { return static_cast<int>(members.size()); }
  bool contains(int chi) const;
};

/// Blocks ordered with the one containing the trivial character first
/// (ascending least member). Throws InputError when p is not prime.
std::vector<PBlock> p_blocks(const CharacterTable& table, long long p);

/// Join of the p-block partitions over p in pi; singletons for empty pi.
std::vector<PiBlock> pi_blocks(const CharacterTable& table, const PrimeSet& pi);

/// Pi-blocks lying over the n_table row lambda, where n is a normal subgroup
/// (in applications O_pi'(G)).
std::vector<PiBlock> blocks_over(const CharacterTable& g_table, const Subgroup& n,
                                 const CharacterTable& n_table, const PrimeSet& pi,
                                 int lambda);

/// True iff some member of B restricts to n with a constituent in b.
bool covers(const CharacterTable& g_table, const PiBlock& B, const Subgroup& n,
            const CharacterTable& n_table, const PiBlock& b,
            const std::vector<int>& fusion);

}  // namespace piblocks
