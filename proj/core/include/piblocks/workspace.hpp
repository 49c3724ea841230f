#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "piblocks/blocks.hpp"
#include "piblocks/char_table.hpp"
#include "piblocks/structure.hpp"

namespace piblocks {

/// Memoizes the expensive per-group computations (tables, block partitions,
/// class closures, cores, fusions) for one analysis run. Groups are deduped
/// by element set so equal subgroups reached along different paths share one
/// cache entry. Not thread-safe; use one Workspace per thread of work.
class Workspace {
 public:
  /// The representative Group for g's element set.
  GroupPtr canonical(GroupPtr g);

  const CharacterTable& table(GroupPtr g);
  const std::vector<PBlock>& p_blocks_of(GroupPtr g, long long p);
  std::vector<PiBlock> pi_blocks_of(GroupPtr g, const PrimeSet& pi);

  /// Normal closures of the single classes of g, deduplicated; the complete
  /// normal-subgroup list at desk scale for the bundled corpus.
  const std::vector<Subgroup>& class_closures(GroupPtr g);

  Subgroup pi_core_of(GroupPtr g, const PrimeSet& pi);
  Subgroup pi_prime_core_of(GroupPtr g, const PrimeSet& pi);

  const std::vector<int>& fusion(GroupPtr parent, GroupPtr sub);

  /// Coset-action quotient by a normal subgroup; the group component is
  /// canonical.
  const std::pair<GroupPtr, QuotientMap>& quotient_of(GroupPtr g, const Subgroup& n);

 private:
  // All pointer keys below refer to canonical representatives, which the
  // canonical_ map keeps alive for the workspace lifetime.
  std::map<std::vector<std::vector<int>>, GroupPtr> canonical_;
  std::map<const Group*, std::shared_ptr<CharacterTable>> tables_;
  std::map<std::pair<const Group*, long long>, std::vector<PBlock>> p_blocks_;
  std::map<const Group*, std::vector<Subgroup>> closures_;
  std::map<std::pair<const Group*, std::string>, Subgroup> cores_;
  std::map<std::pair<const Group*, const Group*>, std::vector<int>> fusions_;
  std::map<std::pair<const Group*, const Group*>, std::pair<GroupPtr, QuotientMap>>
      quotients_;
};

}  // namespace piblocks
