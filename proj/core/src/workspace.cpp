#include "piblocks/workspace.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "piblocks/errors.hpp"

namespace piblocks {

GroupPtr Workspace::canonical(GroupPtr g) {
  if (g->order() > Group::kMaxEnumerationOrder) return g;
  // Keyed by element set; raw pointers are unusable as keys because group
  // objects die and the allocator reuses their addresses.
  std::vector<std::vector<int>> key;
  key.reserve(g->elements().size());
  for (const Perm& e : g->elements()) key.push_back(e.images());
  std::sort(key.begin(), key.end());
  auto [it, inserted] = canonical_.try_emplace(std::move(key), g);
  return it->second;
}

const CharacterTable& Workspace::table(GroupPtr g) {
  g = canonical(std::move(g));
  auto it = tables_.find(g.get());
  if (it == tables_.end())
    it = tables_.emplace(g.get(), std::make_shared<CharacterTable>(character_table(g)))
             .first;
  return *it->second;
}

const std::vector<PBlock>& Workspace::p_blocks_of(GroupPtr g, long long p) {
  g = canonical(std::move(g));
  auto key = std::make_pair(static_cast<const Group*>(g.get()), p);
  auto it = p_blocks_.find(key);
  if (it == p_blocks_.end()) it = p_blocks_.emplace(key, p_blocks(table(g), p)).first;
  return it->second;
}

std::vector<PiBlock> Workspace::pi_blocks_of(GroupPtr g, const PrimeSet& pi) {
  g = canonical(std::move(g));
  const int k = table(g).character_count();
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (long long p : pi.primes())
    for (const PBlock& b : p_blocks_of(g, p))
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

const std::vector<Subgroup>& Workspace::class_closures(GroupPtr g) {
  g = canonical(std::move(g));
  auto it = closures_.find(g.get());
  if (it != closures_.end()) return it->second;

  std::vector<Subgroup> unique;
  for (const ConjClass& c : g->classes()) {
    Subgroup closure = normal_closure(g, {c.rep});
    bool dup = false;
    for (const Subgroup& seen : unique) {
      if (seen.order() != closure.order()) continue;
      bool same = true;
      for (const Perm& x : closure.group().generators())
        if (!seen.contains(x)) {
          same = false;
          break;
        }
      if (same) {
        dup = true;
        break;
      }
    }
    if (!dup) unique.push_back(std::move(closure));
  }
  return closures_.emplace(g.get(), std::move(unique)).first->second;
}

namespace {

Subgroup core_from_closures(GroupPtr g, const std::vector<Subgroup>& closures,
                            const std::function<bool(long long)>& keep) {
  std::vector<Perm> gens;
  for (const Subgroup& s : closures)
    if (keep(s.order()))
      for (const Perm& x : s.group().generators()) gens.push_back(x);
  return Subgroup(std::move(g), gens);
}

}  // namespace

Subgroup Workspace::pi_core_of(GroupPtr g, const PrimeSet& pi) {
  g = canonical(std::move(g));
  auto key = std::make_pair(static_cast<const Group*>(g.get()), "pi" + pi.to_string());
  auto it = cores_.find(key);
  if (it == cores_.end())
    it = cores_
             .emplace(key, core_from_closures(g, class_closures(g), [&](long long n) {
                        return is_pi_number(n, pi);
                      }))
             .first;
  return it->second;
}

Subgroup Workspace::pi_prime_core_of(GroupPtr g, const PrimeSet& pi) {
  g = canonical(std::move(g));
  auto key = std::make_pair(static_cast<const Group*>(g.get()), "pi'" + pi.to_string());
  auto it = cores_.find(key);
  if (it == cores_.end())
    it = cores_
             .emplace(key, core_from_closures(g, class_closures(g), [&](long long n) {
                        return pi_part(n, pi) == 1;
                      }))
             .first;
  return it->second;
}

const std::pair<GroupPtr, QuotientMap>& Workspace::quotient_of(GroupPtr g,
                                                               const Subgroup& n) {
  g = canonical(std::move(g));
  GroupPtr np = canonical(n.group_ptr());
  auto key = std::make_pair(static_cast<const Group*>(g.get()),
                            static_cast<const Group*>(np.get()));
  auto it = quotients_.find(key);
  if (it == quotients_.end()) {
    auto [q, qmap] = quotient_group(g, Subgroup(g, np->generators()));
    it = quotients_.emplace(key, std::make_pair(canonical(q), std::move(qmap))).first;
  }
  return it->second;
}

const std::vector<int>& Workspace::fusion(GroupPtr parent, GroupPtr sub) {
  parent = canonical(std::move(parent));
  sub = canonical(std::move(sub));
  auto key = std::make_pair(static_cast<const Group*>(parent.get()),
                            static_cast<const Group*>(sub.get()));
  auto it = fusions_.find(key);
  if (it == fusions_.end()) it = fusions_.emplace(key, class_fusion(*parent, *sub)).first;
  return it->second;
}

}  // namespace piblocks
