#pragma once

#include <string>
#include <vector>

#include "piblocks/defect.hpp"
#include "piblocks/workspace.hpp"

namespace piblocks {

/// Outcome of one Theorem-B style biconditional check for a single block.
/// clause is "k1", "k2", "k3" or "out" (k >= 4, where the defect group must
/// avoid the small classified shapes).
struct TheoremBVerdict {
  int k = 1;
  long long defect_order = 1;
  std::string defect_label;
  std::string clause;
  bool holds = false;
};

TheoremBVerdict check_theorem_b(const PiBlock& block, const DefectDatum& defect);

struct CheckRecord {
  std::string category;
  std::string instance;
  bool pass = false;
};

struct PropertyReport {
  std::vector<CheckRecord> records;

  int failures() const;
  void add(std::string category, std::string instance, bool pass);
};

/// Runs the full battery for one (group, pi) pair: block partition sanity,
/// core containment, defect integrality and attainment, pi-element column
/// orthogonality, covering properties, invariant-over shape, kernel and
/// height of a distinguished member, quotient blocks (order form), covered
/// block counts, class counts in the pi-core, Fong-Reynolds preservation and
/// the Theorem B biconditional per block. Requires a pi-separable group.
PropertyReport verify_block_properties(Workspace& ws, GroupPtr g, const PrimeSet& pi);

}  // namespace piblocks
