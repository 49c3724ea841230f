#pragma once

#include <vector>

#include "piblocks/workspace.hpp"

namespace piblocks {

/// A defect group, reported up to conjugacy: explicit generators plus its
/// isomorphism-type label.
struct DefectDatum {
  long long order = 1;
  GroupPtr group;
  GroupLabel label;
};

/// max over chi in B of |G|_pi / chi(1)_pi, with the integrality of
/// |D| chi(1)_pi / |G|_pi checked for every member.
long long defect_order(const CharacterTable& table, const PiBlock& block,
                       const PrimeSet& pi);

/// Stabilizer of the n_table row lambda under the conjugation action of g on
/// Irr(n); computed by orbit-stabilizer with Schreier generators. Contains n.
Subgroup inertia_group(Workspace& ws, GroupPtr g, const Subgroup& n, int lambda);

struct FongReynoldsResult {
  GroupPtr inertia;  // G_lambda
  PiBlock block;     // the unique pi-block of G_lambda over lambda inducing into B
};

/// Requires G_lambda < G and B over lambda; postconditions k(b) = k(B) and
/// uniqueness of the correspondent are enforced.
FongReynoldsResult fong_reynolds(Workspace& ws, GroupPtr g, const PrimeSet& pi,
                                 const Subgroup& n, int lambda, const PiBlock& B);

/// Rows of Irr(O_pi'(G)) appearing in restrictions of members of B, ascending.
std::vector<int> constituents_under(Workspace& ws, GroupPtr g, const Subgroup& n,
                                    const PiBlock& B);

/// The inductive defect group: a Hall pi-subgroup in the invariant case,
/// otherwise the defect group of the Fong-Reynolds correspondent in the
/// inertia group of the canonical (least-index) constituent below B.
DefectDatum defect_group(Workspace& ws, GroupPtr g, const PrimeSet& pi,
                         const PiBlock& B);

/// As defect_group but with a caller-chosen constituent; used to confirm
/// independence of the lambda choice.
DefectDatum defect_group_with_lambda(Workspace& ws, GroupPtr g, const PrimeSet& pi,
                                     const PiBlock& B, int lambda);

}  // namespace piblocks
