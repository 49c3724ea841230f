#include "piblocks/defect.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "piblocks/errors.hpp"
#include "piblocks/numeric.hpp"

namespace piblocks {

long long defect_order(const CharacterTable& table, const PiBlock& block,
                       const PrimeSet& pi) {
  const long long g_pi = pi_part(table.group->order(), pi);
  long long best = 1;
  for (int chi : block.members)
    best = std::max(best, g_pi / pi_part(table.degrees.at(chi), pi));
  for (int chi : block.members)
    if (checked_mul(best, pi_part(table.degrees.at(chi), pi)) % g_pi != 0)
      throw ConsistencyError("defect fraction |D| chi(1)_pi / |G|_pi is not integral");
  return best;
}

Subgroup inertia_group(Workspace& ws, GroupPtr g, const Subgroup& n, int lambda) {
  g = ws.canonical(g);
  GroupPtr np = ws.canonical(n.group_ptr());
  const CharacterTable& tn = ws.table(np);
  const int kn = tn.character_count();
  if (lambda < 0 || lambda >= kn) throw InputError("lambda index out of range");

  // Per generator: the row permutation of Irr(N) given by
  // (chi^g)(class j) = chi(g rep_j g^-1).
  const auto& gens = g->generators();
  std::vector<std::vector<int>> row_perm(gens.size());
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    std::vector<int> class_map(kn);
    for (int j = 0; j < kn; ++j)
      class_map[j] = np->class_of(gens[gi] * np->classes()[j].rep * gens[gi].inverse());
    row_perm[gi].resize(kn, -1);
    for (int r = 0; r < kn; ++r) {
      std::vector<Cyclo> mapped(kn);
      for (int j = 0; j < kn; ++j) mapped[j] = tn.rows[r][class_map[j]];
      auto target = find_row(tn, ClassFunction{np, std::move(mapped)});
      if (!target)
        throw ConsistencyError("conjugation action does not permute Irr(N)");
      row_perm[gi][r] = *target;
    }
  }

  // Orbit-stabilizer with Schreier generators.
  std::vector<int> orbit{lambda};
  std::vector<std::optional<Perm>> transversal(kn);
  transversal[lambda] = Perm(g->degree());
  std::vector<Perm> stab_gens;
  for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
    int mu = orbit[qi];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      int nu = row_perm[gi][mu];
      if (!transversal[nu]) {
        transversal[nu] = *transversal[mu] * gens[gi];
        orbit.push_back(nu);
      } else {
        Perm u = *transversal[mu] * gens[gi] * transversal[nu]->inverse();
        if (!u.is_identity() &&
            std::find(stab_gens.begin(), stab_gens.end(), u) == stab_gens.end())
          stab_gens.push_back(std::move(u));
      }
    }
  }

  Subgroup stab(g, stab_gens);
  if (checked_mul(stab.order(), static_cast<long long>(orbit.size())) != g->order())
    throw ConsistencyError("orbit-stabilizer order mismatch in inertia computation");
  return stab;
}

std::vector<int> constituents_under(Workspace& ws, GroupPtr g, const Subgroup& n,
                                    const PiBlock& B) {
  g = ws.canonical(g);
  GroupPtr np = ws.canonical(n.group_ptr());
  const CharacterTable& tg = ws.table(g);
  const CharacterTable& tn = ws.table(np);
  const auto& fus = ws.fusion(g, np);
  std::vector<int> out;
  for (int lambda = 0; lambda < tn.character_count(); ++lambda)
    for (int chi : B.members)
      if (!restriction_multiplicity(tg, chi, tn, fus, lambda).is_zero()) {
        out.push_back(lambda);
        break;
      }
  return out;
}

FongReynoldsResult fong_reynolds(Workspace& ws, GroupPtr g, const PrimeSet& pi,
                                 const Subgroup& n, int lambda, const PiBlock& B) {
  g = ws.canonical(g);
  Subgroup inertia = inertia_group(ws, g, n, lambda);
  if (inertia.order() == g->order())
    throw InputError("fong_reynolds requires a proper inertia group");

  GroupPtr hp = ws.canonical(inertia.group_ptr());
  GroupPtr np = ws.canonical(n.group_ptr());
  const CharacterTable& tg = ws.table(g);
  const CharacterTable& th = ws.table(hp);
  const CharacterTable& tn = ws.table(np);
  const auto& fus_n_h = ws.fusion(hp, np);
  const auto& fus_h_g = ws.fusion(g, hp);

  std::optional<PiBlock> correspondent;
  for (PiBlock& b : ws.pi_blocks_of(hp, pi)) {
    std::optional<int> psi;
    for (int member : b.members)
      if (!restriction_multiplicity(th, member, tn, fus_n_h, lambda).is_zero()) {
        psi = member;
        break;
      }
    if (!psi) continue;  // block does not lie over lambda
    ClassFunction induced = induce_character(table_row(th, *psi), g, fus_h_g);
    auto row = find_row(tg, induced);
    if (!row)
      throw ConsistencyError("Clifford induction from the inertia group is reducible");
    if (!B.contains(*row)) continue;
    if (correspondent)
      throw ConsistencyError("Fong-Reynolds correspondent is not unique");
    correspondent = std::move(b);
  }
  if (!correspondent)
    throw ConsistencyError("no Fong-Reynolds correspondent found over lambda");
  if (correspondent->k() != B.k())
    throw ConsistencyError("Fong-Reynolds correspondent has k(b) != k(B)");
  return FongReynoldsResult{hp, std::move(*correspondent)};
}

namespace {

DefectDatum defect_group_impl(Workspace& ws, GroupPtr g, const PrimeSet& pi,
                              const PiBlock& B, std::optional<int> lambda_choice) {
  g = ws.canonical(g);
  if (!is_pi_separable(g, pi))
    throw SeparabilityError("defect groups are defined for pi-separable groups");
  const CharacterTable& tg = ws.table(g);
  const long long want = defect_order(tg, B, pi);

  Subgroup n = ws.pi_prime_core_of(g, pi);
  std::vector<int> lambdas = constituents_under(ws, g, n, B);
  if (lambdas.empty())
    throw ConsistencyError("block has no constituent on the pi'-core");
  int lambda = lambdas.front();
  if (lambda_choice) {
    if (std::find(lambdas.begin(), lambdas.end(), *lambda_choice) == lambdas.end())
      throw InputError("chosen lambda is not a constituent under the block");
    lambda = *lambda_choice;
  }

  Subgroup inertia = inertia_group(ws, g, n, lambda);
  DefectDatum result;
  if (inertia.order() == g->order()) {
    Subgroup hall = hall_pi_subgroup(g, pi);
    result.order = hall.order();
    result.group = hall.group_ptr();
    result.label = identify_group(hall.group());
  } else {
    FongReynoldsResult fr = fong_reynolds(ws, g, pi, n, lambda, B);
    result = defect_group_impl(ws, fr.inertia, pi, fr.block, std::nullopt);
  }
  if (result.order != want)
    throw ConsistencyError("defect group order disagrees with the degree formula");
  return result;
}

}  // namespace

DefectDatum defect_group(Workspace& ws, GroupPtr g, const PrimeSet& pi,
                         const PiBlock& B) {
  return defect_group_impl(ws, std::move(g), pi, B, std::nullopt);
}

DefectDatum defect_group_with_lambda(Workspace& ws, GroupPtr g, const PrimeSet& pi,
                                     const PiBlock& B, int lambda) {
  return defect_group_impl(ws, std::move(g), pi, B, lambda);
}

}  // namespace piblocks
